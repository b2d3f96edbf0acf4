"""Finite Brouwer and Heyting algebras, intermediate logics and simulated Muchnik degrees."""

import json

from ._brouwer import (
    BrouwerError,
    BudgetExceeded,
    DegreePoset,
    Formula,
    Lattice,
    Poset,
    chain_lattice,
    default_corpus,
    degree_closure,
    degree_interval,
    downset_lattice,
    dual,
    evaluate,
    generate_formulas,
    interval,
    is_dd_like,
    is_weakly_projective,
    isomorphic,
    jaskowski_algebra,
    jaskowski_size,
    lattice,
    muchnik_arrow,
    muchnik_leq,
    parse,
    posets_of_size,
    product,
    run_cli,
    stack_sum,
    upset_lattice,
)
from . import _brouwer

__all__ = [
    "BrouwerError",
    "BudgetExceeded",
    "DegreePoset",
    "Formula",
    "Lattice",
    "Poset",
    "analyze",
    "chain_lattice",
    "construct",
    "countermodel",
    "decide",
    "default_corpus",
    "degree_closure",
    "degree_interval",
    "downset_lattice",
    "dual",
    "evaluate",
    "generate_formulas",
    "interval",
    "is_dd_like",
    "is_valid",
    "is_weakly_projective",
    "isomorphic",
    "jaskowski_algebra",
    "jaskowski_size",
    "lattice",
    "muchnik_arrow",
    "muchnik_leq",
    "parse",
    "posets_of_size",
    "product",
    "run_cli",
    "stack_sum",
    "upset_lattice",
    "verify",
]


def _formula(f):
    return parse(f) if isinstance(f, str) else f


def is_valid(formula, algebra, semantics="heyting", threads=0):
    """Exhaustive validity check. Returns verdict, valuations and the least counterexample."""
    return json.loads(_brouwer.is_valid_json(_formula(formula), algebra, semantics, threads))


def countermodel(formula, family="tower+posets", semantics="heyting", threads=0):
    """First refuting algebra of the family, or None."""
    r = json.loads(_brouwer.countermodel_json(_formula(formula), family, semantics, threads))
    return r.get("countermodel")


def decide(formula, logic="ipc", proof=False, countermodel=True):
    return json.loads(_brouwer.decide_json(_formula(formula), logic, proof, countermodel))


def analyze(algebra):
    return json.loads(_brouwer.analyze_json(algebra))


def construct(levels, generics_per_point=1):
    """Master poset and named sets for the given Brouwer algebras, as a dict."""
    return json.loads(_brouwer.construct_json(list(levels), generics_per_point))


def verify(construction, max_connectives=2, threads=0):
    text = construction if isinstance(construction, str) else json.dumps(construction)
    return json.loads(_brouwer.verify_json(text, max_connectives, threads))
