import json

import pytest

import brouwer


def test_parse_and_print():
    f = brouwer.parse("p -> q -> p")
    assert str(f) == "p -> q -> p"
    assert f.variables() == ["p", "q"]
    assert f.connectives == 2
    assert brouwer.parse("~p | ~~p").to_string(unicode=True) == "¬p ∨ ¬¬p"
    with pytest.raises(brouwer.BrouwerError):
        brouwer.parse("p ->")


def test_tower():
    assert [brouwer.jaskowski_size(n) for n in range(1, 5)] == [2, 3, 10, 1001]
    i3 = brouwer.jaskowski_algebra(3)
    assert len(i3) == 10
    r = brouwer.is_valid("~p | ~~p", i3)
    assert r["verdict"] == "invalid"
    assert r["counterexample"] == {"p": "(m,0)"}
    assert brouwer.is_valid("~p | ~~p", brouwer.jaskowski_algebra(2))["verdict"] == "valid"
    b3 = brouwer.jaskowski_algebra(3, dual=True)
    assert brouwer.is_valid("~p | ~~p", b3, semantics="brouwer")["verdict"] == "invalid"


def test_countermodels_and_decisions():
    cm = brouwer.countermodel("p | ~p")
    assert cm["description"] == "I2"
    assert brouwer.countermodel("p -> p") is None
    d = brouwer.decide("((p -> q) -> p) -> p")
    assert d["verdict"] == "invalid"
    assert d["countermodel"]["valuation"] == {"p": "m", "q": "0"}
    assert brouwer.decide("~p | ~~p", logic="kc")["verdict"] == "valid"
    assert brouwer.decide("p | ~p", logic="kc")["verdict"] == "invalid"
    proof = brouwer.decide("p -> p", proof=True)["proof"]
    assert proof[0]["rule"] == "impR"


def test_lattices():
    diamond = brouwer.Poset(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
    h = brouwer.downset_lattice(diamond)
    assert len(h) == 6
    assert brouwer.isomorphic(brouwer.downset_lattice(h.join_irreducibles()), h)
    bowtie = brouwer.Poset(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    dd = brouwer.downset_lattice(bowtie)
    assert brouwer.is_dd_like(dd) and not brouwer.is_weakly_projective(dd)
    report = brouwer.analyze(dd)
    assert report["dd_like"] and report["consistent"]
    assert len(brouwer.lattice("prod(chain(2), I(2))")) == 6


def test_muchnik():
    d = brouwer.DegreePoset(brouwer.Poset(["0", "a", "b", "t"], [("0", "a"), ("0", "b"), ("a", "t"), ("b", "t")]))
    assert not brouwer.muchnik_leq(d, ["a"], ["b"])
    assert brouwer.muchnik_leq(d, ["0"], ["b"])
    assert sorted(brouwer.muchnik_arrow(d, ["a"], ["b"])) == ["b", "t"]
    assert brouwer.muchnik_arrow(d, ["a"], ["b"], mode="formula") == brouwer.muchnik_arrow(d, ["a"], ["b"], mode="lattice")
    assert len(brouwer.degree_interval(d, ["0", "a", "b", "t"], [])) == 6


def test_construction(validate):
    levels = [brouwer.jaskowski_algebra(1, dual=True), brouwer.jaskowski_algebra(2, dual=True)]
    c = brouwer.construct(levels, generics_per_point=2)
    validate("construction", c)
    report = brouwer.verify(c, max_connectives=2)
    validate("verify_report", report)
    assert report["ok"]
    assert report["factor_size"] == 1 + 2 * 3
