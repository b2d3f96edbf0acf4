#pragma once

#include <json.hpp>

#include "brouwer/lattice.hpp"
#include "brouwer/muchnik.hpp"
#include "brouwer/poset.hpp"
#include "brouwer/prover.hpp"
#include "brouwer/semantics.hpp"
#include "brouwer/structure.hpp"

namespace brouwer {

using Json = nlohmann::ordered_json;

/// {"points": [...], "leq": [[a, b], ...]} with covering pairs only.
Json poset_to_json(const Poset& p);
/// Accepts any generating relation; throws Error on malformed input.
Poset poset_from_json(const Json& j);

/// {"elements": [...], "leq": [[i, j], ...]} (covers) plus provenance, bot, top.
Json lattice_to_json(const DistLattice& l);
/// Explicit input, validated by DistLattice::from_order.
DistLattice lattice_from_json(const Json& j, std::size_t max_elements = kDefaultMaxElements);

Json valuation_to_json(const Valuation& v, const DistLattice& l);
Json countermodel_to_json(const Countermodel& c);
/// Pre-order list of {rule, sequent_before, sequent_after}.
Json proof_to_json(const ProofNode& proof);
Json decision_to_json(const Decision& d, const Formula& f, bool with_proof, bool with_countermodel);
Json structure_to_json(const StructureReport& r, const DistLattice& l);
Json mass_problem_to_json(const Poset& p, const SubsetMask& m);

Json construction_to_json(const Construction& c);
Construction construction_from_json(const Json& j);
Json verify_report_to_json(const VerifyReport& r);

}  // namespace brouwer
