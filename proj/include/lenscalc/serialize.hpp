#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lenscalc/actions.hpp"
#include "lenscalc/bounding_index.hpp"
#include "lenscalc/cobordism.hpp"
#include "lenscalc/groups.hpp"
#include "lenscalc/lens.hpp"

namespace lenscalc {

// Parse JSON text; throws ParseError on malformed input.
nlohmann::json parse_json_text(const std::string& text);

// Lens spaces: {"n": 5, "q": 2}
nlohmann::json to_json(const LensSpace& l);
LensSpace lens_from_json(const nlohmann::json& j);

// Boundary problems: {"n": 5, "q": [3, 1, 3]}
nlohmann::json to_json(const BoundaryProblem& problem);
BoundaryProblem boundary_problem_from_json(const nlohmann::json& j);

// Witnesses: {"k": [...], "x": [...], "degrees": [...]}
nlohmann::json to_json(const CobordismWitness& witness);
CobordismWitness witness_from_json(const nlohmann::json& j);

// Presentations: {"gens": ["a"], "rels": [["a", "a", "A"]]}; generator names
// are lowercase alphanumerics and an all-uppercase form denotes the inverse.
nlohmann::json to_json(const FinitePresentation& p);
FinitePresentation presentation_from_json(const nlohmann::json& j);

// Ledgers: array of tagged steps, e.g. {"kind": "closed4", "chi": 3},
// {"kind": "remove_balls", "count": 3}, {"kind": "free_quotient",
// "order": 5}, {"kind": "glue_boundary_pair"}, {"kind": "circle_surgery"}.
nlohmann::json to_json(const std::vector<ChiLedgerStep>& steps);
std::vector<ChiLedgerStep> ledger_from_json(const nlohmann::json& j);

// Weighted actions: {"n": 5, "weights": [4, 0, 1]}
nlohmann::json to_json(const WeightedCp2Action& action);
WeightedCp2Action action_from_json(const nlohmann::json& j);

}  // namespace lenscalc
