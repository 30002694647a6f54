#pragma once

#include "branchlab/branching.hpp"
#include "branchlab/fan.hpp"
#include "branchlab/formal.hpp"
#include "branchlab/rootsys.hpp"
#include "branchlab/splint.hpp"

#include "json.hpp"

#include <utility>

namespace branchlab {

using Json = nlohmann::ordered_json;

Json weight_to_json(const Weight& w);  // ["p/q", ...]
Weight weight_from_json(const Json& j);

// {"terms": [{"weight": ["p/q", ...], "coeff": int}, ...]} in canonical order.
Json to_json(const FormalSum& f, const RootSystem& rs);
FormalSum formal_sum_from_json(const Json& j);

// {"parent": {"algebra", "dynkin"}, "subalgebra", "method",
//  "rows": [{"weight_dynkin": [int], "u1_charges": ["p/q"], "coeff": int}]}
Json to_json(const BranchingResult& r);
// Rebuilds the weights from (a-Dynkin labels, u(1) charges).
BranchingResult branching_result_from_json(const Json& j, const RootSystem& parent, const EmbeddedSubsystem& sub);

Json to_json(const Fan& fan, const RootSystem& rs);
Json to_json(const SplintDescriptor& sd);

// {"case", "agree", "parent_dimension", "timings_ms": {...}, "methods": {...},
//  "rows": [{"weight_dynkin", "u1_charges", "coeffs": {method: int}}], "diff": [same, disagreeing rows only]}
// Timings are left empty when include_timings is false so the output is reproducible.
Json to_json(const CompareReport& report, bool include_timings);

// Subalgebra config file:
//   {"algebra": "B2", "kept_simple": [0], "kept_roots": [["1","1"]], "u1_charges": [["1","1"]]}
// All keys except "algebra" are optional.
std::pair<RootSystem, SubsystemSpec> subsystem_from_json(const Json& j);

} // namespace branchlab
