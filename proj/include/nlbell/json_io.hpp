#pragma once

#include <string>

#include "json.hpp"
#include "nlbell/behavior.hpp"
#include "nlbell/functional.hpp"
#include "nlbell/machine.hpp"
#include "nlbell/polytope.hpp"
#include "nlbell/quantum.hpp"
#include "nlbell/strategy.hpp"

namespace nlbell::io {

using Json = nlohmann::ordered_json;

/// Raised for documents that do not follow the schemas below.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"backend": "exact"|"float", "n": N, "alice": [...], "bob": [...], "joint": [[...]]}
// joint[i][j] = P(r_A = 0, r_B = 0 | A_i, B_j); exact values are "p/q" strings.
Json to_json(const BehaviorPoint& p);
Json to_json(const FloatBehavior& p);
/// "exact" or "float".
std::string behavior_backend(const Json& doc);
BehaviorPoint exact_behavior_from_json(const Json& doc);
FloatBehavior float_behavior_from_json(const Json& doc);

// {"n": N, "alice": [...], "bob": [...], "joint": [[...]], "constant": c}, integers.
Json to_json(const BellFunctional& f);
BellFunctional functional_from_json(const Json& doc);

// {"n_inputs": N, "anticorrelated": [[x, y], ...]}
Json to_json(const MachineSpec& m);
MachineSpec machine_from_json(const Json& doc);

// {"alice": bit-matrix, "bob": bit-matrix}
Json to_json(const WiringTable& w);
WiringTable wiring_from_json(const Json& doc);

// {"machine": machine|null, "alice": ["0d", "2mf", ...], "bob": [...]}
Json to_json(const WiringStrategy& s);
WiringStrategy strategy_from_json(const Json& doc);

Json to_json(const FacetCertificate& c);
Json census_to_json(const std::vector<ClassCensus>& census);
Json to_json(const Lemma1Report& r);

Json to_json(const quantum::MeasurementSet& m);
Json to_json(const quantum::SeesawResult& r);
Json to_json(const quantum::SweepResult& r);

/// 9 significant digits.
std::string format_double(double v);

}  // namespace nlbell::io
