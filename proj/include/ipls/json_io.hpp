#pragma once

#include <string>

#include <json.hpp>

#include "ipls/enclosure.hpp"
#include "ipls/hull.hpp"
#include "ipls/metrics.hpp"
#include "ipls/oracle.hpp"
#include "ipls/parameterized.hpp"
#include "ipls/system.hpp"

namespace ipls {

using Json = nlohmann::ordered_json;

Json to_json(const Interval& a);
Json to_json(const IntervalVector& v);
Json to_json(const RealMatrix& m);
Interval interval_from_json(const Json& j);

/// System document:
///   { "n": int, "K": int, "names": [string], "A0": matrix, "a0": vector,
///     "terms": [ { "name": string, "A": matrix, "a": vector, "interval": [lo, hi] } ] }
/// Matrices are row-major nested arrays; a missing "A" or "a" means zero;
/// "names" is optional but must agree with the term names when present.
/// Throws SchemaError, DimensionMismatch or InvalidArgument.
ParametricLinearSystem load_system(const std::string& text);
ParametricLinearSystem load_system_file(const std::string& path);
Json serialize_system(const ParametricLinearSystem& sys);

/// { "L", "R", "F", "t", "gamma", "gamma_k", "pi_prime", "pi_double_prime", "transposed" }
Json representation_json(const ParametricLinearSystem& sys, const RankOneRepresentation& rep);

/// { "method", "rho_strong", "rho_weak", "x", "y", "iterations" }
Json enclosure_json(const EnclosureRun& run);

/// { "form": "p", "x_mid", "W_dp", "W_g", "column_order" }
Json parameterized_json(const ParametricLinearSystem& sys, const ParameterizedSolutionP& s);
/// { "form": "k", "x_mid", "U", "r_hat", "column_order" }
Json parameterized_json(const ParametricLinearSystem& sys, const ParameterizedSolutionK& s);
/// { "x_in": [[lo,hi] | null], "v_low", "v_up" }
Json inner_json(const InnerEstimate& e);

Json hull_report_json(const HullReport& r);
Json sample_hull_json(const SampleHull& s);
Json quality_json(const std::vector<QualityRow>& rows);

}  // namespace ipls
