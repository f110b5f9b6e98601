#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ipls/enclosure.hpp"

namespace ipls {

/// Entrywise signs of U' = (CF, CL D_{y_mid - t}), columns in q order
/// (pi'' first, then the g rows). Note U' differs from the pKRank1 matrix
/// U = (-CF, CL D_{y_mid - t}) in the sign of the pi'' block.
struct SignMatrix {
    std::vector<std::vector<int>> s;       ///< n rows, each |pi''| + gamma entries
    std::vector<std::size_t> column_param;  ///< parameter index per column

    std::size_t rows() const noexcept { return s.size(); }
    std::size_t cols() const noexcept { return column_param.size(); }

    /// One sign per parameter for row i; 0 where the block's columns
    /// disagree or are zero.
    std::vector<int> per_parameter(std::size_t i, std::size_t parameter_count) const;
};

/// Entries with |u| < 1e-12 * max_j |u_ij| are reported as 0.
SignMatrix sign_matrix(const CentralData& cd, const RankOneRepresentation& rep);

/// Monotonicity signs per component and parameter (system order); the
/// lower bound of component i is sought at p_mid - s_i p_rad and the upper
/// bound at p_mid + s_i p_rad.
using ParameterSigns = std::vector<std::vector<int>>;

ParameterSigns parameter_signs(const SignMatrix& m, std::size_t parameter_count);

struct EndpointHull {
    std::optional<Interval> hull;  ///< nullopt when an endpoint matrix is singular
    double at_lower_signs = 0.0;   ///< x_i(p_mid - s p_rad)
    double at_upper_signs = 0.0;   ///< x_i(p_mid + s p_rad)
    bool reversed = false;         ///< at_lower_signs > at_upper_signs
    double path_disagreement = 0.0;  ///< direct vs centered solve, relative
    std::string error;
    /// Diagnostic [r*-, r*+] interval; generally improper and asymmetric.
    KaucherInterval r_star;
};

/// Solves the two endpoint systems per component both directly and through
/// the centered form (A(p_mid) - L D_{p'} R) x = a(p_mid) - F p'' - L D_{p'} t.
std::vector<EndpointHull> hull_by_signs(const ParametricLinearSystem& sys,
                                        const RankOneRepresentation& rep,
                                        const CentralData& cd, const ParameterSigns& signs);

/// Same endpoint machinery with explicit vertex patterns for the lower and
/// the upper bound of every component.
std::vector<EndpointHull> hull_by_patterns(const ParametricLinearSystem& sys,
                                           const RankOneRepresentation& rep,
                                           const CentralData& cd, const ParameterSigns& lower,
                                           const ParameterSigns& upper);

enum class OracleMode { Exact, SamplingLowerBound };
std::string to_string(OracleMode m);

/// Vertex sign patterns attaining a component's bounds. `lower`/`upper`
/// hold 0 for a parameter on which tied extremal vertices disagree;
/// `lower_vertex`/`upper_vertex` always hold the first attaining vertex.
struct BoundSigns {
    std::vector<int> lower;
    std::vector<int> upper;
    std::vector<bool> lower_tie;
    std::vector<bool> upper_tie;
    std::vector<int> lower_vertex;
    std::vector<int> upper_vertex;
};

struct VertexOracleResult {
    OracleMode mode = OracleMode::Exact;
    IntervalVector hull;
    std::vector<BoundSigns> signs;  ///< per component
    std::size_t vertex_count = 0;
};

/// Default cap on the parameter count for 2^K enumeration; overridden by the
/// IPLS_MAX_VERTEX_K environment variable.
std::size_t default_max_vertex_k();

/// Exact hull from all 2^K parameter vertices when every augmented
/// coefficient [A_k | a_k] has rank at most one; otherwise the same
/// enumeration labelled as a lower bound. Throws OracleError when K > max_k or a vertex matrix is singular.
VertexOracleResult vertex_oracle(const ParametricLinearSystem& sys, std::size_t max_k,
                                 double tie_tol = 1e-12);

enum class Verdict { Sound, ZeroCoefficient, Mismatch };
std::string to_string(Verdict v);

/// Per component: ZeroCoefficient if any claimed sign is 0; Sound if every
/// parameter is globally monotone in the oracle (minimum at the -s vertex,
/// maximum at the +s vertex, no ties) with s equal to the claim; Mismatch
/// otherwise.
std::vector<Verdict> danger_check(const ParameterSigns& claimed,
                                  const std::vector<BoundSigns>& oracle);

struct HullComponent {
    std::vector<int> claimed_signs;
    BoundSigns oracle_signs;
    EndpointHull endpoint;
    std::optional<Interval> oracle_hull;
    Verdict verdict = Verdict::Mismatch;
};

struct HullReport {
    std::vector<std::string> parameter_names;
    std::vector<std::size_t> column_order;  ///< pi'' then pi', for tables
    std::string signs_source;
    std::optional<OracleMode> oracle_mode;
    std::vector<HullComponent> components;

    bool any_unsound() const;
};

enum class SignSource { FromParam, Oracle };

/// Full pipeline used by the CLI: signs from the parameterized solution or
/// the vertex oracle, endpoint hull, and the danger check when the oracle
/// ran. With use_oracle false and SignSource::FromParam the verdicts are all
/// Mismatch (uncertified).
HullReport hull_report(const ParametricLinearSystem& sys, SignSource source, bool use_oracle,
                       std::size_t max_k);

/// Text table of sign patterns with "a, b" cells where the minimiser and
/// maximiser differ.
std::string render_claimed_table(const HullReport& r);
std::string render_oracle_table(const HullReport& r);

}  // namespace ipls
