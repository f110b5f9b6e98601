#pragma once

#include <optional>
#include <vector>

#include "ipls/enclosure.hpp"

namespace ipls {

/// x(p) = x_mid - (CF)(p_mid'' - p'') + (CL D_{|y - t|}) g(p_mid' - p')
///
/// Only its interval evaluation over the whole box is an enclosure of the
/// solution set; a point evaluation is not a solution bound.
struct ParameterizedSolutionP {
    RealVector x_mid;
    RealMatrix W_dp;  ///< CF
    RealMatrix W_g;   ///< CL D_{|y - t|}
    RealVector p_mid;
    RankOneRepresentation rep;
};

/// x(p, r) = x_mid + U q + r,  q = (p_mid'' - p'', g(p_mid' - p')),  r in [-r_hat, r_hat]
/// with U = (-CF, CL D_{y_mid - t}) and r_hat = |CL| D_{|y - y_mid|} g(p_rad').
struct ParameterizedSolutionK {
    RealVector x_mid;
    RealMatrix U;
    RealVector r_hat;
    RealVector p_mid;
    RealVector p_rad;
    RankOneRepresentation rep;

    /// q-box half widths (p_rad'', g(p_rad')).
    RealVector q_rad() const;
};

/// Throws NotStronglyRegular when the central data fails the condition.
ParameterizedSolutionP build_pprank1(const CentralData& cd, const RankOneRepresentation& rep,
                                     const ReducedSolution& y);
ParameterizedSolutionK build_pkrank1(const CentralData& cd, const RankOneRepresentation& rep,
                                     const ReducedSolution& y);

IntervalVector evaluate_param(const ParameterizedSolutionP& s, const IntervalVector& p);
IntervalVector evaluate_param(const ParameterizedSolutionP& s, std::span<const double> p);
/// With include_remainder the box [-r_hat, r_hat] is added.
IntervalVector evaluate_param(const ParameterizedSolutionK& s, const IntervalVector& p,
                              bool include_remainder = true);
IntervalVector evaluate_param(const ParameterizedSolutionK& s, std::span<const double> p,
                              bool include_remainder = true);

struct InnerEstimate {
    std::vector<std::optional<Interval>> x_in;  ///< nullopt where endpoints cross
    IntervalVector v_low;
    IntervalVector v_up;
};

/// Inner estimate of the interval hull from the Kaucher sum
/// x_mid + U q + dual([-r_hat, r_hat]); in rigorous mode the endpoints are
/// rounded inward.
InnerEstimate inner_estimate(const ParameterizedSolutionK& s);

}  // namespace ipls
