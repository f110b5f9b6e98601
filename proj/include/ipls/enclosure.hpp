#pragma once

#include <string>

#include "ipls/interval.hpp"
#include "ipls/linalg.hpp"
#include "ipls/rankone.hpp"
#include "ipls/system.hpp"

namespace ipls {

/// Everything computed at the midpoint of the parameter box.
struct CentralData {
    RealMatrix C;      ///< A(p_mid)^{-1}
    RealVector x_mid;  ///< C a(p_mid)
    RealVector y_mid;  ///< R x_mid
    RealMatrix CL;
    RealMatrix CF;
    RealMatrix RCL;
    RealMatrix RCF;
    RealVector p_mid;
    RealVector p_rad;
    RealVector g_rad;   ///< g(p_rad over pi')
    RealVector dp_rad;  ///< p_rad over pi''
    double rho_strong = 0.0;  ///< rho(|RCL| D_{g(p_rad)})
    double rho_weak = 0.0;    ///< rho(sum_k |C A_k| p_rad_k)
};

/// Throws Singular when A(p_mid) is singular.
CentralData central_data(const ParametricLinearSystem& sys, const RankOneRepresentation& rep);

inline bool check_strong_regularity(const CentralData& cd) { return cd.rho_strong < 1.0; }
inline bool check_weak_regularity(const CentralData& cd) { return cd.rho_weak < 1.0; }

enum class EnclosureMethod { IGRank1, IGNPForm };

std::string to_string(EnclosureMethod m);
EnclosureMethod enclosure_method_from_string(const std::string& s);

struct ReducedSolution {
    IntervalVector y;
    int iterations = 0;
    bool verified = false;  ///< an inclusion f(Y) in int(Y) was observed
};

struct ReducedSolveOptions {
    int max_iterations = 1000;
    double tolerance = 1e-14;  ///< relative Hausdorff distance between iterates
    double inflation = 1e-12;
    double inflation_floor = 1e-300;
};

/// Encloses the solution set of the reduced gamma-dimensional system
///
///   (I - RCL D_{g(p')}) y = R x_mid - RCF p'' - RCL D_{g(p')} t,  p in [-p_rad, p_rad]
///
/// by the fixed-point iteration  y <- R x_mid - RCF [-p_rad'', p_rad''] +
/// RCL (D_{g([-p_rad', p_rad'])} (y - t))  started at y_mid, with
/// epsilon-inflation until the image lands in the interior of the inflated
/// iterate, then contraction until two iterates agree to `tolerance`.
ReducedSolution solve_reduced(const CentralData& cd, const RankOneRepresentation& rep,
                              const ReducedSolveOptions& opts = {});

struct OuterEnclosure {
    IntervalVector x;
    IntervalVector y;
    int iterations = 0;
    EnclosureMethod method = EnclosureMethod::IGRank1;
};

/// x_mid - (CF)[-p_rad'', p_rad''] + (CL)(D_{g([-p_rad', p_rad'])} |y - t|)
OuterEnclosure outer_enclosure(const CentralData& cd, const RankOneRepresentation& rep,
                               const ReducedSolution& y);

/// C a_0 + (CF) p'' + (CL)(D_{g(p_mid')} t + D_{g(p_mid' - p')}(y - t))
OuterEnclosure ignp_enclosure(const ParametricLinearSystem& sys, const CentralData& cd,
                              const RankOneRepresentation& rep, const ReducedSolution& y);

/// Convenience pipeline: representation, central data, regularity check,
/// reduced solve and the requested enclosure. Throws NotStronglyRegular.
struct EnclosureRun {
    RankOneRepresentation rep;
    CentralData central;
    ReducedSolution reduced;
    OuterEnclosure enclosure;
};

EnclosureRun run_enclosure(const ParametricLinearSystem& sys,
                           EnclosureMethod method = EnclosureMethod::IGRank1,
                           const ReducedSolveOptions& opts = {});

}  // namespace ipls
