#include "ipls/parameterized.hpp"

#include <cmath>
#include <sstream>

namespace ipls {

namespace {

void require_regular(const CentralData& cd) {
    if (!check_strong_regularity(cd)) {
        std::ostringstream msg;
        msg << "parameterized solution needs strong regularity (rho = " << cd.rho_strong << ")";
        throw NotStronglyRegular(msg.str());
    }
}

IntervalVector deviation(const RealVector& mid, const IntervalVector& p) {
    IntervalVector out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out[k] = mid[k] - p[k];
    return out;
}

IntervalVector point_box(std::span<const double> p) {
    IntervalVector out;
    for (double x : p) out.emplace_back(x);
    return out;
}

// q = (p_mid'' - p'', g(p_mid' - p'))
IntervalVector q_of(const RankOneRepresentation& rep, const RealVector& p_mid,
                    const IntervalVector& p) {
    if (p.size() != p_mid.size()) throw DimensionMismatch("parameter vector has wrong length");
    const IntervalVector d = deviation(p_mid, p);
    IntervalVector q = rep.double_prime_of(d);
    const IntervalVector g = rep.g_of(d);
    q.insert(q.end(), g.begin(), g.end());
    return q;
}

}  // namespace

RealVector ParameterizedSolutionK::q_rad() const {
    RealVector q = rep.double_prime_of(p_rad);
    const RealVector g = rep.g_of(p_rad);
    q.insert(q.end(), g.begin(), g.end());
    return q;
}

ParameterizedSolutionP build_pprank1(const CentralData& cd, const RankOneRepresentation& rep,
                                     const ReducedSolution& y) {
    require_regular(cd);
    if (y.y.size() != rep.gamma()) throw DimensionMismatch("pPRank1: y has wrong length");
    RealVector m(rep.gamma());
    for (std::size_t j = 0; j < m.size(); ++j) m[j] = (y.y[j] - rep.t[j]).mag();
    return {cd.x_mid, cd.CF, scale_columns(cd.CL, m), cd.p_mid, rep};
}

ParameterizedSolutionK build_pkrank1(const CentralData& cd, const RankOneRepresentation& rep,
                                     const ReducedSolution& y) {
    require_regular(cd);
    const std::size_t gamma = rep.gamma();
    if (y.y.size() != gamma) throw DimensionMismatch("pKRank1: y has wrong length");
    const std::size_t n = cd.x_mid.size();
    const std::size_t ndp = rep.F.cols();

    RealMatrix U(n, ndp + gamma);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < ndp; ++j) U(i, j) = -cd.CF(i, j);
        for (std::size_t j = 0; j < gamma; ++j)
            U(i, ndp + j) = cd.CL(i, j) * (cd.y_mid[j] - rep.t[j]);
    }

    // r_hat = |CL| D_{|y - y_mid|} g(p_rad')
    RealVector w(gamma);
    for (std::size_t j = 0; j < gamma; ++j)
        w[j] = round_up((y.y[j] - cd.y_mid[j]).mag() * cd.g_rad[j]);
    const RealMatrix abs_cl = abs(cd.CL);
    RealVector r_hat(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < gamma; ++j) s = round_up(s + round_up(abs_cl(i, j) * w[j]));
        r_hat[i] = s;
    }
    return {cd.x_mid, std::move(U), std::move(r_hat), cd.p_mid, cd.p_rad, rep};
}

IntervalVector evaluate_param(const ParameterizedSolutionP& s, const IntervalVector& p) {
    if (p.size() != s.p_mid.size()) throw DimensionMismatch("parameter vector has wrong length");
    const IntervalVector d = deviation(s.p_mid, p);
    return (s.x_mid + (-real_iv_matvec(s.W_dp, s.rep.double_prime_of(d)))) +
           real_iv_matvec(s.W_g, s.rep.g_of(d));
}

IntervalVector evaluate_param(const ParameterizedSolutionP& s, std::span<const double> p) {
    return evaluate_param(s, point_box(p));
}

IntervalVector evaluate_param(const ParameterizedSolutionK& s, const IntervalVector& p,
                              bool include_remainder) {
    IntervalVector x = s.x_mid + real_iv_matvec(s.U, q_of(s.rep, s.p_mid, p));
    if (include_remainder)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] + Interval::symmetric(s.r_hat[i]);
    return x;
}

IntervalVector evaluate_param(const ParameterizedSolutionK& s, std::span<const double> p,
                              bool include_remainder) {
    return evaluate_param(s, point_box(p), include_remainder);
}

InnerEstimate inner_estimate(const ParameterizedSolutionK& s) {
    const RealVector q_rad = s.q_rad();
    IntervalVector q_box;
    for (double r : q_rad) q_box.push_back(Interval::symmetric(r));
    const std::size_t n = s.x_mid.size();

    InnerEstimate out;
    out.x_in.resize(n);
    out.v_low.resize(n);
    out.v_up.resize(n);

    // the spread |U| q_rad must not be overestimated for an inner bound, so it
    // is accumulated without outward adjustment and the final endpoints are
    // pulled inward instead
    RealVector spread(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < q_rad.size(); ++j) spread[i] += std::fabs(s.U(i, j)) * q_rad[j];

    for (std::size_t i = 0; i < n; ++i) {
        const KaucherInterval center(s.x_mid[i] - spread[i], s.x_mid[i] + spread[i]);
        const KaucherInterval remainder(-s.r_hat[i], s.r_hat[i]);
        const KaucherInterval in = kaucher_add(center, dual(remainder));
        const double lo = round_up(round_up(in.lo()));
        const double hi = round_down(round_down(in.hi()));
        if (lo <= hi) out.x_in[i] = Interval(lo, hi);

        const Interval r = Interval::symmetric(s.r_hat[i]);
        out.v_low[i] = Interval(center.lo()) + r;
        out.v_up[i] = Interval(center.hi()) + r;
    }
    return out;
}

}  // namespace ipls
