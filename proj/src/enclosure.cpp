#include "ipls/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ipls {

namespace {

IntervalVector symmetric_box(const RealVector& r) {
    IntervalVector out;
    out.reserve(r.size());
    for (double x : r) out.push_back(Interval::symmetric(x));
    return out;
}

IntervalVector inflate(const IntervalVector& y, const ReducedSolveOptions& opts) {
    IntervalVector out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        // a few ulps of the magnitude so that outward rounding alone cannot
        // defeat the inclusion test
        const double floor = std::max(opts.inflation_floor, 0x1p-50 * y[i].mag());
        const double d = y[i].rad() * opts.inflation + floor;
        out[i] = Interval(round_down(y[i].lo() - d), round_up(y[i].hi() + d));
    }
    return out;
}

bool interior_subset(const IntervalVector& a, const IntervalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].interior_subset_of(b[i])) return false;
    return true;
}

double hausdorff(const IntervalVector& a, const IntervalVector& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max({d, std::fabs(a[i].lo() - b[i].lo()), std::fabs(a[i].hi() - b[i].hi())});
    return d;
}

double magnitude(const IntervalVector& a) {
    double m = 0.0;
    for (const auto& x : a) m = std::max(m, x.mag());
    return m;
}

}  // namespace

std::string to_string(EnclosureMethod m) {
    return m == EnclosureMethod::IGRank1 ? "iGRank1" : "iGNP-form";
}

EnclosureMethod enclosure_method_from_string(const std::string& s) {
    if (s == "iGRank1" || s == "igrank1") return EnclosureMethod::IGRank1;
    if (s == "ignp" || s == "iGNP" || s == "iGNP-form") return EnclosureMethod::IGNPForm;
    throw InvalidArgument("unknown enclosure method '" + s + "'");
}

CentralData central_data(const ParametricLinearSystem& sys, const RankOneRepresentation& rep) {
    CentralData cd;
    cd.p_mid = sys.box_mid();
    cd.p_rad = sys.box_rad();
    const auto [A, a] = sys.evaluate_at(cd.p_mid);
    cd.C = invert(A);
    cd.x_mid = solve(A, a);
    cd.y_mid = rep.R * cd.x_mid;
    cd.CL = cd.C * rep.L;
    cd.CF = cd.C * rep.F;
    cd.RCL = rep.R * cd.CL;
    cd.RCF = rep.R * cd.CF;
    cd.g_rad = rep.g_of(cd.p_rad);
    cd.dp_rad = rep.double_prime_of(cd.p_rad);

    cd.rho_strong = nonneg_spectral_radius(scale_columns(abs(cd.RCL), cd.g_rad));

    const std::size_t n = sys.dimension();
    RealMatrix weak(n, n);
    for (std::size_t k = 0; k < sys.parameter_count(); ++k) {
        const auto& term = sys.term(k);
        if (term.A.is_zero() || cd.p_rad[k] == 0.0) continue;
        weak = weak + cd.p_rad[k] * abs(cd.C * term.A);
    }
    cd.rho_weak = nonneg_spectral_radius(weak);
    return cd;
}

ReducedSolution solve_reduced(const CentralData& cd, const RankOneRepresentation& rep,
                              const ReducedSolveOptions& opts) {
    if (!check_strong_regularity(cd)) {
        std::ostringstream msg;
        msg << "strong regularity fails: rho = " << cd.rho_strong << " >= 1";
        throw NotStronglyRegular(msg.str());
    }
    ReducedSolution out;
    const std::size_t gamma = rep.gamma();
    if (gamma == 0) {
        out.verified = true;
        return out;
    }

    const IntervalVector constant = cd.y_mid + real_iv_matvec(cd.RCF, symmetric_box(cd.dp_rad));
    const IntervalVector g_box = symmetric_box(cd.g_rad);
    auto step = [&](const IntervalVector& y) {
        IntervalVector scaled(gamma);
        for (std::size_t j = 0; j < gamma; ++j) scaled[j] = g_box[j] * (y[j] - rep.t[j]);
        return constant + real_iv_matvec(cd.RCL, scaled);
    };

    IntervalVector y = to_interval(cd.y_mid);
    int it = 0;
    for (; it < opts.max_iterations; ++it) {
        const IntervalVector wide = inflate(y, opts);
        IntervalVector next = step(wide);
        if (interior_subset(next, wide)) {
            out.verified = true;
            y = std::move(next);
            ++it;
            break;
        }
        y = std::move(next);
    }
    if (!out.verified) {
        std::ostringstream msg;
        msg << "reduced system iteration found no inclusion after " << opts.max_iterations
            << " iterations (rho = " << cd.rho_strong << ")";
        throw NoConvergence(msg.str());
    }

    // every iterate now encloses the solution set; contract towards the
    // fixed point
    for (; it < opts.max_iterations; ++it) {
        IntervalVector next = step(y);
        for (std::size_t j = 0; j < gamma; ++j) {
            if (auto both = intersect(next[j], y[j])) next[j] = *both;
        }
        const double d = hausdorff(next, y);
        y = std::move(next);
        if (d <= opts.tolerance * std::max(1.0, magnitude(y))) {
            ++it;
            break;
        }
    }
    out.y = std::move(y);
    out.iterations = it;
    return out;
}

OuterEnclosure outer_enclosure(const CentralData& cd, const RankOneRepresentation& rep,
                               const ReducedSolution& y) {
    const std::size_t gamma = rep.gamma();
    if (y.y.size() != gamma) throw DimensionMismatch("outer_enclosure: y has wrong length");

    IntervalVector scaled(gamma);
    for (std::size_t j = 0; j < gamma; ++j) {
        const double m = (y.y[j] - rep.t[j]).mag();
        scaled[j] = Interval::symmetric(cd.g_rad[j]) * Interval(m);
    }
    OuterEnclosure out;
    out.x = (cd.x_mid + (-real_iv_matvec(cd.CF, symmetric_box(cd.dp_rad)))) +
            real_iv_matvec(cd.CL, scaled);
    out.y = y.y;
    out.iterations = y.iterations;
    out.method = EnclosureMethod::IGRank1;
    return out;
}

OuterEnclosure ignp_enclosure(const ParametricLinearSystem& sys, const CentralData& cd,
                              const RankOneRepresentation& rep, const ReducedSolution& y) {
    const std::size_t gamma = rep.gamma();
    if (y.y.size() != gamma) throw DimensionMismatch("ignp_enclosure: y has wrong length");

    const IntervalVector box = sys.box();
    const RealVector g_mid = rep.g_of(cd.p_mid);
    const IntervalVector g_box = rep.g_of(box);

    IntervalVector inner(gamma);
    for (std::size_t j = 0; j < gamma; ++j) {
        const Interval deviation = g_mid[j] - g_box[j];
        inner[j] = Interval(g_mid[j] * rep.t[j]) + deviation * (y.y[j] - rep.t[j]);
    }
    const RealVector c_a0 = cd.C * sys.constant_rhs();

    OuterEnclosure out;
    out.x = (c_a0 + real_iv_matvec(cd.CF, rep.double_prime_of(box))) +
            real_iv_matvec(cd.CL, inner);
    out.y = y.y;
    out.iterations = y.iterations;
    out.method = EnclosureMethod::IGNPForm;
    return out;
}

EnclosureRun run_enclosure(const ParametricLinearSystem& sys, EnclosureMethod method,
                           const ReducedSolveOptions& opts) {
    EnclosureRun run{build_representation(sys), {}, {}, {}};
    run.central = central_data(sys, run.rep);
    run.reduced = solve_reduced(run.central, run.rep, opts);
    run.enclosure = method == EnclosureMethod::IGRank1
                        ? outer_enclosure(run.central, run.rep, run.reduced)
                        : ignp_enclosure(sys, run.central, run.rep, run.reduced);
    return run;
}

}  // namespace ipls
