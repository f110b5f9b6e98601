#include "reference.hpp"

#include <algorithm>
#include <cmath>

#include "ipls/enclosure.hpp"

namespace ipls::testing {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool naive_solve(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
    const std::size_t n = b.size();
    double scale = 0.0;
    for (const auto& row : a)
        for (double v : row) scale = std::max(scale, std::fabs(v));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        if (std::fabs(a[piv][c]) <= 1e-13 * scale) return false;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return true;
}

bool point_solution(const ParametricLinearSystem& sys, const std::vector<double>& p,
                    std::vector<double>& x) {
    const std::size_t n = sys.dimension();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    std::vector<double> b(sys.constant_rhs());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = sys.constant_matrix()(i, j);
    for (std::size_t k = 0; k < sys.parameter_count(); ++k) {
        const auto& t = sys.term(k);
        if (!t.A.empty())
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) a[i][j] += p[k] * t.A(i, j);
        if (!t.a.empty())
            for (std::size_t i = 0; i < n; ++i) b[i] += p[k] * t.a[i];
    }
    return naive_solve(std::move(a), std::move(b), x);
}

void Box::include(const std::vector<double>& x) {
    if (lo.empty()) {
        lo = hi = x;
        return;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        lo[i] = std::min(lo[i], x[i]);
        hi[i] = std::max(hi[i], x[i]);
    }
}

bool augmented_rank_one(const ParametricLinearSystem& sys, double tol) {
    const std::size_t n = sys.dimension();
    for (const auto& t : sys.terms()) {
        auto at = [&](std::size_t i, std::size_t j) {
            if (j < n) return t.A.empty() ? 0.0 : t.A(i, j);
            return t.a.empty() ? 0.0 : t.a[i];
        };
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= n; ++j) scale = std::max(scale, std::fabs(at(i, j)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = i + 1; r < n; ++r)
                for (std::size_t j = 0; j <= n; ++j)
                    for (std::size_t c = j + 1; c <= n; ++c)
                        if (std::fabs(at(i, j) * at(r, c) - at(i, c) * at(r, j)) > tol * scale * scale)
                            return false;
    }
    return true;
}

Box vertex_hull(const ParametricLinearSystem& sys) {
    const std::size_t K = sys.parameter_count();
    Box box;
    std::vector<double> p(K), x;
    for (std::size_t v = 0; v < (std::size_t{1} << K); ++v) {
        for (std::size_t k = 0; k < K; ++k) {
            const Interval& r = sys.term(k).range;
            p[k] = (v >> k) & 1 ? r.hi() : r.lo();
        }
        if (point_solution(sys, p, x)) box.include(x);
    }
    return box;
}

std::vector<std::vector<double>> random_point_solutions(const ParametricLinearSystem& sys,
                                                        std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t K = sys.parameter_count();
    std::vector<std::vector<double>> out;
    std::vector<double> p(K), x;
    for (std::size_t s = 0; s < count; ++s) {
        for (std::size_t k = 0; k < K; ++k) {
            const Interval& r = sys.term(k).range;
            p[k] = uniform(rng, r.lo(), r.hi());
        }
        if (point_solution(sys, p, x)) out.push_back(x);
    }
    return out;
}

ParametricLinearSystem random_system(std::mt19937_64& rng, const RandomSystemOptions& opt) {
    const auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const std::size_t n = pick(opt.n_min, opt.n_max);
    const std::size_t K = pick(opt.k_min, opt.k_max);
    auto vec = [&] {
        RealVector v(n);
        for (auto& e : v) e = uniform(rng, -1.0, 1.0);
        return v;
    };
    RealMatrix A0(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double off = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) off += std::fabs(A0(i, j) = uniform(rng, -1.0, 1.0));
        A0(i, i) = (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0) * (off + uniform(rng, 1.0, 3.0));
    }
    std::vector<ParametricLinearSystem::Term> terms;
    for (std::size_t k = 0; k < K; ++k) {
        ParametricLinearSystem::Term t;
        const bool rhs_only = k > 0 && uniform(rng, 0.0, 1.0) < opt.rhs_only_share;
        RealVector u;
        if (!rhs_only) {
            u = vec();
            const RealVector v = vec();
            t.A = RealMatrix(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) t.A(i, j) = u[i] * v[j];
            if (!opt.rank_one && uniform(rng, 0.0, 1.0) < 0.5) {
                const RealVector u2 = vec(), v2 = vec();
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) t.A(i, j) += u2[i] * v2[j];
            }
        }
        if (rhs_only || uniform(rng, 0.0, 1.0) < opt.rhs_share) {
            t.a = vec();
            if (!rhs_only && opt.coupled_rhs) {
                const double c = uniform(rng, -1.0, 1.0);
                for (std::size_t i = 0; i < n; ++i) t.a[i] = c * u[i];
            }
        }
        const double mid = uniform(rng, -0.5, 0.5);
        const double rad = uniform(rng, 0.1, 1.0);
        t.range = Interval(mid - rad, mid + rad);
        terms.push_back(std::move(t));
    }
    return ParametricLinearSystem(A0, vec(), std::move(terms));
}

ParametricLinearSystem scale_to_rho(const ParametricLinearSystem& sys, double rho) {
    const auto rep = build_representation(sys);
    const auto cd = central_data(sys, rep);
    if (cd.rho_strong == 0.0) return sys;
    return sys.with_scaled_radii(rho / cd.rho_strong);
}

}  // namespace ipls::testing
