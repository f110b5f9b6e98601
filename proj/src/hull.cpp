#include "ipls/hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

namespace ipls {

namespace {

double rel_diff(double a, double b) {
    return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

RealVector vertex_point(const RealVector& mid, const RealVector& rad, const std::vector<int>& s) {
    RealVector p(mid.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = mid[k] + s[k] * rad[k];
    return p;
}

RealVector solve_direct(const ParametricLinearSystem& sys, const RealVector& p) {
    const auto [A, a] = sys.evaluate_at(p);
    return solve(A, a);
}

// (A(p_mid) - L D_{g(d)} R) x = a(p_mid) - F d'' - L D_{g(d)} t with d = p_mid - p
RealVector solve_centered(const ParametricLinearSystem& sys, const RankOneRepresentation& rep,
                          const CentralData& cd, const RealVector& p) {
    const RealVector d = cd.p_mid - p;
    const auto [A_mid, a_mid] = sys.evaluate_at(cd.p_mid);
    const RealVector g = rep.g_of(d);
    const RealMatrix LD = scale_columns(rep.L, g);
    RealVector rhs = a_mid - LD * rep.t;
    if (rep.F.cols() > 0) rhs = rhs - rep.F * rep.double_prime_of(d);
    return solve(A_mid - LD * rep.R, rhs);
}

// C_i L D_{y(p) - y_mid} g(p_mid - p)
double r_star_term(const RankOneRepresentation& rep, const CentralData& cd, std::size_t i,
                   const RealVector& x, const RealVector& p) {
    const RealVector y = rep.R * x;
    const RealVector g = rep.g_of(cd.p_mid - p);
    double s = 0.0;
    for (std::size_t j = 0; j < rep.gamma(); ++j) s += cd.CL(i, j) * (y[j] - cd.y_mid[j]) * g[j];
    return s;
}

std::vector<int> negated(const std::vector<int>& s) {
    std::vector<int> out(s.size());
    std::transform(s.begin(), s.end(), out.begin(), [](int v) { return -v; });
    return out;
}

std::string sign_text(int s) { return s > 0 ? "1" : (s < 0 ? "-1" : "0"); }

std::string render_table(const HullReport& r,
                         const std::function<std::string(const HullComponent&, std::size_t)>& cell) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{""};
    for (std::size_t k : r.column_order) header.push_back(r.parameter_names[k]);
    rows.push_back(header);
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        std::vector<std::string> row{"x" + std::to_string(i + 1)};
        for (std::size_t k : r.column_order) row.push_back(cell(r.components[i], k));
        rows.push_back(row);
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::vector<int> SignMatrix::per_parameter(std::size_t i, std::size_t parameter_count) const {
    std::vector<int> out(parameter_count, 0);
    std::vector<bool> seen(parameter_count, false);
    for (std::size_t c = 0; c < cols(); ++c) {
        const std::size_t k = column_param[c];
        const int v = s.at(i)[c];
        if (!seen[k]) {
            out[k] = v;
            seen[k] = true;
        } else if (out[k] != v) {
            out[k] = 0;
        }
    }
    return out;
}

SignMatrix sign_matrix(const CentralData& cd, const RankOneRepresentation& rep) {
    const std::size_t n = cd.x_mid.size();
    const std::size_t ndp = rep.F.cols();
    const std::size_t gamma = rep.gamma();
    SignMatrix m;
    m.column_param = rep.q_parameters();
    m.s.assign(n, std::vector<int>(ndp + gamma, 0));
    for (std::size_t i = 0; i < n; ++i) {
        RealVector row(ndp + gamma);
        for (std::size_t j = 0; j < ndp; ++j) row[j] = cd.CF(i, j);
        for (std::size_t j = 0; j < gamma; ++j)
            row[ndp + j] = cd.CL(i, j) * (cd.y_mid[j] - rep.t[j]);
        const double cutoff = 1e-12 * norm_inf(row);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (std::fabs(row[j]) < cutoff || row[j] == 0.0) continue;
            m.s[i][j] = row[j] > 0.0 ? 1 : -1;
        }
    }
    return m;
}

ParameterSigns parameter_signs(const SignMatrix& m, std::size_t parameter_count) {
    ParameterSigns out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.per_parameter(i, parameter_count));
    return out;
}

std::vector<EndpointHull> hull_by_patterns(const ParametricLinearSystem& sys,
                                           const RankOneRepresentation& rep,
                                           const CentralData& cd, const ParameterSigns& lower,
                                           const ParameterSigns& upper) {
    const std::size_t n = sys.dimension();
    if (lower.size() != n || upper.size() != n)
        throw DimensionMismatch("hull_by_patterns: need one sign vector per component");

    std::vector<EndpointHull> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        EndpointHull& e = out[i];
        const RealVector p_lo = vertex_point(cd.p_mid, cd.p_rad, lower[i]);
        const RealVector p_hi = vertex_point(cd.p_mid, cd.p_rad, upper[i]);
        try {
            const RealVector x_lo = solve_direct(sys, p_lo);
            const RealVector x_hi = solve_direct(sys, p_hi);
            const RealVector c_lo = solve_centered(sys, rep, cd, p_lo);
            const RealVector c_hi = solve_centered(sys, rep, cd, p_hi);
            e.at_lower_signs = x_lo[i];
            e.at_upper_signs = x_hi[i];
            e.path_disagreement = std::max(rel_diff(x_lo[i], c_lo[i]), rel_diff(x_hi[i], c_hi[i]));
            e.reversed = e.at_lower_signs > e.at_upper_signs;
            e.hull = Interval(std::min(e.at_lower_signs, e.at_upper_signs),
                              std::max(e.at_lower_signs, e.at_upper_signs));
            e.r_star = KaucherInterval(r_star_term(rep, cd, i, x_lo, p_lo),
                                       r_star_term(rep, cd, i, x_hi, p_hi));
        } catch (const Singular& ex) {
            e.hull.reset();
            e.error = ex.what();
        }
    }
    return out;
}

std::vector<EndpointHull> hull_by_signs(const ParametricLinearSystem& sys,
                                        const RankOneRepresentation& rep,
                                        const CentralData& cd, const ParameterSigns& signs) {
    ParameterSigns lower;
    for (const auto& s : signs) lower.push_back(negated(s));
    return hull_by_patterns(sys, rep, cd, lower, signs);
}

std::string to_string(OracleMode m) {
    return m == OracleMode::Exact ? "exact" : "sampling-lower-bound";
}

std::size_t default_max_vertex_k() {
    if (const char* env = std::getenv("IPLS_MAX_VERTEX_K")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 20;
}

VertexOracleResult vertex_oracle(const ParametricLinearSystem& sys, std::size_t max_k,
                                 double tie_tol) {
    const std::size_t K = sys.parameter_count();
    const std::size_t n = sys.dimension();
    if (K > max_k || K >= 63) {
        std::ostringstream msg;
        msg << "vertex oracle: K = " << K << " exceeds the cap " << max_k;
        throw OracleError(msg.str());
    }

    VertexOracleResult res;
    // x(p) is linear fractional in each p_k, hence monotone, only when the
    // augmented coefficient [A_k | a_k] has rank one
    for (const auto& term : sys.terms()) {
        if (term.A.is_zero()) continue;
        RealMatrix augmented(n, n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) augmented(i, j) = term.A(i, j);
            if (!term.a.empty()) augmented(i, n) = term.a[i];
        }
        if (rank_factorize(augmented).rank > 1) {
            res.mode = OracleMode::SamplingLowerBound;
            break;
        }
    }

    const RealVector mid = sys.box_mid();
    const RealVector rad = sys.box_rad();
    const std::size_t count = std::size_t{1} << K;
    res.vertex_count = count;
    std::vector<double> solutions(count * n);

    auto pattern = [K](std::size_t v) {
        std::vector<int> s(K);
        for (std::size_t k = 0; k < K; ++k) s[k] = (v >> k) & 1 ? 1 : -1;
        return s;
    };
    auto work = [&](std::size_t begin, std::size_t end, std::string& error) {
        for (std::size_t v = begin; v < end; ++v) {
            try {
                const RealVector x = solve_direct(sys, vertex_point(mid, rad, pattern(v)));
                std::copy(x.begin(), x.end(), solutions.begin() + v * n);
            } catch (const Singular& ex) {
                error = std::string("vertex oracle: singular vertex matrix: ") + ex.what();
                return;
            }
        }
    };

    const std::size_t threads =
        count >= 4096
            ? std::max<std::size_t>(1, std::min<std::size_t>(8, std::thread::hardware_concurrency()))
            : 1;
    std::vector<std::string> errors(threads);
    if (threads == 1) {
        work(0, count, errors[0]);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (count + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(work, t * chunk, std::min(count, (t + 1) * chunk), std::ref(errors[t]));
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (!e.empty()) throw OracleError(e);

    res.hull.resize(n);
    res.signs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lo = solutions[i], hi = solutions[i];
        std::size_t arg_lo = 0, arg_hi = 0;
        for (std::size_t v = 1; v < count; ++v) {
            const double x = solutions[v * n + i];
            if (x < lo) lo = x, arg_lo = v;
            if (x > hi) hi = x, arg_hi = v;
        }
        res.hull[i] = Interval(lo, hi);

        BoundSigns& b = res.signs[i];
        b.lower_vertex = pattern(arg_lo);
        b.upper_vertex = pattern(arg_hi);
        b.lower = b.lower_vertex;
        b.upper = b.upper_vertex;
        b.lower_tie.assign(K, false);
        b.upper_tie.assign(K, false);
        const double tol_lo = tie_tol * std::max(1.0, std::fabs(lo));
        const double tol_hi = tie_tol * std::max(1.0, std::fabs(hi));
        for (std::size_t v = 0; v < count; ++v) {
            const double x = solutions[v * n + i];
            const bool at_lo = v != arg_lo && x - lo <= tol_lo;
            const bool at_hi = v != arg_hi && hi - x <= tol_hi;
            if (!at_lo && !at_hi) continue;
            const auto s = pattern(v);
            for (std::size_t k = 0; k < K; ++k) {
                if (at_lo && s[k] != b.lower_vertex[k]) {
                    b.lower[k] = 0;
                    b.lower_tie[k] = true;
                }
                if (at_hi && s[k] != b.upper_vertex[k]) {
                    b.upper[k] = 0;
                    b.upper_tie[k] = true;
                }
            }
        }
    }
    return res;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Sound: return "Sound";
        case Verdict::ZeroCoefficient: return "ZeroCoefficient";
        case Verdict::Mismatch: return "Mismatch";
    }
    return "?";
}

std::vector<Verdict> danger_check(const ParameterSigns& claimed,
                                  const std::vector<BoundSigns>& oracle) {
    if (claimed.size() != oracle.size())
        throw DimensionMismatch("danger_check: claimed and oracle sign counts differ");
    std::vector<Verdict> out;
    for (std::size_t i = 0; i < claimed.size(); ++i) {
        const auto& c = claimed[i];
        const auto& o = oracle[i];
        if (c.size() != o.lower.size() || c.size() != o.upper.size())
            throw DimensionMismatch("danger_check: parameter counts differ");
        if (std::any_of(c.begin(), c.end(), [](int s) { return s == 0; })) {
            out.push_back(Verdict::ZeroCoefficient);
            continue;
        }
        bool sound = true;
        for (std::size_t k = 0; k < c.size() && sound; ++k) {
            const bool tie = o.lower_tie[k] || o.upper_tie[k];
            const bool global = o.lower[k] != 0 && o.lower[k] == -o.upper[k];
            sound = !tie && global && o.upper[k] == c[k];
        }
        out.push_back(sound ? Verdict::Sound : Verdict::Mismatch);
    }
    return out;
}

bool HullReport::any_unsound() const {
    return std::any_of(components.begin(), components.end(),
                       [](const HullComponent& c) { return c.verdict != Verdict::Sound; });
}

HullReport hull_report(const ParametricLinearSystem& sys, SignSource source, bool use_oracle,
                       std::size_t max_k) {
    const RankOneRepresentation rep = build_representation(sys);
    const CentralData cd = central_data(sys, rep);
    const std::size_t n = sys.dimension();
    const std::size_t K = sys.parameter_count();

    HullReport report;
    report.parameter_names = sys.names();
    report.column_order = rep.partition.pi_double_prime;
    report.column_order.insert(report.column_order.end(), rep.partition.pi_prime.begin(),
                               rep.partition.pi_prime.end());
    report.signs_source = source == SignSource::FromParam ? "from-param" : "oracle";
    report.components.resize(n);

    std::optional<VertexOracleResult> oracle;
    if (use_oracle || source == SignSource::Oracle) oracle = vertex_oracle(sys, max_k);

    ParameterSigns claimed, lower, upper;
    if (source == SignSource::FromParam) {
        claimed = parameter_signs(sign_matrix(cd, rep), K);
        for (const auto& s : claimed) lower.push_back(negated(s));
        upper = claimed;
    } else {
        for (const auto& b : oracle->signs) {
            claimed.push_back(b.upper_vertex);
            lower.push_back(b.lower_vertex);
            upper.push_back(b.upper_vertex);
        }
    }
    const auto endpoints = hull_by_patterns(sys, rep, cd, lower, upper);

    std::vector<Verdict> verdicts(n, Verdict::Mismatch);
    if (oracle) {
        report.oracle_mode = oracle->mode;
        verdicts = danger_check(claimed, oracle->signs);
    }
    for (std::size_t i = 0; i < n; ++i) {
        HullComponent& c = report.components[i];
        c.claimed_signs = claimed[i];
        c.endpoint = endpoints[i];
        c.verdict = verdicts[i];
        if (oracle) {
            c.oracle_signs = oracle->signs[i];
            c.oracle_hull = oracle->hull[i];
        }
    }
    return report;
}

std::string render_claimed_table(const HullReport& r) {
    return render_table(r, [](const HullComponent& c, std::size_t k) {
        return sign_text(c.claimed_signs[k]);
    });
}

std::string render_oracle_table(const HullReport& r) {
    return render_table(r, [](const HullComponent& c, std::size_t k) -> std::string {
        if (c.oracle_signs.lower.empty()) return "?";
        const int lo = c.oracle_signs.lower[k];
        const int hi = c.oracle_signs.upper[k];
        if (lo == hi) return sign_text(lo);
        return sign_text(lo) + ", " + sign_text(hi);
    });
}

}  // namespace ipls
