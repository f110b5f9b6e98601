// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ipls/builtins.hpp"
#include "ipls/hull.hpp"
#include "ipls/metrics.hpp"
#include "ipls/parameterized.hpp"
#include "support/reference.hpp"

using namespace ipls;

namespace {

// tolerances
constexpr double kOkumuraAbs = 1e-3;
constexpr double kOkumuraSeconds = 1.0;
constexpr double kSharpness001 = 2e-3;
constexpr double kOverestimation001 = 2e-2;
constexpr double kSharpness025 = 1e-2;
constexpr double kExample2Rel = 1e-3;
constexpr double kExample2RemainderRel = 1e-2;
constexpr double kStrictMargin = 1e-6;
constexpr double kEquivalenceRel = 1e-12;
constexpr double kContainmentSlack = 1e-10;  // relative, absorbs the point solver's rounding
constexpr double kContainmentSeconds = 60.0;

// workload
constexpr std::uint64_t kSeed = 20240611;
constexpr int kRandomEquivalence = 50;
constexpr int kRandomContainment = 50;
constexpr std::size_t kMonteCarlo = 10000;
constexpr int kRegularitySystems = 100;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

struct Pipeline {
    EnclosureRun run;
    ParameterizedSolutionP p;
    ParameterizedSolutionK k;
    InnerEstimate inner;
    IntervalVector outer;

    explicit Pipeline(const ParametricLinearSystem& sys)
        : run(run_enclosure(sys)),
          p(build_pprank1(run.central, run.rep, run.reduced)),
          k(build_pkrank1(run.central, run.rep, run.reduced)),
          inner(inner_estimate(k)),
          outer(evaluate_param(k, sys.box())) {}
};

testing::RandomSystemOptions small_rank_one() {
    testing::RandomSystemOptions o;
    o.n_min = 2;
    o.n_max = 6;
    o.k_min = 1;
    o.k_max = 6;
    return o;
}

// ---------------------------------------------------------------------------

Outcome okumura_outer() {
    const auto t0 = Clock::now();
    const auto sys = okumura_system(0.01);
    const Pipeline pl(sys);
    const double elapsed = seconds_since(t0);
    const auto ref = reference::okumura_outer_001();
    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        worst = std::max(worst, std::fabs(pl.outer[i].lo() - ref[i].lo()));
        worst = std::max(worst, std::fabs(pl.outer[i].hi() - ref[i].hi()));
    }
    return {worst <= kOkumuraAbs && elapsed < kOkumuraSeconds,
            "max endpoint error " + fmt(worst) + ", " + fmt(elapsed) + " s"};
}

Outcome okumura_inner() {
    const Pipeline pl(okumura_system(0.01));
    const auto ref = reference::okumura_inner_001();
    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        if (!pl.inner.x_in[i]) return {false, "component " + std::to_string(i + 1) + " empty"};
        worst = std::max(worst, std::fabs(pl.inner.x_in[i]->lo() - ref[i].lo()));
        worst = std::max(worst, std::fabs(pl.inner.x_in[i]->hi() - ref[i].hi()));
    }
    return {worst <= kOkumuraAbs, "max endpoint error " + fmt(worst)};
}

Outcome okumura_metrics_001() {
    const Pipeline pl(okumura_system(0.01));
    const auto rows = quality_table(pl.inner.x_in, pl.outer, reference::okumura_pdm_outer_001());
    const auto os = reference::okumura_sharpness_001();
    const auto ow = reference::okumura_overestimation_001();
    double worst_s = 0.0, worst_w = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        worst_s = std::max(worst_s, std::fabs(rows[i].sharpness - os[i]));
        worst_w = std::max(worst_w, std::fabs(*rows[i].overestimation - ow[i]));
    }
    return {worst_s <= kSharpness001 && worst_w <= kOverestimation001,
            "O_s error " + fmt(worst_s) + ", O_w error " + fmt(worst_w)};
}

Outcome okumura_metrics_025() {
    const Pipeline pl(okumura_system(0.25));
    const auto rows = quality_table(pl.inner.x_in, pl.outer);
    const auto os = reference::okumura_sharpness_025();
    double worst = 0.0;
    for (std::size_t i = 0; i < 5; ++i) worst = std::max(worst, std::fabs(rows[i].sharpness - os[i]));
    return {worst <= kSharpness025, "O_s error " + fmt(worst)};
}

Outcome example2_constructs() {
    const Pipeline pl(example2_system());
    const RealVector x_shown{-2.9538, 1.81522, -0.901268};
    const RealMatrix U_shown{{1.07065, 0.502836, 1.89414, -0.0321066, -0.930657},
                             {-0.282609, -2.01134, -0.31569, 0.128426, 0.117557},
                             {-0.143116, 0.167612, 0.63138, -0.995304, -0.00979639}};
    const RealVector r_shown{52.7807, 39.2595, 22.8547};
    auto rel = [](double got, double want) { return std::fabs(got - want) / std::fabs(want); };
    double wx = 0.0, wu = 0.0, wr = 0.0;
    if (pl.k.U.rows() != 3 || pl.k.U.cols() != 5) return {false, "U has the wrong shape"};
    for (std::size_t i = 0; i < 3; ++i) {
        wx = std::max(wx, rel(pl.k.x_mid[i], x_shown[i]));
        wr = std::max(wr, rel(pl.k.r_hat[i], r_shown[i]));
        for (std::size_t j = 0; j < 5; ++j) wu = std::max(wu, rel(pl.k.U(i, j), U_shown(i, j)));
    }
    return {wx <= kExample2Rel && wu <= kExample2Rel && wr <= kExample2RemainderRel,
            "relative errors x " + fmt(wx) + ", U " + fmt(wu) + ", r " + fmt(wr)};
}

Outcome sign_tables() {
    const auto sys = example2_system();
    const auto rep = build_representation(sys);
    const auto cd = central_data(sys, rep);
    const SignMatrix m = sign_matrix(cd, rep);
    const std::vector<std::vector<int>> left{{-1, 1, 1, -1, -1}, {1, -1, -1, 1, 1}, {1, 1, 1, -1, -1}};
    const bool left_ok = m.s == left;

    // right table, columns (p3, p1, p12, p2, p22): {lower, upper} per cell
    using Cell = std::pair<int, int>;
    const std::vector<std::vector<Cell>> right{
        {{1, -1}, {1, 1}, {1, -1}, {-1, -1}, {-1, 1}},
        {{1, 1}, {-1, 1}, {1, 1}, {-1, -1}, {-1, -1}},
        {{1, 1}, {1, 1}, {1, -1}, {-1, 1}, {-1, 1}},
    };
    const auto oracle = vertex_oracle(sys, 20);
    const std::vector<std::size_t> cols{4, 0, 1, 2, 3};
    bool right_ok = true;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t c = 0; c < 5; ++c) {
            const auto& b = oracle.signs[i];
            const std::size_t k = cols[c];
            right_ok = right_ok && !b.lower_tie[k] && !b.upper_tie[k] &&
                       Cell{b.lower_vertex[k], b.upper_vertex[k]} == right[i][c];
        }

    const auto claimed = parameter_signs(m, sys.parameter_count());
    const auto verdicts = danger_check(claimed, oracle.signs);
    int mismatches = 0;
    for (auto v : verdicts) mismatches += v == Verdict::Mismatch;

    const auto endpoints = hull_by_signs(sys, rep, cd, claimed);
    int strict = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!endpoints[i].hull) continue;
        const Interval& h = *endpoints[i].hull;
        if (h.lo() > oracle.hull[i].lo() + kStrictMargin && h.hi() < oracle.hull[i].hi() - kStrictMargin)
            ++strict;
    }
    return {left_ok && right_ok && mismatches >= 1 && strict >= 1,
            std::string("left ") + (left_ok ? "ok" : "differs") + ", right " +
                (right_ok ? "ok" : "differs") + ", " + std::to_string(mismatches) +
                " mismatch verdicts, " + std::to_string(strict) + " strictly inside"};
}

double box_rel_diff(const IntervalVector& a, const IntervalVector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double scale = std::max({a[i].mag(), b[i].mag(), 1e-300});
        worst = std::max(worst, std::fabs(a[i].lo() - b[i].lo()) / scale);
        worst = std::max(worst, std::fabs(a[i].hi() - b[i].hi()) / scale);
    }
    return worst;
}

Outcome equivalences() {
    RoundingScope fast(Rounding::Fast);
    double triple = 0.0, np = 0.0;
    for (const auto& sys : {okumura_system(0.01), example2_system()}) {
        const Pipeline pl(sys);
        triple = std::max(triple, box_rel_diff(evaluate_param(pl.p, sys.box()), pl.run.enclosure.x));
        triple = std::max(triple, box_rel_diff(pl.outer, pl.run.enclosure.x));
    }
    std::vector<ParametricLinearSystem> systems{okumura_system(0.01), example2_system()};
    std::mt19937_64 rng(kSeed);
    while (systems.size() < 2 + kRandomEquivalence) {
        const auto sys = testing::scale_to_rho(testing::random_system(rng, small_rank_one()),
                                               testing::uniform(rng, 0.05, 0.95));
        systems.push_back(sys);
    }
    for (const auto& sys : systems) {
        const auto a = run_enclosure(sys, EnclosureMethod::IGRank1);
        const auto b = run_enclosure(sys, EnclosureMethod::IGNPForm);
        np = std::max(np, box_rel_diff(a.enclosure.x, b.enclosure.x));
    }
    return {triple <= kEquivalenceRel && np <= kEquivalenceRel,
            "triple equality " + fmt(triple) + ", iGRank1 vs iGNP " + fmt(np) + " over " +
                std::to_string(systems.size()) + " systems"};
}

bool in_box(double x, const Interval& box) {
    const double slack = kContainmentSlack * std::max(1.0, std::fabs(x));
    return box.lo() - slack <= x && x <= box.hi() + slack;
}

Outcome containment() {
    RoundingScope rigorous(Rounding::Rigorous);
    const auto t0 = Clock::now();
    std::vector<ParametricLinearSystem> systems{okumura_system(0.01), okumura_system(0.25), example2_system()};
    std::mt19937_64 rng(kSeed + 1);
    auto opt = small_rank_one();
    while (systems.size() < 3 + kRandomContainment) {
        opt.coupled_rhs = systems.size() % 2 == 0;
        const auto sys = testing::scale_to_rho(testing::random_system(rng, opt),
                                               testing::uniform(rng, 0.05, 0.95));
        systems.push_back(sys);
    }
    int failures = 0, inner_checked = 0, vertex_checked = 0;
    std::string first;
    for (std::size_t s = 0; s < systems.size(); ++s) {
        const auto& sys = systems[s];
        const Pipeline pl(sys);
        auto fail = [&](const std::string& what) {
            if (failures++ == 0) first = "system " + std::to_string(s) + ": " + what;
        };
        for (const auto& x : testing::random_point_solutions(sys, kMonteCarlo, kSeed + s))
            for (std::size_t i = 0; i < x.size(); ++i)
                if (!in_box(x[i], pl.outer[i])) fail("sample outside outer enclosure");
        if (!testing::augmented_rank_one(sys)) continue;
        ++vertex_checked;
        const auto hull = testing::vertex_hull(sys);
        for (std::size_t i = 0; i < sys.dimension(); ++i) {
            const Interval exact(hull.lo[i], hull.hi[i]);
            if (!in_box(exact.lo(), pl.outer[i]) || !in_box(exact.hi(), pl.outer[i]))
                fail("vertex hull outside outer enclosure");
            if (pl.inner.x_in[i]) {
                ++inner_checked;
                if (!in_box(pl.inner.x_in[i]->lo(), exact) || !in_box(pl.inner.x_in[i]->hi(), exact))
                    fail("inner estimate outside vertex hull");
            }
        }
    }
    const double elapsed = seconds_since(t0);
    return {failures == 0 && elapsed < kContainmentSeconds,
            std::to_string(systems.size()) + " systems (" + std::to_string(vertex_checked) +
                " with exact vertex hull), " + std::to_string(inner_checked) +
                " non-empty inner components, " + std::to_string(failures) + " violations" +
                (first.empty() ? "" : " (" + first + ")") + ", " + fmt(elapsed) + " s"};
}

Outcome regularity_ordering() {
    const std::vector<double> grid{0.1, 0.25, 0.5, 0.7, 0.8, 0.9, 0.95, 0.99, 1.05, 1.2};
    std::mt19937_64 rng(kSeed + 2);
    int strong = 0, counterexamples = 0;
    std::string first;
    for (int s = 0; s < kRegularitySystems; ++s) {
        const auto base = testing::random_system(rng, small_rank_one());
        const auto rep = build_representation(base);
        const auto cd0 = central_data(base, rep);
        if (cd0.rho_strong == 0.0) continue;
        for (double target : grid) {
            const auto sys = base.with_scaled_radii(target / cd0.rho_strong);
            const auto cd = central_data(sys, rep);
            if (!check_strong_regularity(cd)) continue;
            ++strong;
            if (!check_weak_regularity(cd) && counterexamples++ == 0)
                first = "system " + std::to_string(s) + ": rho_strong " + fmt(cd.rho_strong) +
                        ", rho_weak " + fmt(cd.rho_weak);
        }
    }
    return {counterexamples == 0,
            std::to_string(strong) + " strongly regular instances, " + std::to_string(counterexamples) +
                " not weakly regular" + (first.empty() ? "" : " (first: " + first + ")")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"okumura outer bounds, delta 0.01", okumura_outer},
        {"okumura inner bounds, delta 0.01", okumura_inner},
        {"okumura sharpness and overestimation, delta 0.01", okumura_metrics_001},
        {"okumura sharpness, delta 0.25", okumura_metrics_025},
        {"example2 midpoint, U and remainder", example2_constructs},
        {"sign tables and danger check", sign_tables},
        {"equivalence of enclosure forms", equivalences},
        {"containment under rigorous rounding", containment},
        {"strong regularity implies weak", regularity_ordering},
    };
    int failed = 0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
        Outcome o;
        try {
            o = criteria[c].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %zu: %s  %s: %s\n", c + 1, o.pass ? "PASS" : "FAIL",
                    criteria[c].first.c_str(), o.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
