#include <doctest.h>

#include "ipls/builtins.hpp"
#include "ipls/json_io.hpp"
#include "ipls/metrics.hpp"
#include "ipls/parameterized.hpp"

using namespace ipls;

namespace {

struct Okumura {
    IntervalVector outer;
    InnerEstimate inner;
    explicit Okumura(double delta) {
        const auto sys = okumura_system(delta);
        const auto run = run_enclosure(sys);
        const auto k = build_pkrank1(run.central, run.rep, run.reduced);
        outer = evaluate_param(k, sys.box());
        inner = inner_estimate(k);
    }
};

}  // namespace

TEST_CASE("sharpness definition") {
    CHECK(sharpness(std::nullopt, Interval(0, 1)) == 0.0);
    CHECK(sharpness(Interval(0.25, 0.75), Interval(0, 1)) == 0.5);
    CHECK(sharpness(Interval(2), Interval(2)) == 1.0);
    CHECK_THROWS_AS(sharpness(Interval(0, 1), Interval(0.5)), InvalidArgument);
    CHECK(sharpness(Interval(0, 1), Interval(0, 1)) == 1.0);
}

TEST_CASE("sharpness is scale invariant and monotone") {
    const Interval in(0.2, 0.7), out(0, 1);
    for (double c : {-3.0, 0.5, 7.0})
        CHECK(sharpness(c * in, c * out) == doctest::Approx(sharpness(in, out)).epsilon(1e-14));
    CHECK(sharpness(in, Interval(-1, 2)) <= sharpness(in, out));
}

TEST_CASE("overestimation definition") {
    CHECK(overestimation(Interval(0, 1), Interval(0, 1)) == 0.0);
    CHECK(overestimation(Interval(0, 1), Interval(-0.5, 1.5)) == 50.0);
    CHECK_THROWS_AS(overestimation(Interval(0, 2), Interval(0, 1)), InvalidArgument);
    CHECK_THROWS_AS(overestimation(Interval(1), Interval(1)), InvalidArgument);
    const Interval x(0.3, 0.9), y(0.1, 1.4);
    CHECK(overestimation(x, y) + 100 * x.rad() / y.rad() == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("okumura quality at delta 0.01") {
    const Okumura o(0.01);
    const auto rows = quality_table(o.inner.x_in, o.outer, reference::okumura_pdm_outer_001());
    const auto os = reference::okumura_sharpness_001();
    const auto ow = reference::okumura_overestimation_001();
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(std::fabs(rows[i].sharpness - os[i]) <= 2e-3);
        REQUIRE(rows[i].overestimation.has_value());
        CHECK(std::fabs(*rows[i].overestimation - ow[i]) <= 2e-2);
        CHECK(rows[i].sharpness >= 0.0);
        CHECK(rows[i].sharpness <= 1.0);
    }
}

TEST_CASE("okumura sharpness at delta 0.25") {
    const Okumura o(0.25);
    const auto rows = quality_table(o.inner.x_in, o.outer);
    const auto os = reference::okumura_sharpness_025();
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(std::fabs(rows[i].sharpness - os[i]) <= 1e-2);
        CHECK_FALSE(rows[i].overestimation.has_value());
    }
}

TEST_CASE("frozen comparison bounds are consistent") {
    const auto out = reference::okumura_pdm_outer_001();
    const auto in = reference::okumura_pdm_inner_001();
    // published sharpness of the comparison method
    const std::vector<double> published{0.961, 0.954, 0.954, 0.948, 0.940};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(in[i].subset_of(out[i]));
        CHECK(std::fabs(sharpness(in[i], out[i]) - published[i]) <= 2e-3);
    }
}

TEST_CASE("quality table rendering and json") {
    std::vector<std::optional<Interval>> in{Interval(0.25, 0.75), std::nullopt};
    const IntervalVector out{Interval(0, 1), Interval(0, 2)};
    const auto rows = quality_table(in, out, IntervalVector{Interval(-1, 2), Interval(0, 2)});
    CHECK(rows[1].sharpness == 0.0);
    CHECK(*rows[0].overestimation == doctest::Approx(100.0 * 2.0 / 3.0));
    const std::string text = render_quality_table(rows, "test");
    CHECK(text.find("O_s, test") != std::string::npos);
    CHECK(text.find("0.500") != std::string::npos);
    CHECK(text.find("% overest.") != std::string::npos);
    const Json j = quality_json(rows);
    CHECK(j[0]["O_s"] == 0.5);
    CHECK(j[1]["component"] == 2);
    CHECK_THROWS_AS(quality_table(in, IntervalVector{Interval(0, 1)}), DimensionMismatch);
}
