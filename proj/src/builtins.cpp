#include "ipls/builtins.hpp"

namespace ipls {

ParametricLinearSystem okumura_system(double delta) {
    if (!(delta >= 0.0)) throw InvalidArgument("okumura: delta must be non-negative");
    const std::size_t n = 5;
    const Interval range(1.0 - delta, 1.0 + delta);
    std::vector<ParametricLinearSystem::Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
        RealMatrix A(n, n);
        A(i, i) = 1.0;
        terms.push_back({"p" + std::to_string(i + 1), A, {}, range});
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        RealMatrix A(n, n);
        A(j, j) = 1.0;
        A(j + 1, j + 1) = 1.0;
        A(j, j + 1) = -1.0;
        A(j + 1, j) = -1.0;
        terms.push_back({"p" + std::to_string(n + j + 1), A, {}, range});
    }
    return ParametricLinearSystem(RealMatrix(n, n), {10.0, 0.0, 10.0, 0.0, 0.0}, std::move(terms));
}

ParametricLinearSystem example2_system() {
    const RealMatrix A0{{1.0, 0.25, 0.0}, {0.25, 2.0, 0.25}, {0.0, 0.25, 3.0}};
    const RealVector a0{-5.0 / 2.0, 8.0 / 3.0, -9.0 / 4.0};
    auto unit = [](std::initializer_list<std::pair<std::size_t, std::size_t>> at) {
        RealMatrix A(3, 3);
        for (auto [i, j] : at) A(i, j) = 1.0;
        return A;
    };
    std::vector<ParametricLinearSystem::Term> terms{
        {"p1", unit({{1, 0}, {1, 2}}), {}, Interval(-0.75, 0.75)},
        {"p12", unit({{0, 1}, {2, 1}}), {}, Interval(-0.75, 0.75)},
        {"p2", unit({{2, 0}}), {}, Interval(-0.5, 0.5)},
        {"p22", unit({{0, 2}}), {}, Interval(-0.5, 0.5)},
        {"p3", {}, {-1.0, 1.0 / 3.0, 0.5}, Interval(-0.5, 0.5)},
    };
    return ParametricLinearSystem(A0, a0, std::move(terms));
}

ParametricLinearSystem builtin_system(const std::string& name, double delta) {
    if (name == "okumura") return okumura_system(delta);
    if (name == "example2") return example2_system();
    throw InvalidArgument("unknown built-in system '" + name + "' (expected okumura or example2)");
}

namespace reference {

namespace {
IntervalVector pairs(std::initializer_list<std::pair<double, double>> v) {
    IntervalVector out;
    for (auto [lo, hi] : v) out.emplace_back(lo, hi);
    return out;
}
}  // namespace

IntervalVector okumura_outer_001() {
    return pairs({{7.01522, 7.16659}, {4.11780, 4.24583}, {5.39374, 5.51535},
                  {2.13805, 2.22558}, {1.06046, 1.12136}});
}

IntervalVector okumura_inner_001() {
    return pairs({{7.01736, 7.16446}, {4.11987, 4.24377}, {5.39567, 5.51342},
                  {2.13962, 2.22401}, {1.06171, 1.12011}});
}

IntervalVector okumura_pdm_outer_001() {
    return pairs({{7.01480, 7.16702}, {4.11736, 4.24628}, {5.39331, 5.51578},
                  {2.13770, 2.22594}, {1.06017, 1.12165}});
}

IntervalVector okumura_pdm_inner_001() {
    return pairs({{7.01777, 7.16405}, {4.12030, 4.24333}, {5.39609, 5.51300},
                  {2.13997, 2.22367}, {1.06200, 1.11982}});
}

std::vector<double> okumura_sharpness_001() { return {0.972, 0.968, 0.968, 0.964, 0.959}; }
std::vector<double> okumura_overestimation_001() { return {0.555, 0.692, 0.702, 0.799, 0.959}; }
std::vector<double> okumura_sharpness_025() { return {0.266, 0.189, 0.186, 0.113, 0.028}; }

}  // namespace reference

}  // namespace ipls
