#pragma once

#include <string>
#include <vector>

#include "ipls/interval.hpp"
#include "ipls/system.hpp"

namespace ipls {

/// Five-node truss-type system: diagonal parameters p1..p5 and coupling
/// parameters p6..p9 on neighbouring nodes, every parameter in
/// [1 - delta, 1 + delta], rhs (10, 0, 10, 0, 0).
ParametricLinearSystem okumura_system(double delta);

/// 3x3 system with rank-one coefficient matrices, parameters
/// p1, p12, p2, p22 in the matrix and p3 in the rhs only.
ParametricLinearSystem example2_system();

/// Built-in lookup by name ("okumura" uses `delta`). Throws InvalidArgument.
ParametricLinearSystem builtin_system(const std::string& name, double delta = 0.01);

/// Published comparison values for the okumura system.
namespace reference {

// delta = 0.01
IntervalVector okumura_outer_001();      // pKRank1 outer
IntervalVector okumura_inner_001();      // pKRank1 inner
IntervalVector okumura_pdm_outer_001();  // PDM outer
IntervalVector okumura_pdm_inner_001();  // PDM inner
std::vector<double> okumura_sharpness_001();      // O_s, pKRank1
std::vector<double> okumura_overestimation_001(); // % overest. of PDM_out

// delta = 0.25
std::vector<double> okumura_sharpness_025();

}  // namespace reference

}  // namespace ipls
