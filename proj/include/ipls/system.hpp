#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ipls/interval.hpp"
#include "ipls/linalg.hpp"

namespace ipls {

/// A(p) x = a(p),  A(p) = A_0 + sum_k p_k A_k,  a(p) = a_0 + sum_k p_k a_k,
/// with p ranging over an interval box.
///
/// Parameters are stored 0-based; `matrix(0)` / `rhs(0)` are the constant
/// terms and `matrix(k + 1)` / `rhs(k + 1)` belong to parameter k.
class ParametricLinearSystem {
public:
    struct Term {
        std::string name;
        RealMatrix A;
        RealVector a;
        Interval range;
    };

    /// Validates shapes, finiteness and unique names. Degenerate parameter
    /// intervals are accepted and reported by `degenerate_parameters()`.
    ParametricLinearSystem(RealMatrix a0, RealVector rhs0, std::vector<Term> terms);

    std::size_t dimension() const noexcept { return a0_.rows(); }
    std::size_t parameter_count() const noexcept { return terms_.size(); }

    const RealMatrix& constant_matrix() const noexcept { return a0_; }
    const RealVector& constant_rhs() const noexcept { return rhs0_; }
    const Term& term(std::size_t k) const { return terms_.at(k); }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    const std::string& name(std::size_t k) const { return terms_.at(k).name; }
    std::vector<std::string> names() const;
    IntervalVector box() const;
    RealVector box_mid() const;
    RealVector box_rad() const;
    std::vector<std::size_t> degenerate_parameters() const;

    /// (A(p), a(p)). Throws DimensionMismatch if p has the wrong length.
    std::pair<RealMatrix, RealVector> evaluate_at(std::span<const double> p) const;

    /// Copy with every parameter radius multiplied by `factor` (midpoints kept).
    ParametricLinearSystem with_scaled_radii(double factor) const;

private:
    RealMatrix a0_;
    RealVector rhs0_;
    std::vector<Term> terms_;
};

/// pi_prime: parameters appearing in the matrix (and possibly the rhs);
/// pi_double_prime: parameters appearing only in the rhs. Both ascending.
struct ParameterPartition {
    std::vector<std::size_t> pi_prime;
    std::vector<std::size_t> pi_double_prime;
};

/// Throws UnusedParameter when a parameter has both coefficients zero.
ParameterPartition partition_parameters(const ParametricLinearSystem& sys);

}  // namespace ipls
