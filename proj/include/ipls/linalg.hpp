#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ipls/errors.hpp"

namespace ipls {

using RealVector = std::vector<double>;

/// Dense row-major real matrix.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static RealMatrix identity(std::size_t n);
    static RealMatrix diagonal(std::span<const double> d);
    static RealMatrix column(std::span<const double> v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    RealVector col(std::size_t j) const;
    std::span<const double> data() const noexcept { return data_; }

    RealMatrix transposed() const;
    bool is_zero() const noexcept;

    friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(double c, const RealMatrix& a);
RealVector operator*(const RealMatrix& a, std::span<const double> x);

RealVector operator+(const RealVector& a, const RealVector& b);
RealVector operator-(const RealVector& a, const RealVector& b);
RealVector operator*(double c, const RealVector& a);

/// Entrywise absolute value.
RealMatrix abs(const RealMatrix& a);
RealVector abs(const RealVector& v);

/// M * diag(d)
RealMatrix scale_columns(const RealMatrix& m, std::span<const double> d);

double norm_inf(std::span<const double> v);
/// Maximum absolute row sum.
double norm_inf(const RealMatrix& m);
double max_abs(const RealMatrix& m);

/// Solves A X = B by LU with partial pivoting followed by one step of
/// iterative refinement. Throws Singular when a pivot falls below
/// 1e-12 * max|A|.
RealMatrix solve(const RealMatrix& a, const RealMatrix& b);
RealVector solve(const RealMatrix& a, std::span<const double> b);
RealMatrix invert(const RealMatrix& a);

struct SpectralRadiusOptions {
    double tol = 1e-12;
    int max_iterations = 10000;
};

/// Upper-biased estimate of the Perron root of a nonnegative square matrix.
///
/// Runs the power method on a positively shifted copy of M and reports the
/// Collatz-Wielandt upper bound max_i (Mx)_i / x_i, which never falls below
/// the true spectral radius for positive x. The result is clamped to the
/// maximum row sum. Throws InvalidArgument on negative entries.
double nonneg_spectral_radius(const RealMatrix& m, const SpectralRadiusOptions& opts = {});

}  // namespace ipls
