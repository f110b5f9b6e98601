#include "ipls/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ipls {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

struct LU {
    RealMatrix lu;
    std::vector<std::size_t> perm;
};

LU lu_factor(const RealMatrix& a) {
    require(a.rows() == a.cols(), "solve: matrix must be square");
    const std::size_t n = a.rows();
    LU f{a, std::vector<std::size_t>(n)};
    std::iota(f.perm.begin(), f.perm.end(), 0);
    const double scale = max_abs(a);
    const double threshold = 1e-12 * scale;
    if (scale == 0.0 && n > 0) throw Singular("matrix is zero");

    RealMatrix& m = f.lu;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(m(i, k)) > std::fabs(m(p, k))) p = i;
        if (!(std::fabs(m(p, k)) > threshold)) {
            std::ostringstream msg;
            msg << "matrix is singular to working precision (pivot " << m(p, k) << " at step " << k
                << ")";
            throw Singular(msg.str());
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            std::swap(f.perm[p], f.perm[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = m(i, k) / m(k, k);
            m(i, k) = factor;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return f;
}

RealVector lu_solve(const LU& f, std::span<const double> b) {
    const std::size_t n = f.lu.rows();
    RealVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[f.perm[i]];
        for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s / f.lu(i, i);
    }
    return x;
}

}  // namespace

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::diagonal(std::span<const double> d) {
    RealMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

RealMatrix RealMatrix::column(std::span<const double> v) {
    RealMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

RealVector RealMatrix::col(std::size_t j) const {
    RealVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

RealMatrix RealMatrix::transposed() const {
    RealMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool RealMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return x == 0.0; });
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    require(a.cols() == b.rows(), "matrix product: inner dimensions differ");
    RealMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: shapes differ");
    RealMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) { return a + (-1.0) * b; }

RealMatrix operator*(double c, const RealMatrix& a) {
    RealMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = c * a(i, j);
    return out;
}

RealVector operator*(const RealMatrix& a, std::span<const double> x) {
    require(a.cols() == x.size(), "matrix-vector product: size mismatch");
    RealVector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

RealVector operator+(const RealVector& a, const RealVector& b) {
    require(a.size() == b.size(), "vector sum: size mismatch");
    RealVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

RealVector operator-(const RealVector& a, const RealVector& b) {
    require(a.size() == b.size(), "vector difference: size mismatch");
    RealVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

RealVector operator*(double c, const RealVector& a) {
    RealVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

RealMatrix abs(const RealMatrix& a) {
    RealMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = std::fabs(a(i, j));
    return out;
}

RealVector abs(const RealVector& v) {
    RealVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::fabs(v[i]);
    return out;
}

RealMatrix scale_columns(const RealMatrix& m, std::span<const double> d) {
    require(m.cols() == d.size(), "scale_columns: size mismatch");
    RealMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= d[j];
    return out;
}

double norm_inf(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

double norm_inf(const RealMatrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (double x : m.row(i)) s += std::fabs(x);
        best = std::max(best, s);
    }
    return best;
}

double max_abs(const RealMatrix& m) { return norm_inf(m.data()); }

RealMatrix solve(const RealMatrix& a, const RealMatrix& b) {
    require(a.rows() == b.rows(), "solve: right-hand side has wrong row count");
    const LU f = lu_factor(a);
    RealMatrix x(b.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const RealVector rhs = b.col(j);
        RealVector xj = lu_solve(f, rhs);
        // one step of iterative refinement
        const RealVector residual = rhs - a * xj;
        const RealVector dx = lu_solve(f, residual);
        for (std::size_t i = 0; i < xj.size(); ++i) x(i, j) = xj[i] + dx[i];
    }
    return x;
}

RealVector solve(const RealMatrix& a, std::span<const double> b) {
    return solve(a, RealMatrix::column(b)).col(0);
}

RealMatrix invert(const RealMatrix& a) { return solve(a, RealMatrix::identity(a.rows())); }

double nonneg_spectral_radius(const RealMatrix& m, const SpectralRadiusOptions& opts) {
    require(m.rows() == m.cols(), "spectral radius: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return 0.0;
    for (double x : m.data())
        if (!(x >= 0.0)) throw InvalidArgument("spectral radius: matrix has a negative entry");

    const double row_sum_bound = norm_inf(m);
    if (row_sum_bound == 0.0) return 0.0;

    // Shift keeps every iterate strictly positive; rho(M + sI) = rho(M) + s.
    const double shift = 0.1 * row_sum_bound;
    RealVector x(n, 1.0);
    double upper = row_sum_bound;
    double previous = std::numeric_limits<double>::infinity();

    for (int it = 0; it < opts.max_iterations; ++it) {
        RealVector y = m * x;
        double hi = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += shift * x[i];
            const double ratio = y[i] / x[i];
            hi = std::max(hi, ratio);
            lo = std::min(lo, ratio);
        }
        upper = std::min(upper, hi - shift);
        if (hi - lo < opts.tol || std::fabs(previous - upper) < opts.tol) break;
        previous = upper;

        const double scale = norm_inf(y);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = std::max(y[i] / scale, std::numeric_limits<double>::min());
    }
    return std::max(0.0, std::min(upper, row_sum_bound));
}

}  // namespace ipls
