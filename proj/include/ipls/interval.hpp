#pragma once

#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "ipls/errors.hpp"

namespace ipls {

/// Floating-point policy for interval endpoints.
///   Fast      - round-to-nearest, no adjustment.
///   Rigorous  - every computed endpoint is pushed one ulp outward.
enum class Rounding { Fast, Rigorous };

Rounding rounding_mode() noexcept;

/// Switches the rounding policy of the calling thread for the lifetime of
/// the guard.
class RoundingScope {
public:
    explicit RoundingScope(Rounding mode) noexcept;
    ~RoundingScope();
    RoundingScope(const RoundingScope&) = delete;
    RoundingScope& operator=(const RoundingScope&) = delete;

private:
    Rounding saved_;
};

/// Lower endpoint adjustment: nextafter toward -inf in rigorous mode.
inline double round_down(double x) noexcept {
    if (rounding_mode() == Rounding::Fast || !std::isfinite(x)) return x;
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double round_up(double x) noexcept {
    if (rounding_mode() == Rounding::Fast || !std::isfinite(x)) return x;
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

/// Proper closed interval [lo, hi] with lo <= hi.
class Interval {
public:
    constexpr Interval() noexcept = default;
    constexpr explicit Interval(double point) noexcept : lo_(point), hi_(point) {}
    /// Throws InvalidArgument when lo > hi or an endpoint is NaN.
    Interval(double lo, double hi);

    /// [-r, r]; r must be non-negative.
    static Interval symmetric(double r);
    static Interval from_mid_rad(double mid, double rad);

    constexpr double lo() const noexcept { return lo_; }
    constexpr double hi() const noexcept { return hi_; }

    double mid() const noexcept { return 0.5 * lo_ + 0.5 * hi_; }
    double rad() const noexcept { return 0.5 * (hi_ - lo_); }
    double mag() const noexcept { return std::max(std::fabs(lo_), std::fabs(hi_)); }
    double width() const noexcept { return hi_ - lo_; }
    bool is_degenerate() const noexcept { return lo_ == hi_; }

    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
    bool subset_of(const Interval& other) const noexcept {
        return other.lo_ <= lo_ && hi_ <= other.hi_;
    }
    bool interior_subset_of(const Interval& other) const noexcept {
        return other.lo_ < lo_ && hi_ < other.hi_;
    }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(double c, const Interval& a);
Interval operator+(double c, const Interval& a);
Interval operator-(double c, const Interval& a);
Interval operator-(const Interval& a, double c);

inline Interval scale(double c, const Interval& a) { return c * a; }
inline double mid(const Interval& a) { return a.mid(); }
inline double rad(const Interval& a) { return a.rad(); }
inline double mag(const Interval& a) { return a.mag(); }

Interval hull(const Interval& a, const Interval& b) noexcept;
/// std::nullopt is the empty set.
std::optional<Interval> intersect(const Interval& a, const Interval& b) noexcept;
inline bool contains(const Interval& a, double x) noexcept { return a.contains(x); }
inline bool subset(const Interval& a, const Interval& b) noexcept { return a.subset_of(b); }

std::ostream& operator<<(std::ostream& os, const Interval& a);

/// Directed (Kaucher) interval; lo > hi encodes an improper interval.
class KaucherInterval {
public:
    constexpr KaucherInterval() noexcept = default;
    constexpr KaucherInterval(double lo, double hi) noexcept : lo_(lo), hi_(hi) {}
    constexpr explicit KaucherInterval(const Interval& a) noexcept : lo_(a.lo()), hi_(a.hi()) {}

    constexpr double lo() const noexcept { return lo_; }
    constexpr double hi() const noexcept { return hi_; }
    constexpr bool is_proper() const noexcept { return lo_ <= hi_; }
    constexpr bool is_improper() const noexcept { return lo_ > hi_; }

    /// The proper interval this denotes; empty for improper ones.
    std::optional<Interval> to_proper() const;

    friend bool operator==(const KaucherInterval&, const KaucherInterval&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

constexpr KaucherInterval dual(const KaucherInterval& a) noexcept {
    return {a.hi(), a.lo()};
}
KaucherInterval kaucher_add(const KaucherInterval& a, const KaucherInterval& b);
KaucherInterval kaucher_scale(double c, const KaucherInterval& a);

std::ostream& operator<<(std::ostream& os, const KaucherInterval& a);

using IntervalVector = std::vector<Interval>;

class RealMatrix;

/// Dense row-major interval matrix.
class IntervalMatrix {
public:
    IntervalMatrix() = default;
    IntervalMatrix(std::size_t rows, std::size_t cols, Interval fill = Interval{});
    explicit IntervalMatrix(const RealMatrix& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Interval& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Interval& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Interval> data_;
};

IntervalVector to_interval(const std::vector<double>& v);
std::vector<double> mid(const IntervalVector& v);
std::vector<double> rad(const IntervalVector& v);
std::vector<double> mag(const IntervalVector& v);
IntervalVector operator+(const IntervalVector& a, const IntervalVector& b);
IntervalVector operator-(const IntervalVector& a, const IntervalVector& b);
IntervalVector operator-(const IntervalVector& a);
IntervalVector operator+(const std::vector<double>& a, const IntervalVector& b);
IntervalVector operator-(const IntervalVector& a, const std::vector<double>& b);
bool subset(const IntervalVector& a, const IntervalVector& b);
IntervalVector hull(const IntervalVector& a, const IntervalVector& b);

IntervalVector iv_matvec(const IntervalMatrix& m, const IntervalVector& v);
IntervalVector real_iv_matvec(const RealMatrix& m, const IntervalVector& v);

}  // namespace ipls
