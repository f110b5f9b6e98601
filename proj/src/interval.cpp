#include "ipls/interval.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ipls/linalg.hpp"

namespace ipls {

namespace {
thread_local Rounding current_mode = Rounding::Fast;

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream msg;
        msg << what << ": size " << a << " vs " << b;
        throw DimensionMismatch(msg.str());
    }
}
}  // namespace

Rounding rounding_mode() noexcept { return current_mode; }

RoundingScope::RoundingScope(Rounding mode) noexcept : saved_(current_mode) {
    current_mode = mode;
}

RoundingScope::~RoundingScope() { current_mode = saved_; }

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
        std::ostringstream msg;
        msg << "not a proper interval: [" << lo << ", " << hi << "]";
        throw InvalidArgument(msg.str());
    }
}

Interval Interval::symmetric(double r) {
    if (!(r >= 0.0)) throw InvalidArgument("symmetric interval needs a non-negative radius");
    return {-r, r};
}

Interval Interval::from_mid_rad(double mid, double rad) {
    if (!(rad >= 0.0)) throw InvalidArgument("negative radius");
    return {round_down(mid - rad), round_up(mid + rad)};
}

Interval operator+(const Interval& a, const Interval& b) {
    return {round_down(a.lo() + b.lo()), round_up(a.hi() + b.hi())};
}

Interval operator-(const Interval& a, const Interval& b) {
    return {round_down(a.lo() - b.hi()), round_up(a.hi() - b.lo())};
}

Interval operator-(const Interval& a) { return {-a.hi(), -a.lo()}; }

Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo() * b.lo();
    const double p2 = a.lo() * b.hi();
    const double p3 = a.hi() * b.lo();
    const double p4 = a.hi() * b.hi();
    const double lo = std::min({p1, p2, p3, p4});
    const double hi = std::max({p1, p2, p3, p4});
    return {round_down(lo), round_up(hi)};
}

Interval operator*(double c, const Interval& a) {
    if (c >= 0.0) return {round_down(c * a.lo()), round_up(c * a.hi())};
    return {round_down(c * a.hi()), round_up(c * a.lo())};
}

Interval operator+(double c, const Interval& a) { return Interval(c) + a; }
Interval operator-(double c, const Interval& a) { return Interval(c) - a; }
Interval operator-(const Interval& a, double c) { return a - Interval(c); }

Interval hull(const Interval& a, const Interval& b) noexcept {
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) noexcept {
    const double lo = std::max(a.lo(), b.lo());
    const double hi = std::min(a.hi(), b.hi());
    if (lo > hi) return std::nullopt;
    return Interval(lo, hi);
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
    return os << '[' << a.lo() << ", " << a.hi() << ']';
}

std::optional<Interval> KaucherInterval::to_proper() const {
    if (is_improper()) return std::nullopt;
    return Interval(lo_, hi_);
}

KaucherInterval kaucher_add(const KaucherInterval& a, const KaucherInterval& b) {
    return {a.lo() + b.lo(), a.hi() + b.hi()};
}

KaucherInterval kaucher_scale(double c, const KaucherInterval& a) {
    if (c >= 0.0) return {c * a.lo(), c * a.hi()};
    return {c * a.hi(), c * a.lo()};
}

std::ostream& operator<<(std::ostream& os, const KaucherInterval& a) {
    return os << '[' << a.lo() << ", " << a.hi() << ']';
}

IntervalMatrix::IntervalMatrix(std::size_t rows, std::size_t cols, Interval fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntervalMatrix::IntervalMatrix(const RealMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), data_(m.rows() * m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Interval(m(i, j));
}

IntervalVector to_interval(const std::vector<double>& v) {
    IntervalVector out;
    out.reserve(v.size());
    for (double x : v) out.emplace_back(x);
    return out;
}

std::vector<double> mid(const IntervalVector& v) {
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](const Interval& a) { return a.mid(); });
    return out;
}

std::vector<double> rad(const IntervalVector& v) {
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](const Interval& a) { return a.rad(); });
    return out;
}

std::vector<double> mag(const IntervalVector& v) {
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](const Interval& a) { return a.mag(); });
    return out;
}

IntervalVector operator+(const IntervalVector& a, const IntervalVector& b) {
    require_same_size(a.size(), b.size(), "interval vector add");
    IntervalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntervalVector operator-(const IntervalVector& a, const IntervalVector& b) {
    require_same_size(a.size(), b.size(), "interval vector sub");
    IntervalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntervalVector operator-(const IntervalVector& a) {
    IntervalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

IntervalVector operator+(const std::vector<double>& a, const IntervalVector& b) {
    require_same_size(a.size(), b.size(), "vector add");
    IntervalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntervalVector operator-(const IntervalVector& a, const std::vector<double>& b) {
    require_same_size(a.size(), b.size(), "vector sub");
    IntervalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool subset(const IntervalVector& a, const IntervalVector& b) {
    require_same_size(a.size(), b.size(), "subset");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].subset_of(b[i])) return false;
    return true;
}

IntervalVector hull(const IntervalVector& a, const IntervalVector& b) {
    require_same_size(a.size(), b.size(), "hull");
    IntervalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = hull(a[i], b[i]);
    return out;
}

IntervalVector iv_matvec(const IntervalMatrix& m, const IntervalVector& v) {
    require_same_size(m.cols(), v.size(), "iv_matvec");
    IntervalVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Interval acc;
        for (std::size_t j = 0; j < m.cols(); ++j) acc = acc + m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

IntervalVector real_iv_matvec(const RealMatrix& m, const IntervalVector& v) {
    require_same_size(m.cols(), v.size(), "real_iv_matvec");
    IntervalVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Interval acc;
        for (std::size_t j = 0; j < m.cols(); ++j) acc = acc + m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

}  // namespace ipls
