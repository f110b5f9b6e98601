#include "ipls/system.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace ipls {

namespace {

bool all_finite(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

bool is_zero(const RealVector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

}  // namespace

ParametricLinearSystem::ParametricLinearSystem(RealMatrix a0, RealVector rhs0,
                                               std::vector<Term> terms)
    : a0_(std::move(a0)), rhs0_(std::move(rhs0)), terms_(std::move(terms)) {
    const std::size_t n = a0_.rows();
    if (n == 0) throw DimensionMismatch("system dimension must be positive");
    if (a0_.cols() != n) throw DimensionMismatch("A0 must be square");
    if (rhs0_.size() != n) throw DimensionMismatch("a0 length differs from dimension");
    if (!all_finite(a0_.data()) || !all_finite(rhs0_))
        throw InvalidArgument("A0/a0 contain non-finite numbers");

    std::set<std::string> seen;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        Term& t = terms_[k];
        if (t.name.empty()) t.name = "p" + std::to_string(k + 1);
        if (!seen.insert(t.name).second)
            throw InvalidArgument("duplicate parameter name '" + t.name + "'");
        if (t.A.empty()) t.A = RealMatrix(n, n);
        if (t.a.empty()) t.a = RealVector(n, 0.0);
        if (t.A.rows() != n || t.A.cols() != n) {
            std::ostringstream msg;
            msg << "coefficient matrix of " << t.name << " is " << t.A.rows() << "x" << t.A.cols()
                << ", expected " << n << "x" << n;
            throw DimensionMismatch(msg.str());
        }
        if (t.a.size() != n)
            throw DimensionMismatch("rhs coefficient of " + t.name + " has wrong length");
        if (!all_finite(t.A.data()) || !all_finite(t.a) || !std::isfinite(t.range.lo()) ||
            !std::isfinite(t.range.hi()))
            throw InvalidArgument("parameter " + t.name + " has non-finite data");
    }
}

std::vector<std::string> ParametricLinearSystem::names() const {
    std::vector<std::string> out;
    for (const auto& t : terms_) out.push_back(t.name);
    return out;
}

IntervalVector ParametricLinearSystem::box() const {
    IntervalVector out;
    for (const auto& t : terms_) out.push_back(t.range);
    return out;
}

RealVector ParametricLinearSystem::box_mid() const { return mid(box()); }
RealVector ParametricLinearSystem::box_rad() const { return rad(box()); }

std::vector<std::size_t> ParametricLinearSystem::degenerate_parameters() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].range.is_degenerate()) out.push_back(k);
    return out;
}

std::pair<RealMatrix, RealVector> ParametricLinearSystem::evaluate_at(
    std::span<const double> p) const {
    if (p.size() != terms_.size())
        throw DimensionMismatch("parameter vector has wrong length");
    RealMatrix A = a0_;
    RealVector a = rhs0_;
    const std::size_t n = dimension();
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const double pk = p[k];
        if (pk == 0.0) continue;
        const Term& t = terms_[k];
        for (std::size_t i = 0; i < n; ++i) {
            a[i] += pk * t.a[i];
            for (std::size_t j = 0; j < n; ++j) A(i, j) += pk * t.A(i, j);
        }
    }
    return {std::move(A), std::move(a)};
}

ParametricLinearSystem ParametricLinearSystem::with_scaled_radii(double factor) const {
    if (!(factor >= 0.0)) throw InvalidArgument("radius scale must be non-negative");
    std::vector<Term> terms = terms_;
    for (auto& t : terms) {
        const double m = t.range.mid();
        const double r = t.range.rad() * factor;
        t.range = Interval(m - r, m + r);
    }
    return ParametricLinearSystem(a0_, rhs0_, std::move(terms));
}

ParameterPartition partition_parameters(const ParametricLinearSystem& sys) {
    ParameterPartition part;
    for (std::size_t k = 0; k < sys.parameter_count(); ++k) {
        const auto& t = sys.term(k);
        const bool matrix_zero = t.A.is_zero();
        if (matrix_zero && is_zero(t.a))
            throw UnusedParameter("parameter " + t.name + " has zero matrix and rhs coefficients");
        (matrix_zero ? part.pi_double_prime : part.pi_prime).push_back(k);
    }
    return part;
}

}  // namespace ipls
