#include "ipls/metrics.hpp"

#include <iomanip>
#include <sstream>

namespace ipls {

double sharpness(const std::optional<Interval>& inner, const Interval& outer) {
    if (!inner) return 0.0;
    if (outer.rad() == 0.0) {
        if (inner->rad() == 0.0) return 1.0;
        throw InvalidArgument("sharpness: degenerate outer interval with a wider inner one");
    }
    return inner->rad() / outer.rad();
}

double overestimation(const Interval& x, const Interval& y) {
    if (!x.subset_of(y)) throw InvalidArgument("overestimation: x is not contained in y");
    if (!(y.rad() > 0.0)) throw InvalidArgument("overestimation: y must have positive radius");
    return (1.0 - x.rad() / y.rad()) * 100.0;
}

std::vector<QualityRow> quality_table(const std::vector<std::optional<Interval>>& inner,
                                      const IntervalVector& outer,
                                      const std::optional<IntervalVector>& reference_outer) {
    if (inner.size() != outer.size() || (reference_outer && reference_outer->size() != outer.size()))
        throw DimensionMismatch("quality_table: vectors differ in length");
    std::vector<QualityRow> rows;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        QualityRow row{i, sharpness(inner[i], outer[i]), std::nullopt};
        if (reference_outer) row.overestimation = overestimation(outer[i], (*reference_outer)[i]);
        rows.push_back(row);
    }
    return rows;
}

std::string render_quality_table(const std::vector<QualityRow>& rows, const std::string& label) {
    std::ostringstream os;
    os << std::left << std::setw(20) << "" << std::right;
    for (const auto& r : rows) os << std::setw(10) << ("x" + std::to_string(r.component + 1));
    os << '\n' << std::fixed << std::setprecision(3);
    os << std::left << std::setw(20) << ("O_s, " + label) << std::right;
    for (const auto& r : rows) os << std::setw(10) << r.sharpness;
    os << '\n';
    const bool any_ow = !rows.empty() && rows.front().overestimation.has_value();
    if (any_ow) {
        os << std::left << std::setw(20) << "% overest." << std::right;
        for (const auto& r : rows) os << std::setw(10) << r.overestimation.value_or(0.0);
        os << '\n';
    }
    return os.str();
}

}  // namespace ipls
