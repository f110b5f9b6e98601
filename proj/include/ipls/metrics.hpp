#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipls/interval.hpp"

namespace ipls {

/// rad(inner) / rad(outer), or 0 for an empty inner estimate.
double sharpness(const std::optional<Interval>& inner, const Interval& outer);

/// (1 - rad(x)/rad(y)) * 100: percentage by which y overestimates x.
/// Throws InvalidArgument unless x is contained in y and rad(y) > 0.
double overestimation(const Interval& x, const Interval& y);

struct QualityRow {
    std::size_t component = 0;
    double sharpness = 0.0;
    std::optional<double> overestimation;  ///< only where a reference enclosure exists
};

/// Per-component quality; `reference_outer`, when given, is the enclosure
/// whose overestimation of `outer` is reported.
std::vector<QualityRow> quality_table(const std::vector<std::optional<Interval>>& inner,
                                      const IntervalVector& outer,
                                      const std::optional<IntervalVector>& reference_outer = {});

/// Aligned text rendering with three decimals, components as columns.
std::string render_quality_table(const std::vector<QualityRow>& rows, const std::string& label);

}  // namespace ipls
