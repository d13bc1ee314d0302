#pragma once

#include <optional>
#include <span>

namespace curvkit {

/// A correlation that is not defined (a constant input sequence) is nullopt.
using Correlation = std::optional<double>;

double mean(std::span<const double> xs);

/// Sample Pearson correlation. Throws std::invalid_argument on a length mismatch.
Correlation pearson(std::span<const double> xs, std::span<const double> ys);

/// Kendall tau-b (tie adjusted), O(n log n) via Knight's merge-sort count.
/// Throws std::invalid_argument on a length mismatch.
Correlation kendall(std::span<const double> xs, std::span<const double> ys);

}  // namespace curvkit
