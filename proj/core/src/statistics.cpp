#include "curvkit/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvkit {
namespace {

void require_same_length(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("correlation: sequences differ in length (" +
                                std::to_string(xs.size()) + " vs " + std::to_string(ys.size()) +
                                ")");
  }
}

bool constant(std::span<const double> xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
}

// Number of tied pairs inside runs of equal values of an already grouped sequence.
template <typename Equal>
std::int64_t tied_pairs(std::size_t n, Equal&& equal) {
  std::int64_t ties = 0;
  std::int64_t run = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k < n && equal(k - 1, k)) {
      ++run;
    } else {
      ties += run * (run - 1) / 2;
      run = 1;
    }
  }
  return ties;
}

// Merge sort of `v`, returning the number of inversions (strictly greater before smaller).
std::int64_t sort_count_swaps(std::vector<double>& v) {
  std::vector<double> buffer(v.size());
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < v.size(); width *= 2) {
    for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, v.size());
      const std::size_t hi = std::min(lo + 2 * width, v.size());
      std::size_t a = lo, b = mid, out = lo;
      while (a < mid && b < hi) {
        if (v[b] < v[a]) {
          swaps += static_cast<std::int64_t>(mid - a);
          buffer[out++] = v[b++];
        } else {
          buffer[out++] = v[a++];
        }
      }
      while (a < mid) buffer[out++] = v[a++];
      while (b < hi) buffer[out++] = v[b++];
    }
    std::swap(v, buffer);
  }
  return swaps;
}

}  // namespace

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  long double sum = 0.0L;
  for (double x : xs) sum += x;
  return static_cast<double>(sum / static_cast<long double>(xs.size()));
}

Correlation pearson(std::span<const double> xs, std::span<const double> ys) {
  require_same_length(xs, ys);
  if (xs.size() < 2 || constant(xs) || constant(ys)) return std::nullopt;
  const long double mx = mean(xs);
  const long double my = mean(ys);
  long double sxy = 0.0L, sxx = 0.0L, syy = 0.0L;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const long double dx = xs[k] - mx;
    const long double dy = ys[k] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  const double r = static_cast<double>(sxy / std::sqrt(sxx * syy));
  return std::clamp(r, -1.0, 1.0);
}

// Knight (1966): sort by (x, y), count x ties and joint ties, then count the
// discordant pairs as the inversions of a stable merge sort on y.
Correlation kendall(std::span<const double> xs, std::span<const double> ys) {
  require_same_length(xs, ys);
  const std::size_t n = xs.size();
  if (n < 2 || constant(xs) || constant(ys)) return std::nullopt;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return xs[a] < xs[b] || (xs[a] == xs[b] && ys[a] < ys[b]);
  });
  std::vector<double> y(n);
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = xs[order[k]];
    y[k] = ys[order[k]];
  }

  const auto total = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  const std::int64_t x_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) { return x[a] == x[b]; });
  const std::int64_t joint_ties =
      tied_pairs(n, [&](std::size_t a, std::size_t b) { return x[a] == x[b] && y[a] == y[b]; });
  const std::int64_t swaps = sort_count_swaps(y);
  const std::int64_t y_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) { return y[a] == y[b]; });

  const std::int64_t numerator = total - x_ties - y_ties + joint_ties - 2 * swaps;
  const long double denominator =
      std::sqrt(static_cast<long double>(total - x_ties) * static_cast<long double>(total - y_ties));
  const double tau = static_cast<double>(static_cast<long double>(numerator) / denominator);
  return std::clamp(tau, -1.0, 1.0);
}

}  // namespace curvkit
