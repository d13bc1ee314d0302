#include "curvkit/experiments.hpp"

#include "curvkit/forman.hpp"
#include "curvkit/jaccard.hpp"
#include "curvkit/neighborhood.hpp"
#include "curvkit/ollivier.hpp"
#include "curvkit/random.hpp"
#include "curvkit/two_hop_index.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace curvkit {

// =============================================================================
// Comparison
// =============================================================================

ComparisonReport compare_table(const CurvatureTable& table, std::string name) {
  const auto or_values = table.column(Metric::kOllivier);
  const auto jc_values = table.column(Metric::kJaccard);
  const auto gjc_values = table.column(Metric::kGeneralizedJaccard);
  const auto forman_values = table.column(Metric::kForman);

  ComparisonReport r;
  r.graph = std::move(name);
  r.mean_or = mean(or_values);
  r.mean_jc = mean(jc_values);
  r.mean_gjc = mean(gjc_values);
  r.mean_forman = mean(forman_values);
  r.or_jc = {pearson(or_values, jc_values), kendall(or_values, jc_values)};
  r.or_gjc = {pearson(or_values, gjc_values), kendall(or_values, gjc_values)};
  r.or_forman = {pearson(or_values, forman_values), kendall(or_values, forman_values)};
  return r;
}

ComparisonReport compare(const Graph& g, const Rational& idle, std::size_t workers,
                         std::string name) {
  if (g.edge_count() == 0) throw std::invalid_argument("compare: graph has no edges");
  ComputeOptions options;
  options.metrics = MetricSet::all();
  options.idle = idle;
  options.workers = workers;
  return compare_table(compute_all(g, options), std::move(name));
}

namespace {

class CorrelationAverage {
 public:
  void add(const Correlation& c) {
    if (!c) return;
    sum_ += *c;
    ++count_;
  }
  Correlation value() const {
    if (count_ == 0) return std::nullopt;
    return sum_ / static_cast<double>(count_);
  }

 private:
  double sum_ = 0.0;
  std::size_t count_ = 0;
};

}  // namespace

ComparisonReport compare_model(GenSpec spec, std::size_t seeds, const Rational& idle,
                               std::size_t workers) {
  if (seeds == 0) throw std::invalid_argument("compare_model: need at least one seed");
  const std::uint64_t base = spec.seed;
  ComparisonReport out;
  out.graph = model_name(spec);
  out.replicates = 0;
  CorrelationAverage jc_rp, jc_tau, gjc_rp, gjc_tau, f_rp, f_tau;
  for (std::size_t k = 0; k < seeds; ++k) {
    spec.seed = base + k;
    const Graph g = generate(spec);
    if (g.edge_count() == 0) continue;
    const ComparisonReport r = compare(g, idle, workers);
    out.mean_or += r.mean_or;
    out.mean_jc += r.mean_jc;
    out.mean_gjc += r.mean_gjc;
    out.mean_forman += r.mean_forman;
    jc_rp.add(r.or_jc.pearson);
    jc_tau.add(r.or_jc.kendall);
    gjc_rp.add(r.or_gjc.pearson);
    gjc_tau.add(r.or_gjc.kendall);
    f_rp.add(r.or_forman.pearson);
    f_tau.add(r.or_forman.kendall);
    ++out.replicates;
  }
  if (out.replicates == 0) throw std::invalid_argument("compare_model: every replicate was edgeless");
  const auto reps = static_cast<double>(out.replicates);
  out.mean_or /= reps;
  out.mean_jc /= reps;
  out.mean_gjc /= reps;
  out.mean_forman /= reps;
  out.or_jc = {jc_rp.value(), jc_tau.value()};
  out.or_gjc = {gjc_rp.value(), gjc_tau.value()};
  out.or_forman = {f_rp.value(), f_tau.value()};
  return out;
}

std::string comparison_header() {
  return "graph,or_mean,jc_mean,gjc_mean,f_mean,or_jc_rp,or_jc_tau,or_gjc_rp,or_gjc_tau,"
         "or_f_rp,or_f_tau";
}

std::string format_comparison(const ComparisonReport& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  auto correlation = [&out](const Correlation& c) {
    out << ',';
    if (c) {
      out << *c;
    } else {
      out << "N/A";
    }
  };
  out << '"' << r.graph << '"' << ',' << r.mean_or << ',' << r.mean_jc << ',' << r.mean_gjc << ','
      << r.mean_forman;
  for (const auto* pair : {&r.or_jc, &r.or_gjc, &r.or_forman}) {
    correlation(pair->pearson);
    correlation(pair->kendall);
  }
  return out.str();
}

// =============================================================================
// Regimes
// =============================================================================

Regime parse_regime(std::string_view text) {
  if (text == "fixed-p") return Regime::kFixedP;
  if (text == "sparse-tree") return Regime::kSparseTree;
  if (text == "intermediate") return Regime::kIntermediate;
  if (text == "dense-sparse") return Regime::kDenseSparse;
  if (text == "dense") return Regime::kDense;
  throw std::invalid_argument("unknown regime '" + std::string(text) +
                              "' (expected fixed-p, sparse-tree, intermediate, dense-sparse, dense)");
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::kFixedP: return "fixed-p";
    case Regime::kSparseTree: return "sparse-tree";
    case Regime::kIntermediate: return "intermediate";
    case Regime::kDenseSparse: return "dense-sparse";
    case Regime::kDense: return "dense";
  }
  return "unknown";
}

RegimePrediction predict(Regime regime, double p) {
  switch (regime) {
    case Regime::kFixedP:
      return {regime, (5.0 * p - 4.0) / (2.0 - p), p / (2.0 - p), p};
    case Regime::kSparseTree:
      return {regime, -2.0, 0.0, 0.0};
    case Regime::kIntermediate:
      return {regime, -2.0, -2.0, -2.0};
    case Regime::kDenseSparse:
      return {regime, -2.0, -1.0, -1.0};
    case Regime::kDense:
      return {regime, -2.0, 0.0, 0.0};
  }
  throw std::invalid_argument("predict: unknown regime");
}

void check_regime(Regime regime, std::size_t n, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("regime: p must lie in (0, 1]");
  if (n < 2) throw std::invalid_argument("regime: need n >= 2");
  if (regime == Regime::kFixedP) return;
  // p = n^e. np -> 0 iff e < -1; n^2 p^3 -> 0 iff e < -2/3; n p^2 -> 0 iff e < -1/2.
  const double e = std::log(p) / std::log(static_cast<double>(n));
  double lo = -1.0, hi = 0.0;
  switch (regime) {
    case Regime::kSparseTree: lo = -INFINITY; hi = -1.0; break;
    case Regime::kIntermediate: lo = -1.0; hi = -2.0 / 3.0; break;
    case Regime::kDenseSparse: lo = -2.0 / 3.0; hi = -0.5; break;
    case Regime::kDense: lo = -0.5; hi = 0.0; break;
    case Regime::kFixedP: break;
  }
  if (!(e > lo && e < hi)) {
    std::ostringstream msg;
    msg << "regime " << regime_name(regime) << ": p = n^" << e << " lies outside the exponent window ("
        << lo << ", " << hi << ")";
    throw std::invalid_argument(msg.str());
  }
}

AsymptoticReport asymptotic_experiment(Regime regime, std::size_t n, double p, std::size_t trials,
                                       std::uint64_t base_seed, std::size_t workers) {
  check_regime(regime, n, p);
  if (trials == 0) throw std::invalid_argument("asymptotic_experiment: need at least one trial");
  AsymptoticReport r;
  r.prediction = predict(regime, p);
  r.n = n;
  r.p = p;
  ComputeOptions options;
  options.metrics = {Metric::kJaccard, Metric::kGeneralizedJaccard};
  options.workers = workers;
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph g = erdos_renyi(n, p, base_seed + t);
    if (g.edge_count() == 0) continue;
    const CurvatureTable table = compute_all(g, options);
    r.trial_mean_jc.push_back(mean(table.column(Metric::kJaccard)));
    r.trial_mean_gjc.push_back(mean(table.column(Metric::kGeneralizedJaccard)));
    r.edges_total += g.edge_count();
  }
  r.mean_jc = mean(r.trial_mean_jc);
  r.mean_gjc = mean(r.trial_mean_gjc);
  return r;
}

// =============================================================================
// Moments
// =============================================================================

double MomentEstimate::z() const {
  if (standard_error == 0.0) return estimate == target ? 0.0 : INFINITY;
  return (estimate - target) / standard_error;
}

bool MomentEstimate::within(double sigmas) const { return std::abs(z()) <= sigmas; }

MomentReport moment_check(std::size_t n, double p, std::size_t trials, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("moment_check: need n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("moment_check: p must lie in [0, 1]");
  if (trials < 2) throw std::invalid_argument("moment_check: need at least two trials");

  SplitMix64 rng(seed);
  std::vector<double> common(trials), separate(trials), union_size(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    std::int64_t c = 0, exclusive = 0;
    for (std::size_t k = 2; k < n; ++k) {
      const bool to_first = rng.bernoulli(p);
      const bool to_second = rng.bernoulli(p);
      c += to_first && to_second;
      exclusive += to_first != to_second;
    }
    common[t] = static_cast<double>(c);
    separate[t] = static_cast<double>(exclusive + 2);
    union_size[t] = static_cast<double>(c + exclusive + 2);
  }

  const auto count = static_cast<double>(trials);
  auto central_moment = [](const std::vector<double>& xs, double centre, int power) {
    long double sum = 0.0L;
    for (double x : xs) sum += std::pow(static_cast<long double>(x - centre), power);
    return static_cast<double>(sum / static_cast<long double>(xs.size()));
  };
  auto mean_estimate = [&](const std::vector<double>& xs, double target) {
    const double m = mean(xs);
    const double var = central_moment(xs, m, 2) * count / (count - 1.0);
    return MomentEstimate{m, std::sqrt(var / count), target};
  };

  const double nd = static_cast<double>(n);
  MomentReport r;
  r.n = n;
  r.p = p;
  r.trials = trials;
  r.common = mean_estimate(common, (nd - 2.0) * p * p);
  r.separate = mean_estimate(separate, 2.0 * (nd - 2.0) * p * (1.0 - p) + 2.0);

  const double m = mean(union_size);
  const double s2 = central_moment(union_size, m, 2) * count / (count - 1.0);
  const double m4 = central_moment(union_size, m, 4);
  // Large-sample standard error of the unbiased sample variance.
  const double var_s2 = (m4 - s2 * s2 * (count - 3.0) / (count - 1.0)) / count;
  r.union_variance = {s2, std::sqrt(std::max(0.0, var_s2)), 2.0 * nd * p};
  r.union_variance_exact = (nd - 2.0) * (1.0 - p) * (1.0 - p) * (2.0 * p - p * p);
  return r;
}

// =============================================================================
// Benchmark
// =============================================================================

namespace {

template <typename Body>
MetricTiming time_metric(std::size_t edges, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  MetricTiming t;
  t.seconds = elapsed.count();
  t.per_edge_seconds = edges == 0 ? 0.0 : t.seconds / static_cast<double>(edges);
  return t;
}

}  // namespace

BenchReport bench(const Graph& g, const Rational& idle) {
  BenchReport r;
  r.summary = summarize(g);
  const auto edges = g.edges();
  volatile double sink = 0.0;

  r.forman = time_metric(edges.size(), [&] {
    double acc = 0.0;
    for (const auto& [i, j] : edges) acc += forman_unit(g, i, j);
    sink = sink + acc;
  });
  r.jc = time_metric(edges.size(), [&] {
    double acc = 0.0;
    for (const auto& [i, j] : edges) {
      const auto c = static_cast<std::int64_t>(count_common_neighbors(g, i, j));
      const auto n = static_cast<std::int64_t>(g.degree(i) + g.degree(j)) - c;
      acc += to_double(Rational(-2) + Rational(3 * c, n));
    }
    sink = sink + acc;
  });
  r.gjc = time_metric(edges.size(), [&] {
    const TwoHopIndex index(g);
    double acc = 0.0;
    for (const auto& [i, j] : edges) acc += gjc(partition(g, index, i, j));
    sink = sink + acc;
  });
  r.ollivier = time_metric(edges.size(), [&] {
    const TwoHopIndex index(g);
    double acc = 0.0;
    for (const auto& [i, j] : edges) acc += or_curvature(g, index, i, j, idle);
    sink = sink + acc;
  });
  return r;
}

std::string format_bench(const BenchReport& r) {
  std::ostringstream out;
  out << "nodes=" << r.summary.nodes << " edges=" << r.summary.edges
      << " d_max=" << r.summary.max_degree << " d_avg=" << std::fixed << std::setprecision(2)
      << r.summary.average_degree << '\n';
  out << "metric,seconds,per_edge_seconds\n";
  out << std::scientific << std::setprecision(6);
  out << "forman," << r.forman.seconds << ',' << r.forman.per_edge_seconds << '\n';
  out << "jc," << r.jc.seconds << ',' << r.jc.per_edge_seconds << '\n';
  out << "gjc," << r.gjc.seconds << ',' << r.gjc.per_edge_seconds << '\n';
  out << "or," << r.ollivier.seconds << ',' << r.ollivier.per_edge_seconds << '\n';
  return out.str();
}

}  // namespace curvkit
