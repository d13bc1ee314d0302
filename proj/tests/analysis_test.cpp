#include "curvkit/curvature_table.hpp"
#include "curvkit/experiments.hpp"
#include "curvkit/generators.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace curvkit {
namespace {

TEST(ComputeAll, WorkedExampleRow) {
  const CurvatureTable t = compute_all(testing::worked_example(), {});
  ASSERT_EQ(t.rows.size(), 7u);
  const EdgeCurvature& r = t.rows.front();
  EXPECT_EQ(r.u, 1u);
  EXPECT_EQ(r.v, 2u);
  EXPECT_EQ(*r.ollivier, Rational(1, 4));
  EXPECT_EQ(*r.jaccard, Rational(-3, 2));
  EXPECT_EQ(*r.generalized_jaccard, Rational(0));
  EXPECT_EQ(*r.forman, -3.0);
  EXPECT_EQ(t.summary.nodes, 6u);
  EXPECT_EQ(t.summary.edges, 7u);
  EXPECT_EQ(t.summary.max_degree, 4u);
}

TEST(ComputeAll, SingleEdgeAndEmpty) {
  const CurvatureTable k2 = compute_all(testing::complete(2), {});
  ASSERT_EQ(k2.rows.size(), 1u);
  EXPECT_EQ(*k2.rows[0].ollivier, Rational(0));
  EXPECT_EQ(*k2.rows[0].jaccard, Rational(-2));
  EXPECT_EQ(*k2.rows[0].generalized_jaccard, Rational(0));
  EXPECT_EQ(*k2.rows[0].forman, 2.0);

  EXPECT_TRUE(compute_all(Graph{}, {}).rows.empty());
  ComputeOptions none;
  none.metrics = MetricSet{};
  EXPECT_THROW(compute_all(testing::complete(2), none), std::invalid_argument);
}

TEST(ComputeAll, MetricSubset) {
  ComputeOptions opts;
  opts.metrics = MetricSet::parse("jc,forman");
  const CurvatureTable t = compute_all(testing::worked_example(), opts);
  for (const EdgeCurvature& r : t.rows) {
    EXPECT_FALSE(r.ollivier.has_value());
    EXPECT_FALSE(r.generalized_jaccard.has_value());
    EXPECT_TRUE(r.jaccard.has_value());
    EXPECT_TRUE(r.forman.has_value());
  }
  EXPECT_THROW(MetricSet::parse("or,bogus"), std::invalid_argument);
  EXPECT_THROW(MetricSet::parse(""), std::invalid_argument);
}

TEST(ComputeAll, IdenticalForAnyWorkerCount) {
  const Graph g = erdos_renyi(150, 0.08, 12);
  ComputeOptions opts;
  opts.idle = Rational(1, 4);
  const CurvatureTable base = compute_all(g, opts);
  for (std::size_t workers : {2u, 3u, 8u, 1000u}) {
    opts.workers = workers;
    const CurvatureTable t = compute_all(g, opts);
    ASSERT_EQ(t.rows.size(), base.rows.size());
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
      EXPECT_EQ(t.rows[k].u, base.rows[k].u);
      EXPECT_EQ(t.rows[k].v, base.rows[k].v);
      EXPECT_EQ(t.rows[k].ollivier, base.rows[k].ollivier);
      EXPECT_EQ(t.rows[k].jaccard, base.rows[k].jaccard);
      EXPECT_EQ(t.rows[k].generalized_jaccard, base.rows[k].generalized_jaccard);
      EXPECT_EQ(t.rows[k].forman, base.rows[k].forman);
    }
  }
}

TEST(ComputeAll, RowsSortedByOriginalLabels) {
  const std::vector<std::pair<Label, Label>> pairs = {{90, 3}, {3, 50}, {50, 90}, {7, 3}};
  const CurvatureTable t = compute_all(Graph::from_edge_list(pairs), {});
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    EXPECT_LT(t.rows[k].u, t.rows[k].v);
    if (k) {
      EXPECT_LT(std::pair(t.rows[k - 1].u, t.rows[k - 1].v), std::pair(t.rows[k].u, t.rows[k].v));
    }
  }
}

TEST(Compare, MeansAndDominance) {
  for (const auto& [name, g] : testing::catalogue()) {
    const ComparisonReport r = compare(g, Rational(0), 2, name);
    EXPECT_GT(r.mean_gjc, r.mean_jc) << name;
    for (const PairCorrelation* c : {&r.or_jc, &r.or_gjc, &r.or_forman}) {
      if (c->pearson) EXPECT_LE(std::abs(*c->pearson), 1.0 + 1e-12) << name;
      if (c->kendall) EXPECT_LE(std::abs(*c->kendall), 1.0 + 1e-12) << name;
    }
  }
  EXPECT_THROW(compare(Graph{}), std::invalid_argument);
}

TEST(Compare, ConstantJcIsUndefined) {
  const ComparisonReport r = compare_model({BaParams{100, 1}, 1}, 3);
  EXPECT_EQ(r.mean_jc, -2.0);
  EXPECT_FALSE(r.or_jc.pearson.has_value());
  EXPECT_FALSE(r.or_jc.kendall.has_value());
  EXPECT_TRUE(r.or_gjc.pearson.has_value());
  EXPECT_EQ(r.replicates, 3u);
  const std::string row = format_comparison(r);
  EXPECT_NE(row.find("N/A"), std::string::npos);
  EXPECT_EQ(comparison_header(),
            "graph,or_mean,jc_mean,gjc_mean,f_mean,or_jc_rp,or_jc_tau,or_gjc_rp,or_gjc_tau,"
            "or_f_rp,or_f_tau");
}

TEST(Regime, Predictions) {
  const RegimePrediction fixed = predict(Regime::kFixedP, 0.5);
  EXPECT_DOUBLE_EQ(fixed.jc, -1.0);
  EXPECT_DOUBLE_EQ(fixed.gjc, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(fixed.ollivier, 0.5);
  EXPECT_DOUBLE_EQ(predict(Regime::kFixedP, 1.0).gjc, 1.0);

  const RegimePrediction tree = predict(Regime::kSparseTree, 0);
  EXPECT_EQ(tree.jc, -2.0);
  EXPECT_EQ(tree.gjc, 0.0);
  EXPECT_EQ(tree.ollivier, 0.0);
  const RegimePrediction mid = predict(Regime::kIntermediate, 0);
  EXPECT_EQ(mid.jc, -2.0);
  EXPECT_EQ(mid.gjc, -2.0);
  EXPECT_EQ(mid.ollivier, -2.0);
  const RegimePrediction ds = predict(Regime::kDenseSparse, 0);
  EXPECT_EQ(ds.gjc, -1.0);
  EXPECT_EQ(ds.ollivier, -1.0);
  const RegimePrediction dense = predict(Regime::kDense, 0);
  EXPECT_EQ(dense.jc, -2.0);
  EXPECT_EQ(dense.gjc, 0.0);

  double last = -1;
  for (int k = 1; k <= 9; ++k) {
    const double g = predict(Regime::kFixedP, k / 10.0).gjc;
    EXPECT_GT(g, last);
    last = g;
  }
}

TEST(Regime, NamesAndMismatch) {
  for (Regime r : {Regime::kFixedP, Regime::kSparseTree, Regime::kIntermediate,
                   Regime::kDenseSparse, Regime::kDense}) {
    EXPECT_EQ(parse_regime(regime_name(r)), r);
  }
  EXPECT_THROW(parse_regime("tropical"), std::invalid_argument);
  const double n = 1e4;
  EXPECT_NO_THROW(check_regime(Regime::kIntermediate, 10000, std::pow(n, -0.75)));
  EXPECT_NO_THROW(check_regime(Regime::kDenseSparse, 10000, std::pow(n, -0.6)));
  EXPECT_NO_THROW(check_regime(Regime::kSparseTree, 10000, 0.2 / n));
  EXPECT_THROW(check_regime(Regime::kIntermediate, 10000, std::pow(n, -0.6)), std::invalid_argument);
  EXPECT_THROW(check_regime(Regime::kSparseTree, 10000, std::pow(n, -0.75)), std::invalid_argument);
  EXPECT_THROW(asymptotic_experiment(Regime::kDense, 10000, 0.2 / n, 1), std::invalid_argument);
}

TEST(Asymptotic, FixedPGjcIsMonotone) {
  double last = -3;
  for (int k = 1; k <= 9; ++k) {
    const AsymptoticReport r = asymptotic_experiment(Regime::kFixedP, 300, k / 10.0, 1, 5);
    EXPECT_GT(r.mean_gjc, last) << k;
    EXPECT_GT(r.mean_gjc, r.mean_jc) << k;
    last = r.mean_gjc;
  }
}

TEST(Moments, TargetsAndDegenerateCase) {
  const MomentReport r = moment_check(200, 0.1, 200, 3);
  EXPECT_NEAR(r.common.target, 1.98, 1e-12);
  EXPECT_NEAR(r.separate.target, 37.64, 1e-12);
  EXPECT_NEAR(r.union_variance.target, 40.0, 1e-12);
  EXPECT_NEAR(r.union_variance_exact, 198 * 0.81 * 0.19, 1e-12);
  EXPECT_TRUE(r.common.within(4));
  EXPECT_TRUE(r.separate.within(4));

  const MomentReport zero = moment_check(50, 0.0, 10, 3);
  EXPECT_EQ(zero.common.estimate, 0.0);
  EXPECT_EQ(zero.separate.estimate, 2.0);
  EXPECT_EQ(zero.union_variance.estimate, 0.0);
}

TEST(Bench, ReportsNonNegativeTimes) {
  const BenchReport r = bench(erdos_renyi(60, 0.1, 2));
  for (const MetricTiming* t : {&r.forman, &r.jc, &r.gjc, &r.ollivier}) {
    EXPECT_GE(t->seconds, 0.0);
    EXPECT_GE(t->per_edge_seconds, 0.0);
  }
  const BenchReport empty = bench(Graph{});
  EXPECT_EQ(empty.summary.edges, 0u);
  EXPECT_GE(empty.ollivier.seconds, 0.0);
  EXPECT_FALSE(format_bench(r).empty());
}

}  // namespace
}  // namespace curvkit
