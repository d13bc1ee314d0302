#include "cli.hpp"

#include "curvkit/curvature_table.hpp"
#include "curvkit/experiments.hpp"
#include "curvkit/generators.hpp"
#include "curvkit/io.hpp"
#include "curvkit/rational.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>

namespace curvkit::cli {
namespace {

/// Raised for argument combinations CLI11 cannot express (model parameters).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelOptions {
  std::string model;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<std::size_t> m;
  std::optional<std::size_t> k;
  std::optional<double> r;
  std::uint64_t seed = 1;

  void attach(CLI::App& app, bool required_model) {
    auto* opt = app.add_option("--model", model, "Random graph model")
                    ->check(CLI::IsMember({"er", "ba", "ws", "rgg"}));
    if (required_model) opt->required();
    app.add_option("--n", n, "Number of nodes");
    app.add_option("--p", p, "Edge (ER) or rewiring (WS) probability");
    app.add_option("--m", m, "BA attachments per arriving node");
    app.add_option("--k", k, "WS lattice degree (even)");
    app.add_option("--r", r, "RGG connection radius");
    app.add_option("--seed", seed, "PRNG seed");
  }

  GenSpec spec() const {
    auto need = [this](const auto& value, const char* flag) {
      if (!value) throw UsageError("--model " + model + " requires " + flag);
      return *value;
    };
    GenSpec s;
    s.seed = seed;
    if (model == "er") {
      s.model = ErParams{need(n, "--n"), need(p, "--p")};
    } else if (model == "ba") {
      s.model = BaParams{need(n, "--n"), need(m, "--m")};
    } else if (model == "ws") {
      s.model = WsParams{need(n, "--n"), need(k, "--k"), need(p, "--p")};
    } else if (model == "rgg") {
      s.model = RggParams{need(n, "--n"), need(r, "--r")};
    } else {
      throw UsageError("unknown model '" + model + "'");
    }
    return s;
  }
};

// Bad model parameters are the caller's mistake, so they surface as usage errors.
Graph generate_checked(const GenSpec& spec) {
  try {
    return curvkit::generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Rational parse_idle(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--idle: ") + e.what());
  }
}

LoadedGraph load(const std::string& path, std::ostream& err) {
  LoadedGraph loaded = read_edge_list(std::filesystem::path(path));
  const LoadReport& r = loaded.report;
  err << "loaded " << path << ": nodes=" << r.nodes << " edges=" << r.edges
      << " self_loops_dropped=" << r.self_loops_dropped
      << " duplicates_collapsed=" << r.duplicates_collapsed << '\n';
  return loaded;
}

// Writes to `path`, or to `out` when the path is empty.
template <typename Writer>
void emit(const std::string& path, std::ostream& out, Writer&& writer) {
  if (path.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  writer(file);
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ollivier-Ricci, Jaccard and Forman edge curvatures", "curvkit"};
  app.require_subcommand(1);

  // generate
  ModelOptions gen;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a seeded random graph as an edge list");
  gen.attach(*generate, true);
  generate->add_option("--out", gen_out, "Output edge list (default: stdout)");

  // compute
  std::string graph_path, metrics_text = "or,jc,gjc,forman", idle_text = "0", compute_out,
                          forman_weighting = "unit";
  std::size_t workers = 1;
  bool exact = false;
  auto* compute = app.add_subcommand("compute", "Per-edge curvatures as CSV");
  compute->add_option("--graph", graph_path, "Edge list file")->required();
  compute->add_option("--metrics", metrics_text, "Comma separated subset of or,jc,gjc,forman");
  compute->add_option("--idle", idle_text, "Idle mass of the OR neighbour measure (e.g. 0, 1/2)");
  compute->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  compute->add_flag("--exact", exact, "Append exact fraction columns");
  compute->add_option("--forman-weighting", forman_weighting, "unit or degree")
      ->check(CLI::IsMember({"unit", "degree"}));
  compute->add_option("--out", compute_out, "Output CSV (default: stdout)");

  // compare
  ModelOptions cmp;
  std::string cmp_graph, cmp_idle = "0";
  std::size_t seeds = 1, cmp_workers = 1;
  auto* compare_cmd = app.add_subcommand("compare", "Means and correlations of OR against JC, gJC, Forman");
  compare_cmd->add_option("--graph", cmp_graph, "Edge list file");
  cmp.attach(*compare_cmd, false);
  compare_cmd->add_option("--seeds", seeds, "Replicates averaged for --model")->check(CLI::PositiveNumber);
  compare_cmd->add_option("--idle", cmp_idle, "Idle mass of the OR neighbour measure");
  compare_cmd->add_option("--workers", cmp_workers, "Worker threads")->check(CLI::PositiveNumber);

  // asymptotics
  std::string regime_text;
  std::size_t asym_n = 0, asym_trials = 5, asym_workers = 1;
  double asym_p = 0.0;
  std::uint64_t asym_seed = 1;
  auto* asymptotics = app.add_subcommand("asymptotics", "Empirical vs predicted ER curvature limits");
  asymptotics->add_option("--regime", regime_text, "fixed-p|sparse-tree|intermediate|dense-sparse|dense")
      ->required();
  asymptotics->add_option("--n", asym_n, "Number of nodes")->required();
  asymptotics->add_option("--p", asym_p, "Edge probability")->required();
  asymptotics->add_option("--trials", asym_trials, "ER samples")->check(CLI::PositiveNumber);
  asymptotics->add_option("--seed", asym_seed, "Base seed");
  asymptotics->add_option("--workers", asym_workers, "Worker threads")->check(CLI::PositiveNumber);

  // moments
  std::size_t mom_n = 0, mom_trials = 2000;
  double mom_p = 0.0;
  std::uint64_t mom_seed = 1;
  auto* moments = app.add_subcommand("moments", "Monte Carlo check of E[C], E[S], Var(N)");
  moments->add_option("--n", mom_n, "Number of nodes")->required();
  moments->add_option("--p", mom_p, "Edge probability")->required();
  moments->add_option("--trials", mom_trials, "Samples");
  moments->add_option("--seed", mom_seed, "Seed");

  // bench
  std::string bench_graph, bench_idle = "0";
  auto* bench_cmd = app.add_subcommand("bench", "Single-threaded wall time per metric");
  bench_cmd->add_option("--graph", bench_graph, "Edge list file")->required();
  bench_cmd->add_option("--idle", bench_idle, "Idle mass of the OR neighbour measure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "curvkit: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      const GenSpec spec = gen.spec();
      const Graph g = generate_checked(spec);
      const std::string comment = model_name(spec) + " seed=" + std::to_string(spec.seed) +
                                  " nodes=" + std::to_string(g.node_count());
      emit(gen_out, out, [&](std::ostream& s) { write_edge_list(g, s, comment); });
    } else if (compute->parsed()) {
      ComputeOptions options;
      try {
        options.metrics = MetricSet::parse(metrics_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--metrics: ") + e.what());
      }
      options.idle = parse_idle(idle_text);
      options.workers = workers;
      options.forman_weighting =
          forman_weighting == "degree" ? FormanWeighting::kDegree : FormanWeighting::kUnit;
      const LoadedGraph loaded = load(graph_path, err);
      const CurvatureTable table = compute_all(loaded.graph, options);
      emit(compute_out, out, [&](std::ostream& s) { write_curvature_csv(table, s, exact); });
    } else if (compare_cmd->parsed()) {
      const bool from_file = !cmp_graph.empty();
      const bool from_model = !cmp.model.empty();
      if (from_file == from_model) throw UsageError("compare needs exactly one of --graph or --model");
      const Rational idle = parse_idle(cmp_idle);
      ComparisonReport report;
      if (from_file) {
        const LoadedGraph loaded = load(cmp_graph, err);
        report = curvkit::compare(loaded.graph, idle, cmp_workers, cmp_graph);
      } else {
        const GenSpec spec = cmp.spec();
        generate_checked(spec);
        report = compare_model(spec, seeds, idle, cmp_workers);
      }
      out << comparison_header() << '\n' << format_comparison(report) << '\n';
    } else if (asymptotics->parsed()) {
      Regime regime;
      try {
        regime = parse_regime(regime_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--regime: ") + e.what());
      }
      try {
        check_regime(regime, asym_n, asym_p);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const AsymptoticReport r =
          asymptotic_experiment(regime, asym_n, asym_p, asym_trials, asym_seed, asym_workers);
      out << "regime,n,p,trials,edges,jc_empirical,jc_predicted,gjc_empirical,gjc_predicted,"
             "or_predicted\n";
      out << regime_name(regime) << ',' << r.n << ',' << r.p << ',' << r.trial_mean_gjc.size() << ','
          << r.edges_total << std::fixed << std::setprecision(6) << ',' << r.mean_jc << ','
          << r.prediction.jc << ',' << r.mean_gjc << ',' << r.prediction.gjc << ','
          << r.prediction.ollivier << '\n';
    } else if (moments->parsed()) {
      const MomentReport r = moment_check(mom_n, mom_p, mom_trials, mom_seed);
      out << "quantity,estimate,std_error,target,z,within_3sigma\n";
      auto line = [&out](const char* name, const MomentEstimate& m) {
        out << name << ',' << std::setprecision(6) << m.estimate << ',' << m.standard_error << ','
            << m.target << ',' << m.z() << ',' << (m.within(3.0) ? "yes" : "no") << '\n';
      };
      line("E[C]", r.common);
      line("E[S]", r.separate);
      line("Var(N)", r.union_variance);
      out << "# exact finite-n Var(N) = " << r.union_variance_exact << '\n';
    } else if (bench_cmd->parsed()) {
      const Rational idle = parse_idle(bench_idle);
      const LoadedGraph loaded = load(bench_graph, err);
      out << format_bench(curvkit::bench(loaded.graph, idle));
    }
  } catch (const UsageError& e) {
    err << "curvkit: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "curvkit: error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace curvkit::cli
