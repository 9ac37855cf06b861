// decompound: nonparametric estimation of the jump measure of an integer
// compound Poisson process from discretely observed increments.
//
// Subcommands: simulate, fit, fit-plugin, summarize, verify, diophantine,
// export-dataset. Every command is deterministic given --seed; all outputs
// carry a metadata sidecar sufficient to re-run them bit-identically.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "decomp/datasets.hpp"
#include "decomp/diagnostics.hpp"
#include "decomp/diophantine.hpp"
#include "decomp/gibbs.hpp"
#include "decomp/io.hpp"
#include "decomp/kernels.hpp"
#include "decomp/plugin.hpp"
#include "decomp/simulate.hpp"
#include "decomp/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// --data accepts an embedded dataset name or a CSV path
decomp::IncrementData load_data(const std::string& name_or_path) {
  for (const auto& name : decomp::dataset_names()) {
    if (name_or_path == name) return decomp::embedded_dataset(name);
  }
  return decomp::read_increment_csv(name_or_path);
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw decomp::Error(decomp::Errc::io_error, "cannot create " + dir.string());
}

json truth_json(const decomp::LevyMeasure& truth, double lambda0) {
  json nu = json::array();
  for (double v : truth.values()) nu.push_back(v);
  return json{{"lambda0", lambda0}, {"nu0", nu}};
}

struct SimulateArgs {
  std::string preset;
  double alpha = 1.0 / 3.0;
  std::size_t n = 500;
  double lambda = 0.0;
  std::vector<double> weights;
  std::string grid = "uniform";
  double delta = 1.0;
  double lo = 0.0, hi = 2.0;
  std::uint64_t seed = 1;
  std::string out = ".";
};

int cmd_simulate(const SimulateArgs& a) {
  ensure_dir(a.out);
  json meta{{"command", "simulate"}, {"seed", a.seed}};
  decomp::IncrementData data({{1.0, 0}});
  if (!a.preset.empty()) {
    decomp::Preset preset = decomp::make_preset(a.preset, a.seed, a.alpha, a.n);
    data = std::move(preset.data);
    meta["preset"] = a.preset;
    if (a.preset == "geometric") {
      meta["alpha"] = a.alpha;
      meta["n"] = a.n;
    }
    decomp::write_json(truth_json(preset.truth, preset.lambda0),
                       fs::path(a.out) / "truth.json");
  } else {
    if (!(a.lambda > 0.0) || a.weights.empty()) {
      throw decomp::Error(decomp::Errc::invalid_argument,
                          "simulate: need --preset, or --lambda with --weights");
    }
    const auto base = decomp::BaseDistribution::normalized(a.weights);
    std::vector<double> deltas = a.grid == "random"
                                     ? decomp::random_uniform_grid(a.n, a.lo, a.hi, a.seed)
                                     : decomp::uniform_grid(a.n, a.delta);
    data = decomp::simulate_increments(a.lambda, base, deltas, a.seed);
    std::vector<double> nu0(base.probs());
    for (double& v : nu0) v *= a.lambda;
    meta["lambda"] = a.lambda;
    meta["n"] = a.n;
    meta["grid"] = a.grid;
    decomp::write_json(truth_json(decomp::LevyMeasure(nu0), a.lambda),
                       fs::path(a.out) / "truth.json");
  }
  meta["n_records"] = data.size();
  meta["dataset_digest"] = data.digest();
  decomp::write_increment_csv(data, fs::path(a.out) / "data.csv");
  decomp::write_json(meta, fs::path(a.out) / "meta.json");
  std::cout << "wrote " << (fs::path(a.out) / "data.csv").string() << " (" << data.size()
            << " rows)\n";
  return 0;
}

struct FitArgs {
  std::string data;
  int m = 0;  // 0: default policy min(15, Z_(n))
  double a = 0.01;
  double c = 2.0;
  std::uint64_t iters = 500000;
  std::uint64_t burnin = 250000;
  std::uint64_t thin = 1;
  std::uint64_t seed = 1;
  double pi_neighbor = 0.8;
  int sweeps = 1;
  int threads = 1;
  bool quick = false;
  std::string out = ".";
  bool iters_set = false, burnin_set = false;
};

int cmd_fit(const FitArgs& a) {
  const decomp::IncrementData data = load_data(a.data);
  decomp::PriorConfig prior;
  prior.m = a.m > 0 ? a.m : decomp::default_support_cap(data);
  prior.a = a.a;
  prior.c = a.c;
  decomp::SamplerConfig cfg;
  cfg.iterations = a.quick && !a.iters_set ? 50000 : a.iters;
  cfg.burn_in = a.quick && !a.burnin_set ? 25000 : a.burnin;
  cfg.thin = a.thin;
  cfg.seed = a.seed;
  cfg.proposal.pi_neighbor = a.pi_neighbor;
  cfg.sweeps = a.sweeps;
  cfg.threads = a.threads;

  const decomp::PosteriorSamples samples = decomp::run_chain(data, prior, cfg);
  ensure_dir(a.out);
  decomp::write_samples_csv(samples, fs::path(a.out) / "samples.csv");
  json meta = decomp::samples_metadata(samples);
  meta["command"] = "fit";
  meta["data"] = a.data;
  meta["quick"] = a.quick;
  decomp::write_json(meta, fs::path(a.out) / "meta.json");
  const auto summary = decomp::summarize(samples);
  decomp::write_summary_csv(summary, fs::path(a.out) / "summary.csv");
  std::cout << "retained " << samples.rows << " draws over m=" << samples.m << " in "
            << decomp::format_double(samples.runtime_seconds) << " s\n";
  for (std::size_t k = 0; k < summary.size(); ++k) {
    std::cout << "nu_" << (k + 1) << " mean " << summary[k].mean << " [" << summary[k].lower
              << ", " << summary[k].upper << "]\n";
  }
  return 0;
}

int cmd_fit_plugin(const std::string& data_spec, const std::string& out, std::size_t k_max) {
  const decomp::IncrementData data = load_data(data_spec);
  const decomp::PluginEstimate est =
      k_max > 0 ? decomp::plugin_estimate(data, k_max) : decomp::plugin_estimate(data);

  // single-row draws file in the same shape as the Bayesian fit
  decomp::PosteriorSamples row;
  row.m = est.nu_hat.size();
  row.rows = 1;
  row.draws = est.nu_hat;
  row.dataset_digest = data.digest();
  ensure_dir(out);
  decomp::write_samples_csv(row, fs::path(out) / "samples.csv");
  json raw = json::array();
  for (double v : est.raw_p) raw.push_back(v);
  decomp::write_json(json{{"command", "fit-plugin"},
                          {"data", data_spec},
                          {"dataset_digest", data.digest()},
                          {"lambda_hat", est.lambda_hat},
                          {"raw_p", raw}},
                     fs::path(out) / "meta.json");
  decomp::write_summary_csv(decomp::summarize(row, 0.0, 100.0), fs::path(out) / "summary.csv");
  std::cout << "lambda_hat " << decomp::format_double(est.lambda_hat) << "\n";
  for (std::size_t k = 0; k < est.nu_hat.size(); ++k) {
    std::cout << "nu_" << (k + 1) << " " << decomp::format_double(est.nu_hat[k]) << "\n";
  }
  return 0;
}

int cmd_summarize(const std::string& samples_path, const std::string& out, double lo, double hi,
                  std::size_t trace_coord, std::size_t trace_stride) {
  const decomp::LoadedSamples loaded = decomp::read_samples_csv(samples_path);
  const auto summary = decomp::summarize_matrix(loaded.draws, loaded.rows, loaded.m, lo, hi);
  decomp::write_summary_csv(summary, out);
  if (trace_coord > 0) {
    decomp::PosteriorSamples s;
    s.m = loaded.m;
    s.rows = loaded.rows;
    s.draws = loaded.draws;
    const auto trace = decomp::extract_trace(s, trace_coord, trace_stride);
    const fs::path trace_path = fs::path(out).parent_path() / "trace.csv";
    std::ofstream tf(trace_path);
    tf << "iteration,nu_" << trace_coord << "\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
      tf << i * trace_stride << ',' << decomp::format_double(trace[i]) << '\n';
    }
    std::cout << "wrote " << trace_path.string() << "\n";
  }
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_verify(std::uint64_t seed, std::size_t instances) {
  if (instances == 0) {
    std::cout << "warning: zero instances requested, nothing verified\n";
    return 0;
  }
  const auto results = decomp::run_inequality_suite(seed, instances);
  bool ok = true;
  for (const auto& r : results) {
    std::printf("%-28s checked %6zu  skipped %4zu  violations %zu  worst margin %.3e\n",
                r.name.c_str(), r.checked, r.skipped, r.violations, r.worst_margin);
    if (r.violations > 0) ok = false;
  }
  if (!ok) {
    std::cerr << "inequality violations found\n";
    return 1;
  }
  return 0;
}

int cmd_diophantine(int m, std::int64_t z) {
  const auto sols = decomp::enumerate_solutions(m, z);
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto row = sols.at(i);
    for (int j = 0; j < m; ++j) std::cout << row[j] << (j + 1 == m ? '\n' : ' ');
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian decompounding of integer compound Poisson data"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "generate a synthetic increment dataset");
  simulate->add_option("--preset", sim.preset, "uniform146_a|uniform146_b|uniform146_c|geometric")
      ->check(CLI::IsMember({"uniform146_a", "uniform146_b", "uniform146_c", "geometric"}));
  simulate->add_option("--alpha", sim.alpha, "geometric parameter in (0,1)")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  simulate->add_option("--n", sim.n, "sample size (geometric/explicit)");
  simulate->add_option("--lambda", sim.lambda, "explicit jump intensity");
  simulate->add_option("--weights", sim.weights,
                       "explicit jump-size weights for sizes 1.. (normalized)");
  simulate->add_option("--grid", sim.grid, "uniform|random")
      ->check(CLI::IsMember({"uniform", "random"}));
  simulate->add_option("--delta", sim.delta, "time gap for the uniform grid");
  simulate->add_option("--lo", sim.lo, "random grid lower bound");
  simulate->add_option("--hi", sim.hi, "random grid upper bound");
  simulate->add_option("--seed", sim.seed, "RNG seed");
  simulate->add_option("-o,--out", sim.out, "output directory");

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "sample the posterior of the jump measure");
  fit_cmd->add_option("--data", fit.data, "CSV path or embedded dataset name")->required();
  fit_cmd->add_option("--m", fit.m, "support cap (default min(15, max z))");
  fit_cmd->add_option("--a", fit.a, "Gamma shape hyperparameter");
  fit_cmd->add_option("--c", fit.c, "Inverse-Gamma shape hyperparameter");
  auto* iters_opt = fit_cmd->add_option("--iters", fit.iters, "Gibbs iterations");
  auto* burnin_opt = fit_cmd->add_option("--burnin", fit.burnin, "discarded iterations");
  fit_cmd->add_option("--thin", fit.thin, "retain every thin-th draw");
  fit_cmd->add_option("--seed", fit.seed, "RNG seed");
  fit_cmd->add_option("--pi-neighbor", fit.pi_neighbor, "neighbor-move probability")
      ->check(CLI::Range(1e-9, 1.0));
  fit_cmd->add_option("--sweeps", fit.sweeps, "MH moves per increment per scan");
  fit_cmd->add_option("--threads", fit.threads, "parallel imputation cap");
  fit_cmd->add_flag("--quick", fit.quick, "CI profile: 50,000 iterations, 25,000 burn-in");
  fit_cmd->add_option("-o,--out", fit.out, "output directory");

  std::string plugin_data, plugin_out = ".";
  std::size_t plugin_k_max = 0;
  auto* plugin_cmd =
      app.add_subcommand("fit-plugin", "inverse-Panjer plug-in benchmark estimate");
  plugin_cmd->add_option("--data", plugin_data, "CSV path or embedded dataset name")->required();
  plugin_cmd->add_option("--k-max", plugin_k_max, "support cap (default: max observed z)");
  plugin_cmd->add_option("-o,--out", plugin_out, "output directory");

  std::string sum_samples, sum_out = "summary.csv";
  double sum_lo = 2.5, sum_hi = 97.5;
  std::size_t trace_coord = 0, trace_stride = 50;
  auto* sum_cmd = app.add_subcommand("summarize", "summarize a draws CSV");
  sum_cmd->add_option("--samples", sum_samples, "draws CSV")->required();
  sum_cmd->add_option("-o,--out", sum_out, "summary CSV path");
  sum_cmd->add_option("--lo", sum_lo, "lower percentile");
  sum_cmd->add_option("--hi", sum_hi, "upper percentile");
  sum_cmd->add_option("--trace-coord", trace_coord, "also dump a trace of nu_k (1-based)");
  sum_cmd->add_option("--trace-stride", trace_stride, "trace subsampling stride");

  std::uint64_t verify_seed = 1;
  std::size_t verify_instances = 1000;
  auto* verify_cmd =
      app.add_subcommand("verify", "check the compounding inequalities on random instances");
  verify_cmd->add_option("--seed", verify_seed, "RNG seed");
  verify_cmd->add_option("--instances", verify_instances, "number of random instances");

  int dio_m = 1;
  std::int64_t dio_z = 0;
  auto* dio_cmd = app.add_subcommand("diophantine", "list solutions of sum j*k_j = z");
  dio_cmd->add_option("--m", dio_m, "number of parts")->required()->check(CLI::PositiveNumber);
  dio_cmd->add_option("--z", dio_z, "target sum")->required()->check(CLI::NonNegativeNumber);

  std::string export_name, export_out = "data.csv";
  auto* export_cmd = app.add_subcommand("export-dataset", "write an embedded dataset as CSV");
  export_cmd->add_option("--name", export_name, "horse_kick|plant")
      ->required()
      ->check(CLI::IsMember(decomp::dataset_names()));
  export_cmd->add_option("-o,--out", export_out, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(sim);
    if (fit_cmd->parsed()) {
      fit.iters_set = iters_opt->count() > 0;
      fit.burnin_set = burnin_opt->count() > 0;
      return cmd_fit(fit);
    }
    if (plugin_cmd->parsed()) return cmd_fit_plugin(plugin_data, plugin_out, plugin_k_max);
    if (sum_cmd->parsed()) {
      return cmd_summarize(sum_samples, sum_out, sum_lo, sum_hi, trace_coord, trace_stride);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_seed, verify_instances);
    if (dio_cmd->parsed()) return cmd_diophantine(dio_m, dio_z);
    if (export_cmd->parsed()) {
      decomp::write_increment_csv(decomp::embedded_dataset(export_name), export_out);
      std::cout << "wrote " << export_out << "\n";
      return 0;
    }
  } catch (const decomp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
