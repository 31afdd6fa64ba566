// hyperent - spectral entropy and structural metrics for uniform
// hypergraphs, with batch-friendly JSON/CSV input and output.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperent/entropy.hpp"
#include "hyperent/hypergraph.hpp"
#include "hyperent/ingest.hpp"
#include "hyperent/io.hpp"
#include "hyperent/models.hpp"
#include "hyperent/tensor.hpp"
#include "hyperent/ttrain.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using nlohmann::json;
using nlohmann::ordered_json;

std::string num17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Numbers that survive a JSON round trip; infinities become null.
json json_number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

struct Manifest {
  std::string command;
  json parameters = json::object();
  std::optional<long long> seed;
  std::string started;
  std::string finished;

  json to_json() const {
    json j;
    j["command"] = command;
    j["parameters"] = parameters;
    if (seed) j["seed"] = *seed;
    j["tool_version"] = kVersion;
    j["started"] = started;
    j["finished"] = finished;
    return j;
  }
};

// Data outputs are written whole or not at all.
void write_output(const std::optional<std::string>& path,
                  const std::string& payload) {
  if (!path) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(*path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      hyperent::fail(hyperent::Errc::MalformedInput,
                     "cannot open output file '" + *path + "'");
    out << payload;
    if (!out)
      hyperent::fail(hyperent::Errc::MalformedInput,
                     "failed writing '" + *path + "'");
  }
  fs::rename(tmp, target);
}

void emit_manifest(const Manifest& m, const std::optional<std::string>& path) {
  const std::string text = m.to_json().dump(2) + "\n";
  if (path) {
    std::ofstream out(*path, std::ios::trunc);
    out << text;
  } else {
    std::cerr << text;
  }
}

hyperent::UniformHypergraph load_hypergraph(const std::string& path) {
  if (path == "-") return hyperent::read_hypergraph_json(std::cin);
  return hyperent::read_hypergraph_file(path);
}

std::string edge_label(const hyperent::Edge& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(e[i]);
  }
  return s;
}

struct CommonFlags {
  std::optional<std::string> output;
  std::optional<std::string> manifest_path;
  std::optional<long long> seed;
};

long long require_seed(const CommonFlags& flags) {
  if (!flags.seed)
    hyperent::fail(hyperent::Errc::MalformedInput,
                   "this command requires --seed");
  return *flags.seed;
}

// ---------------------------------------------------------------------------

int run_entropy(const CommonFlags& flags, const std::string& input,
                const std::string& algorithm, double tol,
                Manifest& manifest) {
  hyperent::UniformHypergraph h = load_hypergraph(input);

  const auto t0 = std::chrono::steady_clock::now();
  hyperent::SpectralSummary summary =
      algorithm == "tt" ? hyperent::tensor_entropy_tt(h, tol)
                        : hyperent::tensor_entropy_svd(h);
  const auto t1 = std::chrono::steady_clock::now();

  double resistance = std::numeric_limits<double>::infinity();
  if (summary.zero_multiplicity == 0) {
    double sum = 0.0;
    for (double g : summary.singular_values) sum += 1.0 / g;
    resistance = h.vertex_count() * sum;
  }

  ordered_json out;
  out["algorithm"] = algorithm;
  out["entropy"] = summary.entropy;
  out["singular_values"] = summary.singular_values;
  out["zero_multiplicity"] = summary.zero_multiplicity;
  out["effective_resistance"] = json_number(resistance);
  out["connected"] = h.is_connected();
  out["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  write_output(flags.output, out.dump(2) + "\n");
  manifest.parameters["input"] = input;
  manifest.parameters["algorithm"] = algorithm;
  manifest.parameters["tol"] = num17(tol);
  return 0;
}

int run_metrics(const CommonFlags& flags, const std::string& input,
                std::optional<double> cap, int samples, Manifest& manifest) {
  hyperent::UniformHypergraph h = load_hypergraph(input);
  long long seed = 0;
  if (samples > 0) seed = require_seed(flags);
  hyperent::MetricReport rep = hyperent::metric_report(
      h, cap, samples, static_cast<std::uint64_t>(seed));

  ordered_json out;
  out["n"] = h.vertex_count();
  out["k"] = h.uniformity();
  out["m"] = h.edge_count();
  out["degrees"] = rep.degree_vector;
  out["index_of_dispersion"] = rep.index_of_dispersion
                                   ? json(*rep.index_of_dispersion)
                                   : json(nullptr);
  out["avg_path_length"] = json_number(rep.avg_path_length);
  out["avg_clustering"] = rep.avg_clustering;
  if (rep.small_world) out["small_world"] = *rep.small_world;
  write_output(flags.output, out.dump(2) + "\n");

  manifest.parameters["input"] = input;
  if (cap) manifest.parameters["cap"] = num17(*cap);
  manifest.parameters["samples"] = samples;
  return 0;
}

int run_evolve(const CommonFlags& flags, int n, int k, int steps,
               const std::string& objective, double cap, Manifest& manifest) {
  hyperent::EvolutionTrace trace = hyperent::growth_evolution(
      n, k, steps,
      objective == "min" ? hyperent::GrowthObjective::Min
                         : hyperent::GrowthObjective::Max,
      cap);

  std::ostringstream csv;
  csv << "step,edge,entropy,path_length,dispersion,clustering,resistance\n";
  for (const auto& rec : trace.steps) {
    csv << rec.step_index << ',' << edge_label(rec.edge_added) << ','
        << num17(rec.entropy) << ',' << num17(rec.metrics.avg_path_length)
        << ','
        << num17(rec.metrics.index_of_dispersion.value_or(
               std::numeric_limits<double>::quiet_NaN()))
        << ',' << num17(rec.metrics.avg_clustering) << ','
        << num17(rec.resistance) << '\n';
  }
  write_output(flags.output, csv.str());

  manifest.parameters["n"] = n;
  manifest.parameters["k"] = k;
  manifest.parameters["steps"] = steps;
  manifest.parameters["objective"] = objective;
  manifest.parameters["cap"] = num17(cap);
  return 0;
}

int run_ws(const CommonFlags& flags, int n, int k, int q, double p, int seeds,
           int sw_samples, std::optional<double> cap, Manifest& manifest) {
  const long long base_seed = require_seed(flags);

  std::ostringstream csv;
  csv << "seed,entropy,avg_clustering,avg_path_length,small_world\n";
  double mean_entropy = 0.0, mean_sigma = 0.0;
  int sigma_count = 0;
  for (int i = 0; i < seeds; ++i) {
    const std::uint64_t seed = static_cast<std::uint64_t>(base_seed) + i;
    hyperent::UniformHypergraph h = hyperent::watts_strogatz(n, k, q, p, seed);
    const double entropy = hyperent::tensor_entropy_svd(h).entropy;
    const double clustering = hyperent::clustering_coefficients(h).average;
    const double path = hyperent::average_path_length(h, cap);
    double sigma = std::numeric_limits<double>::quiet_NaN();
    if (sw_samples > 0) {
      try {
        sigma = hyperent::small_world_coefficient(h, sw_samples,
                                                  seed ^ 0x9e3779b97f4a7c15ULL,
                                                  cap);
        mean_sigma += sigma;
        ++sigma_count;
      } catch (const hyperent::Error&) {
        // undefined sigma for this draw; reported as nan
      }
    }
    mean_entropy += entropy;
    csv << seed << ',' << num17(entropy) << ',' << num17(clustering) << ','
        << num17(path) << ',' << num17(sigma) << '\n';
  }
  csv << "mean," << num17(mean_entropy / seeds) << ",,,"
      << num17(sigma_count > 0
                   ? mean_sigma / sigma_count
                   : std::numeric_limits<double>::quiet_NaN())
      << '\n';
  write_output(flags.output, csv.str());

  manifest.parameters["n"] = n;
  manifest.parameters["k"] = k;
  manifest.parameters["q"] = q;
  manifest.parameters["p"] = num17(p);
  manifest.parameters["seeds"] = seeds;
  manifest.parameters["sw_samples"] = sw_samples;
  if (cap) manifest.parameters["cap"] = num17(*cap);
  return 0;
}

int run_bench(const CommonFlags& flags, int k, const std::string& n_list,
              const std::string& algorithm, int repeat, double tol,
              Manifest& manifest) {
  std::vector<int> ns;
  {
    std::istringstream is(n_list);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      if (tok.empty()) continue;
      ns.push_back(std::stoi(tok));
    }
  }
  if (ns.empty())
    hyperent::fail(hyperent::Errc::MalformedInput, "--n-list is empty");

  const bool want_svd = algorithm == "both" || algorithm == "svd";
  const bool want_tt = algorithm == "both" || algorithm == "tt";

  std::ostringstream csv;
  csv << "n,m,tt_max_rank,svd_ms,tt_ms,entropy_svd,entropy_tt,rel_error\n";
  for (int n : ns) {
    hyperent::UniformHypergraph h = hyperent::strip_hypergraph(n, k);
    std::string svd_ms = "", tt_ms = "", s_svd = "", s_tt = "", rel = "",
                rank = "";
    double entropy_svd = 0.0, entropy_tt = 0.0;

    if (want_svd) {
      // Algorithm 1: pre-materialize the unfolding, time the economy SVD.
      hyperent::SparseSymTensor lap = hyperent::laplacian_tensor(h);
      Eigen::MatrixXd unf = hyperent::unfolding_dense(lap, k);
      double total = 0.0;
      std::vector<double> sv;
      for (int r = 0; r < repeat; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        Eigen::BDCSVD<Eigen::MatrixXd> svd(unf);
        const auto t1 = std::chrono::steady_clock::now();
        total += std::chrono::duration<double, std::milli>(t1 - t0).count();
        sv.assign(svd.singularValues().data(),
                  svd.singularValues().data() + svd.singularValues().size());
      }
      sv.resize(n, 0.0);
      entropy_svd = hyperent::entropy_from_values(sv);
      svd_ms = num17(total / repeat);
      s_svd = num17(entropy_svd);
    }
    if (want_tt) {
      // Algorithm 2: the TT Laplacian is given; time the sweep plus the
      // economy SVD of the middle core.
      hyperent::TTTensor lap_tt = hyperent::laplacian_tt(h, tol);
      rank = std::to_string(lap_tt.max_rank());
      double total = 0.0;
      std::vector<double> sv;
      for (int r = 0; r < repeat; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        hyperent::TTTensor swept = hyperent::orthonormalize_for_entropy(lap_tt);
        sv = hyperent::entropy_singular_values(swept);
        const auto t1 = std::chrono::steady_clock::now();
        total += std::chrono::duration<double, std::milli>(t1 - t0).count();
      }
      sv.resize(n, 0.0);
      entropy_tt = hyperent::entropy_from_values(sv);
      tt_ms = num17(total / repeat);
      s_tt = num17(entropy_tt);
    }
    if (want_svd && want_tt)
      rel = num17(std::abs(entropy_tt - entropy_svd) /
                  std::max(entropy_svd, 1e-300));

    csv << n << ',' << h.edge_count() << ',' << rank << ',' << svd_ms << ','
        << tt_ms << ',' << s_svd << ',' << s_tt << ',' << rel << '\n';
  }
  write_output(flags.output, csv.str());

  manifest.parameters["k"] = k;
  manifest.parameters["n_list"] = n_list;
  manifest.parameters["algorithm"] = algorithm;
  manifest.parameters["repeat"] = repeat;
  manifest.parameters["tol"] = num17(tol);
  return 0;
}

int run_ingest(const CommonFlags& flags, const std::string& input, int k,
               double threshold, bool signed_mode, bool matrix_mode,
               Manifest& manifest) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file)
      hyperent::fail(hyperent::Errc::MalformedInput,
                     "cannot open '" + input + "'");
    in = &file;
  }

  std::optional<hyperent::UniformHypergraph> h;
  if (matrix_mode) {
    if (k != 2)
      hyperent::fail(hyperent::Errc::UnsupportedOrder,
                     "--matrix mode builds a k=2 graph; pass --k 2");
    h = hyperent::hypergraph_from_weight_matrix(
        hyperent::read_matrix_csv(*in), threshold);
  } else {
    h = hyperent::hypergraph_from_timeseries(hyperent::read_timeseries_csv(*in),
                                             k, threshold, signed_mode);
  }

  std::ostringstream out;
  hyperent::write_hypergraph_json(out, *h);
  write_output(flags.output, out.str());

  manifest.parameters["input"] = input;
  manifest.parameters["k"] = k;
  manifest.parameters["threshold"] = num17(threshold);
  manifest.parameters["signed"] = signed_mode;
  manifest.parameters["matrix"] = matrix_mode;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor-spectral entropy toolkit for k-uniform hypergraphs"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string output_path, manifest_path;
  long long seed_value = 0;
  app.add_option("--output", output_path, "Write data output to this path");
  app.add_option("--manifest", manifest_path,
                 "Write the run manifest to this path instead of stderr");
  auto* seed_opt = app.add_option("--seed", seed_value, "Random seed");

  // entropy
  auto* cmd_entropy = app.add_subcommand(
      "entropy", "Spectral entropy of a hypergraph JSON file");
  std::string in_entropy, algorithm = "svd";
  double tol = 1e-13;
  cmd_entropy->add_option("input", in_entropy, "Hypergraph JSON ('-' = stdin)")
      ->required();
  cmd_entropy->add_option("--algorithm", algorithm, "svd | tt")
      ->check(CLI::IsMember({"svd", "tt"}));
  cmd_entropy->add_option("--tol", tol, "TT build tolerance");

  // metrics
  auto* cmd_metrics =
      app.add_subcommand("metrics", "Structural metrics of a hypergraph");
  std::string in_metrics;
  double cap_value = 0.0;
  int sw_samples_metrics = 0;
  cmd_metrics->add_option("input", in_metrics, "Hypergraph JSON ('-' = stdin)")
      ->required();
  auto* cap_opt = cmd_metrics->add_option(
      "--cap", cap_value, "Distance charged to unreachable pairs");
  cmd_metrics->add_option("--samples", sw_samples_metrics,
                          "Random-ensemble size for the small-world "
                          "coefficient (0 = skip)");

  // evolve
  auto* cmd_evolve = app.add_subcommand(
      "evolve", "Greedy entropy-extremal hyperedge growth (CSV trace)");
  int n = 0, k = 0, steps = 0;
  std::string objective = "max";
  double evolve_cap = 4.0;
  cmd_evolve->add_option("--n", n, "Vertex count")->required();
  cmd_evolve->add_option("--k", k, "Uniformity")->required();
  cmd_evolve->add_option("--steps", steps, "Number of hyperedges to add")
      ->required();
  cmd_evolve->add_option("--objective", objective, "max | min")
      ->check(CLI::IsMember({"max", "min"}));
  cmd_evolve->add_option("--cap", evolve_cap,
                         "Distance charged to unreachable pairs");

  // ws
  auto* cmd_ws = app.add_subcommand(
      "ws", "Small-world lattice model with hyperedge rewiring (CSV)");
  int ws_n = 0, ws_k = 0, ws_q = 0, ws_seeds = 1, ws_sw_samples = 10;
  double ws_p = 0.0, ws_cap = 0.0;
  cmd_ws->add_option("--n", ws_n, "Vertex count")->required();
  cmd_ws->add_option("--k", ws_k, "Uniformity")->required();
  cmd_ws->add_option("--q", ws_q, "Extra window edges")->required();
  cmd_ws->add_option("--p", ws_p, "Rewiring probability")->required();
  cmd_ws->add_option("--seeds", ws_seeds, "Number of seeds to run");
  cmd_ws->add_option("--sw-samples", ws_sw_samples,
                     "Random-ensemble size for sigma (0 = skip)");
  auto* ws_cap_opt =
      cmd_ws->add_option("--cap", ws_cap, "Distance cap for path lengths");

  // bench
  auto* cmd_bench = app.add_subcommand(
      "bench", "Timing comparison of the two entropy algorithms on strips");
  int bench_k = 0, repeat = 10;
  std::string n_list, bench_algorithm = "both";
  double bench_tol = 1e-13;
  cmd_bench->add_option("--k", bench_k, "Uniformity")->required();
  cmd_bench->add_option("--n-list", n_list, "Comma-separated vertex counts")
      ->required();
  cmd_bench->add_option("--algorithm", bench_algorithm, "both | svd | tt")
      ->check(CLI::IsMember({"both", "svd", "tt"}));
  cmd_bench->add_option("--repeat", repeat, "Timed repetitions per size");
  cmd_bench->add_option("--tol", bench_tol, "TT build tolerance");

  // ingest
  auto* cmd_ingest = app.add_subcommand(
      "ingest", "Build a hypergraph from correlation-thresholded data");
  std::string in_ingest;
  int ingest_k = 3;
  double threshold = 0.0;
  bool signed_mode = false, matrix_mode = false;
  cmd_ingest->add_option("--input", in_ingest, "CSV input ('-' = stdin)")
      ->required();
  cmd_ingest->add_option("--k", ingest_k, "2 | 3")->required();
  cmd_ingest->add_option("--threshold", threshold, "Cutoff threshold")
      ->required();
  cmd_ingest->add_flag("--signed", signed_mode,
                       "Threshold signed coefficients instead of |c|");
  cmd_ingest->add_flag("--matrix", matrix_mode,
                       "Input is a square weight matrix without header");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  flags.output = output_path.empty() ? std::nullopt
                                     : std::make_optional(output_path);
  flags.manifest_path = manifest_path.empty()
                            ? std::nullopt
                            : std::make_optional(manifest_path);
  flags.seed = seed_opt->count() > 0 ? std::make_optional(seed_value)
                                     : std::nullopt;

  Manifest manifest;
  manifest.seed = flags.seed;
  manifest.started = iso_timestamp();

  int rc = 0;
  try {
    if (*cmd_entropy) {
      manifest.command = "entropy";
      rc = run_entropy(flags, in_entropy, algorithm, tol, manifest);
    } else if (*cmd_metrics) {
      manifest.command = "metrics";
      rc = run_metrics(flags, in_metrics,
                       cap_opt->count() ? std::make_optional(cap_value)
                                        : std::nullopt,
                       sw_samples_metrics, manifest);
    } else if (*cmd_evolve) {
      manifest.command = "evolve";
      rc = run_evolve(flags, n, k, steps, objective, evolve_cap, manifest);
    } else if (*cmd_ws) {
      manifest.command = "ws";
      rc = run_ws(flags, ws_n, ws_k, ws_q, ws_p, ws_seeds, ws_sw_samples,
                  ws_cap_opt->count() ? std::make_optional(ws_cap)
                                      : std::nullopt,
                  manifest);
    } else if (*cmd_bench) {
      manifest.command = "bench";
      rc = run_bench(flags, bench_k, n_list, bench_algorithm, repeat,
                     bench_tol, manifest);
    } else if (*cmd_ingest) {
      manifest.command = "ingest";
      rc = run_ingest(flags, in_ingest, ingest_k, threshold, signed_mode,
                      matrix_mode, manifest);
    }
  } catch (const hyperent::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  manifest.finished = iso_timestamp();
  emit_manifest(manifest, flags.manifest_path);
  return rc;
}
