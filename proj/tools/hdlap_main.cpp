// Command-line front end: seeded, reproducible experiments emitting CSV
// artifacts with JSON metadata sidecars. Exit codes: 0 success, 1 infeasible
// parameters, 2 input errors.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "hdlap/distributions.hpp"
#include "hdlap/errors.hpp"
#include "hdlap/exact.hpp"
#include "hdlap/expsum.hpp"
#include "hdlap/graph.hpp"
#include "hdlap/io.hpp"
#include "hdlap/moments.hpp"
#include "hdlap/rates.hpp"
#include "hdlap/sampling.hpp"
#include "hdlap/solver.hpp"
#include "json.hpp"

namespace {

using hdlap::format_g17;
using nlohmann::json;

struct GlobalOpts {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  int threads = 1;
};

// One tabular artifact: header + rows, written as CSV (default) or JSON,
// with the full invoking configuration embedded in a sidecar (file output)
// or on stderr (stdout output).
struct Artifact {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<double> values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_g17(v));
    rows.push_back(std::move(cells));
  }
};

void emit(const Artifact& art, const GlobalOpts& g, const json& config) {
  std::ostringstream body;
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& r : art.rows) {
      json obj;
      for (std::size_t i = 0; i < art.header.size() && i < r.size(); ++i)
        obj[art.header[i]] = r[i];
      arr.push_back(obj);
    }
    json doc;
    doc["config"] = config;
    doc["rows"] = arr;
    body << doc.dump(2) << "\n";
  } else {
    hdlap::CsvWriter csv(body);
    csv.row(art.header);
    for (const auto& r : art.rows) csv.row(r);
  }
  if (g.out.empty()) {
    std::cout << body.str();
    std::cerr << "config: " << config.dump() << "\n";
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw hdlap::InputError("cannot open output file: " + g.out);
  f << body.str();
  if (g.format != "json") {
    std::ofstream meta(g.out + ".meta.json");
    meta << config.dump(2) << "\n";
  }
}

json base_config(const std::string& cmd, const GlobalOpts& g) {
  json c;
  c["command"] = cmd;
  c["seed"] = g.seed;
  c["format"] = g.format;
  c["threads"] = g.threads;
  return c;
}

int run_graph(const GlobalOpts& g, const std::string& graph_file) {
  hdlap::InteractionGraph graph = hdlap::load_graph(graph_file);
  if (graph.edges.empty()) throw hdlap::InfeasibleError("graph has no edges");
  hdlap::MomentSummary ms = hdlap::graph_moments(graph);

  json config = base_config("graph", g);
  config["graph_file"] = graph_file;

  json report;
  report["m"] = graph.m;
  report["n"] = graph.n();
  report["edges"] = graph.edge_count();
  auto deg = graph.degrees();
  std::int64_t dmin = deg[0], dmax = deg[0];
  for (auto d : deg) {
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  report["degree_min"] = dmin;
  report["degree_max"] = dmax;
  report["mean_squared_degree"] = graph.mean_squared_degree();
  report["e"] = format_g17(ms.e);
  report["v"] = format_g17(ms.v);
  report["z"] = format_g17(ms.z);
  if (graph.m <= 64) {
    hdlap::ExactMoments ex = hdlap::exact_graph_moments(graph);
    report["e_exact"] = hdlap::rational_to_string(ex.e);
    report["v_exact"] = hdlap::rational_to_string(ex.v);
    report["z_exact"] = hdlap::rational_to_string(ex.z);
  }
  report["config"] = config;

  if (g.out.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream f(g.out);
    if (!f) throw hdlap::InputError("cannot open output file: " + g.out);
    f << report.dump(2) << "\n";
  }
  return 0;
}

int run_sample(const GlobalOpts& g, const std::string& graph_file, std::int64_t count, int bins,
               bool full, bool fig1) {
  hdlap::InteractionGraph graph = hdlap::load_graph(graph_file);
  hdlap::EmbeddingMatrix em = hdlap::build_graph_embedding(graph);
  auto sv = hdlap::singular_values(em);
  hdlap::EmpiricalDistribution ed =
      hdlap::symbol_samples(sv, em.n, count, g.seed, full, bins, g.threads);
  hdlap::MomentSummary ms = hdlap::graph_moments(graph);

  json config = base_config("sample", g);
  config["graph_file"] = graph_file;
  config["count"] = count;
  config["bins"] = bins;
  config["materialize_full"] = full;
  config["fig1_overlay"] = fig1;
  config["summary"] = {{"mean", ed.mean},
                       {"variance", ed.variance},
                       {"z", ed.z},
                       {"count", ed.count()},
                       {"seed", ed.seed}};

  Artifact art;
  art.header = {"bin_center", "density"};
  if (fig1) art.header.push_back("gauss_density");
  hdlap::DensityModel gauss{hdlap::NormalModel{ms.e, ms.v}};
  for (std::size_t b = 0; b + 1 < ed.bin_edges.size(); ++b) {
    double center = 0.5 * (ed.bin_edges[b] + ed.bin_edges[b + 1]);
    std::vector<double> row{center, ed.density(b)};
    if (fig1) row.push_back(gauss.density(center));
    art.add_row(row);
  }
  emit(art, g, config);
  return 0;
}

int run_project(const GlobalOpts& g, std::int64_t m, std::int64_t n, int grid) {
  auto moments = hdlap::projection_moments(m, n, false);
  json config = base_config("project", g);
  config["m"] = m;
  config["n"] = n;
  config["grid"] = grid;
  config["e"] = moments.e;
  config["v"] = moments.v;

  Artifact art;
  art.header = {"delta", "cdf", "tail_bound"};
  const double xi = static_cast<double>(m) / static_cast<double>(n);
  for (int i = 1; i < grid; ++i) {
    double delta = static_cast<double>(i) / grid;
    double cdf = hdlap::projection_cdf(m, n, delta);
    double bound = std::numeric_limits<double>::quiet_NaN();
    if (delta < xi)
      bound = hdlap::concentration_bound(m, n, delta, hdlap::TailSide::below);
    else if (delta > xi)
      bound = hdlap::concentration_bound(m, n, delta, hdlap::TailSide::above);
    art.add_row({delta, cdf, bound});
  }
  emit(art, g, config);
  return 0;
}

int run_rates(const GlobalOpts& g, const std::string& family, double sigma, double alpha,
              double beta, bool rescaled, int kmax, bool table1) {
  json config = base_config("rates", g);
  Artifact art;
  if (table1) {
    config["table1"] = true;
    auto c16 = hdlap::mk_normal(1.0 / 16.0, 12);
    auto c32 = hdlap::mk_normal(1.0 / 32.0, 12);
    auto c64 = hdlap::mk_normal(1.0 / 64.0, 12);
    art.header = {"k", "sigma_1_16", "sigma_1_32", "sigma_1_64"};
    for (int k = 1; k <= 12; ++k)
      art.add_row({static_cast<double>(k), c16[static_cast<std::size_t>(k)],
                   c32[static_cast<std::size_t>(k)], c64[static_cast<std::size_t>(k)]});
    emit(art, g, config);
    return 0;
  }
  std::vector<double> mk;
  if (family == "normal") {
    if (!(sigma > 0.0)) throw hdlap::InfeasibleError("rates: --sigma must be positive");
    mk = hdlap::mk_normal(sigma, kmax);
    config["family"] = "normal";
    config["sigma"] = sigma;
  } else if (family == "beta") {
    mk = hdlap::mk_beta(alpha, beta, kmax);
    config["family"] = "beta";
    config["alpha"] = alpha;
    config["beta"] = beta;
    config["rescaled"] = rescaled;
  } else {
    throw hdlap::InputError("rates: unknown family '" + family + "'");
  }
  config["k"] = kmax;
  art.header = {"k", "m_k"};
  for (int k = 0; k <= kmax; ++k)
    art.add_row({static_cast<double>(k), mk[static_cast<std::size_t>(k)]});
  emit(art, g, config);
  return 0;
}

int run_expsum(const GlobalOpts& g, double h, int k1, int k2, double r_lo, double r_hi,
               std::int64_t points, bool fig4) {
  hdlap::ExpSumApprox approx = hdlap::build_expsum(h, k1, k2);
  json config = base_config("expsum", g);
  config["h"] = h;
  config["k1"] = k1;
  config["k2"] = k2;
  Artifact art;
  if (fig4) {
    // Window data in decades: s -> phi(s ln 10).
    config["fig4"] = true;
    art.header = {"s_decades", "phi"};
    const int pts = 1801;
    for (int i = 0; i < pts; ++i) {
      double s = 18.0 * i / (pts - 1);
      art.add_row({s, approx.window(s * std::log(10.0))});
    }
    emit(art, g, config);
    return 0;
  }
  config["r_lo"] = r_lo;
  config["r_hi"] = r_hi;
  config["points"] = points;
  auto scan = hdlap::relative_error_scan(approx, r_lo, r_hi, points);
  config["max_rel_err"] = scan.max_abs;
  config["arg_max"] = scan.arg_max;
  config["predicted_rel_err"] = hdlap::predicted_relative_error(h);
  art.header = {"r", "v", "rel_err"};
  for (std::int64_t i = 0; i < points; ++i) {
    double s = std::log(r_lo) +
               (std::log(r_hi) - std::log(r_lo)) * static_cast<double>(i) /
                   static_cast<double>(points - 1);
    double r = std::exp(s);
    double v = approx.eval(r);
    art.add_row({r, v, v * r - 1.0});
  }
  emit(art, g, config);
  return 0;
}

int run_iterate(const GlobalOpts& g, const std::string& graph_file, double mu,
                const std::string& schedule_kind, double sigma, double rho, double gamma, double s,
                int kmax, std::int64_t count) {
  hdlap::InteractionGraph graph = hdlap::load_graph(graph_file);
  hdlap::EmbeddingMatrix em = hdlap::build_graph_embedding(graph);

  hdlap::RateSchedule schedule = [&] {
    if (schedule_kind == "optimal") {
      double sig = sigma;
      if (!(sig > 0.0)) sig = std::sqrt(hdlap::graph_moments(graph).v);
      return hdlap::RateSchedule::optimal(hdlap::OrthogonalFamily::hermite(sig, kmax));
    }
    if (schedule_kind == "chebyshev") {
      double b = hdlap::spectral_norm(em);
      return hdlap::RateSchedule::chebyshev(rho, b * b, kmax);
    }
    if (schedule_kind == "basic") {
      double b = hdlap::spectral_norm(em);
      return hdlap::RateSchedule::basic(1.0 / (b * b), kmax);
    }
    throw hdlap::InputError("iterate: unknown schedule '" + schedule_kind + "'");
  }();

  hdlap::FrequencyEnsemble ens;
  ens.n = em.n;
  ens.count = count;
  ens.seed = g.seed;
  ens.threads = g.threads;

  hdlap::IterationRun run = hdlap::run_iteration(em, mu, hdlap::RhsModel::gaussian_radial(gamma),
                                                 schedule, ens, s, kmax);

  json config = base_config("iterate", g);
  config["graph_file"] = graph_file;
  config["mu"] = mu;
  config["schedule"] = schedule_kind;
  config["sigma"] = sigma;
  config["rho"] = rho;
  config["gamma"] = gamma;
  config["s"] = s;
  config["K"] = kmax;
  config["directions"] = count;
  config["excluded"] = run.excluded;
  if (run.exclusion_warning) config["exclusion_warning"] = true;

  Artifact art;
  art.header = {"k", "error_norm", "predicted_mk", "ratio"};
  for (int k = 0; k <= kmax; ++k) {
    auto kk = static_cast<std::size_t>(k);
    double predicted = run.predicted_mk.empty() ? std::numeric_limits<double>::quiet_NaN()
                                                : run.predicted_mk[kk];
    double ratio = std::numeric_limits<double>::quiet_NaN();
    if (!run.predicted_mk.empty() && run.mixed_valid) {
      double measured = run.barron_error[kk] * run.barron_error[kk] / run.mixed_sq_norm_u;
      ratio = measured / predicted;
    }
    art.add_row({static_cast<double>(k), run.barron_error[kk], predicted, ratio});
  }
  emit(art, g, config);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral analysis and iteration-rate experiments for "
               "difference-embedded Laplace operators"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "64-bit seed for all randomized subcommands");
  app.add_option("--out", g.out, "output file (stdout if omitted)");
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", g.threads, "worker threads for sampling loops");

  std::string graph_file;
  auto* cmd_graph = app.add_subcommand("graph", "moment report for an interaction graph");
  cmd_graph->add_option("file", graph_file, "graph file (.json or edge list)")->required();

  std::int64_t sample_count = 1000000;
  int sample_bins = 200;
  bool sample_full = false, sample_fig1 = false;
  auto* cmd_sample = app.add_subcommand("sample", "Monte Carlo symbol distribution on the sphere");
  cmd_sample->add_option("--graph", graph_file, "graph file")->required();
  cmd_sample->add_option("--count", sample_count, "sample count");
  cmd_sample->add_option("--bins", sample_bins, "histogram bins");
  cmd_sample->add_flag("--full", sample_full, "materialize full n-vectors");
  cmd_sample->add_flag("--fig1", sample_fig1, "add the Gauss overlay column");

  std::int64_t proj_m = 30, proj_n = 165;
  int proj_grid = 200;
  auto* cmd_project = app.add_subcommand("project", "projection CDF and concentration bounds");
  cmd_project->add_option("--m", proj_m, "projection dimension")->required();
  cmd_project->add_option("--n", proj_n, "ambient dimension")->required();
  cmd_project->add_option("--grid", proj_grid, "delta grid resolution");

  std::string rates_family = "normal";
  double rates_sigma = 0.0625, rates_alpha = 2.0, rates_beta = 2.0;
  bool rates_rescaled = false, rates_table1 = false;
  int rates_k = 12;
  auto* cmd_rates = app.add_subcommand("rates", "reduction factors M_k");
  cmd_rates->add_option("--family", rates_family, "normal or beta");
  cmd_rates->add_option("--sigma", rates_sigma, "normal-family standard deviation");
  cmd_rates->add_option("--alpha", rates_alpha, "beta-family alpha");
  cmd_rates->add_option("--beta", rates_beta, "beta-family beta");
  cmd_rates->add_flag("--rescaled", rates_rescaled, "rescaled beta weight");
  cmd_rates->add_option("--k", rates_k, "max degree");
  cmd_rates->add_flag("--table1", rates_table1, "three-column reference layout");

  double es_h = 1.0;
  int es_k1 = -2, es_k2 = 50;
  double es_rlo = 10.0, es_rhi = 1e17;
  std::int64_t es_points = 10000;
  bool es_fig4 = false;
  auto* cmd_expsum = app.add_subcommand("expsum", "exponential-sum approximation of 1/r");
  cmd_expsum->add_option("--hstep", es_h, "step size h");
  cmd_expsum->add_option("--k1", es_k1, "lower summation index");
  cmd_expsum->add_option("--k2", es_k2, "upper summation index");
  cmd_expsum->add_option("--rlo", es_rlo, "scan lower bound");
  cmd_expsum->add_option("--rhi", es_rhi, "scan upper bound");
  cmd_expsum->add_option("--points", es_points, "scan points");
  cmd_expsum->add_flag("--fig4", es_fig4, "emit the rescaled window data instead");

  double it_mu = 0.0, it_sigma = 0.0, it_rho = 0.5, it_gamma = 1.0, it_s = 0.0;
  int it_k = 6;
  std::int64_t it_count = 100000;
  std::string it_schedule = "optimal";
  auto* cmd_iterate = app.add_subcommand("iterate", "frequency-space iteration error measurement");
  cmd_iterate->add_option("--graph", graph_file, "graph file")->required();
  cmd_iterate->add_option("--mu", it_mu, "zero-order coefficient");
  cmd_iterate->add_option("--schedule", it_schedule, "optimal, chebyshev or basic");
  cmd_iterate->add_option("--sigma", it_sigma, "optimal-schedule sigma (default sqrt(V))");
  cmd_iterate->add_option("--rho", it_rho, "chebyshev target reduction");
  cmd_iterate->add_option("--gamma", it_gamma, "Gaussian right-hand-side decay");
  cmd_iterate->add_option("--s", it_s, "norm smoothness index");
  cmd_iterate->add_option("--K", it_k, "iteration count");
  cmd_iterate->add_option("--count", it_count, "angular directions");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_graph->parsed()) return run_graph(g, graph_file);
    if (cmd_sample->parsed())
      return run_sample(g, graph_file, sample_count, sample_bins, sample_full, sample_fig1);
    if (cmd_project->parsed()) return run_project(g, proj_m, proj_n, proj_grid);
    if (cmd_rates->parsed())
      return run_rates(g, rates_family, rates_sigma, rates_alpha, rates_beta, rates_rescaled,
                       rates_k, rates_table1);
    if (cmd_expsum->parsed())
      return run_expsum(g, es_h, es_k1, es_k2, es_rlo, es_rhi, es_points, es_fig4);
    if (cmd_iterate->parsed())
      return run_iterate(g, graph_file, it_mu, it_schedule, it_sigma, it_rho, it_gamma, it_s, it_k,
                         it_count);
  } catch (const hdlap::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hdlap::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
