#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperlag/generators.hpp"
#include "hyperlag/hg_io.hpp"
#include "hyperlag/simplex.hpp"
#include "hyperlag/solver.hpp"
#include "hyperlag/tensor_ops.hpp"

namespace hl = hyperlag;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// All whitespace-separated reals from the stream; rejects partial tokens.
std::vector<double> parse_reals(std::istream& in, const std::string& what) {
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw std::invalid_argument(what + ": not a number: '" + token + "'");
    }
    out.push_back(v);
  }
  return out;
}

double vec_infeasibility(const std::vector<double>& x) {
  double sum = 0.0;
  double min_entry = x.empty() ? 0.0 : x[0];
  for (double v : x) {
    sum += v;
    min_entry = std::min(min_entry, v);
  }
  return std::max(std::abs(sum - 1.0), std::max(-min_entry, 0.0));
}

void write_trace_csv(const std::string& path,
                     const std::vector<hl::TraceRecord>& trace) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open trace file: " + path);
  out << "c,f,g_norm,alpha,rho,backtracks\n";
  for (const auto& t : trace) {
    out << t.iter << ',' << fmt17(t.f) << ',' << fmt17(t.g_norm) << ','
        << fmt17(t.alpha) << ',' << fmt17(t.rho) << ',' << t.backtracks
        << '\n';
  }
}

int write_graph(const hl::Hypergraph& g, const std::string& out_path,
                const std::string& comment) {
  hl::write_hg_file(out_path, g, comment);
  std::fprintf(stderr, "wrote %s (r=%d, n=%d, m=%lld)\n", out_path.c_str(),
               g.order(), g.vertex_count(),
               static_cast<long long>(g.edge_count()));
  return 0;
}

int cmd_solve(const std::string& hg_path, const hl::SolverConfig& cfg,
              const std::string& trace_path, bool sparse) {
  const hl::Hypergraph g = hl::read_hg_file(hg_path);

  const auto t0 = std::chrono::steady_clock::now();
  const hl::MultiStartResult ms =
      hl::multi_start(g, cfg, !trace_path.empty());
  const auto t1 = std::chrono::steady_clock::now();
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  const hl::SolverRun& best = ms.best();
  if (!trace_path.empty()) write_trace_csv(trace_path, best.trace);

  nlohmann::json report;
  report["lambda_hat"] = best.lambda_hat;
  report["residual"] = best.residual;
  report["status"] = hl::to_string(best.status);
  report["iterations"] = best.iterations;
  report["n_starts"] = cfg.n_starts;
  report["best_start"] = ms.best_index;
  report["elapsed_ms"] = elapsed_ms;
  report["hypergraph"] = {
      {"r", g.order()}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
  report["config"] = {{"eta", cfg.eta},
                      {"beta", cfg.beta},
                      {"alpha0", cfg.alpha0},
                      {"alpha_min", cfg.alpha_min},
                      {"alpha_max", cfg.alpha_max},
                      {"tol_residual", cfg.tol_residual},
                      {"tol_fstall", cfg.tol_fstall},
                      {"max_iters", cfg.max_iters},
                      {"max_backtracks", cfg.max_backtracks},
                      {"n_starts", cfg.n_starts},
                      {"seed", cfg.seed}};
  if (sparse) {
    nlohmann::json xs = nlohmann::json::object();
    for (std::size_t i = 0; i < best.x_final.size(); ++i) {
      if (best.x_final[i] >= 1e-12) {
        xs[std::to_string(i + 1)] = best.x_final[i];
      }
    }
    report["x_hat_sparse"] = xs;
  } else {
    report["x_hat"] = best.x_final.vec();
  }

  std::cout << report.dump(2) << '\n';

  std::fprintf(stderr, "%s: r=%d n=%d m=%lld\n", hg_path.c_str(), g.order(),
               g.vertex_count(), static_cast<long long>(g.edge_count()));
  std::fprintf(stderr,
               "lambda_hat %.12g  %s  iterations %d  best start %d of %d  "
               "(%.2f ms)\n",
               best.lambda_hat, hl::to_string(best.status).c_str(),
               best.iterations, ms.best_index, cfg.n_starts, elapsed_ms);

  if (best.status == hl::SolverStatus::LineSearchFailed) {
    std::fprintf(stderr, "error: line search failed on the best run\n");
    return 3;
  }
  return 0;
}

int cmd_eval(const std::string& hg_path, const std::string& x_path) {
  const hl::Hypergraph g = hl::read_hg_file(hg_path);

  std::ifstream in(x_path);
  if (!in) throw std::runtime_error("cannot open weight file: " + x_path);
  std::vector<double> x = parse_reals(in, "weight file");
  if (static_cast<int>(x.size()) != g.vertex_count()) {
    throw hl::DimensionMismatch(
        "weight file has " + std::to_string(x.size()) + " entries, graph has " +
        std::to_string(g.vertex_count()) + " vertices");
  }
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw hl::NonFiniteInput("weight file has a non-finite entry");
    }
  }

  const double drift = vec_infeasibility(x);
  if (drift > 1e-9) {
    std::fprintf(stderr,
                 "warning: weights are off the simplex by %.3g; projecting\n",
                 drift);
    x = hl::project_simplex(x).vec();
  }

  const double f = hl::weight_value(g, x);
  const std::vector<double> grad = hl::weight_gradient(g, x);
  std::vector<double> shifted(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] + grad[i];
  const hl::WeightVector proj = hl::project_simplex(shifted);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = proj[i] - x[i];
    acc += d * d;
  }

  std::cout << "value " << fmt17(f) << '\n';
  std::cout << "residual " << fmt17(std::sqrt(acc)) << '\n';
  return 0;
}

int cmd_project() {
  const std::vector<double> a = parse_reals(std::cin, "input");
  if (a.empty()) throw std::invalid_argument("no input numbers to project");
  const hl::WeightVector x = hl::project_simplex(a);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) std::cout << ' ';
    std::cout << fmt17(x[i]);
  }
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hypergraph Lagrangian toolkit: generate instances, maximize the "
      "weight polynomial over the simplex, evaluate and project weightings"};
  app.require_subcommand(1);

  int rc = 0;

  auto* gen =
      app.add_subcommand("gen", "Generate a hypergraph and write a .hg file");
  gen->require_subcommand(1);

  struct {
    int n = 0;
    int r = 3;
    std::string out;
  } complete_args;
  auto* complete = gen->add_subcommand("complete", "Complete r-graph K_n^r");
  complete->add_option("--n", complete_args.n, "vertex count")->required();
  complete->add_option("--r", complete_args.r, "edge cardinality")
      ->capture_default_str();
  complete->add_option("-o,--output", complete_args.out, "output .hg path")
      ->required();
  complete->callback([&] {
    rc = write_graph(
        hl::gen_complete(complete_args.n, complete_args.r), complete_args.out,
        "complete " + std::to_string(complete_args.r) + "-graph on " +
            std::to_string(complete_args.n) + " vertices");
  });

  struct {
    int level = 0;
    std::string out;
  } ico_args;
  auto* ico = gen->add_subcommand(
      "icosphere", "Triangle mesh of the 4-way subdivided icosahedron");
  ico->add_option("--level", ico_args.level, "subdivision level")->required();
  ico->add_option("-o,--output", ico_args.out, "output .hg path")->required();
  ico->callback([&] {
    rc = write_graph(hl::gen_icosphere(ico_args.level), ico_args.out,
                     "icosphere level " + std::to_string(ico_args.level));
  });

  struct {
    int t = 1;
    std::string out;
  } fs_args;
  auto* fs = gen->add_subcommand(
      "frankl-star", "t+2 vertex blocks plus all block-transversal triples");
  fs_args.t = 1;
  fs->add_option("--t", fs_args.t, "number of blocks minus 2")
      ->capture_default_str();
  fs->add_option("-o,--output", fs_args.out, "output .hg path")->required();
  fs->callback([&] {
    rc = write_graph(hl::gen_frankl_star(fs_args.t), fs_args.out,
                     "frankl-star t=" + std::to_string(fs_args.t));
  });

  struct {
    int n = 0;
    int r = 3;
    std::int64_t m = 0;
    std::uint64_t seed = 0;
    std::string out;
  } rnd_args;
  auto* rnd = gen->add_subcommand(
      "random", "m distinct edges sampled uniformly among the r-subsets");
  rnd->add_option("--n", rnd_args.n, "vertex count")->required();
  rnd->add_option("--r", rnd_args.r, "edge cardinality")
      ->capture_default_str();
  rnd->add_option("--m", rnd_args.m, "edge count")->required();
  rnd->add_option("--seed", rnd_args.seed, "RNG seed")->capture_default_str();
  rnd->add_option("-o,--output", rnd_args.out, "output .hg path")->required();
  rnd->callback([&] {
    rc = write_graph(
        hl::gen_random(rnd_args.n, rnd_args.r, rnd_args.m, rnd_args.seed),
        rnd_args.out,
        "random " + std::to_string(rnd_args.r) + "-graph: n=" +
            std::to_string(rnd_args.n) + " m=" + std::to_string(rnd_args.m) +
            " seed=" + std::to_string(rnd_args.seed));
  });

  hl::SolverConfig cfg;
  struct {
    std::string input;
    std::string trace;
    bool sparse = false;
  } solve_args;
  auto* solve = app.add_subcommand(
      "solve", "Compute the Lagrangian by multi-start projected gradient "
               "ascent and print a JSON report");
  solve->add_option("input", solve_args.input, "input .hg file")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--eta", cfg.eta, "Armijo sufficient-ascent parameter")
      ->capture_default_str();
  solve->add_option("--beta", cfg.beta, "backtracking factor")
      ->capture_default_str();
  solve->add_option("--alpha0", cfg.alpha0, "first step length")
      ->capture_default_str();
  solve->add_option("--alpha-min", cfg.alpha_min, "lower clamp on BB steps")
      ->capture_default_str();
  solve->add_option("--alpha-max", cfg.alpha_max, "upper clamp on BB steps")
      ->capture_default_str();
  solve->add_option("--tol", cfg.tol_residual,
                    "stopping threshold on the criticality residual")
      ->capture_default_str();
  solve->add_option("--ftol", cfg.tol_fstall,
                    "stopping threshold on |f(x_c) - f(x_{c-4})|")
      ->capture_default_str();
  solve->add_option("--max-iter", cfg.max_iters, "iteration cap per start")
      ->capture_default_str();
  solve->add_option("--starts", cfg.n_starts, "number of random starts")
      ->capture_default_str();
  solve->add_option("--seed", cfg.seed, "RNG seed for the starts")
      ->capture_default_str();
  solve->add_option("--trace", solve_args.trace,
                    "write the best run's per-iteration trace to this CSV");
  solve->add_flag("--sparse", solve_args.sparse,
                  "report x_hat as index:value pairs, dropping entries "
                  "below 1e-12");
  solve->callback([&] {
    rc = cmd_solve(solve_args.input, cfg, solve_args.trace, solve_args.sparse);
  });

  struct {
    std::string graph;
    std::string weights;
  } eval_args;
  auto* eval = app.add_subcommand(
      "eval", "Evaluate f(x) and the criticality residual at a weighting");
  eval->add_option("graph", eval_args.graph, "input .hg file")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("weights", eval_args.weights,
                   "file with n whitespace-separated reals")
      ->required()
      ->check(CLI::ExistingFile);
  eval->callback([&] { rc = cmd_eval(eval_args.graph, eval_args.weights); });

  auto* project = app.add_subcommand(
      "project", "Project the reals on standard input onto the simplex");
  project->callback([&] { rc = cmd_project(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
