#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/weight_vector.hpp"

namespace hyperlag {

// Armijo backtracking exhausted its iteration cap. With exact arithmetic the
// line search always terminates, so this signals broken gradients or a
// degenerate configuration rather than a hard problem instance.
struct LineSearchFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gradient projection solver parameters. Defaults follow the standard
// large-scale setup: Barzilai-Borwein initial steps clamped to
// [alpha_min, alpha_max], Armijo backtracking, three stopping rules.
struct SolverConfig {
  double eta = 0.01;           // Armijo sufficient-ascent parameter, (0, 1/2]
  double beta = 0.5;           // backtracking factor, (0, 1)
  double alpha0 = 1.0;         // first step length, in [alpha_min, alpha_max]
  double alpha_min = 0.001;    // lower clamp on BB steps, > 0
  double alpha_max = 1000.0;   // upper clamp on BB steps, >= alpha_min
  double tol_residual = 1e-8;  // threshold on ||proj(x + grad f(x)) - x||
  double tol_fstall = 1e-8;    // threshold on |f(x_c) - f(x_{c-4})|
  int max_iters = 1000;
  int max_backtracks = 60;     // beta^60 ~ 8.7e-19: beyond this the step is noise
  int n_starts = 10;           // multi-start count
  std::uint64_t seed = 0;      // RNG seed for the starting points

  // Throws std::invalid_argument when a field is outside its legal range.
  void validate() const;
};

enum class SolverStatus {
  ResidualConverged,  // ||g^1(x)|| <= tol_residual
  FStallConverged,    // |f(x_c) - f(x_{c-4})| <= tol_fstall
  MaxIters,
  LineSearchFailed,
};

std::string to_string(SolverStatus status);

// One row per completed iteration: state at x_c and the step taken from it.
struct TraceRecord {
  int iter;         // c
  double f;         // f(x_c)
  double g_norm;    // ||g_c|| = ||proj(x_c + alpha_c grad) - x_c||
  double alpha;     // alpha_c
  double rho;       // accepted step fraction beta^j
  int backtracks;   // j
};

// A single gradient-projection trajectory.
struct SolverRun {
  WeightVector x_final;
  double lambda_hat;   // f(x_final)
  double residual;     // ||g^1(x_final)||
  int iterations;
  SolverStatus status;
  std::vector<TraceRecord> trace;  // filled only when requested

  // Largest simplex violation seen over all iterates:
  // max over c of max(|sum x_c - 1|, -min_i x_c[i]).
  double max_infeasibility;
};

struct MultiStartResult {
  std::vector<SolverRun> runs;  // one per start, in start order
  int best_index;

  const SolverRun& best() const { return runs[static_cast<std::size_t>(best_index)]; }
};

// Barzilai-Borwein spectral step |<s,s>/<s,y>| clamped to
// [alpha_min, alpha_max], from the iterate difference s = x_{c+1} - x_c and
// gradient difference y = grad f(x_{c+1}) - grad f(x_c). The absolute value
// handles the ascent orientation (<s,y> < 0 under concave-like curvature).
// Returns fallback when <s,y> = 0 or the quotient is not finite.
double bb_step(std::span<const double> s, std::span<const double> y,
               double alpha_min, double alpha_max, double fallback);

struct LineSearchResult {
  double rho;           // accepted beta^j
  WeightVector x_next;  // x + rho*g, drift-repaired
  double f_next;
  int backtracks;       // j
};

// Armijo backtracking along the gradient projection direction g: smallest
// j >= 0 with f(x + beta^j g) - f(x) >= eta * beta^j * <g, grad f(x)>.
// Requires <g, grad f(x)> >= 0, which the projection arm guarantees.
// Throws LineSearchFailure when j exceeds cfg.max_backtracks.
LineSearchResult line_search(const Hypergraph& g, const WeightVector& x,
                             std::span<const double> dir, double f_x,
                             std::span<const double> grad_x,
                             const SolverConfig& cfg);

// Gradient projection ascent from x0. Iterates
//   g_c = proj(x_c + alpha_c grad f(x_c)) - x_c,   x_{c+1} = x_c + rho_c g_c,
// with BB step lengths and Armijo backtracking. Stopping rules are checked
// in this order every iteration: residual, f-stall (from c >= 4), iteration
// cap. A line-search failure is reported through the run status.
SolverRun solve(const Hypergraph& g, const WeightVector& x0,
                const SolverConfig& cfg, bool record_trace = false);

// Runs solve from cfg.n_starts uniform simplex samples (streams derived from
// (seed, start index), so runs are reproducible and order-independent) and
// selects the best run: maximal lambda_hat, ties broken by smaller residual,
// then by lower start index.
MultiStartResult multi_start(const Hypergraph& g, const SolverConfig& cfg,
                             bool record_trace = false);

// ||g^1(x)||_2, the distance moved by one unit gradient projection step;
// zero exactly at critical points.
double criticality_residual(const Hypergraph& g, const WeightVector& x);

}  // namespace hyperlag
