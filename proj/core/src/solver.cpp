#include "hyperlag/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <utility>

#include "hyperlag/simplex.hpp"
#include "hyperlag/tensor_ops.hpp"

namespace hyperlag {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// max(|sum x - 1|, -min_i x_i): zero for an exactly feasible point.
double infeasibility(std::span<const double> x) {
  double sum = 0.0;
  double min_entry = x.empty() ? 0.0 : x[0];
  for (double v : x) {
    sum += v;
    min_entry = std::min(min_entry, v);
  }
  return std::max(std::abs(sum - 1.0), std::max(-min_entry, 0.0));
}

// proj(x + alpha*grad) - x, reusing a gradient already evaluated at x.
std::vector<double> projection_arm(const WeightVector& x,
                                   std::span<const double> grad, double alpha) {
  const std::size_t n = x.size();
  std::vector<double> shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = x[i] + alpha * grad[i];
  const WeightVector proj = project_simplex(shifted);
  std::vector<double> dir(n);
  for (std::size_t i = 0; i < n; ++i) dir[i] = proj[i] - x[i];
  return dir;
}

}  // namespace

void SolverConfig::validate() const {
  require(eta > 0.0 && eta <= 0.5, "SolverConfig: eta must lie in (0, 1/2]");
  require(beta > 0.0 && beta < 1.0, "SolverConfig: beta must lie in (0, 1)");
  require(alpha_min > 0.0, "SolverConfig: alpha_min must be positive");
  require(alpha_max >= alpha_min,
          "SolverConfig: alpha_max must be at least alpha_min");
  require(alpha_min <= alpha0 && alpha0 <= alpha_max,
          "SolverConfig: alpha0 must lie in [alpha_min, alpha_max]");
  require(tol_residual > 0.0, "SolverConfig: tol_residual must be positive");
  require(tol_fstall > 0.0, "SolverConfig: tol_fstall must be positive");
  require(max_iters >= 1, "SolverConfig: max_iters must be at least 1");
  require(max_backtracks >= 1,
          "SolverConfig: max_backtracks must be at least 1");
  require(n_starts >= 1, "SolverConfig: n_starts must be at least 1");
}

std::string to_string(SolverStatus status) {
  switch (status) {
    case SolverStatus::ResidualConverged: return "residual_converged";
    case SolverStatus::FStallConverged: return "fstall_converged";
    case SolverStatus::MaxIters: return "max_iters";
    case SolverStatus::LineSearchFailed: return "line_search_failed";
  }
  return "unknown";
}

double bb_step(std::span<const double> s, std::span<const double> y,
               double alpha_min, double alpha_max, double fallback) {
  if (s.size() != y.size()) {
    throw DimensionMismatch("bb_step: s and y differ in length");
  }
  const double ss = dot(s, s);
  const double sy = dot(s, y);
  if (sy == 0.0) return fallback;
  const double raw = std::abs(ss / sy);
  if (!std::isfinite(raw)) return fallback;
  return std::clamp(raw, alpha_min, alpha_max);
}

LineSearchResult line_search(const Hypergraph& g, const WeightVector& x,
                             std::span<const double> dir, double f_x,
                             std::span<const double> grad_x,
                             const SolverConfig& cfg) {
  const std::size_t n = x.size();
  const double slope = dot(dir, grad_x);

  std::vector<double> candidate(n);
  double rho = 1.0;
  for (int j = 0; j <= cfg.max_backtracks; ++j) {
    // The exact point x + rho*dir sums to 1; clamping plus drift repair
    // keeps the rounded trial iterate on the simplex.
    for (std::size_t i = 0; i < n; ++i) {
      const double v = x[i] + rho * dir[i];
      candidate[i] = v > 0.0 ? v : 0.0;
    }
    detail::repair_sum_drift(candidate);
    const double f_trial = weight_value(g, candidate);
    if (f_trial - f_x >= cfg.eta * rho * slope) {
      return LineSearchResult{rho, WeightVector::trusted(std::move(candidate)),
                              f_trial, j};
    }
    rho *= cfg.beta;
  }
  throw LineSearchFailure("line search: no acceptable step within " +
                          std::to_string(cfg.max_backtracks) + " backtracks");
}

SolverRun solve(const Hypergraph& g, const WeightVector& x0,
                const SolverConfig& cfg, bool record_trace) {
  cfg.validate();
  if (static_cast<int>(x0.size()) != g.vertex_count()) {
    throw DimensionMismatch("solve: weight vector size " +
                            std::to_string(x0.size()) +
                            " does not match vertex count " +
                            std::to_string(g.vertex_count()));
  }

  WeightVector x = x0;
  std::vector<double> grad;
  double f = weight_value_gradient(g, x.span(), grad);

  double max_infeas = infeasibility(x.span());

  // f(x_k) lives in slot k mod 5, so the stall test can reach back 4 steps.
  double f_history[5] = {f, 0.0, 0.0, 0.0, 0.0};

  double alpha = cfg.alpha0;
  std::vector<double> s(x.size());
  std::vector<double> y(x.size());
  std::vector<TraceRecord> trace;

  SolverStatus status = SolverStatus::MaxIters;
  int iterations = 0;
  double residual = 0.0;

  for (int c = 0;; ++c) {
    // Stopping rules, strictly in this order.
    residual = norm2(projection_arm(x, grad, 1.0));
    if (residual <= cfg.tol_residual) {
      status = SolverStatus::ResidualConverged;
      iterations = c;
      break;
    }
    if (c >= 4 && std::abs(f - f_history[(c - 4) % 5]) <= cfg.tol_fstall) {
      status = SolverStatus::FStallConverged;
      iterations = c;
      break;
    }
    if (c >= cfg.max_iters) {
      status = SolverStatus::MaxIters;
      iterations = c;
      break;
    }

    const std::vector<double> dir = projection_arm(x, grad, alpha);

    std::optional<LineSearchResult> step;
    try {
      step.emplace(line_search(g, x, dir, f, grad, cfg));
    } catch (const LineSearchFailure&) {
      status = SolverStatus::LineSearchFailed;
      iterations = c;
      break;
    }

    std::vector<double> grad_next;
    const double f_next =
        weight_value_gradient(g, step->x_next.span(), grad_next);

    if (record_trace) {
      trace.push_back(
          TraceRecord{c, f, norm2(dir), alpha, step->rho, step->backtracks});
    }

    for (std::size_t i = 0; i < x.size(); ++i) {
      s[i] = step->x_next[i] - x[i];
      y[i] = grad_next[i] - grad[i];
    }
    alpha = bb_step(s, y, cfg.alpha_min, cfg.alpha_max, cfg.alpha_max);

    x = std::move(step->x_next);
    f = f_next;
    grad = std::move(grad_next);
    f_history[(c + 1) % 5] = f;
    max_infeas = std::max(max_infeas, infeasibility(x.span()));
  }

  // x is untouched between the residual computation and every break, so the
  // head-of-iteration residual is the final one.
  return SolverRun{std::move(x), f, residual, iterations, status,
                   std::move(trace), max_infeas};
}

MultiStartResult multi_start(const Hypergraph& g, const SolverConfig& cfg,
                             bool record_trace) {
  cfg.validate();

  MultiStartResult result;
  result.runs.reserve(static_cast<std::size_t>(cfg.n_starts));
  result.best_index = 0;

  for (int i = 0; i < cfg.n_starts; ++i) {
    // Independent stream per start: reordering or dropping starts never
    // perturbs the others.
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                      static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    const WeightVector x0 = sample_uniform(g.vertex_count(), rng);
    result.runs.push_back(solve(g, x0, cfg, record_trace));

    const SolverRun& cand = result.runs.back();
    const SolverRun& best =
        result.runs[static_cast<std::size_t>(result.best_index)];
    if (cand.lambda_hat > best.lambda_hat ||
        (cand.lambda_hat == best.lambda_hat && cand.residual < best.residual)) {
      result.best_index = i;
    }
  }
  return result;
}

double criticality_residual(const Hypergraph& g, const WeightVector& x) {
  return norm2(gradient_map(g, x, 1.0));
}

}  // namespace hyperlag
