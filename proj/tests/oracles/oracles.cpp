#include "oracles/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hyperlag/tensor_ops.hpp"

namespace hyperlag::oracles {

namespace {

constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 24;

double factorial(int k) {
  double out = 1.0;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

// Next tuple in {0..n-1}^r, rightmost index fastest. False after the last.
bool advance(std::vector<int>& idx, int n) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < n) return true;
    idx[pos] = 0;
  }
  return false;
}

}  // namespace

std::size_t DenseTensor::flat(std::span<const int> idx) const {
  std::size_t out = 0;
  for (int i : idx) out = out * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
  return out;
}

DenseTensor dense_adjacency(const Hypergraph& g) {
  const int r = g.order();
  const int n = g.vertex_count();

  std::size_t total = 1;
  for (int k = 0; k < r; ++k) {
    if (total > kMaxDenseEntries / static_cast<std::size_t>(n)) {
      throw std::length_error("dense_adjacency: n^r exceeds the size guard");
    }
    total *= static_cast<std::size_t>(n);
  }

  DenseTensor t{r, n, std::vector<double>(total, 0.0)};
  const double entry = 1.0 / factorial(r - 1);

  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto edge = g.edge(e);
    std::copy(edge.begin(), edge.end(), idx.begin());
    // Edges hold r distinct vertices, so the r! permutations are distinct
    // index tuples and each receives the same entry.
    do {
      t.values[t.flat(idx)] = entry;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return t;
}

std::pair<double, std::vector<double>> naive_value_gradient(
    const DenseTensor& t, std::span<const double> x) {
  if (static_cast<int>(x.size()) != t.n) {
    throw std::invalid_argument("naive_value_gradient: dimension mismatch");
  }

  double value = 0.0;
  std::vector<double> grad(x.size(), 0.0);

  std::vector<int> idx(static_cast<std::size_t>(t.r), 0);
  std::size_t pos = 0;
  do {
    const double a = t.values[pos++];
    if (a != 0.0) {
      double tail = 1.0;
      for (int k = 1; k < t.r; ++k) tail *= x[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
      grad[static_cast<std::size_t>(idx[0])] += a * tail;
      value += a * tail * x[static_cast<std::size_t>(idx[0])];
    }
  } while (advance(idx, t.n));

  return {value / t.r, std::move(grad)};
}

std::vector<double> projection_qp_oracle(std::span<const double> a) {
  const std::size_t n = a.size();
  if (n == 0 || n > 10) {
    throw std::length_error("projection_qp_oracle: n must lie in [1, 10]");
  }

  // Boundary supports can fail exact sign checks by one ulp; the comparison
  // corpus runs at 1e-10, so this slack is invisible there.
  constexpr double kSlack = 1e-12;

  std::vector<double> best;
  double best_dist = std::numeric_limits<double>::infinity();

  std::vector<double> candidate(n);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    double sum = 0.0;
    int support = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        sum += a[i];
        ++support;
      }
    }
    const double tau = (1.0 - sum) / support;

    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask & (1u << i)) {
        candidate[i] = a[i] + tau;
        ok = candidate[i] >= -kSlack;  // primal feasibility on the support
      } else {
        candidate[i] = 0.0;
        ok = a[i] + tau <= kSlack;  // KKT multiplier nonnegative off it
      }
    }
    if (!ok) continue;

    double dist = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = candidate[i] - a[i];
      dist += d * d;
    }
    if (dist < best_dist) {
      best_dist = dist;
      best = candidate;
    }
  }

  if (best.empty()) {
    throw std::logic_error("projection_qp_oracle: no KKT-consistent support");
  }
  return best;
}

std::vector<double> finite_difference_gradient(const Hypergraph& g,
                                               std::span<const double> x,
                                               double h) {
  if (h <= 0.0) throw std::invalid_argument("finite_difference_gradient: h must be positive");

  std::vector<double> shifted(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    shifted[j] = x[j] + h;
    const double fp = weight_value(g, shifted);
    shifted[j] = x[j] - h;
    const double fm = weight_value(g, shifted);
    shifted[j] = x[j];
    grad[j] = (fp - fm) / (2.0 * h);
  }
  return grad;
}

}  // namespace hyperlag::oracles
