#include "hyperlag/tensor_ops.hpp"

#include <string>

namespace hyperlag {

namespace {

void check_dimension(const Hypergraph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.vertex_count()) {
    throw DimensionMismatch("vector has " + std::to_string(x.size()) +
                            " entries, hypergraph has " +
                            std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

double weight_value(const Hypergraph& g, std::span<const double> x) {
  check_dimension(g, x);
  const int r = g.order();
  const std::int64_t m = g.edge_count();
  const std::int32_t* v = g.incidence().data();
  double total = 0.0;

  if (r == 3) {
    for (std::int64_t e = 0; e < m; ++e, v += 3) {
      total += x[v[0]] * x[v[1]] * x[v[2]];
    }
    return total;
  }
  for (std::int64_t e = 0; e < m; ++e, v += r) {
    double p = x[v[0]];
    for (int k = 1; k < r; ++k) p *= x[v[k]];
    total += p;
  }
  return total;
}

namespace {

// Shared edge sweep; accumulates the value only when asked so the plain
// gradient path stays a single pass too.
template <bool WithValue>
double gradient_sweep(const Hypergraph& g, std::span<const double> x,
                      std::vector<double>& grad) {
  const int r = g.order();
  const std::int64_t m = g.edge_count();
  const std::int32_t* v = g.incidence().data();
  grad.assign(x.size(), 0.0);
  double total = 0.0;

  if (r == 3) {
    for (std::int64_t e = 0; e < m; ++e, v += 3) {
      const double a = x[v[0]], b = x[v[1]], c = x[v[2]];
      grad[v[0]] += b * c;
      grad[v[1]] += a * c;
      grad[v[2]] += a * b;
      if constexpr (WithValue) total += a * b * c;
    }
    return total;
  }

  // prefix[k] = x[v0]*...*x[v_{k-1}], suffix[k] = x[v_k]*...*x[v_{r-1}];
  // the leave-one-out product at slot k is prefix[k]*suffix[k+1].
  std::vector<double> prefix(static_cast<std::size_t>(r) + 1);
  std::vector<double> suffix(static_cast<std::size_t>(r) + 1);
  for (std::int64_t e = 0; e < m; ++e, v += r) {
    prefix[0] = 1.0;
    for (int k = 0; k < r; ++k) prefix[k + 1] = prefix[k] * x[v[k]];
    suffix[r] = 1.0;
    for (int k = r - 1; k >= 0; --k) suffix[k] = suffix[k + 1] * x[v[k]];
    for (int k = 0; k < r; ++k) grad[v[k]] += prefix[k] * suffix[k + 1];
    if constexpr (WithValue) total += prefix[r];
  }
  return total;
}

}  // namespace

void weight_gradient(const Hypergraph& g, std::span<const double> x,
                     std::vector<double>& grad) {
  check_dimension(g, x);
  gradient_sweep<false>(g, x, grad);
}

std::vector<double> weight_gradient(const Hypergraph& g,
                                    std::span<const double> x) {
  std::vector<double> grad;
  weight_gradient(g, x, grad);
  return grad;
}

double weight_value_gradient(const Hypergraph& g, std::span<const double> x,
                             std::vector<double>& grad) {
  check_dimension(g, x);
  return gradient_sweep<true>(g, x, grad);
}

}  // namespace hyperlag
