#include "hyperlag/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hyperlag/tensor_ops.hpp"

namespace hyperlag {

WeightVector::WeightVector(std::vector<double> x) : x_(std::move(x)) {
  if (x_.empty()) throw InfeasiblePoint("weight vector must be nonempty");
  double sum = 0.0;
  for (double v : x_) {
    if (!(v >= 0.0)) {
      throw InfeasiblePoint("weight vector has a negative or NaN entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw InfeasiblePoint("weight vector sums to " + std::to_string(sum) +
                          ", expected 1");
  }
}

namespace detail {

void repair_sum_drift(std::vector<double>& x) {
  double sum = 0.0;
  for (double v : x) sum += v;
  const double residual = sum - 1.0;
  if (residual != 0.0) {
    auto it = std::max_element(x.begin(), x.end());
    *it -= residual;
  }
}

}  // namespace detail

WeightVector project_simplex(std::span<const double> a) {
  if (a.empty()) throw NonFiniteInput("cannot project an empty vector");
  for (double v : a) {
    if (!std::isfinite(v)) {
      throw NonFiniteInput("projection input has a non-finite entry");
    }
  }
  const std::size_t n = a.size();

  std::vector<double> b(a.begin(), a.end());
  std::sort(b.begin(), b.end(), std::greater<double>());

  // Largest l with l*b_l + 1 - sum_{i<=l} b_i > 0; always holds at l = 1.
  double partial = 0.0;
  double tau = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    partial += b[j - 1];
    if (static_cast<double>(j) * b[j - 1] + 1.0 - partial > 0.0) {
      tau = (1.0 - partial) / static_cast<double>(j);
    }
  }

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = a[i] + tau;
    x[i] = v > 0.0 ? v : 0.0;
  }
  detail::repair_sum_drift(x);
  return WeightVector::trusted(std::move(x));
}

WeightVector sample_uniform(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  std::vector<double> x(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& v : x) {
    // Uniform in the open interval (0, 1) from the top 53 bits, so the
    // exponential draw is strictly positive and the sum can never vanish.
    const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    v = -std::log(u);
    sum += v;
  }
  for (double& v : x) v /= sum;
  detail::repair_sum_drift(x);
  return WeightVector::trusted(std::move(x));
}

std::vector<double> gradient_map(const Hypergraph& g, const WeightVector& x,
                                 double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  const std::vector<double> grad = weight_gradient(g, x.span());
  std::vector<double> shifted(x.size());
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    shifted[i] = x[i] + alpha * grad[i];
  }
  const WeightVector projected = project_simplex(shifted);
  std::vector<double> dir(x.size());
  for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = projected[i] - x[i];
  return dir;
}

}  // namespace hyperlag
