#pragma once

#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/weight_vector.hpp"

namespace hyperlag {

struct NonFiniteInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Euclidean projection onto the probability simplex, by the classical
// sort-based method: sort a descending into b, take the largest l with
// l*b_l + 1 - sum_{i<=l} b_i > 0, set tau = (1 - sum_{i<=l} b_i)/l and
// x_i = max(a_i + tau, 0). O(n log n). Any residual unit-sum drift is
// subtracted from the largest component, so iterates stay on the simplex
// to machine precision across long runs.
WeightVector project_simplex(std::span<const double> a);

// One point distributed uniformly on the simplex (flat Dirichlet):
// n standard-exponential draws normalized by their sum. Deterministic
// for a fixed generator state.
WeightVector sample_uniform(int n, std::mt19937_64& rng);

// Gradient projection direction g^alpha(x) = proj(x + alpha*grad f(x)) - x.
// Zero exactly at critical points; g^1 is the criticality residual used by
// the solver's stopping test.
std::vector<double> gradient_map(const Hypergraph& g, const WeightVector& x,
                                 double alpha);

namespace detail {
// Subtracts the unit-sum residual from the largest component, in place.
void repair_sum_drift(std::vector<double>& x);
}  // namespace detail

}  // namespace hyperlag
