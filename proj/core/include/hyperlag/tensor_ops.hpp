#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Objective and gradient of the weight polynomial
//
//   f(x) = sum over edges e of prod_{i in e} x_i,
//   grad f(x)_j = sum over edges containing j of the leave-one-out product,
//
// evaluated straight off the compact incidence list in Theta(m*r) without
// materializing the adjacency tensor. Leave-one-out products come from
// per-edge prefix/suffix arrays, never from dividing by a weight (zeros are
// the norm at solutions). Accumulation is sequential in stored edge order,
// so results are bit-reproducible for a fixed hypergraph.

// f(x). x may be any vector of length n (a polynomial on all of R^n).
double weight_value(const Hypergraph& g, std::span<const double> x);

// grad f(x), written into grad (resized to n).
void weight_gradient(const Hypergraph& g, std::span<const double> x,
                     std::vector<double>& grad);
std::vector<double> weight_gradient(const Hypergraph& g,
                                    std::span<const double> x);

// f(x) and grad f(x) in a single sweep over the edges.
double weight_value_gradient(const Hypergraph& g, std::span<const double> x,
                             std::vector<double>& grad);

}  // namespace hyperlag
