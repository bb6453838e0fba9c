#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace hyperlag {

struct InfeasiblePoint : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A legal weighting: a point of the probability simplex (entries >= 0,
// unit sum within 1e-12). Intermediate arithmetic uses plain vectors;
// this type marks values whose feasibility is guaranteed.
class WeightVector {
 public:
  // Validates feasibility; throws InfeasiblePoint otherwise.
  explicit WeightVector(std::vector<double> x);

  // Wraps without checking. For producers whose output is feasible by
  // construction (projection, simplex sampling, convex combinations).
  static WeightVector trusted(std::vector<double> x) {
    return WeightVector(TrustedTag{}, std::move(x));
  }

  std::size_t size() const { return x_.size(); }
  double operator[](std::size_t i) const { return x_[i]; }
  const std::vector<double>& vec() const { return x_; }
  std::span<const double> span() const { return {x_.data(), x_.size()}; }

  static constexpr double kSumTolerance = 1e-12;

 private:
  struct TrustedTag {};
  WeightVector(TrustedTag, std::vector<double> x) : x_(std::move(x)) {}

  std::vector<double> x_;
};

}  // namespace hyperlag
