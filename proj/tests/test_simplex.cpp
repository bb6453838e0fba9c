#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "hyperlag/generators.hpp"
#include "hyperlag/simplex.hpp"
#include "hyperlag/weight_vector.hpp"
#include "oracles/oracles.hpp"

using hyperlag::project_simplex;
using hyperlag::WeightVector;

namespace {

double inf_dist(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

}  // namespace

TEST_CASE("projection hand traces") {
  {
    const std::vector<double> a{2.0, 0.0, 0.0};
    const auto p = project_simplex(a);
    CHECK(p[0] == 1.0);
    CHECK(p[1] == 0.0);
    CHECK(p[2] == 0.0);
  }
  {
    const std::vector<double> a{0.5, 0.2, -0.1};
    const auto p = project_simplex(a);
    CHECK(p[0] == doctest::Approx(19.0 / 30).epsilon(1e-15));
    CHECK(p[1] == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(p[2] == doctest::Approx(1.0 / 30).epsilon(1e-15));
  }
}

TEST_CASE("feasible points are fixed points") {
  const std::vector<double> a{0.5, 0.25, 0.25};
  const auto p = project_simplex(a);
  CHECK(p[0] == 0.5);
  CHECK(p[1] == 0.25);
  CHECK(p[2] == 0.25);
}

TEST_CASE("idempotence and translation invariance") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dim(2, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(dim(rng));
    const auto a = fixtures::random_vector(rng, n, -2.0, 2.0);

    const auto p = project_simplex(a);
    const auto pp = project_simplex(p.span());
    CHECK(inf_dist(p.span(), pp.span()) <= 1e-15);

    std::vector<double> shifted(n);
    const double c = 0.37;
    for (std::size_t i = 0; i < n; ++i) shifted[i] = a[i] + c;
    const auto ps = project_simplex(shifted);
    CHECK(inf_dist(p.span(), ps.span()) <= 1e-10);
  }
}

TEST_CASE("projection matches the exhaustive QP oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(dim(rng));
    const auto a = fixtures::random_vector(rng, n, -2.0, 2.0);
    const auto p = project_simplex(a);
    const auto q = hyperlag::oracles::projection_qp_oracle(a);
    CHECK(inf_dist(p.span(), q) <= 1e-10);
  }
}

TEST_CASE("projection output is always feasible") {
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<int> dim(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(dim(rng));
    const auto a = fixtures::random_vector(rng, n, -5.0, 5.0);
    const auto p = project_simplex(a);
    double sum = 0.0;
    double mn = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      sum += p[i];
      mn = std::min(mn, p[i]);
    }
    CHECK(std::abs(sum - 1.0) <= 1e-15);
    CHECK(mn >= 0.0);
  }
}

TEST_CASE("projection rejects bad input") {
  CHECK_THROWS_AS(project_simplex(std::vector<double>{}),
                  hyperlag::NonFiniteInput);
  CHECK_THROWS_AS(
      project_simplex(std::vector<double>{0.1, std::nan("")}),
      hyperlag::NonFiniteInput);
  CHECK_THROWS_AS(project_simplex(std::vector<double>{
                      0.1, std::numeric_limits<double>::infinity()}),
                  hyperlag::NonFiniteInput);
}

TEST_CASE("uniform sampling") {
  std::mt19937_64 a(12), b(12), c(13);
  const auto xa = hyperlag::sample_uniform(6, a);
  const auto xb = hyperlag::sample_uniform(6, b);
  const auto xc = hyperlag::sample_uniform(6, c);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(xa[i] == xb[i]);
    CHECK(xa[i] > 0.0);
  }
  CHECK(inf_dist(xa.span(), xc.span()) > 0.0);

  std::mt19937_64 single(1);
  CHECK(hyperlag::sample_uniform(1, single)[0] == 1.0);
}

TEST_CASE("uniform sampling has uniform marginals") {
  std::mt19937_64 rng(77);
  double mean0 = 0.0;
  const int samples = 100000;
  for (int s = 0; s < samples; ++s) {
    mean0 += hyperlag::sample_uniform(3, rng)[0];
  }
  mean0 /= samples;
  CHECK(std::abs(mean0 - 1.0 / 3) < 0.01);
}

TEST_CASE("gradient map at known points") {
  {
    const auto g = hyperlag::gen_complete(3, 3);
    const WeightVector x(std::vector<double>(3, 1.0 / 3));
    const auto gm = hyperlag::gradient_map(g, x, 1.0);
    double norm = 0.0;
    for (double v : gm) norm += v * v;
    CHECK(std::sqrt(norm) <= 1e-12);
  }
  {
    const auto g = fixtures::toy_graph();
    std::vector<double> e1(12, 0.0);
    e1[0] = 1.0;
    const auto gm = hyperlag::gradient_map(g, WeightVector(e1), 1.0);
    for (double v : gm) CHECK(v == 0.0);
  }
  {
    const auto g = fixtures::toy_graph();
    const WeightVector x(std::vector<double>(12, 1.0 / 12));
    const auto gm = hyperlag::gradient_map(g, x, 1.0);
    double norm = 0.0;
    for (double v : gm) norm += v * v;
    CHECK(std::sqrt(norm) > 1e-6);
  }
  {
    const auto g = fixtures::toy_graph();
    const WeightVector x(std::vector<double>(12, 1.0 / 12));
    CHECK_THROWS_AS(hyperlag::gradient_map(g, x, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(hyperlag::gradient_map(g, x, -1.0),
                    std::invalid_argument);
  }
}

TEST_CASE("gradient map scaling inequalities") {
  // For 0 < s <= t: ||g^s|| <= ||g^t|| and ||g^s||/s >= ||g^t||/t.
  std::mt19937_64 rng(880);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = fixtures::random_small_graph(rng);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const auto x = hyperlag::sample_uniform(n, rng);
    double prev_norm = -1.0;
    double prev_scaled = std::numeric_limits<double>::infinity();
    for (double alpha : {0.01, 0.1, 1.0, 10.0, 100.0}) {
      const auto gm = hyperlag::gradient_map(g, x, alpha);
      double norm = 0.0;
      for (double v : gm) norm += v * v;
      norm = std::sqrt(norm);
      CHECK(norm >= prev_norm - 1e-12);
      CHECK(norm / alpha <= prev_scaled + 1e-12);
      prev_norm = norm;
      prev_scaled = norm / alpha;
    }
  }
}

TEST_CASE("weight vector validation") {
  CHECK_THROWS_AS(WeightVector(std::vector<double>{}),
                  hyperlag::InfeasiblePoint);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{0.6, 0.5}),
                  hyperlag::InfeasiblePoint);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{1.2, -0.2}),
                  hyperlag::InfeasiblePoint);
  CHECK_THROWS_AS(WeightVector(std::vector<double>{std::nan(""), 1.0}),
                  hyperlag::InfeasiblePoint);

  const WeightVector w(std::vector<double>{0.25, 0.75});
  CHECK(w.size() == 2);
  CHECK(w[0] == 0.25);
  CHECK(w[1] == 0.75);
  CHECK(w.vec().size() == 2);
  CHECK(w.span().size() == 2);
}
