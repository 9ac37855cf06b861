#include <doctest.h>

#include <cmath>
#include <vector>

#include "decomp/divergence.hpp"
#include "decomp/panjer.hpp"
#include "decomp/simulate.hpp"

using namespace decomp;

namespace {

double tv_against_forward(const IncrementData& data, double lambda, const BaseDistribution& p) {
  const CompoundPmf q = panjer_forward_adaptive(lambda, p);
  std::vector<double> emp(q.size(), 0.0);
  double beyond = 0.0;
  for (const auto& r : data.records()) {
    if (static_cast<std::size_t>(r.z) < emp.size()) {
      emp[static_cast<std::size_t>(r.z)] += 1.0;
    } else {
      beyond += 1.0;
    }
  }
  const double n = static_cast<double>(data.size());
  for (double& e : emp) e /= n;
  beyond /= n;
  return 0.5 * (l1_distance(emp, q.probs()) + std::fabs(beyond - q.tail_mass()));
}

}  // namespace

TEST_CASE("vanishing intensity produces all zeros") {
  const BaseDistribution unit(std::vector<double>{1.0});
  const auto deltas = uniform_grid(1000, 1.0);
  const IncrementData data = simulate_increments(1e-9, unit, deltas, 1);
  CHECK(data.max_z() == 0);
}

TEST_CASE("Wald identity: sample mean close to lambda * E[Y]") {
  std::vector<double> w(6, 0.0);
  w[0] = w[3] = w[5] = 1.0;
  const BaseDistribution p = BaseDistribution::normalized(w);
  const auto deltas = uniform_grid(1000000, 1.0);
  const IncrementData data = simulate_increments(2.0, p, deltas, 2);
  double mean = 0.0;
  for (const auto& r : data.records()) mean += static_cast<double>(r.z);
  mean /= static_cast<double>(data.size());
  CHECK(std::fabs(mean - 2.0 * 11.0 / 3.0) / (2.0 * 11.0 / 3.0) < 0.01);
}

TEST_CASE("increment marginals match the forward recursion (TV < 0.01 at 1e6)") {
  const Preset uniform = make_preset("uniform146_b", 5);
  const BaseDistribution p_unif = uniform.truth.base_distribution();
  const auto deltas = uniform_grid(1000000, 1.0);
  CHECK(tv_against_forward(simulate_increments(2.0, p_unif, deltas, 3), 2.0, p_unif) < 0.01);

  const Preset geo = make_preset("geometric", 5, 1.0 / 3.0);
  const BaseDistribution p_geo = geo.truth.base_distribution();
  const double lambda_geo = geo.truth.total_mass();
  CHECK(tv_against_forward(simulate_increments(lambda_geo, p_geo, deltas, 4), lambda_geo, p_geo) <
        0.01);
}

TEST_CASE("preset ground truths") {
  const Preset a = make_preset("uniform146_a", 1);
  CHECK(a.data.size() == 100);
  CHECK(a.lambda0 == doctest::Approx(2.0));
  REQUIRE(a.truth.size() == 6);
  CHECK(a.truth.value(1) == doctest::Approx(2.0 / 3.0));
  CHECK(a.truth.value(4) == doctest::Approx(2.0 / 3.0));
  CHECK(a.truth.value(6) == doctest::Approx(2.0 / 3.0));
  CHECK(a.truth.value(2) == 0.0);

  const Preset b = make_preset("uniform146_b", 1);
  CHECK(b.data.size() == 500);
  // same per-increment streams: (b) extends (a) under a common seed
  for (std::size_t i = 0; i < 100; ++i) CHECK(a.data.z(i) == b.data.z(i));

  const Preset c = make_preset("uniform146_c", 1);
  CHECK(c.data.size() == 500);
  CHECK_FALSE(c.data.equidistant());
  double mean_delta = 0.0;
  for (const auto& r : c.data.records()) {
    CHECK(r.delta > 0.0);
    CHECK(r.delta < 2.0);
    mean_delta += r.delta;
  }
  CHECK(std::fabs(mean_delta / 500.0 - 1.0) < 0.15);

  const Preset g3 = make_preset("geometric", 1, 1.0 / 3.0);
  CHECK(g3.lambda0 == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(g3.truth.value(1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(g3.truth.value(2) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
  CHECK(g3.truth.value(3) == doctest::Approx(8.0 / 81.0).epsilon(1e-12));
  CHECK(g3.truth.total_mass() == doctest::Approx(std::log(3.0)).epsilon(1e-9));

  const Preset g6 = make_preset("geometric", 1, 1.0 / 6.0);
  CHECK(g6.lambda0 == doctest::Approx(std::log(6.0)).epsilon(1e-12));

  CHECK_THROWS_AS(make_preset("unknown", 1), Error);
}

TEST_CASE("grids") {
  const auto u = uniform_grid(100, 1.0);
  CHECK(u.size() == 100);
  for (double d : u) CHECK(d == 1.0);

  const auto r = random_uniform_grid(5000, 0.0, 2.0, 9);
  double mean = 0.0;
  for (double d : r) {
    CHECK(d > 0.0);
    CHECK(d < 2.0);
    mean += d;
  }
  CHECK(std::fabs(mean / 5000.0 - 1.0) < 0.05);

  CHECK_THROWS_AS(random_uniform_grid(10, 1.0, 1.0, 1), Error);
  CHECK_THROWS_AS(uniform_grid(0, 1.0), Error);
}
