#include <doctest.h>

#include <random>

#include "ahpthermo/errors.hpp"
#include "ahpthermo/strategy.hpp"
#include "oracle.hpp"

using namespace ahpthermo;

namespace {

ReturnSeries returns_of(const oracle::Instance& in) { return ReturnSeries(Matrix::from_rows(in.h)); }
CostMatrix costs_of(const oracle::Instance& in) { return CostMatrix(Matrix::from_rows(in.c)); }

PureStrategy random_strategy(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> s(k);
  for (auto& x : s) x = rng() % n;
  return PureStrategy(s, n);
}

} // namespace

TEST_CASE("iverson encoding") {
  CHECK(iverson(PureStrategy({0, 0}, 2), 2).bits() == Matrix{{1, 1}, {0, 0}});
  CHECK(iverson(PureStrategy({0, 1}, 2), 2).bits() == Matrix{{1, 0}, {0, 1}});
  CHECK(iverson(PureStrategy({1}, 3), 3).bits() == Matrix{{0}, {1}, {0}});
  CHECK_THROWS_AS(PureStrategy({0, 2}, 2), IndexError);
  CHECK_THROWS_AS(PureStrategy({}, 2), DimensionError);
  CHECK_THROWS_AS(IversonField(Matrix{{1, 1}, {0, 1}}), DomainError);
}

TEST_CASE("spins") {
  const auto s = spins(iverson(PureStrategy({0}, 2), 2));
  CHECK(s(0, 0) == 0.5);
  CHECK(s(1, 0) == -0.5);
  CHECK_THROWS_AS(SpinField(Matrix{{0.5}, {0.5}}), DomainError);
}

TEST_CASE("profit on the reference instance") {
  const auto in = oracle::reference();
  const auto h = returns_of(in);
  const auto c = costs_of(in);
  CHECK(profit(PureStrategy({0, 0}, 2), h, c) == 3.0);
  CHECK(profit(PureStrategy({0, 1}, 2), h, c) == 4.0);
  CHECK(profit(PureStrategy({1, 0}, 2), h, c) == 4.0);
  CHECK(profit(PureStrategy({1, 1}, 2), h, c) == 7.0);
  CHECK(spin_profit(PureStrategy({0, 0}, 2), h, c) == doctest::Approx(3.0));
  CHECK(spin_profit(PureStrategy({0, 1}, 2), h, c) == doctest::Approx(4.0));

  const auto steps = profit_steps(PureStrategy({0, 1}, 2), h, c);
  CHECK(steps[0].field == 1.0);
  CHECK(steps[0].cost == 0.5);
  CHECK(steps[1].field == 4.0);

  CHECK_THROWS_AS(profit(PureStrategy({0, 1, 1}, 2), h, c), DimensionError);
  CHECK_THROWS_AS(profit(PureStrategy({0, 1}, 2), h, CostMatrix::uniform(3, 0.1)), DimensionError);
}

TEST_CASE("single step is its own periodic predecessor") {
  const ReturnSeries h(Matrix{{0.3}, {0.7}});
  const auto c = CostMatrix::uniform(2, 5.0);
  CHECK(profit(PureStrategy({1}, 2), h, c) == 0.7);
}

TEST_CASE("zero field and cost gives zero spin energy") {
  const ReturnSeries h(Matrix(3, 4));
  const auto c = CostMatrix::uniform(3, 0.0);
  CHECK(spin_profit(PureStrategy({0, 2, 1, 1}, 3), h, c) == doctest::Approx(0.0));
}

TEST_CASE("hamiltonian properties on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4, k = 1 + rng() % 6;
    const auto in = oracle::random_instance(rng, n, k, 2.0, 1.0);
    const auto h = returns_of(in);
    const auto c = costs_of(in);
    const auto s = random_strategy(rng, n, k);
    const double p = profit(s, h, c);

    CHECK(std::abs(p - oracle::path_profit(in, s.choices())) < 1e-12);
    CHECK(std::abs(spin_profit(s, h, c) - p) < 1e-12);

    // Constant strategies pay nothing.
    const std::size_t mu = rng() % n;
    double column_sum = 0.0;
    for (std::size_t t = 0; t < k; ++t) column_sum += in.h[mu][t];
    CHECK(profit(PureStrategy::constant(mu, k, n), h, c) == column_sum);

    // Uniform shift of all returns.
    const double delta = 0.37;
    Matrix shifted = h.values();
    for (std::size_t r = 0; r < n; ++r)
      for (double& v : shifted.row(r)) v += delta;
    CHECK(profit(s, ReturnSeries(shifted), c) ==
          doctest::Approx(p + static_cast<double>(k) * delta).epsilon(1e-12));

    // Cyclic rotation of time.
    Matrix rotated(n, k);
    std::vector<std::size_t> rotated_s(k);
    for (std::size_t t = 0; t < k; ++t) {
      for (std::size_t r = 0; r < n; ++r) rotated(r, t) = h(r, (t + 1) % k);
      rotated_s[t] = s[(t + 1) % k];
    }
    CHECK(profit(PureStrategy(rotated_s, n), ReturnSeries(rotated), c) ==
          doctest::Approx(p).epsilon(1e-12));

    // Zero costs separate over steps.
    double separable = 0.0;
    for (std::size_t t = 0; t < k; ++t) separable += h(s[t], t);
    CHECK(profit(s, h, CostMatrix::uniform(n, 0.0)) == doctest::Approx(separable).epsilon(1e-14));
  }
}
