#include <doctest.h>

#include <cmath>
#include <random>

#include "ahpthermo/ensemble.hpp"
#include "ahpthermo/errors.hpp"
#include "ahpthermo/tropical.hpp"
#include "oracle.hpp"

using namespace ahpthermo;

namespace {

ReturnSeries returns_of(const oracle::Instance& in) { return ReturnSeries(Matrix::from_rows(in.h)); }
CostMatrix costs_of(const oracle::Instance& in) { return CostMatrix(Matrix::from_rows(in.c)); }

const double e3 = std::exp(3.0), e4 = std::exp(4.0), e7 = std::exp(7.0);

} // namespace

TEST_CASE("transfer matrices") {
  const auto in = oracle::reference();
  const auto h = returns_of(in);
  const auto c = costs_of(in);

  const auto flat = transfer_matrix(0, 0.0, h, c);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(flat.entry(i, j) == 1.0);

  // beta = -1, step 2 (index 1), previous choice 1 -> current choice 2.
  CHECK(transfer_matrix(1, -1.0, h, c).entry(0, 1) == doctest::Approx(std::exp(3.5)));

  const ReturnSeries single(Matrix{{0.4, -0.2}});
  CHECK(transfer_matrix(1, 2.0, single, CostMatrix::uniform(1, 0.0)).entry(0, 0) ==
        doctest::Approx(std::exp(0.4)));

  // Scaled entries stay in [0, 1] even where the raw entries overflow.
  const auto huge = transfer_matrix(0, -1000.0, h, c);
  CHECK(huge.log_scale == doctest::Approx(3000.0));
  for (double v : huge.scaled.data()) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  CHECK_THROWS_AS(transfer_matrix(2, 0.0, h, c), IndexError);
}

TEST_CASE("partition function on the reference instance") {
  const auto in = oracle::reference();
  const auto h = returns_of(in);
  const auto c = costs_of(in);
  const double expected = std::log(e3 + 2 * e4 + e7);
  CHECK(partition_function(-1.0, h, c) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(brute_force_partition(-1.0, h, c) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(partition_function(0.0, h, c) == doctest::Approx(2 * std::log(2.0)).epsilon(1e-15));
  CHECK(brute_force_partition(0.0, h, c) == doctest::Approx(2 * std::log(2.0)).epsilon(1e-15));
  for (double beta : {-2.0, -1.0, -0.1, 0.0, 0.1, 1.0})
    CHECK(oracle::relative_gap(partition_function(beta, h, c), brute_force_partition(beta, h, c)) <=
          1e-10);
}

TEST_CASE("single criterion has one path") {
  const ReturnSeries h(Matrix{{0.5, -1.5, 0.25}});
  const auto c = CostMatrix::uniform(1, 0.0);
  for (double beta : {-3.0, 0.0, 2.0}) {
    CHECK(partition_function(beta, h, c) == doctest::Approx(-beta * -0.75));
    CHECK(brute_force_partition(beta, h, c) == doctest::Approx(-beta * -0.75));
    CHECK(gibbs_weight(PureStrategy({0, 0, 0}, 1), beta, h, c) == doctest::Approx(1.0));
    const auto obs = observables(beta, h, c);
    CHECK(obs.expected_profit == doctest::Approx(-0.75));
    CHECK(std::abs(obs.entropy) < 1e-14);
    CHECK(std::abs(obs.variance) < 1e-14);
  }
}

TEST_CASE("gibbs weights") {
  const auto in = oracle::reference();
  const auto h = returns_of(in);
  const auto c = costs_of(in);
  CHECK(gibbs_weight(PureStrategy({1, 1}, 2), -1.0, h, c) ==
        doctest::Approx(e7 / (e3 + 2 * e4 + e7)).epsilon(1e-13));
  CHECK(gibbs_weight(PureStrategy({0, 1}, 2), 0.0, h, c) == doctest::Approx(0.25));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 3, k = 1 + rng() % 4;
    const auto r = oracle::random_instance(rng, n, k);
    const double beta = std::uniform_real_distribution<double>(-5, 5)(rng);
    double total = 0.0;
    oracle::for_each_strategy(n, k, [&](const auto& s) {
      const double w = gibbs_weight(PureStrategy(s, n), beta, returns_of(r), costs_of(r));
      CHECK(w >= 0.0);
      total += w;
    });
    CHECK(std::abs(total - 1.0) <= 1e-10);
  }
}

TEST_CASE("observables on the reference instance") {
  const auto in = oracle::reference();
  const auto h = returns_of(in);
  const auto c = costs_of(in);
  const auto obs = observables(-1.0, h, c);
  const double z = e3 + 2 * e4 + e7;
  CHECK(obs.log_z == doctest::Approx(std::log(z)).epsilon(1e-14));
  CHECK(obs.expected_profit == doctest::Approx((3 * e3 + 8 * e4 + 7 * e7) / z).epsilon(1e-14));
  CHECK(obs.variance == doctest::Approx(0.95307882929289238618).epsilon(1e-12));
  CHECK(obs.entropy == doctest::Approx(0.44419916884554851605).epsilon(1e-12));
  CHECK(obs.temperature == -1.0);
  CHECK(std::abs(*obs.identity_residual()) < 1e-12);

  const auto hot = observables(0.0, h, c);
  CHECK_FALSE(hot.temperature.has_value());
  CHECK_FALSE(hot.identity_residual().has_value());
  CHECK(hot.entropy == doctest::Approx(2 * std::log(2.0)).epsilon(1e-14));
  CHECK(hot.expected_profit == doctest::Approx((3.0 + 4 + 4 + 7) / 4));
}

TEST_CASE("ensemble matches enumeration on random instances") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4, k = 1 + rng() % 6;
    const auto in = oracle::random_instance(rng, n, k);
    const auto h = returns_of(in);
    const auto c = costs_of(in);
    for (double beta : {-5.0, -1.0, -0.1, 0.0, 0.1, 1.0, 5.0}) {
      const auto ref = oracle::gibbs(in, beta);
      const auto obs = observables(beta, h, c);
      CHECK(oracle::relative_gap(partition_function(beta, h, c), ref.log_z) <= 1e-10);
      CHECK(oracle::relative_gap(partition_function_symmetrized(beta, h, c), ref.log_z) <= 1e-10);
      CHECK(oracle::relative_gap(obs.log_z, ref.log_z) <= 1e-10);
      CHECK(oracle::relative_gap(obs.expected_profit, ref.mean) <= 1e-10);
      CHECK(std::abs(obs.entropy - ref.entropy) <= 1e-10);
      CHECK(obs.variance >= 0.0);
      CHECK(std::abs(obs.variance - ref.variance) <= 1e-8 * ref.variance + 1e-300);
      CHECK(obs.entropy >= 0.0);
      CHECK(obs.entropy <= static_cast<double>(k) * std::log(static_cast<double>(n)) + 1e-9);
    }
  }
}

TEST_CASE("brute force refuses above the cap and merges deterministically") {
  std::mt19937_64 rng(8);
  const auto in = oracle::random_instance(rng, 4, 6);
  const auto h = returns_of(in);
  const auto c = costs_of(in);
  CHECK_THROWS_AS(brute_force_partition(1.0, h, c, {100, 1}), EnumerationCapExceeded);
  CHECK(strategy_count(4, 6) == 4096);
  CHECK(strategy_count(10, 40) == UINT64_MAX);

  const double serial = brute_force_partition(-2.0, h, c, {10'000'000, 1});
  for (unsigned workers : {2u, 3u, 7u}) {
    const double parallel = brute_force_partition(-2.0, h, c, {10'000'000, workers});
    CHECK(std::abs(parallel - serial) <= 1e-12 * std::abs(serial));
    CHECK(parallel == brute_force_partition(-2.0, h, c, {10'000'000, workers}));
  }
}

TEST_CASE("temperature law and zero-temperature limit") {
  const auto in = oracle::reference();
  const auto h = returns_of(in);
  const auto c = costs_of(in);

  // dE/dS -> 1/beta as the spacing shrinks, at least first order.
  double previous_error = 1.0;
  for (double spacing : {1e-1, 1e-2, 1e-3}) {
    const std::vector<double> grid{-1.0 - spacing / 2, -1.0 + spacing / 2};
    const auto obs = temperature_scan(grid, h, c);
    const double slope = (obs[1].expected_profit - obs[0].expected_profit) /
                         (obs[1].entropy - obs[0].entropy);
    const double error = std::abs(slope - (-1.0));
    CHECK(error <= previous_error);
    previous_error = error;
  }
  CHECK(previous_error <= 1e-3);

  const auto cold = observables(-50.0, h, c);
  CHECK(std::abs(-*cold.temperature * cold.log_z - 7.0) <= 0.01);
  CHECK(std::abs(-partition_function(-50.0, h, c) / -50.0 - max_profit(h, c)) <= 0.01);

  const ReturnSeries single(Matrix{{0.1, 0.2}});
  const std::vector<double> grid{-3.0, -1.0, 1.0, 2.0};
  for (const auto& o : temperature_scan(grid, single, CostMatrix::uniform(1, 0.0)))
    CHECK(o.expected_profit == doctest::Approx(0.3));
}

TEST_CASE("extreme beta stays finite") {
  std::mt19937_64 rng(12);
  const auto in = oracle::random_instance(rng, 3, 5, 3.0, 1.0);
  const auto h = returns_of(in);
  const auto c = costs_of(in);
  for (double beta : {-1e4, 1e4}) {
    const auto obs = observables(beta, h, c);
    CHECK(std::isfinite(obs.log_z));
    CHECK(std::isfinite(obs.expected_profit));
    CHECK(obs.entropy >= 0.0);
    CHECK(oracle::relative_gap(obs.log_z, brute_force_partition(beta, h, c)) <= 1e-10);
  }
  CHECK_THROWS_AS(observables(NAN, h, c), DomainError);
}
