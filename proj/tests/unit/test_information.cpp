#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ahpthermo/errors.hpp"
#include "ahpthermo/information.hpp"

using namespace ahpthermo;

TEST_CASE("strategy fisher information") {
  const auto constant = strategy_fisher(PureStrategy({1, 1, 1}, 3), 3);
  CHECK(constant.total == 0.0);
  for (double v : constant.per_criterion) CHECK(v == 0.0);

  const auto pair = strategy_fisher(PureStrategy({0, 1}, 2), 2);
  CHECK(pair.per_criterion == std::vector<double>{2, 2});
  CHECK(pair.total == 4.0);

  const auto cycle = strategy_fisher(PureStrategy({0, 1, 2}, 3), 3);
  CHECK(cycle.per_criterion == std::vector<double>{2, 2, 2});
  CHECK(cycle.total == 6.0);

  // Criteria that are never held contribute nothing.
  const auto wide = strategy_fisher(PureStrategy({0, 1}, 2), 4);
  CHECK(wide.per_criterion == std::vector<double>{2, 2, 0, 0});
  CHECK_THROWS_AS(strategy_fisher(PureStrategy({0, 3}, 4), 2), IndexError);
}

TEST_CASE("strategy fisher properties") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 5, k = 1 + rng() % 9;
    std::vector<std::size_t> s(k);
    for (auto& x : s) x = rng() % n;
    const auto report = strategy_fisher(PureStrategy(s, n), n);

    double sum = 0.0;
    for (double v : report.per_criterion) {
      CHECK(v >= 0.0);
      CHECK(v == std::floor(v));
      sum += v;
    }
    CHECK(report.total == sum);
    CHECK(std::fmod(report.total, 2.0) == 0.0);

    std::size_t switches = 0;
    for (std::size_t t = 0; t < k; ++t) switches += s[t] != s[(t + 1) % k];
    CHECK(report.total == 2.0 * static_cast<double>(switches));
    const bool constant = std::all_of(s.begin(), s.end(), [&](auto x) { return x == s[0]; });
    CHECK((report.total == 0.0) == constant);

    std::vector<std::size_t> reversed(s.rbegin(), s.rend());
    CHECK(strategy_fisher(PureStrategy(reversed, n), n).per_criterion == report.per_criterion);

    // The empirical choice distribution is blind to time order.
    std::vector<double> counts(n, 0.0);
    for (auto x : s) counts[x] += 1.0 / static_cast<double>(k);
    auto shuffled = s;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<double> shuffled_counts(n, 0.0);
    for (auto x : shuffled) shuffled_counts[x] += 1.0 / static_cast<double>(k);
    CHECK(shannon_entropy(counts, 1.0) == doctest::Approx(shannon_entropy(shuffled_counts, 1.0)));
  }
}

TEST_CASE("discrete fisher information") {
  const std::vector<double> uniform{0.5, 0.5};
  CHECK(std::get<double>(discrete_fisher(uniform, 1.0)) == 0.0);
  const std::vector<double> skewed{0.25, 0.75};
  CHECK(std::get<double>(discrete_fisher(skewed, 1.0)) == doctest::Approx(1.0));
  CHECK(std::get<double>(discrete_fisher(skewed, 0.5)) == doctest::Approx(2.0));

  const std::vector<double> edge{0.0, 1.0};
  const auto diverges = discrete_fisher(edge, 1.0);
  REQUIRE(std::holds_alternative<FisherDivergence>(diverges));
  CHECK(std::get<FisherDivergence>(diverges).index == 0);

  // A zero followed by a zero is a 0/0 term and contributes nothing.
  const std::vector<double> flat_zero{0.0, 0.0, 1.0};
  CHECK(std::holds_alternative<FisherDivergence>(discrete_fisher(flat_zero, 1.0)));
  const std::vector<double> trailing_zero{0.5, 0.5, 0.0};
  CHECK(std::get<double>(discrete_fisher(trailing_zero, 1.0)) == doctest::Approx(0.5));

  const std::vector<double> bad{0.3, 0.3};
  CHECK_THROWS_AS(discrete_fisher(bad, 1.0), DomainError);
  const std::vector<double> negative{-0.5, 1.5};
  CHECK_THROWS_AS(discrete_fisher(negative, 1.0), DomainError);
  CHECK_THROWS_AS(discrete_fisher(uniform, 0.0), DomainError);
}

TEST_CASE("shannon entropy") {
  const std::vector<double> degenerate{1.0, 0.0, 0.0};
  CHECK(shannon_entropy(degenerate, 1.0) == 0.0);
  for (std::size_t m : {1u, 2u, 5u, 17u}) {
    const std::vector<double> p(m, 1.0 / static_cast<double>(m));
    CHECK(shannon_entropy(p, 1.0) == doctest::Approx(std::log(static_cast<double>(m))));
  }
  std::vector<double> p{0.1, 0.2, 0.3, 0.4};
  const double s = shannon_entropy(p, 1.0);
  std::reverse(p.begin(), p.end());
  CHECK(shannon_entropy(p, 1.0) == doctest::Approx(s).epsilon(1e-15));
  const std::vector<double> bad{0.5, 0.6};
  CHECK_THROWS_AS(shannon_entropy(bad, 1.0), DomainError);
}

TEST_CASE("cost of information") {
  CHECK(cost_of_information(strategy_fisher(PureStrategy({2, 2}, 3), 3), 0.7) == 0.0);
  CHECK(cost_of_information(strategy_fisher(PureStrategy({0, 1}, 2), 2), 0.5) == 1.0);
  CHECK(cost_of_information(strategy_fisher(PureStrategy({0, 1, 2}, 3), 3), 0.0) == 0.0);
  CHECK_THROWS_AS(cost_of_information(FisherReport{{2, 2}, 4}, -1.0), DomainError);

  // Matches the Hamiltonian's cost term under a uniform cost matrix.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> flat(0.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4, k = 1 + rng() % 7;
    std::vector<std::size_t> choices(k);
    for (auto& x : choices) x = rng() % n;
    const PureStrategy s(choices, n);
    const double cost = flat(rng);
    const ReturnSeries zero(Matrix(n, k));
    const double paid = -profit(s, zero, CostMatrix::uniform(n, cost));
    CHECK(std::abs(cost_of_information(strategy_fisher(s, n), cost) - paid) <= 1e-12);
  }
}
