#include "ahpthermo/information.hpp"

#include <cmath>

#include "ahpthermo/errors.hpp"

namespace ahpthermo {

namespace {

constexpr double kProbabilityTolerance = 1e-9;

void validate_distribution(std::span<const double> p, double dx) {
  if (p.empty()) throw DomainError("probability vector is empty");
  if (!(dx > 0.0) || !std::isfinite(dx)) throw DomainError("dx must be positive");
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("probabilities must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance)
    throw DomainError("probabilities must sum to 1");
}

} // namespace

FisherReport strategy_fisher(const PureStrategy& s, std::size_t criteria) {
  for (std::size_t mu : s.choices())
    if (mu >= criteria) throw IndexError("strategy choice out of range");
  const std::size_t k = s.steps();
  FisherReport report{std::vector<double>(criteria, 0.0), 0.0};
  for (std::size_t mu = 0; mu < criteria; ++mu) {
    double info = 0.0;
    for (std::size_t t = 0; t < k; ++t) {
      const int now = s[t] == mu;
      const int next = s[(t + 1) % k] == mu;
      if (now == next) continue;
      const double diff = next - now;
      info += diff * diff / (next + now);
    }
    report.per_criterion[mu] = info;
    report.total += info;
  }
  return report;
}

DiscreteFisher discrete_fisher(std::span<const double> p, double dx) {
  validate_distribution(p, dx);
  double sum = 0.0;
  for (std::size_t mu = 0; mu + 1 < p.size(); ++mu) {
    const double diff = p[mu + 1] - p[mu];
    if (p[mu] == 0.0) {
      if (diff != 0.0) return FisherDivergence{mu};
      continue;
    }
    sum += diff * diff / p[mu];
  }
  return sum / dx;
}

double shannon_entropy(std::span<const double> p, double dx) {
  validate_distribution(p, dx);
  double s = 0.0;
  for (double v : p)
    if (v > 0.0) s -= v * std::log(v);
  return dx * s;
}

double cost_of_information(const FisherReport& report, double flat_cost) {
  if (!(flat_cost >= 0.0) || !std::isfinite(flat_cost))
    throw DomainError("flat cost must be nonnegative and finite");
  return flat_cost * report.total / 2.0;
}

} // namespace ahpthermo
