#include "ahpthermo/strategy.hpp"

#include <string>

#include "ahpthermo/errors.hpp"

namespace ahpthermo {

PureStrategy::PureStrategy(std::vector<std::size_t> choices, std::size_t criteria)
    : choices_(std::move(choices)), criteria_(criteria) {
  if (choices_.empty()) throw DimensionError("strategy needs at least one step");
  if (criteria_ == 0) throw DimensionError("strategy needs at least one criterion");
  for (std::size_t t = 0; t < choices_.size(); ++t)
    if (choices_[t] >= criteria_)
      throw IndexError("choice " + std::to_string(choices_[t]) + " at step " +
                       std::to_string(t) + " out of range for N=" + std::to_string(criteria_));
}

PureStrategy PureStrategy::constant(std::size_t mu, std::size_t steps, std::size_t criteria) {
  return PureStrategy(std::vector<std::size_t>(steps, mu), criteria);
}

IversonField::IversonField(Matrix bits) : bits_(std::move(bits)) {
  for (std::size_t t = 0; t < bits_.cols(); ++t) {
    int ones = 0;
    for (std::size_t mu = 0; mu < bits_.rows(); ++mu) {
      const double b = bits_(mu, t);
      if (b != 0.0 && b != 1.0) throw DomainError("Iverson field entries must be 0 or 1");
      ones += b == 1.0;
    }
    if (ones != 1) throw DomainError("each step must select exactly one criterion");
  }
}

SpinField::SpinField(Matrix spins) : spins_(std::move(spins)) {
  for (std::size_t t = 0; t < spins_.cols(); ++t) {
    int up = 0;
    for (std::size_t mu = 0; mu < spins_.rows(); ++mu) {
      const double v = spins_(mu, t);
      if (v != 0.5 && v != -0.5) throw DomainError("spin entries must be +-1/2");
      up += v == 0.5;
    }
    if (up != 1) throw DomainError("each step must have exactly one up spin");
  }
}

IversonField iverson(const PureStrategy& s, std::size_t criteria) {
  for (std::size_t mu : s.choices())
    if (mu >= criteria) throw IndexError("strategy choice out of range for N=" + std::to_string(criteria));
  Matrix bits(criteria, s.steps());
  for (std::size_t t = 0; t < s.steps(); ++t) bits(s[t], t) = 1.0;
  return IversonField(std::move(bits));
}

SpinField spins(const IversonField& f) {
  Matrix out(f.criteria(), f.steps());
  for (std::size_t mu = 0; mu < f.criteria(); ++mu)
    for (std::size_t t = 0; t < f.steps(); ++t) out(mu, t) = f(mu, t) - 0.5;
  return SpinField(std::move(out));
}

void check_dimensions(const ReturnSeries& h, const CostMatrix& c) {
  if (c.size() != h.criteria())
    throw DimensionError("cost matrix is " + std::to_string(c.size()) + "x" +
                         std::to_string(c.size()) + " but returns cover " +
                         std::to_string(h.criteria()) + " criteria");
}

void check_dimensions(const PureStrategy& s, const ReturnSeries& h, const CostMatrix& c) {
  check_dimensions(h, c);
  if (s.steps() != h.steps())
    throw DimensionError("strategy has " + std::to_string(s.steps()) + " steps, returns have " +
                         std::to_string(h.steps()));
  if (s.criteria() > h.criteria())
    throw DimensionError("strategy refers to more criteria than the returns cover");
}

std::vector<ProfitStep> profit_steps(const PureStrategy& s, const ReturnSeries& h,
                                     const CostMatrix& c) {
  check_dimensions(s, h, c);
  std::vector<ProfitStep> out(s.steps());
  for (std::size_t t = 0; t < s.steps(); ++t) out[t] = {h(s[t], t), c(s[t], s.previous(t))};
  return out;
}

double profit(const PureStrategy& s, const ReturnSeries& h, const CostMatrix& c) {
  double total = 0.0;
  for (const auto& step : profit_steps(s, h, c)) total += step.field - step.cost;
  return total;
}

double spin_profit(const PureStrategy& s, const ReturnSeries& h, const CostMatrix& c) {
  check_dimensions(s, h, c);
  const std::size_t n = h.criteria();
  const std::size_t k = h.steps();
  const SpinField spin = spins(iverson(s, n));

  // [n_mu,t] = S_mu,t + 1/2 expands the pair term c(mu,nu)[n_nu,t-1][n_mu,t] into
  // a coupling, two half-weighted single-spin fields and a quarter constant.
  double field = 0.0, constant = 0.0, coupling = 0.0, linear = 0.0;
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t tp = t == 0 ? k - 1 : t - 1;
    for (std::size_t mu = 0; mu < n; ++mu) {
      field += h(mu, t) * spin(mu, t);
      constant += 0.5 * h(mu, t);
      for (std::size_t nu = 0; nu < n; ++nu) {
        const double cost = c(mu, nu);
        coupling += cost * spin(nu, tp) * spin(mu, t);
        linear += 0.5 * cost * (spin(mu, t) + spin(nu, tp));
        constant -= 0.25 * cost;
      }
    }
  }
  return field - linear - coupling + constant;
}

} // namespace ahpthermo
