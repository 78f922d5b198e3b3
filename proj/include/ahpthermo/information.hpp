#pragma once

// Fisher information of pure strategies and of discrete distributions.
//
// For a pure strategy every switch s_t != s_{t+1} toggles two criteria, and
// each toggle contributes exactly 1 to that criterion's information. Under a
// uniform conversion cost the total information is twice the number of paid
// conversions, which is how it prices a strategy.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "ahpthermo/strategy.hpp"

namespace ahpthermo {

struct FisherReport {
  std::vector<double> per_criterion;
  double total = 0.0;
};

/// Per-criterion toggle counts with periodic wrap (step k is followed by step 1).
FisherReport strategy_fisher(const PureStrategy& s, std::size_t criteria);

/// Marks a discrete Fisher information that diverges: some p(x_mu) is zero
/// while its successor is not.
struct FisherDivergence {
  std::size_t index; // first offending mu
};

using DiscreteFisher = std::variant<double, FisherDivergence>;

/// dx^-1 sum_mu (p_{mu+1} - p_mu)^2 / p_mu over adjacent pairs.
DiscreteFisher discrete_fisher(std::span<const double> p, double dx);

/// -dx sum p ln p, with 0 ln 0 = 0.
double shannon_entropy(std::span<const double> p, double dx);

/// Total switching cost under a uniform off-diagonal cost: flat_cost * I / 2.
double cost_of_information(const FisherReport& report, double flat_cost);

} // namespace ahpthermo
