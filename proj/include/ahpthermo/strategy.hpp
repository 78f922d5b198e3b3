#pragma once

// Pure strategies and the Ising-chain profit Hamiltonian.
//
// A pure strategy holds exactly one criterion per step. With the periodic
// boundary s_0 := s_k its profit is
//
//   H(s) = sum_t h(s_t, t) - sum_t c(s_t, s_{t-1}).

#include <cstddef>
#include <vector>

#include "ahpthermo/market.hpp"
#include "ahpthermo/matrix.hpp"

namespace ahpthermo {

/// Criterion choice per step, 0-based, k >= 1.
class PureStrategy {
public:
  PureStrategy(std::vector<std::size_t> choices, std::size_t criteria);

  /// Strategy that holds `mu` at all k steps.
  static PureStrategy constant(std::size_t mu, std::size_t steps, std::size_t criteria);

  std::size_t steps() const noexcept { return choices_.size(); }
  std::size_t criteria() const noexcept { return criteria_; }
  std::size_t operator[](std::size_t t) const noexcept { return choices_[t]; }
  const std::vector<std::size_t>& choices() const noexcept { return choices_; }

  /// Choice at the step before t under the periodic boundary.
  std::size_t previous(std::size_t t) const noexcept {
    return choices_[t == 0 ? choices_.size() - 1 : t - 1];
  }

  friend bool operator==(const PureStrategy&, const PureStrategy&) = default;

private:
  std::vector<std::size_t> choices_;
  std::size_t criteria_;
};

/// N x k 0/1 matrix with exactly one 1 per column.
class IversonField {
public:
  explicit IversonField(Matrix bits);
  std::size_t criteria() const noexcept { return bits_.rows(); }
  std::size_t steps() const noexcept { return bits_.cols(); }
  int operator()(std::size_t mu, std::size_t t) const noexcept {
    return static_cast<int>(bits_(mu, t));
  }
  const Matrix& bits() const noexcept { return bits_; }

private:
  Matrix bits_;
};

/// N x k matrix of +-1/2 with exactly one +1/2 per column.
class SpinField {
public:
  explicit SpinField(Matrix spins);
  std::size_t criteria() const noexcept { return spins_.rows(); }
  std::size_t steps() const noexcept { return spins_.cols(); }
  double operator()(std::size_t mu, std::size_t t) const noexcept { return spins_(mu, t); }
  const Matrix& values() const noexcept { return spins_; }

private:
  Matrix spins_;
};

IversonField iverson(const PureStrategy& s, std::size_t criteria);
SpinField spins(const IversonField& f);

/// Per-step breakdown of the profit: field gain h(s_t, t) and conversion cost.
struct ProfitStep {
  double field;
  double cost;
};

std::vector<ProfitStep> profit_steps(const PureStrategy& s, const ReturnSeries& h,
                                     const CostMatrix& c);

double profit(const PureStrategy& s, const ReturnSeries& h, const CostMatrix& c);

/// The same Hamiltonian evaluated through spins S = [n] - 1/2, constants
/// included. Agrees with profit() for any cost matrix, symmetric or not.
double spin_profit(const PureStrategy& s, const ReturnSeries& h, const CostMatrix& c);

/// Throws DimensionError unless s, h and c agree on N and k.
void check_dimensions(const PureStrategy& s, const ReturnSeries& h, const CostMatrix& c);
void check_dimensions(const ReturnSeries& h, const CostMatrix& c);

} // namespace ahpthermo
