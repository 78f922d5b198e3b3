#pragma once

// Market-rate / judgment matrices and the log-rate bookkeeping built on them.
//
// A judgment matrix u holds u(nu, mu) = price of one unit of good mu quoted in
// units of good nu. Its logarithm splits uniquely into an antisymmetric part
// (the consistent exchange rates) and a symmetric part (the commission):
//
//   ln u(nu, mu) = a(nu, mu) + eps(nu, mu),   a = -a^T,   eps = eps^T.
//
// A reciprocal matrix (u(mu, nu) = 1 / u(nu, mu)) has zero commission. A
// genuine bid/ask spread gives eps < 0; the Hamiltonian consumes the opposite
// sign through CostMatrix.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ahpthermo/matrix.hpp"

namespace ahpthermo {

/// Square matrix of strictly positive rates with unit diagonal.
///
/// Diagonal entries within 1e-9 of one are accepted and snapped to exactly 1.
class JudgmentMatrix {
public:
  static constexpr double kDiagonalTolerance = 1e-9;

  explicit JudgmentMatrix(Matrix rates);

  std::size_t size() const noexcept { return rates_.rows(); }
  double operator()(std::size_t nu, std::size_t mu) const noexcept { return rates_(nu, mu); }
  const Matrix& rates() const noexcept { return rates_; }

  /// u(nu, mu) = w(nu) / w(mu); transitive by construction.
  static JudgmentMatrix consistent(std::span<const double> weights);

private:
  Matrix rates_;
};

/// Quantities of each good; negative coordinates are obligations.
struct Basket {
  std::vector<double> coordinates;
};

struct CommissionDecomposition {
  Matrix skew;       // a(nu, mu), antisymmetric
  Matrix commission; // eps(nu, mu), symmetric
};

/// Cost charged by the profit Hamiltonian: entry (mu, nu) is paid when the
/// criterion held at t-1 is nu and the criterion held at t is mu.
class CostMatrix {
public:
  static constexpr double kDiagonalTolerance = 1e-9;

  CostMatrix() = default;
  explicit CostMatrix(Matrix costs);

  /// Same cost for every off-diagonal conversion.
  static CostMatrix uniform(std::size_t n, double cost);

  std::size_t size() const noexcept { return costs_.rows(); }
  double operator()(std::size_t to, std::size_t from) const noexcept { return costs_(to, from); }
  const Matrix& costs() const noexcept { return costs_; }

  /// The shared off-diagonal entry, if every off-diagonal entry is equal.
  std::optional<double> uniform_value() const noexcept;

private:
  Matrix costs_;
};

/// Prices of N criteria in a fixed numeraire at times 0..k (N x (k+1)).
class QuotationHistory {
public:
  explicit QuotationHistory(Matrix quotes);

  std::size_t criteria() const noexcept { return quotes_.rows(); }
  std::size_t steps() const noexcept { return quotes_.cols() - 1; }
  double operator()(std::size_t mu, std::size_t t) const noexcept { return quotes_(mu, t); }
  const Matrix& quotes() const noexcept { return quotes_; }

private:
  Matrix quotes_;
};

/// Log returns h(mu, t) for N criteria over k steps. Column t (0-based) is the
/// interval ending at time t + 1.
class ReturnSeries {
public:
  explicit ReturnSeries(Matrix returns);

  std::size_t criteria() const noexcept { return h_.rows(); }
  std::size_t steps() const noexcept { return h_.cols(); }
  double operator()(std::size_t mu, std::size_t t) const noexcept { return h_(mu, t); }
  const Matrix& values() const noexcept { return h_; }

private:
  Matrix h_;
};

/// (ln bid - ln ask) / 2. Throws DomainError unless both prices are positive.
double commission_from_bid_ask(double bid, double ask);

CommissionDecomposition decompose(const JudgmentMatrix& u);

/// Negated commission, so that a round-trip loss is a positive cost.
CostMatrix cost_matrix(const CommissionDecomposition& d);

/// ln(u(nu, rho) u(rho, mu) / u(nu, mu)); zero iff the triple is transitive.
double transitivity_deviation(const JudgmentMatrix& u, std::size_t nu, std::size_t rho,
                              std::size_t mu);

ReturnSeries log_returns(const QuotationHistory& q);

/// Value of basket p in units of good nu.
double value_basket(const JudgmentMatrix& u, const Basket& p, std::size_t nu);

/// Row geometric means normalised to sum to one.
std::vector<double> priority_vector(const JudgmentMatrix& u);

} // namespace ahpthermo
