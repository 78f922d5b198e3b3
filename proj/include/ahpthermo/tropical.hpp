#pragma once

// (max,+) algebra over step matrices and the clairvoyant optimum.
//
// The step matrix of step t has entry (nu, mu) = h(mu, t) - c(mu, nu): the
// gain of moving from nu (held before) to mu (held after). A tropical product
// accumulates the best path value between its end states, so the largest
// diagonal entry of the k-fold product is the maximal periodic profit.

#include <cstddef>
#include <limits>
#include <vector>

#include "ahpthermo/market.hpp"
#include "ahpthermo/matrix.hpp"
#include "ahpthermo/strategy.hpp"

namespace ahpthermo {

/// Stand-in for -infinity (the tropical zero). Any sum touching a value at or
/// below this threshold stays pinned at it.
inline constexpr double kTropicalZero = -std::numeric_limits<double>::max() / 4;

class TropicalMatrix {
public:
  explicit TropicalMatrix(Matrix entries);

  /// 0 on the diagonal, kTropicalZero elsewhere.
  static TropicalMatrix identity(std::size_t n);

  /// Step matrix of step t (0-based).
  static TropicalMatrix step(std::size_t t, const ReturnSeries& h, const CostMatrix& c);

  std::size_t size() const noexcept { return entries_.rows(); }
  double operator()(std::size_t r, std::size_t c) const noexcept { return entries_(r, c); }
  const Matrix& entries() const noexcept { return entries_; }

private:
  Matrix entries_;
};

/// (a x b)(nu, theta) = max_mu a(nu, mu) + b(mu, theta).
TropicalMatrix tropical_product(const TropicalMatrix& a, const TropicalMatrix& b);

/// Largest periodic profit, read off the diagonal of the full product.
double max_profit(const ReturnSeries& h, const CostMatrix& c);

struct ClairvoyantResult {
  double max_profit;
  PureStrategy strategy;
  // decision_table[t][nu]: smallest optimal choice at step t given choice nu
  // at step t-1, for the selected closure state. Row 0 is indexed by that
  // closure state (the periodic predecessor of step 0).
  std::vector<std::vector<std::size_t>> decision_table;
};

/// Maximal profit and the lexicographically smallest strategy attaining it.
ClairvoyantResult clairvoyant(const ReturnSeries& h, const CostMatrix& c);

} // namespace ahpthermo
