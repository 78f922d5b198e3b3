#pragma once

// Exact Gibbs-ensemble thermodynamics over pure strategies.
//
// Every pure strategy s is weighted by exp(-beta H(s)) / Z. The partition
// function Z is the trace of the ordered product of step transfer matrices
//
//   M(t)(nu, mu) = exp(-beta (h(mu, t) - c(mu, nu))),
//
// so only the N^k strategies that hold exactly one criterion per step are
// counted. beta < 0 favours profitable strategies; beta -> -inf selects the
// clairvoyant optimum. Only ln Z is ever materialised.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ahpthermo/market.hpp"
#include "ahpthermo/matrix.hpp"
#include "ahpthermo/strategy.hpp"

namespace ahpthermo {

/// Transfer matrix of one step, stored as exp(log_scale) * scaled.
struct TransferMatrix {
  std::size_t step; // 0-based
  double log_scale;
  Matrix scaled; // entries in [0, 1], largest equal to 1

  double entry(std::size_t nu, std::size_t mu) const;
};

TransferMatrix transfer_matrix(std::size_t t, double beta, const ReturnSeries& h,
                               const CostMatrix& c);

/// Variant with the return field split evenly across both ends of each step,
/// h(nu, t-1) / 2 + h(mu, t) / 2, wrapping t-1 periodically. Same trace.
TransferMatrix symmetrized_transfer_matrix(std::size_t t, double beta, const ReturnSeries& h,
                                           const CostMatrix& c);

/// ln Z via the transfer-matrix product, accumulated in log space.
double partition_function(double beta, const ReturnSeries& h, const CostMatrix& c);
double partition_function_symmetrized(double beta, const ReturnSeries& h, const CostMatrix& c);

struct BruteForceOptions {
  std::uint64_t cap = 10'000'000;
  // Results are bit-stable for a fixed worker count; counts differ by ~1e-15.
  unsigned workers = 1;
};

/// ln Z by enumerating all N^k pure strategies. Throws EnumerationCapExceeded.
double brute_force_partition(double beta, const ReturnSeries& h, const CostMatrix& c,
                             const BruteForceOptions& options = {});

/// N^k, saturating at UINT64_MAX.
std::uint64_t strategy_count(std::size_t criteria, std::size_t steps) noexcept;

double gibbs_weight(const PureStrategy& s, double beta, const ReturnSeries& h,
                    const CostMatrix& c);

struct EnsembleObservables {
  double beta;
  double log_z;
  double expected_profit;
  double variance;
  double entropy;
  std::optional<double> temperature; // empty at beta == 0 (infinite temperature)

  /// T ln Z + E(H) - T S; empty at beta == 0.
  std::optional<double> identity_residual() const;
};

/// ln Z together with exact first and second beta-derivatives.
EnsembleObservables observables(double beta, const ReturnSeries& h, const CostMatrix& c);

std::vector<EnsembleObservables> temperature_scan(std::span<const double> betas,
                                                  const ReturnSeries& h, const CostMatrix& c);

} // namespace ahpthermo
