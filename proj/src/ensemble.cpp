#include "ahpthermo/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <thread>

#include "ahpthermo/errors.hpp"

namespace ahpthermo {

namespace {

void require_finite_beta(double beta) {
  if (!std::isfinite(beta)) throw DomainError("beta must be finite");
}

void require_step(std::size_t t, const ReturnSeries& h) {
  if (t >= h.steps()) throw IndexError("step " + std::to_string(t) + " out of range");
}

// Exponentiates relative to the largest exponent.
TransferMatrix scale(std::size_t t, Matrix exponents) {
  double top = -std::numeric_limits<double>::infinity();
  for (double x : exponents.data()) top = std::max(top, x);
  for (std::size_t r = 0; r < exponents.rows(); ++r)
    for (double& x : exponents.row(r)) x = std::exp(x - top);
  return {t, top, std::move(exponents)};
}

double log_sum_exp(std::span<const double> xs) {
  double top = -std::numeric_limits<double>::infinity();
  for (double x : xs) top = std::max(top, x);
  double sum = 0.0;
  for (double x : xs) sum += std::exp(x - top);
  return top + std::log(sum);
}

// ln tr of a product of matrices given entrywise as logs.
template <class StepFn>
double log_trace_product(std::size_t steps, StepFn&& exponents) {
  Matrix acc = exponents(0);
  const std::size_t n = acc.rows();
  for (std::size_t t = 1; t < steps; ++t) {
    const Matrix x = exponents(t);
    Matrix next(n, n);
    std::vector<double> terms(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t b = 0; b < n; ++b) terms[b] = acc(a, b) + x(b, c);
        next(a, c) = log_sum_exp(terms);
      }
    acc = std::move(next);
  }
  std::vector<double> diagonal(n);
  for (std::size_t a = 0; a < n; ++a) diagonal[a] = acc(a, a);
  return log_sum_exp(diagonal);
}

// Running-maximum accumulator for ln sum exp(x).
struct LogSumExp {
  double max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;

  void add(double x) {
    if (x <= max) {
      sum += std::exp(x - max);
    } else {
      sum = sum * std::exp(max - x) + 1.0;
      max = x;
    }
  }
  void merge(const LogSumExp& o) {
    if (o.sum == 0.0) return;
    if (sum == 0.0) {
      *this = o;
    } else if (o.max <= max) {
      sum += o.sum * std::exp(o.max - max);
    } else {
      sum = sum * std::exp(max - o.max) + o.sum;
      max = o.max;
    }
  }
  double value() const { return max + std::log(sum); }
};

// Profit of the strategy with mixed-radix code `index` (step 0 least significant).
double profit_of_index(std::uint64_t index, const ReturnSeries& h, const CostMatrix& c,
                       std::vector<std::size_t>& scratch) {
  const std::size_t n = h.criteria();
  for (auto& s : scratch) {
    s = static_cast<std::size_t>(index % n);
    index /= n;
  }
  const std::size_t k = scratch.size();
  double total = 0.0;
  for (std::size_t t = 0; t < k; ++t)
    total += h(scratch[t], t) - c(scratch[t], scratch[t == 0 ? k - 1 : t - 1]);
  return total;
}

// Paths between two fixed endpoints, summarized by ln of their total
// weight and the profit mean, profit variance and entropy under the
// normalized weights.
struct PathMoments {
  double log_weight, mean, variance, entropy;
};

using MomentMatrix = std::vector<PathMoments>;

// Merges alternatives with the given log weights and summaries.
PathMoments mix(std::span<const PathMoments> parts) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& p : parts) top = std::max(top, p.log_weight);
  double sum = 0.0;
  for (const auto& p : parts) sum += std::exp(p.log_weight - top);
  PathMoments out{top + std::log(sum), 0.0, 0.0, 0.0};
  for (const auto& p : parts) {
    const double w = std::exp(p.log_weight - top) / sum;
    out.mean += w * p.mean;
  }
  for (const auto& p : parts) {
    const double w = std::exp(p.log_weight - top) / sum;
    if (w == 0.0) continue;
    const double spread = p.mean - out.mean;
    out.variance += w * (p.variance + spread * spread);
    out.entropy += w * (p.entropy - std::log(w));
  }
  return out;
}

} // namespace

double TransferMatrix::entry(std::size_t nu, std::size_t mu) const {
  return std::exp(log_scale) * scaled(nu, mu);
}

namespace {

Matrix exponents(std::size_t t, double beta, const ReturnSeries& h, const CostMatrix& c) {
  const std::size_t n = h.criteria();
  Matrix x(n, n);
  for (std::size_t nu = 0; nu < n; ++nu)
    for (std::size_t mu = 0; mu < n; ++mu) x(nu, mu) = -beta * (h(mu, t) - c(mu, nu));
  return x;
}

Matrix symmetrized_exponents(std::size_t t, double beta, const ReturnSeries& h,
                             const CostMatrix& c) {
  const std::size_t n = h.criteria();
  const std::size_t tp = t == 0 ? h.steps() - 1 : t - 1;
  Matrix x(n, n);
  for (std::size_t nu = 0; nu < n; ++nu)
    for (std::size_t mu = 0; mu < n; ++mu)
      x(nu, mu) = -beta * (0.5 * h(mu, t) + 0.5 * h(nu, tp) - c(mu, nu));
  return x;
}

} // namespace

TransferMatrix transfer_matrix(std::size_t t, double beta, const ReturnSeries& h,
                               const CostMatrix& c) {
  check_dimensions(h, c);
  require_step(t, h);
  require_finite_beta(beta);
  return scale(t, exponents(t, beta, h, c));
}

TransferMatrix symmetrized_transfer_matrix(std::size_t t, double beta, const ReturnSeries& h,
                                           const CostMatrix& c) {
  check_dimensions(h, c);
  require_step(t, h);
  require_finite_beta(beta);
  return scale(t, symmetrized_exponents(t, beta, h, c));
}

double partition_function(double beta, const ReturnSeries& h, const CostMatrix& c) {
  check_dimensions(h, c);
  require_finite_beta(beta);
  return log_trace_product(h.steps(), [&](std::size_t t) { return exponents(t, beta, h, c); });
}

double partition_function_symmetrized(double beta, const ReturnSeries& h, const CostMatrix& c) {
  check_dimensions(h, c);
  require_finite_beta(beta);
  return log_trace_product(h.steps(),
                           [&](std::size_t t) { return symmetrized_exponents(t, beta, h, c); });
}

std::uint64_t strategy_count(std::size_t criteria, std::size_t steps) noexcept {
  std::uint64_t count = 1;
  for (std::size_t t = 0; t < steps; ++t) {
    if (criteria != 0 && count > std::numeric_limits<std::uint64_t>::max() / criteria)
      return std::numeric_limits<std::uint64_t>::max();
    count *= criteria;
  }
  return count;
}

double brute_force_partition(double beta, const ReturnSeries& h, const CostMatrix& c,
                             const BruteForceOptions& options) {
  check_dimensions(h, c);
  require_finite_beta(beta);
  const std::uint64_t total = strategy_count(h.criteria(), h.steps());
  if (total > options.cap) throw EnumerationCapExceeded(total, options.cap);

  const std::uint64_t workers =
      std::clamp<std::uint64_t>(options.workers, 1, std::max<std::uint64_t>(total, 1));
  std::vector<LogSumExp> partial(workers);
  auto run = [&](std::uint64_t w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    std::vector<std::size_t> scratch(h.steps());
    for (std::uint64_t i = begin; i < end; ++i)
      partial[w].add(-beta * profit_of_index(i, h, c, scratch));
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  // Pairwise tree merge in fixed order.
  for (std::size_t stride = 1; stride < partial.size(); stride *= 2)
    for (std::size_t i = 0; i + stride < partial.size(); i += 2 * stride)
      partial[i].merge(partial[i + stride]);
  return partial.front().value();
}

double gibbs_weight(const PureStrategy& s, double beta, const ReturnSeries& h,
                    const CostMatrix& c) {
  return std::exp(-beta * profit(s, h, c) - partition_function(beta, h, c));
}

std::optional<double> EnsembleObservables::identity_residual() const {
  if (!temperature) return std::nullopt;
  const double t = *temperature;
  return t * log_z + expected_profit - t * entropy;
}

EnsembleObservables observables(double beta, const ReturnSeries& h, const CostMatrix& c) {
  check_dimensions(h, c);
  require_finite_beta(beta);
  const std::size_t n = h.criteria();
  const std::size_t k = h.steps();

  const auto step = [&](std::size_t t) {
    MomentMatrix m(n * n);
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t mu = 0; mu < n; ++mu) {
        const double e = h(mu, t) - c(mu, nu);
        m[nu * n + mu] = {-beta * e, e, 0.0, 0.0};
      }
    return m;
  };

  MomentMatrix acc = step(0);
  std::vector<PathMoments> parts(n);
  for (std::size_t t = 1; t < k; ++t) {
    const MomentMatrix x = step(t);
    MomentMatrix next(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t b = 0; b < n; ++b) {
          const PathMoments& p = acc[a * n + b];
          const PathMoments& q = x[b * n + z];
          parts[b] = {p.log_weight + q.log_weight, p.mean + q.mean, p.variance + q.variance,
                      p.entropy + q.entropy};
        }
        next[a * n + z] = mix(parts);
      }
    acc = std::move(next);
  }
  for (std::size_t a = 0; a < n; ++a) parts[a] = acc[a * n + a];
  const PathMoments total = mix(parts);

  EnsembleObservables obs;
  obs.beta = beta;
  obs.log_z = total.log_weight;
  obs.expected_profit = total.mean;
  obs.variance = total.variance;
  obs.entropy = total.entropy;
  if (beta != 0.0) obs.temperature = 1.0 / beta;
  return obs;
}

std::vector<EnsembleObservables> temperature_scan(std::span<const double> betas,
                                                  const ReturnSeries& h, const CostMatrix& c) {
  std::vector<EnsembleObservables> out;
  out.reserve(betas.size());
  for (double beta : betas) out.push_back(observables(beta, h, c));
  return out;
}

} // namespace ahpthermo
