#include "ahpthermo/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "ahpthermo/errors.hpp"

namespace ahpthermo {

namespace {

double tropical_times(double x, double y) noexcept {
  if (x <= kTropicalZero || y <= kTropicalZero) return kTropicalZero;
  return x + y;
}

} // namespace

TropicalMatrix::TropicalMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (!entries_.square() || entries_.empty())
    throw DimensionError("tropical matrix must be square and non-empty");
  for (std::size_t r = 0; r < entries_.rows(); ++r)
    for (double& v : entries_.row(r)) {
      if (std::isnan(v) || v == std::numeric_limits<double>::infinity())
        throw DomainError("tropical matrix entries must be finite");
      if (v < kTropicalZero) v = kTropicalZero;
    }
}

TropicalMatrix TropicalMatrix::identity(std::size_t n) {
  Matrix m(n, n, kTropicalZero);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 0.0;
  return TropicalMatrix(std::move(m));
}

TropicalMatrix TropicalMatrix::step(std::size_t t, const ReturnSeries& h, const CostMatrix& c) {
  check_dimensions(h, c);
  if (t >= h.steps()) throw IndexError("step " + std::to_string(t) + " out of range");
  const std::size_t n = h.criteria();
  Matrix m(n, n);
  for (std::size_t nu = 0; nu < n; ++nu)
    for (std::size_t mu = 0; mu < n; ++mu) m(nu, mu) = h(mu, t) - c(mu, nu);
  return TropicalMatrix(std::move(m));
}

TropicalMatrix tropical_product(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.size() != b.size()) throw DimensionError("tropical product of mismatched sizes");
  const std::size_t n = a.size();
  Matrix out(n, n, kTropicalZero);
  for (std::size_t nu = 0; nu < n; ++nu)
    for (std::size_t mu = 0; mu < n; ++mu) {
      const double left = a(nu, mu);
      for (std::size_t theta = 0; theta < n; ++theta) {
        const double v = tropical_times(left, b(mu, theta));
        if (v > out(nu, theta)) out(nu, theta) = v;
      }
    }
  return TropicalMatrix(std::move(out));
}

double max_profit(const ReturnSeries& h, const CostMatrix& c) {
  check_dimensions(h, c);
  TropicalMatrix acc = TropicalMatrix::step(0, h, c);
  for (std::size_t t = 1; t < h.steps(); ++t)
    acc = tropical_product(acc, TropicalMatrix::step(t, h, c));
  double best = kTropicalZero;
  for (std::size_t mu = 0; mu < acc.size(); ++mu) best = std::max(best, acc(mu, mu));
  return best;
}

namespace {

// Value-to-go for a fixed closure state: to_go[t][nu] is the best profit of
// steps t..k-1 given choice nu at step t-1 and s_{k-1} = closure.
std::vector<std::vector<double>> value_to_go(const ReturnSeries& h, const CostMatrix& c,
                                             std::size_t closure) {
  const std::size_t n = h.criteria();
  const std::size_t k = h.steps();
  std::vector<std::vector<double>> to_go(k, std::vector<double>(n, kTropicalZero));
  for (std::size_t nu = 0; nu < n; ++nu) to_go[k - 1][nu] = h(closure, k - 1) - c(closure, nu);
  for (std::size_t t = k - 1; t-- > 0;)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t mu = 0; mu < n; ++mu)
        to_go[t][nu] = std::max(to_go[t][nu], (h(mu, t) - c(mu, nu)) + to_go[t + 1][mu]);
  return to_go;
}

struct Candidate {
  double value;
  std::vector<std::size_t> choices;
  std::vector<std::vector<std::size_t>> table;
};

Candidate best_for_closure(const ReturnSeries& h, const CostMatrix& c, std::size_t closure) {
  const std::size_t n = h.criteria();
  const std::size_t k = h.steps();
  const auto to_go = value_to_go(h, c, closure);

  std::vector<std::vector<std::size_t>> table(k, std::vector<std::size_t>(n, 0));
  for (std::size_t t = 0; t + 1 < k; ++t)
    for (std::size_t nu = 0; nu < n; ++nu) {
      std::size_t arg = 0;
      for (std::size_t mu = 0; mu < n; ++mu)
        if ((h(mu, t) - c(mu, nu)) + to_go[t + 1][mu] == to_go[t][nu]) {
          arg = mu;
          break;
        }
      table[t][nu] = arg;
    }
  for (std::size_t nu = 0; nu < n; ++nu) table[k - 1][nu] = closure;

  std::vector<std::size_t> choices(k);
  std::size_t prev = closure;
  for (std::size_t t = 0; t < k; ++t) prev = choices[t] = table[t][prev];
  return {to_go[0][closure], std::move(choices), std::move(table)};
}

} // namespace

ClairvoyantResult clairvoyant(const ReturnSeries& h, const CostMatrix& c) {
  check_dimensions(h, c);
  const std::size_t n = h.criteria();
  std::optional<Candidate> best;
  for (std::size_t closure = 0; closure < n; ++closure) {
    Candidate cand = best_for_closure(h, c, closure);
    if (!best || cand.value > best->value ||
        (cand.value == best->value && cand.choices < best->choices))
      best = std::move(cand);
  }
  PureStrategy s(std::move(best->choices), n);
  // Re-evaluate along the chosen path so the reported value matches profit().
  const double value = profit(s, h, c);
  return {value, std::move(s), std::move(best->table)};
}

} // namespace ahpthermo
