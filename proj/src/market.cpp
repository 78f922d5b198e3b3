#include "ahpthermo/market.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ahpthermo/errors.hpp"

namespace ahpthermo {

namespace {

void require_positive_finite(const Matrix& m, const char* what) {
  for (double v : m.data())
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError(std::string(what) + " entries must be positive and finite");
}

void require_index(std::size_t i, std::size_t n) {
  if (i >= n)
    throw IndexError("criterion index " + std::to_string(i) + " out of range for N=" +
                     std::to_string(n));
}

} // namespace

JudgmentMatrix::JudgmentMatrix(Matrix rates) : rates_(std::move(rates)) {
  if (!rates_.square() || rates_.empty())
    throw DimensionError("judgment matrix must be square and non-empty");
  require_positive_finite(rates_, "judgment matrix");
  for (std::size_t i = 0; i < rates_.rows(); ++i) {
    if (std::abs(rates_(i, i) - 1.0) > kDiagonalTolerance)
      throw DomainError("judgment matrix diagonal must equal 1");
    rates_(i, i) = 1.0;
  }
}

JudgmentMatrix JudgmentMatrix::consistent(std::span<const double> weights) {
  Matrix m(weights.size(), weights.size());
  for (std::size_t nu = 0; nu < weights.size(); ++nu)
    for (std::size_t mu = 0; mu < weights.size(); ++mu) m(nu, mu) = weights[nu] / weights[mu];
  return JudgmentMatrix(std::move(m));
}

CostMatrix::CostMatrix(Matrix costs) : costs_(std::move(costs)) {
  if (!costs_.square() || costs_.empty())
    throw DimensionError("cost matrix must be square and non-empty");
  for (double v : costs_.data())
    if (!std::isfinite(v)) throw DomainError("cost matrix entries must be finite");
  for (std::size_t i = 0; i < costs_.rows(); ++i) {
    if (std::abs(costs_(i, i)) > kDiagonalTolerance)
      throw DomainError("cost matrix diagonal must be zero");
    costs_(i, i) = 0.0;
  }
}

CostMatrix CostMatrix::uniform(std::size_t n, double cost) {
  Matrix m(n, n, cost);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 0.0;
  return CostMatrix(std::move(m));
}

std::optional<double> CostMatrix::uniform_value() const noexcept {
  const std::size_t n = size();
  if (n < 2) return 0.0;
  const double first = costs_(0, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && costs_(i, j) != first) return std::nullopt;
  return first;
}

QuotationHistory::QuotationHistory(Matrix quotes) : quotes_(std::move(quotes)) {
  if (quotes_.rows() == 0 || quotes_.cols() < 2)
    throw DimensionError("quotation history needs N >= 1 and at least two time points");
  require_positive_finite(quotes_, "quotation");
}

ReturnSeries::ReturnSeries(Matrix returns) : h_(std::move(returns)) {
  if (h_.rows() == 0 || h_.cols() == 0)
    throw DimensionError("return series needs N >= 1 and k >= 1");
  for (double v : h_.data())
    if (!std::isfinite(v)) throw DomainError("log returns must be finite");
}

double commission_from_bid_ask(double bid, double ask) {
  if (!(bid > 0.0) || !(ask > 0.0) || !std::isfinite(bid) || !std::isfinite(ask))
    throw DomainError("bid and ask must be positive and finite");
  return (std::log(bid) - std::log(ask)) / 2.0;
}

CommissionDecomposition decompose(const JudgmentMatrix& u) {
  const std::size_t n = u.size();
  CommissionDecomposition d{Matrix(n, n), Matrix(n, n)};
  for (std::size_t nu = 0; nu < n; ++nu) {
    for (std::size_t mu = nu + 1; mu < n; ++mu) {
      const double forward = std::log(u(nu, mu));
      const double backward = std::log(u(mu, nu));
      const double a = (forward - backward) / 2.0;
      const double eps = std::log(u(nu, mu) * u(mu, nu)) / 2.0;
      d.skew(nu, mu) = a;
      d.skew(mu, nu) = -a;
      d.commission(nu, mu) = eps;
      d.commission(mu, nu) = eps;
    }
  }
  return d;
}

CostMatrix cost_matrix(const CommissionDecomposition& d) {
  Matrix c(d.commission.rows(), d.commission.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = -d.commission(i, j);
  return CostMatrix(std::move(c));
}

double transitivity_deviation(const JudgmentMatrix& u, std::size_t nu, std::size_t rho,
                              std::size_t mu) {
  require_index(nu, u.size());
  require_index(rho, u.size());
  require_index(mu, u.size());
  return std::log(u(nu, rho)) + std::log(u(rho, mu)) - std::log(u(nu, mu));
}

ReturnSeries log_returns(const QuotationHistory& q) {
  Matrix h(q.criteria(), q.steps());
  for (std::size_t mu = 0; mu < q.criteria(); ++mu)
    for (std::size_t t = 0; t < q.steps(); ++t) h(mu, t) = std::log(q(mu, t + 1) / q(mu, t));
  return ReturnSeries(std::move(h));
}

double value_basket(const JudgmentMatrix& u, const Basket& p, std::size_t nu) {
  if (p.coordinates.size() != u.size())
    throw DimensionError("basket has " + std::to_string(p.coordinates.size()) +
                         " coordinates, market has " + std::to_string(u.size()) + " goods");
  require_index(nu, u.size());
  double value = 0.0;
  for (std::size_t mu = 0; mu < u.size(); ++mu) value += u(nu, mu) * p.coordinates[mu];
  return value;
}

std::vector<double> priority_vector(const JudgmentMatrix& u) {
  const std::size_t n = u.size();
  std::vector<double> log_means(n, 0.0);
  for (std::size_t nu = 0; nu < n; ++nu) {
    for (std::size_t mu = 0; mu < n; ++mu) log_means[nu] += std::log(u(nu, mu));
    log_means[nu] /= static_cast<double>(n);
  }
  // Shift by the largest log-mean before exponentiating.
  double top = log_means[0];
  for (double v : log_means) top = std::max(top, v);
  std::vector<double> w(n);
  double total = 0.0;
  for (std::size_t nu = 0; nu < n; ++nu) total += (w[nu] = std::exp(log_means[nu] - top));
  for (double& v : w) v /= total;
  return w;
}

} // namespace ahpthermo
