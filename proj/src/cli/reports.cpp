#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ahpthermo/cli/app.hpp"
#include "ahpthermo/cli/json_writer.hpp"
#include "ahpthermo/ensemble.hpp"
#include "ahpthermo/errors.hpp"
#include "ahpthermo/information.hpp"
#include "ahpthermo/market.hpp"
#include "ahpthermo/tropical.hpp"

namespace ahpthermo::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json one_based(const PureStrategy& s) {
  ordered_json out = ordered_json::array();
  for (std::size_t mu : s.choices()) out.push_back(mu + 1);
  return out;
}

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json step_table(const PureStrategy& s, const ReturnSeries& h, const CostMatrix& c) {
  ordered_json steps = ordered_json::array();
  const auto parts = profit_steps(s, h, c);
  for (std::size_t t = 0; t < parts.size(); ++t)
    steps.push_back({{"t", t + 1},
                     {"choice", s[t] + 1},
                     {"previous", s.previous(t) + 1},
                     {"field", parts[t].field},
                     {"cost", parts[t].cost}});
  return steps;
}

// Step count must match the returns when those are involved.
PureStrategy parse_for_returns(const std::string& text, const InstanceDocument& doc,
                               const ReturnSeries& h) {
  PureStrategy s = parse_strategy(text, doc.size());
  if (s.steps() != h.steps())
    throw InputError("strategy has " + std::to_string(s.steps()) + " steps, instance has " +
                     std::to_string(h.steps()));
  return s;
}

} // namespace

PureStrategy parse_strategy(const std::string& text, std::size_t criteria) {
  std::vector<std::size_t> choices;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty strategy entry in '" + text + "'");
    item = item.substr(first, last - first + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("strategy entries must be positive integers, got '" + item + "'");
    const unsigned long long v = std::stoull(item);
    if (v < 1 || v > criteria)
      throw InputError("strategy index " + item + " outside 1.." + std::to_string(criteria));
    choices.push_back(static_cast<std::size_t>(v - 1));
  }
  if (choices.empty()) throw InputError("strategy is empty");
  return PureStrategy(std::move(choices), criteria);
}

ordered_json decompose_report(const InstanceDocument& doc, double threshold,
                              std::size_t max_listed) {
  const JudgmentMatrix u = doc.require_judgments();
  const CommissionDecomposition d = decompose(u);
  const CostMatrix costs = cost_matrix(d);
  const std::size_t n = u.size();

  struct Deviation {
    std::size_t nu, rho, mu;
    double value;
  };
  std::vector<Deviation> deviations;
  for (std::size_t nu = 0; nu < n; ++nu)
    for (std::size_t rho = 0; rho < n; ++rho)
      for (std::size_t mu = 0; mu < n; ++mu) {
        if (rho == nu || rho == mu) continue; // identically zero
        const double dev = transitivity_deviation(u, nu, rho, mu);
        if (std::abs(dev) > threshold) deviations.push_back({nu, rho, mu, dev});
      }
  std::stable_sort(deviations.begin(), deviations.end(), [](const auto& a, const auto& b) {
    return std::abs(a.value) > std::abs(b.value);
  });

  ordered_json listed = ordered_json::array();
  for (std::size_t i = 0; i < std::min(max_listed, deviations.size()); ++i) {
    const auto& d = deviations[i];
    listed.push_back({{"triple", {d.nu + 1, d.rho + 1, d.mu + 1}}, {"deviation", d.value}});
  }

  ordered_json gains = ordered_json::array();
  for (std::size_t to = 0; to < n; ++to)
    for (std::size_t from = to + 1; from < n; ++from)
      if (costs(to, from) < 0.0) gains.push_back({to + 1, from + 1});

  ordered_json out;
  out["command"] = "decompose";
  out["criteria"] = doc.criteria;
  out["skew"] = d.skew.to_rows();
  out["commission"] = d.commission.to_rows();
  out["costs"] = costs.costs().to_rows();
  out["round_trip_gain_pairs"] = gains;
  out["priorities"] = priority_vector(u);
  out["deviation_threshold"] = threshold;
  out["deviation_count"] = deviations.size();
  out["consistent"] = deviations.empty();
  out["deviations"] = listed;
  return out;
}

ordered_json profit_report(const InstanceDocument& doc, const std::string& strategy) {
  const ReturnSeries h = doc.require_returns();
  const CostMatrix c = doc.require_costs();
  const PureStrategy s = parse_for_returns(strategy, doc, h);

  const double value = profit(s, h, c);
  const double spin_value = spin_profit(s, h, c);
  double field = 0.0, cost = 0.0;
  for (const auto& part : profit_steps(s, h, c)) {
    field += part.field;
    cost += part.cost;
  }

  ordered_json out;
  out["command"] = "profit";
  out["strategy"] = one_based(s);
  out["profit"] = value;
  out["field_total"] = field;
  out["cost_total"] = cost;
  out["spin_profit"] = spin_value;
  out["spin_form_consistent"] =
      std::abs(spin_value - value) <= 1e-9 * std::max(1.0, std::abs(value));
  out["steps"] = step_table(s, h, c);
  return out;
}

ordered_json ensemble_report(const InstanceDocument& doc, double beta, bool brute_force,
                             std::uint64_t cap) {
  if (!std::isfinite(beta)) throw InputError("beta must be finite");
  const ReturnSeries h = doc.require_returns();
  const CostMatrix c = doc.require_costs();
  const EnsembleObservables obs = observables(beta, h, c);

  ordered_json out;
  out["command"] = "ensemble";
  out["beta"] = beta;
  out["log_z"] = obs.log_z;
  out["expected_profit"] = obs.expected_profit;
  out["variance"] = obs.variance;
  out["entropy"] = obs.entropy;
  out["temperature"] = optional_number(obs.temperature);
  out["infinite_temperature"] = !obs.temperature.has_value();
  out["identity_residual"] = optional_number(obs.identity_residual());
  out["max_entropy"] = static_cast<double>(h.steps()) * std::log(static_cast<double>(h.criteria()));
  if (brute_force) {
    BruteForceOptions options;
    options.cap = cap;
    const double oracle = brute_force_partition(beta, h, c, options);
    out["brute_force"] = {
        {"log_z", oracle},
        {"relative_gap", std::abs(obs.log_z - oracle) / std::max(1.0, std::abs(oracle))},
        {"strategies", strategy_count(h.criteria(), h.steps())}};
  }
  return out;
}

ordered_json optimize_report(const InstanceDocument& doc) {
  const ReturnSeries h = doc.require_returns();
  const CostMatrix c = doc.require_costs();
  const ClairvoyantResult best = clairvoyant(h, c);

  ordered_json out;
  out["command"] = "optimize";
  out["max_profit"] = max_profit(h, c);
  out["strategy"] = one_based(best.strategy);
  out["strategy_profit"] = best.max_profit;
  out["steps"] = step_table(best.strategy, h, c);
  return out;
}

ordered_json fisher_report(const InstanceDocument& doc, const std::string& strategy) {
  const PureStrategy s = parse_strategy(strategy, doc.size());
  const FisherReport report = strategy_fisher(s, doc.size());

  std::size_t switches = 0;
  for (std::size_t t = 0; t < s.steps(); ++t) switches += s[t] != s[(t + 1) % s.steps()];

  ordered_json out;
  out["command"] = "fisher";
  out["strategy"] = one_based(s);
  out["per_criterion"] = report.per_criterion;
  out["total"] = report.total;
  out["switches"] = switches;

  out["uniform_cost"] = nullptr;
  if (const auto costs = doc.resolve_costs()) {
    if (const auto flat = costs->uniform_value(); flat && *flat >= 0.0) {
      const ReturnSeries zero(Matrix(doc.size(), s.steps()));
      double paid = 0.0;
      for (const auto& part : profit_steps(s, zero, *costs)) paid += part.cost;
      out["uniform_cost"] = {{"flat_cost", *flat},
                             {"cost_of_information", cost_of_information(report, *flat)},
                             {"hamiltonian_cost", paid}};
    }
  }
  return out;
}

std::vector<ScanRow> scan_rows(const InstanceDocument& doc, const ScanOptions& options) {
  if (options.points < 2) throw InputError("scan needs at least 2 points");
  if (!std::isfinite(options.beta_from) || !std::isfinite(options.beta_to))
    throw InputError("scan bounds must be finite");
  const ReturnSeries h = doc.require_returns();
  const CostMatrix c = doc.require_costs();

  std::vector<double> grid(options.points);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(options.points - 1);
    grid[i] = (1.0 - f) * options.beta_from + f * options.beta_to;
  }
  const auto obs = temperature_scan(grid, h, c);

  std::vector<ScanRow> rows;
  rows.reserve(obs.size());
  for (const auto& o : obs) {
    ScanRow r{o.beta, o.temperature, o.log_z, o.expected_profit, o.variance, o.entropy,
              std::nullopt, std::nullopt, o.identity_residual()};
    if (o.temperature) r.tail = -*o.temperature * o.log_z;
    rows.push_back(r);
  }
  // Central differences inside, one-sided at the ends.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 == rows.size() ? i : i + 1;
    const double ds = rows[hi].entropy - rows[lo].entropy;
    const double de = rows[hi].expected_profit - rows[lo].expected_profit;
    if (ds != 0.0 && std::isfinite(de / ds)) rows[i].de_ds = de / ds;
  }
  return rows;
}

ordered_json scan_report(const InstanceDocument& doc, const ScanOptions& options) {
  const auto rows = scan_rows(doc, options);
  ordered_json table = ordered_json::array();
  bool profit_nonincreasing = true;
  double worst_slope_error = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    table.push_back({{"beta", r.beta},
                     {"temperature", optional_number(r.temperature)},
                     {"log_z", r.log_z},
                     {"expected_profit", r.expected_profit},
                     {"variance", r.variance},
                     {"entropy", r.entropy},
                     {"dE_dS", optional_number(r.de_ds)},
                     {"neg_T_log_z", optional_number(r.tail)},
                     {"identity_residual", optional_number(r.residual)}});
    if (i > 0) {
      const bool ascending = rows[i].beta > rows[i - 1].beta;
      const double step = rows[i].expected_profit - rows[i - 1].expected_profit;
      if (ascending ? step > 1e-12 : step < -1e-12) profit_nonincreasing = false;
    }
    if (i > 0 && i + 1 < rows.size() && r.de_ds && r.temperature)
      worst_slope_error =
          std::max(worst_slope_error, std::abs(*r.de_ds / *r.temperature - 1.0));
  }
  const ReturnSeries h = doc.require_returns();
  const CostMatrix c = doc.require_costs();

  ordered_json out;
  out["command"] = "scan";
  out["max_profit"] = max_profit(h, c);
  out["diagnostics"] = {{"expected_profit_monotone_in_beta", profit_nonincreasing},
                        {"max_interior_slope_relative_error", worst_slope_error}};
  out["rows"] = table;
  return out;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  auto cell = [](const std::optional<double>& v) {
    return v && std::isfinite(*v) ? format_number(*v) : std::string("nan");
  };
  std::string out =
      "beta,temperature,log_z,expected_profit,variance,entropy,dE_dS,neg_T_log_z,"
      "identity_residual\n";
  for (const auto& r : rows) {
    out += format_number(r.beta) + ',' + cell(r.temperature) + ',' + format_number(r.log_z) +
           ',' + format_number(r.expected_profit) + ',' + format_number(r.variance) + ',' +
           format_number(r.entropy) + ',' + cell(r.de_ds) + ',' + cell(r.tail) + ',' +
           cell(r.residual) + '\n';
  }
  return out;
}

InstanceDocument generate_instance(const GenerateOptions& options) {
  if (options.n < 1 || options.k < 1) throw InputError("n and k must be at least 1");
  if (!(options.cost_scale >= 0.0) || !std::isfinite(options.cost_scale) ||
      !(options.return_scale >= 0.0) || !std::isfinite(options.return_scale))
    throw InputError("scales must be nonnegative and finite");

  // mt19937_64 output is fixed by the standard; the distributions are not, so
  // draws are mapped to [0, 1) by hand.
  std::mt19937_64 rng(options.seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  const std::size_t n = options.n, k = options.k;
  Matrix returns(n, k);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t t = 0; t < k; ++t) returns(mu, t) = options.return_scale * (2.0 * unit() - 1.0);

  Matrix costs(n, n), judgments(n, n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double cost = options.cost_scale * unit();
      const double skew = 2.0 * unit() - 1.0;
      costs(i, j) = costs(j, i) = cost;
      // Judgments whose commission is exactly the negated cost.
      judgments(i, j) = std::exp(skew - cost);
      judgments(j, i) = std::exp(-skew - cost);
    }

  InstanceDocument doc;
  for (std::size_t mu = 0; mu < n; ++mu) doc.criteria.push_back("c" + std::to_string(mu + 1));
  doc.judgments = std::move(judgments);
  doc.log_returns = std::move(returns);
  doc.costs = std::move(costs);
  return doc;
}

} // namespace ahpthermo::cli
