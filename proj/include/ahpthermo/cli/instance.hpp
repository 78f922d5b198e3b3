#pragma once

// Instance documents shared by every subcommand.
//
//   {
//     "schema_version": "1.0",
//     "criteria":    ["a", "b"],
//     "judgments":   [[1, 2], [0.5, 1]],        // optional, N x N
//     "quotations":  [[1, 1.1, 1.2], [...]],    // optional, N x (k+1)
//     "log_returns": [[0.1, 0.2], [...]],       // optional, N x k
//     "costs":       [[0, 0.5], [0.5, 0]],      // optional, N x N
//     "numeraire":   "cash"                     // required with quotations
//   }
//
// Explicit costs take precedence over judgment-derived costs; log_returns
// take precedence over quotations.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ahpthermo/market.hpp"
#include "ahpthermo/matrix.hpp"

namespace ahpthermo::cli {

inline constexpr const char* kSchemaVersion = "1.0";

/// Malformed or incomplete instance; maps to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct InstanceDocument {
  std::string schema_version = kSchemaVersion;
  std::vector<std::string> criteria;
  std::optional<Matrix> judgments;
  std::optional<Matrix> quotations;
  std::optional<Matrix> log_returns;
  std::optional<Matrix> costs;
  std::optional<std::string> numeraire;

  std::size_t size() const noexcept { return criteria.size(); }

  JudgmentMatrix require_judgments() const;
  ReturnSeries require_returns() const;
  CostMatrix require_costs() const;
  /// Costs when they can be resolved, without raising.
  std::optional<CostMatrix> resolve_costs() const;
};

InstanceDocument parse_instance(const nlohmann::json& doc);
InstanceDocument parse_instance_text(const std::string& text);
nlohmann::ordered_json to_json(const InstanceDocument& doc);

} // namespace ahpthermo::cli
