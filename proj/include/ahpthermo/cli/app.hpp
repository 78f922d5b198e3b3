#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ahpthermo/cli/instance.hpp"
#include "ahpthermo/strategy.hpp"

namespace ahpthermo::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 2, kCapRefused = 3 };

/// Parses "1,2,3" (1-based) into a strategy over `criteria` criteria.
PureStrategy parse_strategy(const std::string& text, std::size_t criteria);

nlohmann::ordered_json decompose_report(const InstanceDocument& doc, double threshold,
                                        std::size_t max_listed);
nlohmann::ordered_json profit_report(const InstanceDocument& doc, const std::string& strategy);
nlohmann::ordered_json ensemble_report(const InstanceDocument& doc, double beta,
                                       bool brute_force, std::uint64_t cap);
nlohmann::ordered_json optimize_report(const InstanceDocument& doc);
nlohmann::ordered_json fisher_report(const InstanceDocument& doc, const std::string& strategy);

struct ScanOptions {
  double beta_from = -5.0;
  double beta_to = -0.1;
  std::size_t points = 50;
};

struct ScanRow {
  double beta;
  std::optional<double> temperature;
  double log_z;
  double expected_profit;
  double variance;
  double entropy;
  std::optional<double> de_ds;      // finite-difference dE/dS
  std::optional<double> tail;       // -T ln Z
  std::optional<double> residual;   // T ln Z + E - T S
};

std::vector<ScanRow> scan_rows(const InstanceDocument& doc, const ScanOptions& options);
nlohmann::ordered_json scan_report(const InstanceDocument& doc, const ScanOptions& options);
std::string scan_csv(const std::vector<ScanRow>& rows);

struct GenerateOptions {
  std::size_t n = 3;
  std::size_t k = 5;
  std::uint64_t seed = 1;
  double cost_scale = 0.1;
  double return_scale = 0.05;
};

InstanceDocument generate_instance(const GenerateOptions& options);

/// Runs the command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ahpthermo::cli
