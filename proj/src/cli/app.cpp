#include "ahpthermo/cli/app.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ahpthermo/cli/json_writer.hpp"
#include "ahpthermo/ensemble.hpp"
#include "ahpthermo/errors.hpp"

namespace ahpthermo::cli {

namespace {

std::string read_input(const std::string& path) {
  if (path.empty()) throw InputError("--input required");
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

// Writes to a sibling temporary file and renames it over the target.
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    out.flush();
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + path);
    f << text;
    if (!f.flush()) throw InputError("cannot write " + path);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot write " + path);
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Judgment-matrix thermodynamics: commissions, Ising profit, Gibbs ensembles, "
               "clairvoyant strategies and Fisher information.",
               "ahpthermo"};
  app.require_subcommand(1);

  std::string input, output;
  app.add_option("--input", input, "Instance JSON file ('-' for stdin)");
  app.add_option("--output", output, "Write the report here instead of stdout");

  double threshold = 1e-9;
  std::size_t max_listed = 100;
  auto* decompose_cmd = app.add_subcommand("decompose", "Split judgments into rates and commissions");
  decompose_cmd->add_option("--threshold", threshold, "Report triple deviations above this");
  decompose_cmd->add_option("--max-deviations", max_listed, "Largest deviations to list");

  std::string strategy;
  auto* profit_cmd = app.add_subcommand("profit", "Profit of a pure strategy");
  profit_cmd->add_option("--strategy", strategy, "Comma-separated 1-based choices")->required();

  double beta = 0.0;
  bool brute_force = false;
  std::uint64_t cap = BruteForceOptions{}.cap;
  auto* ensemble_cmd = app.add_subcommand("ensemble", "Gibbs-ensemble observables at one beta");
  ensemble_cmd->add_option("--beta", beta, "Inverse temperature")->required();
  ensemble_cmd->add_flag("--brute-force", brute_force, "Cross-check ln Z by enumeration");
  ensemble_cmd->add_option("--cap", cap, "Enumeration cap for --brute-force");

  auto* optimize_cmd = app.add_subcommand("optimize", "Clairvoyant maximum-profit strategy");

  auto* fisher_cmd = app.add_subcommand("fisher", "Fisher information of a pure strategy");
  fisher_cmd->add_option("--strategy", strategy, "Comma-separated 1-based choices")->required();

  ScanOptions scan;
  std::string format = "json";
  auto* scan_cmd = app.add_subcommand("scan", "Observables along a beta grid");
  scan_cmd->add_option("--beta-from", scan.beta_from, "First grid value");
  scan_cmd->add_option("--beta-to", scan.beta_to, "Last grid value");
  scan_cmd->add_option("--points", scan.points, "Grid size (>= 2)");
  scan_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  GenerateOptions gen;
  auto* generate_cmd = app.add_subcommand("generate", "Emit a random instance document");
  generate_cmd->add_option("--n", gen.n, "Number of criteria");
  generate_cmd->add_option("--k", gen.k, "Number of steps");
  generate_cmd->add_option("--seed", gen.seed, "RNG seed");
  generate_cmd->add_option("--cost-scale", gen.cost_scale, "Upper bound of conversion costs");
  generate_cmd->add_option("--return-scale", gen.return_scale, "Half-width of log returns");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> argv_storage{"ahpthermo"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    std::string text;
    if (generate_cmd->parsed()) {
      text = to_json_text(to_json(generate_instance(gen)));
    } else {
      const InstanceDocument doc = parse_instance_text(read_input(input));
      if (decompose_cmd->parsed()) {
        text = to_json_text(decompose_report(doc, threshold, max_listed));
      } else if (profit_cmd->parsed()) {
        text = to_json_text(profit_report(doc, strategy));
      } else if (ensemble_cmd->parsed()) {
        text = to_json_text(ensemble_report(doc, beta, brute_force, cap));
      } else if (optimize_cmd->parsed()) {
        text = to_json_text(optimize_report(doc));
      } else if (fisher_cmd->parsed()) {
        text = to_json_text(fisher_report(doc, strategy));
      } else if (scan_cmd->parsed()) {
        text = format == "csv" ? scan_csv(scan_rows(doc, scan)) : to_json_text(scan_report(doc, scan));
      }
    }
    write_output(output, text, out);
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapRefused;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) { // DomainError, DimensionError
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) { // IndexError
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kSuccess;
}

} // namespace ahpthermo::cli
