#include "ahpthermo/cli/instance.hpp"

#include "ahpthermo/errors.hpp"

namespace ahpthermo::cli {

namespace {

Matrix read_matrix(const nlohmann::json& doc, const char* key, std::size_t rows,
                   std::optional<std::size_t> cols) {
  const auto& node = doc.at(key);
  if (!node.is_array()) throw InputError(std::string(key) + " must be an array of rows");
  if (node.size() != rows)
    throw InputError(std::string(key) + " must have " + std::to_string(rows) + " rows");
  std::vector<std::vector<double>> out;
  for (const auto& row : node) {
    if (!row.is_array()) throw InputError(std::string(key) + " rows must be arrays");
    std::vector<double> values;
    for (const auto& v : row) {
      if (!v.is_number()) throw InputError(std::string(key) + " entries must be numbers");
      values.push_back(v.get<double>());
    }
    out.push_back(std::move(values));
  }
  if (out.empty() || out.front().empty())
    throw InputError(std::string(key) + " must not be empty");
  const std::size_t width = out.front().size();
  for (const auto& row : out)
    if (row.size() != width) throw InputError(std::string(key) + " rows differ in length");
  if (cols && width != *cols)
    throw InputError(std::string(key) + " must have " + std::to_string(*cols) + " columns");
  return Matrix::from_rows(out);
}

template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const DomainError& e) {
    throw InputError(e.what());
  } catch (const DimensionError& e) {
    throw InputError(e.what());
  }
}

} // namespace

InstanceDocument parse_instance(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  InstanceDocument out;
  if (!doc.contains("schema_version") || !doc["schema_version"].is_string())
    throw InputError("schema_version required");
  out.schema_version = doc["schema_version"].get<std::string>();
  if (out.schema_version.substr(0, 2) != "1.")
    throw InputError("unsupported schema_version " + out.schema_version);

  if (!doc.contains("criteria") || !doc["criteria"].is_array() || doc["criteria"].empty())
    throw InputError("criteria required");
  for (const auto& name : doc["criteria"]) {
    if (!name.is_string()) throw InputError("criteria must be strings");
    out.criteria.push_back(name.get<std::string>());
  }
  const std::size_t n = out.criteria.size();

  auto present = [&](const char* key) { return doc.contains(key) && !doc[key].is_null(); };
  if (present("judgments")) out.judgments = read_matrix(doc, "judgments", n, n);
  if (present("costs")) out.costs = read_matrix(doc, "costs", n, n);
  if (present("quotations")) {
    out.quotations = read_matrix(doc, "quotations", n, std::nullopt);
    if (out.quotations->cols() < 2) throw InputError("quotations need at least two time points");
  }
  if (present("log_returns")) out.log_returns = read_matrix(doc, "log_returns", n, std::nullopt);
  if (present("numeraire")) {
    if (!doc["numeraire"].is_string()) throw InputError("numeraire must be a string");
    out.numeraire = doc["numeraire"].get<std::string>();
  }
  return out;
}

InstanceDocument parse_instance_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_instance(doc);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid instance: ") + e.what());
  }
}

JudgmentMatrix InstanceDocument::require_judgments() const {
  if (!judgments) throw InputError("judgments required");
  return guarded([&] { return JudgmentMatrix(*judgments); });
}

ReturnSeries InstanceDocument::require_returns() const {
  if (log_returns) return guarded([&] { return ReturnSeries(*log_returns); });
  if (quotations) {
    if (!numeraire) throw InputError("numeraire required with quotations");
    return guarded([&] { return ahpthermo::log_returns(QuotationHistory(*quotations)); });
  }
  throw InputError("log_returns or quotations required");
}

CostMatrix InstanceDocument::require_costs() const {
  if (costs) return guarded([&] { return CostMatrix(*costs); });
  if (judgments) return cost_matrix(decompose(require_judgments()));
  throw InputError("costs or judgments required");
}

std::optional<CostMatrix> InstanceDocument::resolve_costs() const {
  if (!costs && !judgments) return std::nullopt;
  return require_costs();
}

nlohmann::ordered_json to_json(const InstanceDocument& doc) {
  nlohmann::ordered_json out;
  out["schema_version"] = doc.schema_version;
  out["criteria"] = doc.criteria;
  auto put = [&](const char* key, const std::optional<Matrix>& m) {
    if (m) out[key] = m->to_rows();
  };
  put("judgments", doc.judgments);
  put("quotations", doc.quotations);
  put("log_returns", doc.log_returns);
  put("costs", doc.costs);
  if (doc.numeraire) out["numeraire"] = *doc.numeraire;
  return out;
}

} // namespace ahpthermo::cli
