#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

namespace ahpthermo::cli {

/// Pretty-prints `doc` with floating-point numbers at 17 significant digits.
/// Arrays of scalars stay on one line; non-finite numbers become null.
void write_json(std::ostream& out, const nlohmann::ordered_json& doc);
std::string to_json_text(const nlohmann::ordered_json& doc);

/// A double formatted with 17 significant digits, locale-independent.
std::string format_number(double v);

} // namespace ahpthermo::cli
