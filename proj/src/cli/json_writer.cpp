#include "ahpthermo/cli/json_writer.hpp"

#include <cmath>
#include <sstream>

#include <fmt/format.h>

namespace ahpthermo::cli {

namespace {

bool is_scalar(const nlohmann::ordered_json& v) { return !v.is_object() && !v.is_array(); }

void write_scalar(std::ostream& out, const nlohmann::ordered_json& v) {
  if (v.is_number_float()) {
    const double d = v.get<double>();
    out << (std::isfinite(d) ? format_number(d) : "null");
  } else {
    out << v.dump();
  }
}

void write_value(std::ostream& out, const nlohmann::ordered_json& v, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out << ",\n";
      first = false;
      out << pad << nlohmann::ordered_json(it.key()).dump() << ": ";
      write_value(out, it.value(), depth + 1);
    }
    out << "\n" << close_pad << "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      out << "[]";
      return;
    }
    bool flat = true;
    for (const auto& e : v) flat = flat && is_scalar(e);
    if (flat) {
      out << "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        write_scalar(out, v[i]);
      }
      out << "]";
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ",\n";
      out << pad;
      write_value(out, v[i], depth + 1);
    }
    out << "\n" << close_pad << "]";
  } else {
    write_scalar(out, v);
  }
}

} // namespace

std::string format_number(double v) { return fmt::format("{:.17g}", v); }

void write_json(std::ostream& out, const nlohmann::ordered_json& doc) {
  write_value(out, doc, 0);
  out << "\n";
}

std::string to_json_text(const nlohmann::ordered_json& doc) {
  std::ostringstream os;
  write_json(os, doc);
  return os.str();
}

} // namespace ahpthermo::cli
