#include "emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>

namespace brjuno_cli {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_cell(const json& v) {
  switch (v.type()) {
    case json::value_t::null: return "";
    case json::value_t::boolean: return v.get<bool>() ? "true" : "false";
    case json::value_t::string: return csv_field(v.get<std::string>());
    case json::value_t::number_integer: return std::to_string(v.get<std::int64_t>());
    case json::value_t::number_unsigned: return std::to_string(v.get<std::uint64_t>());
    case json::value_t::number_float: {
      double d = v.get<double>();
      if (std::isnan(d)) return "nan";
      if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17e", d);
      return buf;
    }
    default: return csv_field(v.dump());
  }
}

namespace {

void header_line(std::ostream& os, std::string_view key, const std::string& value) {
  os << "# " << key << ": " << value << '\n';
}

std::string echo(const json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) {
    if (!s.empty()) s += ' ';
    s += k + '=' + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

}  // namespace

void write_csv(std::ostream& os, const Meta& meta, const std::vector<json>& rows) {
  header_line(os, "brjuno", meta.version);
  header_line(os, "command", meta.command);
  header_line(os, "parameters", echo(meta.parameters));
  if (!meta.sweep.is_null()) header_line(os, "sweep", meta.sweep["variable"].get<std::string>());
  header_line(os, "precision_bits", std::to_string(meta.precision_bits));

  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  if (cols.empty()) return;
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i]);
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) os << ',';
      auto it = r.find(cols[i]);
      if (it != r.end()) os << csv_cell(*it);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Meta& meta, const json& results) {
  json doc;
  doc["meta"] = {{"version", meta.version},
                 {"command", meta.command},
                 {"parameters", meta.parameters},
                 {"precision_bits", meta.precision_bits}};
  if (!meta.sweep.is_null()) doc["meta"]["sweep"] = meta.sweep;
  doc["results"] = results;
  os << doc.dump(2) << '\n';
}

}  // namespace brjuno_cli
