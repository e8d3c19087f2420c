#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace brjuno_cli {

using json = nlohmann::ordered_json;

struct Meta {
  std::string version;
  std::string command;
  json parameters = json::object();
  json sweep;  // null when the run has a single value
  int precision_bits = 0;
};

// RFC 4180: quote when the field holds a comma, quote or line break; double embedded quotes.
std::string csv_field(const std::string& s);
std::string csv_cell(const json& v);

// '#'-prefixed reproducibility header, a column row (union of keys in first-seen order), then rows.
void write_csv(std::ostream& os, const Meta& meta, const std::vector<json>& rows);
void write_json(std::ostream& os, const Meta& meta, const json& results);

}  // namespace brjuno_cli
