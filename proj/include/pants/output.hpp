#pragma once

#include <json.hpp>

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace pants {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

// Envelope for every machine-readable record the CLI emits. Field names
// are stable within a major schema version; see schema/pants-output.schema.json.
struct OutputRecord {
  std::string command;
  std::map<std::string, std::string> settings;
  Json payload;

  Json toJson() const {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["command"] = command;
    Json s = Json::object();
    for (const auto& [k, v] : settings) s[k] = v;
    j["settings"] = s;
    j["payload"] = payload;
    return j;
  }
};

// Rectangular view of a payload for CSV and text rendering.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csvEscape(const std::string& field) {
  bool needsQuotes = field.find_first_of(",\"\n") != std::string::npos;
  if (!needsQuotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

inline void writeCsv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i) os << ',';
    os << csvEscape(t.header[i]);
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << csvEscape(row[i]);
    }
    os << '\n';
  }
}

inline void writeTextTable(std::ostream& os, const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      os << cells[i];
      if (i + 1 < cells.size()) {
        for (std::size_t pad = cells[i].size(); pad < width[i]; ++pad) os << ' ';
      }
    }
    os << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

inline void writeJson(std::ostream& os, const OutputRecord& record) {
  os << record.toJson().dump(2) << '\n';
}

}  // namespace pants
