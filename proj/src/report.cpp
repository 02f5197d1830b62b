#include "ffproj/report.hpp"

#include <set>
#include <sstream>

namespace ffproj {

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["params"] = params;
  j["seed"] = seed;
  j["rows"] = rows;
  if (pass.has_value())
    j["pass"] = *pass;
  else
    j["pass"] = nullptr;
  j["timing_ms"] = timing_ms;
  return j;
}

std::string Report::rows_csv() const {
  std::set<std::string> keys;
  for (const auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it) keys.insert(it.key());

  auto cell = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) {
      std::string s = v.get<std::string>();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + "\"";
    }
    return v.dump();
  };

  std::ostringstream out;
  bool first = true;
  for (const auto& k : keys) {
    if (!first) out << ',';
    out << k;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& k : keys) {
      if (!first) out << ',';
      first = false;
      if (row.contains(k)) out << cell(row.at(k));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ffproj
