#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace ffproj {

// Machine-readable result of a check or probe.  `pass` is empty for
// report-only operations whose bounds carry implicit constants.
struct Report {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  nlohmann::json rows = nlohmann::json::array();
  std::optional<bool> pass;
  double timing_ms = 0.0;

  nlohmann::json to_json() const;

  // Flat projection of `rows`: header from the union of row keys in
  // alphabetical order, one line per row.
  std::string rows_csv() const;
};

}  // namespace ffproj
