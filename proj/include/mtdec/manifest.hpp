#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mtdec {

// Provenance block embedded in every output file: CSV as leading `#`
// comment lines, JSON under the "manifest" key. The timestamp line is
// excluded from determinism comparisons; everything else is reproducible
// for a fixed scenario and seed.
struct RunManifest {
  std::string command;
  std::string scenario_ref;  // preset name or file path
  std::vector<std::string> outputs;
  std::uint64_t seed = 0;
  std::string constants_version;
  std::string rng_id;
  std::string timestamp;  // ISO-8601 UTC

  static std::string now_utc();

  std::vector<std::string> csv_comment_lines() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace mtdec
