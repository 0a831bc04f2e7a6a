#include "mtdec/manifest.hpp"

#include <ctime>

namespace mtdec {

std::string RunManifest::now_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> RunManifest::csv_comment_lines() const {
  std::vector<std::string> lines;
  lines.push_back("# mtdec " + command);
  lines.push_back("# scenario: " + scenario_ref);
  for (const auto& o : outputs) lines.push_back("# output: " + o);
  lines.push_back("# seed: " + std::to_string(seed));
  lines.push_back("# constants: " + constants_version);
  lines.push_back("# rng: " + rng_id);
  lines.push_back("# timestamp: " + timestamp);
  return lines;
}

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["scenario"] = scenario_ref;
  j["outputs"] = outputs;
  j["seed"] = seed;
  j["constants"] = constants_version;
  j["rng"] = rng_id;
  j["timestamp"] = timestamp;
  return j;
}

}  // namespace mtdec
