#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nsym/rational.hpp"

namespace nsym::runner {

struct RunConfig {
  std::string space = "frame:2";  // frame:N | circle | c2 | s3
  std::string format = "text";    // text | json
  std::string mode = "sym";       // quantize: sym | antisym
  uint64_t seed = 20240501;
  int trials = 0;
  int max_mode = 4;
  int max_deg = 4;
  std::vector<Rational> alpha;  // numeric gauge covector for project
};

struct Report {
  bool ok = true;
  std::string text;
  nlohmann::ordered_json json;
};

// Dispatches one CLI command; throws std::invalid_argument for bad
// space/command pairings and propagates parse/math errors.
Report run_command(const RunConfig& cfg, const std::string& command,
                   const std::vector<std::string>& args);

}  // namespace nsym::runner
