#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace latred::cli {

using nlohmann::json;

struct Options {
  std::string ring = "auto";  // z, ff or auto (from the payload)
  std::optional<long> p, q, n, r, k;
  std::string theta;  // zero, adjacent, localized or a rational; empty = payload or adjacent
  std::string mode;   // GL or SL
  std::string beta;   // cover-membership: also report the thinned test
  std::string lipschitz;
  std::uint64_t seed = 1;
  long scale = 20;
};

using Command = std::function<json(const json& in, const Options& o)>;

// verb -> handler
const std::map<std::string, Command>& commands();

// Returns the report; "passed" is false when any check fails.
json selfcheck(const Options& o);

}  // namespace latred::cli
