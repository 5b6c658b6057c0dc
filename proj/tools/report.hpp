#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace weakforms::cli {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { Json, Csv, Pretty };

struct RunConfig {
  std::string command;
  std::optional<int> p;
  std::optional<int> k;
  std::optional<std::pair<int, int>> k_range; // inclusive, even weights
  std::string space = "M";
  std::optional<int> mmax;
  int box = 40;
  std::pair<int, int> window{15, 15};
  std::optional<int> prec;
  std::string variant = "both";
  int count = 20;
  Format format = Format::Json;
  std::string out;
};

std::pair<int, int> parse_k_range(const std::string &text);
std::pair<int, int> parse_window(const std::string &text);
Format parse_format(const std::string &text);

// Rejects invalid combinations with UsageError.
void validate(const RunConfig &cfg);

// {command, config, results, pass}. Library errors inside a command produce
// pass = false with an "error" entry instead of propagating.
Json run(const RunConfig &cfg);

std::string render(const Json &doc, Format format);

} // namespace weakforms::cli
