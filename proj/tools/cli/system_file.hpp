#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diffnorm/pipeline.hpp"
#include "diffnorm/text.hpp"

namespace diffnorm::cli {

/// Line-oriented "key: value" description of a system. The last declared
/// indeterminate is the distinguished one; the first `dimension` are inputs.
struct SystemFile {
  NameList names;
  int dimension = 0;
  bool time_mode = false;
  std::vector<std::string> equations;
  std::optional<std::string> inequation;
  std::optional<std::uint64_t> seed;
  std::optional<int> truncation;
  std::optional<Backend> backend;
  std::optional<int> degree_bound;
  std::optional<int> trials;
};

/// Throws ParseError (SyntaxError) with the byte offset of the bad line.
SystemFile parse_system_file(std::string_view text);

System to_system(const SystemFile& file);

DiffPoly parse_in(const SystemFile& file, std::string_view text);

Backend parse_backend(std::string_view text);

/// Comma-separated rationals, lowest degree first.
std::vector<mpq_class> parse_series(std::string_view text);

}  // namespace diffnorm::cli
