#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "system_file.hpp"

namespace diffnorm::cli {

using Document = nlohmann::ordered_json;

/// Command-line overrides; unset values fall back to the system file, then
/// to built-in defaults.
struct Flags {
  std::optional<std::uint64_t> seed;
  std::optional<int> truncation;
  std::optional<Backend> backend;
  std::optional<int> degree_bound;
  std::optional<int> trials;
  bool time = false;
  std::string poly;
  std::vector<std::string> inputs;
  bool transform = false;
};

/// Exit status for a library error: 2 syntax, 3 preconditions, 4 exhausted
/// searches, 5 no rational root, 6 other extension failures, 1 otherwise.
int exit_code(ErrorCode code);

/// Source is the text of a system file, or of a change-of-variables document
/// for extend and verify.
Document run_reduce(const std::string& source, const Flags& flags);
Document run_member(const std::string& source, const Flags& flags);
Document run_manageable(const std::string& source, const Flags& flags);
Document run_normalize(const std::string& source, const Flags& flags);
Document run_extend(const std::string& source, const Flags& flags);
Document run_verify(const std::string& source, const Flags& flags);

std::string render(const Document& doc);

std::string rational_string(const mpq_class& q);

}  // namespace diffnorm::cli
