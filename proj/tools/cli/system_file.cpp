#include "system_file.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace diffnorm::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void syntax(std::size_t at, const std::string& what) {
  throw ParseError(ErrorCode::SyntaxError, at, what + " at position " + std::to_string(at));
}

long to_integer(std::string_view value, std::size_t at) {
  const std::string s(value);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    syntax(at, "expected an integer");
  }
  if (used != s.size()) syntax(at, "expected an integer");
  return v;
}

}  // namespace

Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::Exact;
  if (text == "float") return Backend::Float;
  throw ParseError(ErrorCode::SyntaxError, 0, "backend must be exact or float");
}

SystemFile parse_system_file(std::string_view text) {
  SystemFile out;
  bool have_names = false;
  bool have_dimension = false;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    const std::size_t at = offset;
    offset = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) syntax(at, "expected 'key: value'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));

    if (key == "indeterminates") {
      std::string_view rest = value;
      while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        const std::string_view name = trim(rest.substr(0, comma));
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name.front())) || name.front() == '_') ||
            !std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
          syntax(at, "bad indeterminate name");
        out.names.emplace_back(name);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      have_names = true;
    } else if (key == "dimension") {
      out.dimension = static_cast<int>(to_integer(value, at));
      have_dimension = true;
    } else if (key == "mode") {
      if (value == "time") {
        out.time_mode = true;
      } else if (value != "constant") {
        syntax(at, "mode must be constant or time");
      }
    } else if (key == "equation") {
      out.equations.emplace_back(value);
    } else if (key == "inequation") {
      out.inequation = std::string(value);
    } else if (key == "seed") {
      out.seed = static_cast<std::uint64_t>(to_integer(value, at));
    } else if (key == "trunc") {
      out.truncation = static_cast<int>(to_integer(value, at));
    } else if (key == "backend") {
      try {
        out.backend = parse_backend(value);
      } catch (const ParseError&) {
        syntax(at, "backend must be exact or float");
      }
    } else if (key == "degree-bound") {
      out.degree_bound = static_cast<int>(to_integer(value, at));
    } else if (key == "trials") {
      out.trials = static_cast<int>(to_integer(value, at));
    } else {
      syntax(at, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_names || out.names.empty()) syntax(0, "missing indeterminates");
  if (!have_dimension) syntax(0, "missing dimension");
  if (std::set<std::string>(out.names.begin(), out.names.end()).size() != out.names.size())
    syntax(0, "indeterminate names must be unique");
  if (out.time_mode && std::find(out.names.begin(), out.names.end(), "t") != out.names.end())
    syntax(0, "t is reserved in time mode");
  if (out.dimension < 0 || out.dimension >= static_cast<int>(out.names.size()))
    syntax(0, "dimension must be below the number of indeterminates");
  if (out.equations.empty()) syntax(0, "missing equation");
  return out;
}

DiffPoly parse_in(const SystemFile& file, std::string_view text) { return parse_diffpoly(text, file.names, file.time_mode); }

System to_system(const SystemFile& file) {
  System sys;
  sys.n = static_cast<int>(file.names.size());
  sys.d = file.dimension;
  for (const std::string& eq : file.equations) sys.equations.push_back(parse_in(file, eq));
  if (file.inequation) sys.inequation = parse_in(file, *file.inequation);
  return sys;
}

std::vector<mpq_class> parse_series(std::string_view text) {
  std::vector<mpq_class> out;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t comma = text.find(',', offset);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string item(trim(text.substr(offset, comma - offset)));
    mpq_class q;
    if (item.empty() || q.set_str(item, 10) != 0 || q.get_den() == 0)
      throw ParseError(ErrorCode::SyntaxError, offset, "bad series coefficient at position " + std::to_string(offset));
    q.canonicalize();
    out.push_back(q);
    offset = comma + 1;
  }
  return out;
}

}  // namespace diffnorm::cli
