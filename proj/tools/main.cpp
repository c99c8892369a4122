#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace diffnorm::cli;
  CLI::App app{"Differential Noether normalization: reduction, normal forms and power-series extension"};
  app.require_subcommand(1);

  Flags flags;
  std::string path;
  std::string output;
  std::uint64_t seed = 0;
  int trunc = 0, degree_bound = 0, trials = 0;
  std::string backend;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", path, "system file, or change-of-variables document for extend/verify")->required();
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--trunc", trunc, "truncation order M");
    sub->add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->add_flag("--time", flags.time, "time mode: t is the independent variable, t' = 1");
    sub->add_option("--degree-bound", degree_bound, "maximal shift degree");
    sub->add_option("--trials", trials, "random trials");
    sub->add_option("-o,--output", output, "write the result document here instead of stdout");
  };

  CLI::App* reduce = app.add_subcommand("reduce", "partial reduction of --poly by the equation, with certificate");
  CLI::App* member = app.add_subcommand("member", "saturation-ideal membership of --poly");
  CLI::App* manageable = app.add_subcommand("manageable", "manageability test, --transform to make --poly manageable");
  CLI::App* normalize = app.add_subcommand("normalize", "emit the change of variables");
  CLI::App* extend = app.add_subcommand("extend", "extend --input series to a power-series solution");
  CLI::App* verify = app.add_subcommand("verify", "extend random inputs through the change of variables");
  for (CLI::App* sub : {reduce, member, manageable, normalize, extend, verify}) common(sub);
  for (CLI::App* sub : {reduce, member, manageable}) sub->add_option("--poly", flags.poly, "polynomial Q (default: the inequation)");
  manageable->add_flag("--transform", flags.transform, "search for a shift making Q manageable");
  extend->add_option("--input", flags.inputs, "input series, comma-separated rationals lowest degree first (repeat once per input)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
  CLI::App* sub = app.get_subcommands().front();
  if (given(sub, "--seed")) flags.seed = seed;
  if (given(sub, "--trunc")) flags.truncation = trunc;
  if (given(sub, "--degree-bound")) flags.degree_bound = degree_bound;
  if (given(sub, "--trials")) flags.trials = trials;

  try {
    if (!backend.empty()) flags.backend = parse_backend(backend);
    const std::string source = read_file(path);
    Document doc;
    if (sub == reduce) doc = run_reduce(source, flags);
    if (sub == member) doc = run_member(source, flags);
    if (sub == manageable) doc = run_manageable(source, flags);
    if (sub == normalize) doc = run_normalize(source, flags);
    if (sub == extend) doc = run_extend(source, flags);
    if (sub == verify) doc = run_verify(source, flags);
    const std::string text = render(doc);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      out << text;
      if (!out) throw std::runtime_error("cannot write " + output);
    }
    return 0;
  } catch (const diffnorm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
