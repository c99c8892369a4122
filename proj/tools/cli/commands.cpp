#include "commands.hpp"

#include <algorithm>
#include <cctype>

namespace diffnorm::cli {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::NegativeDerivativeOrder:
      return 2;
    case ErrorCode::PreconditionOrder:
    case ErrorCode::NotDependent:
    case ErrorCode::QInIdeal:
    case ErrorCode::ReducibleInput:
    case ErrorCode::UndefinedSeparant:
    case ErrorCode::BothConstantInV:
      return 3;
    case ErrorCode::ExhaustedTrials:
    case ErrorCode::BoundExceeded:
      return 4;
    case ErrorCode::NoRationalRoot:
      return 5;
    case ErrorCode::GuardUnsatisfiable:
    case ErrorCode::InconsistentInitialCondition:
    case ErrorCode::TimeComponentNotAffine:
      return 6;
    default:
      return 1;
  }
}

std::string rational_string(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::string render(const Document& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string scalar_string(const Scalar& s) {
  return s.domain() == Domain::Rational ? rational_string(s.rational()) : s.to_string();
}

Document series_json(const TruncSeries& s) {
  Document out = Document::array();
  for (const Scalar& c : s.coeffs()) out.push_back(scalar_string(c));
  return out;
}

bool is_document(const std::string& source) {
  for (char c : source)
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
  return false;
}

SystemFile load_system(const std::string& source, const Flags& flags) {
  SystemFile file = parse_system_file(source);
  if (flags.time) file.time_mode = true;
  if (file.time_mode && std::find(file.names.begin(), file.names.end(), "t") != file.names.end())
    throw ParseError(ErrorCode::SyntaxError, 0, "t is reserved in time mode");
  return file;
}

std::string mode_name(bool time) { return time ? "time" : "constant"; }

Document header(const std::string& command, const SystemFile& file) {
  Document doc;
  doc["command"] = command;
  doc["indeterminates"] = file.names;
  doc["dimension"] = file.dimension;
  doc["mode"] = mode_name(file.time_mode);
  return doc;
}

int distinguished(const SystemFile& file) { return static_cast<int>(file.names.size()); }

DiffPoly flag_poly(const SystemFile& file, const Flags& flags) {
  if (flags.poly.empty()) {
    if (file.inequation) return parse_in(file, *file.inequation);
    throw ParseError(ErrorCode::SyntaxError, 0, "missing --poly");
  }
  return parse_in(file, flags.poly);
}

ShiftSearchParams shift_params(const SystemFile& file, const Flags& flags) {
  ShiftSearchParams p;
  p.seed = flags.seed.value_or(file.seed.value_or(p.seed));
  p.degree_bound = flags.degree_bound.value_or(file.degree_bound.value_or(p.degree_bound));
  p.trials = flags.trials.value_or(file.trials.value_or(p.trials));
  return p;
}

Document automorphism_json(const Automorphism& a, const NameList& names) {
  Document doc;
  doc["tag"] = a.tag;
  Document fwd, inv;
  for (const auto& [i, img] : a.forward) fwd[variable_name(i, names)] = format_diffpoly(img, names);
  for (const auto& [i, img] : a.inverse) inv[variable_name(i, names)] = format_diffpoly(img, names);
  doc["forward"] = fwd;
  doc["inverse"] = inv;
  return doc;
}

Automorphism automorphism_from_json(const Document& doc, const NameList& names, bool time) {
  Automorphism a;
  a.tag = doc.at("tag").get<std::string>();
  for (int i = 1; i <= static_cast<int>(names.size()); ++i) {
    const std::string& name = names[static_cast<std::size_t>(i - 1)];
    a.forward.emplace(i, parse_diffpoly(doc.at("forward").at(name).get<std::string>(), names, time));
    a.inverse.emplace(i, parse_diffpoly(doc.at("inverse").at(name).get<std::string>(), names, time));
  }
  return a;
}

Document cv_json(const ChangeOfVariables& cv, const NameList& names) {
  Document doc;
  doc["has_renaming"] = cv.has_renaming;
  Document steps = Document::array();
  for (const Automorphism& a : cv.steps) steps.push_back(automorphism_json(a, names));
  doc["steps"] = steps;
  doc["hypersurface"] = {{"P", format_diffpoly(cv.p_input, names)}, {"inequation", format_diffpoly(cv.q_input, names)}};
  doc["two_polynomials"] = {{"S", format_diffpoly(cv.s, names)}};
  doc["transformed"] = {{"P", format_diffpoly(cv.p_star, names)}, {"guard", format_diffpoly(cv.guard_star, names)}};
  Document deps = Document::object();
  for (const auto& [i, e] : cv.dependents)
    deps[variable_name(i, names)] = {{"numerator", format_diffpoly(e.numerator, names)},
                                     {"denominator", format_diffpoly(e.denominator, names)}};
  doc["dependents"] = deps;
  return doc;
}

struct LoadedCv {
  ChangeOfVariables cv;
  NameList names;
  bool time = false;
  std::optional<std::uint64_t> seed;
};

LoadedCv cv_from_json(const std::string& source) {
  Document doc;
  try {
    doc = Document::parse(source);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ErrorCode::SyntaxError, 0, std::string("bad document: ") + e.what());
  }
  try {
    LoadedCv out;
    out.names = doc.at("indeterminates").get<NameList>();
    out.time = doc.at("mode").get<std::string>() == "time";
    if (doc.contains("seed")) out.seed = doc.at("seed").get<std::uint64_t>();
    const Document& c = doc.at("change_of_variables");
    auto parse = [&](const Document& j) { return parse_diffpoly(j.get<std::string>(), out.names, out.time); };
    ChangeOfVariables& cv = out.cv;
    cv.n = static_cast<int>(out.names.size());
    cv.d = doc.at("dimension").get<int>();
    cv.domain = out.time ? Domain::RationalInT : Domain::Rational;
    cv.has_renaming = c.at("has_renaming").get<bool>();
    for (const Document& s : c.at("steps")) cv.steps.push_back(automorphism_from_json(s, out.names, out.time));
    cv.p_input = parse(c.at("hypersurface").at("P"));
    cv.q_input = parse(c.at("hypersurface").at("inequation"));
    cv.s = parse(c.at("two_polynomials").at("S"));
    cv.p_star = parse(c.at("transformed").at("P"));
    cv.guard_star = parse(c.at("transformed").at("guard"));
    for (const auto& [name, e] : c.at("dependents").items()) {
      const auto it = std::find(out.names.begin(), out.names.end(), name);
      if (it == out.names.end()) throw ParseError(ErrorCode::SyntaxError, 0, "unknown dependent " + name);
      cv.dependents.emplace(static_cast<int>(it - out.names.begin()) + 1,
                            DependentExpression{parse(e.at("numerator")), parse(e.at("denominator"))});
    }
    check_invariants(cv);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ErrorCode::SyntaxError, 0, std::string("bad document: ") + e.what());
  }
}

ExtensionOptions extension_options(std::optional<std::uint64_t> file_seed, std::optional<Backend> file_backend,
                                   const Flags& flags) {
  ExtensionOptions o;
  o.seed = flags.seed.value_or(file_seed.value_or(o.seed));
  o.backend = flags.backend.value_or(file_backend.value_or(o.backend));
  return o;
}

std::vector<TruncSeries> input_series(const Flags& flags, int d, int truncation) {
  if (static_cast<int>(flags.inputs.size()) != d)
    throw ParseError(ErrorCode::SyntaxError, 0, "expected " + std::to_string(d) + " --input series");
  std::vector<TruncSeries> out;
  for (const std::string& text : flags.inputs) out.push_back(TruncSeries::from_rationals(parse_series(text), truncation));
  return out;
}

Document named_series(const std::vector<TruncSeries>& tuple, const NameList& names, int skip = -1) {
  Document doc;
  std::size_t k = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    doc[names[k++]] = series_json(tuple[i]);
  }
  return doc;
}

Document extension_json(const ExtensionReport& r) {
  Document doc;
  doc["backend"] = to_string(r.backend);
  Document free = Document::array();
  for (const Scalar& v : r.free_values) free.push_back(scalar_string(v));
  doc["free_initial_values"] = free;
  doc["root"] = scalar_string(r.root);
  doc["residual_depth"] = r.residual_depth;
  doc["candidates_tried"] = r.candidates_tried;
  return doc;
}

}  // namespace

Document run_reduce(const std::string& source, const Flags& flags) {
  const SystemFile file = load_system(source, flags);
  const DiffPoly p = parse_in(file, file.equations.front());
  const DiffPoly q = flag_poly(file, flags);
  const int i = distinguished(file);
  const ReductionCertificate cert = partial_reduce(q, p, i);
  Document doc = header("reduce", file);
  doc["P"] = format_diffpoly(p, file.names);
  doc["Q"] = format_diffpoly(q, file.names);
  doc["separant"] = format_diffpoly(separant_initial(p, i).separant, file.names);
  doc["power"] = cert.power;
  Document cof = Document::object();
  for (const auto& [j, c] : cert.cofactors) cof[std::to_string(j)] = format_diffpoly(c, file.names);
  doc["cofactors"] = cof;
  doc["remainder"] = format_diffpoly(cert.remainder, file.names);
  doc["certificate_holds"] = certificate_holds(cert, q, p, i);
  return doc;
}

Document run_member(const std::string& source, const Flags& flags) {
  const SystemFile file = load_system(source, flags);
  const DiffPoly p = parse_in(file, file.equations.front());
  const DiffPoly q = flag_poly(file, flags);
  Document doc = header("member", file);
  doc["P"] = format_diffpoly(p, file.names);
  doc["Q"] = format_diffpoly(q, file.names);
  doc["member"] = saturation_membership(q, p, distinguished(file));
  return doc;
}

Document run_manageable(const std::string& source, const Flags& flags) {
  const SystemFile file = load_system(source, flags);
  const DiffPoly q = flag_poly(file, flags);
  const int i = distinguished(file);
  Document doc = header("manageable", file);
  doc["Q"] = format_diffpoly(q, file.names);
  doc["manageable"] = is_manageable(q, i);
  if (flags.transform) {
    const ShiftSearchParams params = shift_params(file, flags);
    const Automorphism f2 = make_manageable(q, i, params, static_cast<int>(file.names.size()));
    doc["seed"] = params.seed;
    doc["automorphism"] = automorphism_json(f2, file.names);
    doc["transformed"] = format_diffpoly(apply(f2, q), file.names);
  }
  return doc;
}

Document run_normalize(const std::string& source, const Flags& flags) {
  const SystemFile file = load_system(source, flags);
  const System sys = to_system(file);
  NormalizeParams params;
  params.shift = shift_params(file, flags);
  const ChangeOfVariables cv = normalize(sys, params);
  Document doc = header("normalize", file);
  doc["seed"] = params.shift.seed;
  Document input;
  input["equations"] = file.equations;
  if (file.inequation) input["inequation"] = *file.inequation;
  doc["input"] = input;
  doc["change_of_variables"] = cv_json(cv, file.names);
  return doc;
}

Document run_extend(const std::string& source, const Flags& flags) {
  Document doc;
  doc["command"] = "extend";
  ChangeOfVariables cv;
  NameList names;
  bool time = false;
  ExtensionOptions options;
  int truncation = 10;
  bool through_cv = is_document(source);
  if (through_cv) {
    LoadedCv loaded = cv_from_json(source);
    cv = std::move(loaded.cv);
    names = std::move(loaded.names);
    time = loaded.time;
    options = extension_options(loaded.seed, std::nullopt, flags);
    truncation = flags.truncation.value_or(truncation);
  } else {
    const SystemFile file = load_system(source, flags);
    const System sys = to_system(file);
    if (sys.n != sys.d + 1) throw ParseError(ErrorCode::SyntaxError, 0, "identity extension needs a single hypersurface equation");
    names = file.names;
    time = file.time_mode;
    cv.n = sys.n;
    cv.d = sys.d;
    cv.domain = sys.equations.front().domain();
    cv.p_input = cv.p_star = sys.equations.front();
    cv.q_input = cv.guard_star = sys.inequation.value_or(DiffPoly::constant(1, cv.domain));
    cv.s = cv.q_input;
    options = extension_options(file.seed, file.backend, flags);
    truncation = flags.truncation.value_or(file.truncation.value_or(truncation));
  }
  doc["indeterminates"] = names;
  doc["dimension"] = cv.d;
  doc["mode"] = mode_name(time);
  doc["through"] = through_cv ? "change_of_variables" : "identity";
  doc["truncation"] = truncation;
  doc["seed"] = options.seed;

  const int top = cv.d + 1;
  const int h = cv.p_star.order_wrt(top).value_or(0);
  const int need = std::max(truncation + std::max(0, cv.p_star.max_order().value_or(0) - h),
                            cv.guard_star.max_order().value_or(0));
  const std::vector<TruncSeries> inputs = input_series(flags, cv.d, need);
  const NameList head(names.begin(), names.begin() + top);

  if (time) {
    const TimeExtension ext = extend_solution_time(cv, inputs, truncation, options);
    doc["lambda"] = scalar_string(ext.lambda);
    doc["extension"] = extension_json(ext.report);
    doc["solution"] = named_series(ext.solution, head);
    return doc;
  }
  const ExtensionReport report = extend_solution(to_rational(cv.p_star), to_rational(cv.guard_star), inputs, truncation, options);
  doc["extension"] = extension_json(report);
  doc["solution"] = named_series(report.tuple, head);
  if (through_cv) doc["original"] = named_series(pull_back(cv, report.tuple), names);
  return doc;
}

Document run_verify(const std::string& source, const Flags& flags) {
  ChangeOfVariables cv;
  NameList names;
  bool time = false;
  std::uint64_t seed = 1;
  int trials = 20;
  int truncation = 10;
  ExtensionOptions options;
  if (is_document(source)) {
    LoadedCv loaded = cv_from_json(source);
    cv = std::move(loaded.cv);
    names = std::move(loaded.names);
    time = loaded.time;
    seed = flags.seed.value_or(loaded.seed.value_or(seed));
  } else {
    const SystemFile file = load_system(source, flags);
    NormalizeParams params;
    params.shift = shift_params(file, flags);
    cv = normalize(to_system(file), params);
    names = file.names;
    time = file.time_mode;
    seed = params.shift.seed;
    trials = file.trials.value_or(trials);
    truncation = file.truncation.value_or(truncation);
    options.backend = file.backend.value_or(options.backend);
  }
  trials = flags.trials.value_or(trials);
  truncation = flags.truncation.value_or(truncation);
  options.backend = flags.backend.value_or(options.backend);

  const SampleReport report = verify_surjectivity_sample(cv, trials, truncation, seed, options);
  Document doc;
  doc["command"] = "verify";
  doc["indeterminates"] = names;
  doc["dimension"] = cv.d;
  doc["mode"] = mode_name(time);
  doc["seed"] = seed;
  doc["truncation"] = truncation;
  doc["trials"] = report.trials;
  doc["successes"] = report.successes;
  Document results = Document::array();
  for (const SampleTrial& t : report.results) {
    Document r;
    r["seed"] = t.seed;
    Document ins = Document::array();
    for (const auto& coeffs : t.inputs) {
      Document c = Document::array();
      for (const mpq_class& q : coeffs) c.push_back(rational_string(q));
      ins.push_back(c);
    }
    r["inputs"] = ins;
    r["success"] = t.success;
    if (t.success) {
      r["backend"] = to_string(t.backend);
      r["residual_depth"] = t.residual_depth;
    } else {
      r["error"] = t.error;
    }
    results.push_back(r);
  }
  doc["results"] = results;
  return doc;
}

}  // namespace diffnorm::cli
