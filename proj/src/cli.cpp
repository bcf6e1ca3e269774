#include "grasshadri/cli.hpp"

#include "grasshadri/error.hpp"
#include "grasshadri/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace grasshadri::cli {

namespace {

using report::Json;

constexpr long kDefaultOracleBox = 8;

struct Options {
  std::string spec_path;
  std::optional<long> r;
  std::string a;
  std::string b;
  std::string stratum = "generic";
  std::string oracle_box;
  bool oracle = false;
  std::string json_path;
  bool strict = false;
  std::string a_range;
  std::string b_range;
};

/// Exit with code 2: a result was requested that no criterion supports.
struct Unavailable {
  std::string message;
};

struct Context {
  BundleSpec spec;
  HNData hn;
  Rank r;
  report::RSource source;
};

Context load(const Options& opt) {
  BundleSpec spec = load_bundle_spec(opt.spec_path);
  HNData hn = spec.hn();
  Rank r = 0;
  report::RSource source = report::RSource::Argument;
  if (opt.r) {
    if (*opt.r < 1) throw Error(ErrorCode::InvalidInput, "--r must be >= 1");
    r = *opt.r;
  } else if (spec.r) {
    r = *spec.r;
    source = report::RSource::File;
  } else if (hn.length() == 2) {
    r = hn.tail_rank(1);
    source = report::RSource::Inferred;
  } else {
    throw Unavailable{"r is not given and the HN filtration has " +
                      std::to_string(hn.length()) +
                      " pieces; pass --r or set \"r\" in the spec file"};
  }
  return {std::move(spec), std::move(hn), r, source};
}

Json base_report(const char* command, const Context& ctx) {
  Json doc;
  doc["command"] = command;
  doc["input"] = report::input_section(ctx.spec, ctx.r, ctx.source);
  doc["hn"] = report::hn_section(ctx.hn);
  return doc;
}

Json analyze_report(const char* command, const Context& ctx) {
  Json doc = base_report(command, ctx);
  const Json level = report::level_section(ctx.hn, ctx.r);
  for (const auto& [key, value] : level.items()) doc[key] = value;
  return doc;
}

long oracle_box(const Options& opt) {
  std::string text = opt.oracle_box;
  if (text.empty()) {
    if (const char* env = std::getenv("GRASSHADRI_ORACLE_BOX"); env && *env) {
      text = env;
    }
  }
  if (text.empty()) return kDefaultOracleBox;
  const Integer box = parse_integer(text);
  if (box < 1 || !box.fits_slong_p()) {
    throw Error(ErrorCode::InvalidInput, "oracle box must be a positive integer");
  }
  return box.get_si();
}

/// Self-test hook: shifts the oracle minimum before it is compared, so the
/// disagreement path can be exercised end to end.
Rational oracle_offset() {
  if (const char* env = std::getenv("GRASSHADRI_ORACLE_OFFSET"); env && *env) {
    return parse_rational(env);
  }
  return 0;
}

PointStratum stratum_of(const Options& opt) {
  const auto s = parse_stratum(opt.stratum);
  if (!s) {
    throw Error(ErrorCode::InvalidInput,
                "--stratum must be generic, base-locus or gamma-s (got '" +
                    opt.stratum + "')");
  }
  return *s;
}

Rational required_rational(const std::string& text, const char* flag) {
  if (text.empty()) {
    throw Error(ErrorCode::InvalidInput, std::string(flag) + " is required");
  }
  return parse_rational(text);
}

std::vector<Rational> parse_range(const std::string& text, const char* flag) {
  if (text.empty()) {
    throw Error(ErrorCode::InvalidInput, std::string(flag) + " is required");
  }
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw Error(ErrorCode::InvalidInput,
                std::string(flag) + " must look like lo:hi or lo:hi:step");
  }
  const Rational lo = parse_rational(parts[0]);
  const Rational hi = parse_rational(parts[1]);
  const Rational step = parts.size() == 3 ? parse_rational(parts[2]) : Rational(1);
  if (step <= 0) {
    throw Error(ErrorCode::InvalidInput, std::string(flag) + " step must be positive");
  }
  std::vector<Rational> values;
  for (Rational v = lo; v <= hi; v += step) values.push_back(v);
  return values;
}

struct Outcome {
  Json doc;
  int code = kExitOk;
};

Outcome cmd_analyze(const Options& opt) {
  return {analyze_report("analyze", load(opt))};
}

Outcome cmd_cones(const Options& opt) {
  const Context ctx = load(opt);
  Json doc = analyze_report("cones", ctx);
  doc["cones"] = report::cones_section(ctx.hn, ctx.r);
  return {std::move(doc)};
}

Outcome cmd_seshadri(const Options& opt) {
  const Context ctx = load(opt);
  const Rational a = required_rational(opt.a, "--a");
  const Rational b = required_rational(opt.b, "--b");
  const PointStratum stratum = stratum_of(opt);
  const SeshadriReport sr = analyze_seshadri(ctx.hn, ctx.r, a, b);
  if (opt.strict && !sr.authoritative()) {
    throw Unavailable{"neither the slope-gap nor the aligned-head criterion holds"};
  }
  Json doc = analyze_report("seshadri", ctx);
  Json section = report::seshadri_section(sr, stratum);
  int code = kExitOk;
  if (opt.oracle) {
    const long box = oracle_box(opt);
    if (sr.authoritative()) {
      OracleResult oracle = oracle_min_ratio(ctx.hn, ctx.r, a, b, stratum, box);
      oracle.min += oracle_offset();
      const bool agree = oracle_agrees(oracle, sr.at(stratum).value);
      section["oracle"] = report::oracle_json(oracle, box, agree);
      if (!agree) code = kExitOracleDisagreement;
    } else {
      Json unavailable;
      unavailable["box"] = box;
      unavailable["verdict"] = "UNAVAILABLE";
      section["oracle"] = std::move(unavailable);
    }
  }
  doc["seshadri"] = std::move(section);
  return {std::move(doc), code};
}

Outcome cmd_h0(const Options& opt) {
  const Context ctx = load(opt);
  if (!ctx.spec.is_split()) {
    throw Error(ErrorCode::InvalidInput,
                "h0 needs a split bundle ('summands'), not bare HN data");
  }
  Json doc = base_report("h0", ctx);
  doc["sections"] = report::sections_section(ctx.spec.split(), ctx.r);
  doc["unique_divisor"] =
      report::unique_divisor_section(unique_divisor_check(ctx.spec.split(), ctx.r));
  return {std::move(doc)};
}

Outcome cmd_prop1(const Options& opt) {
  const Context ctx = load(opt);
  Json doc = base_report("prop1", ctx);
  doc["unique_divisor"] = report::unique_divisor_section(
      ctx.spec.is_split() ? unique_divisor_check(ctx.spec.split(), ctx.r)
                          : unique_divisor_check(ctx.hn, ctx.r));
  return {std::move(doc)};
}

Outcome cmd_sweep(const Options& opt) {
  const Context ctx = load(opt);
  const auto as = parse_range(opt.a_range, "--a-range");
  const auto bs = parse_range(opt.b_range, "--b-range");
  Json doc = analyze_report("sweep", ctx);
  Json records = Json::array();
  for (const Rational& a : as) {
    for (const Rational& b : bs) {
      const SeshadriReport sr = analyze_seshadri(ctx.hn, ctx.r, a, b);
      if (opt.strict && !sr.authoritative()) {
        throw Unavailable{"neither the slope-gap nor the aligned-head criterion holds"};
      }
      Json record;
      record["a"] = to_string(a);
      record["b"] = to_string(b);
      record["criterion"] = criterion_name(sr.criterion);
      Json strata = Json::array();
      for (const StratumResult& s : sr.strata) strata.push_back(report::stratum_json(s));
      record["strata"] = std::move(strata);
      record["eps_one"] = sr.authoritative() ? Json(to_string(sr.eps_one)) : Json(nullptr);
      record["eps_inf"] = sr.authoritative() ? Json(to_string(sr.eps_inf)) : Json(nullptr);
      records.push_back(std::move(record));
    }
  }
  doc["records"] = std::move(records);
  return {std::move(doc)};
}

void emit(const Outcome& outcome, const Options& opt, std::ostream& out) {
  if (opt.json_path == "-") {
    out << report::to_json_text(outcome.doc);
    return;
  }
  if (!opt.json_path.empty()) {
    std::ofstream file(opt.json_path, std::ios::binary);
    if (!file) {
      throw Error(ErrorCode::InvalidInput, "cannot write '" + opt.json_path + "'");
    }
    file << report::to_json_text(outcome.doc);
  }
  out << report::to_plain_text(outcome.doc);
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("spec", opt.spec_path, "bundle specification (JSON)")->required();
  sub->add_option("--r", opt.r, "rank of the quotients parametrized by Gr(E)");
  sub->add_option("--json", opt.json_path, "write the JSON report to PATH ('-' for stdout)");
}

void add_seshadri_options(CLI::App* sub, Options& opt) {
  sub->add_option("--stratum", opt.stratum, "generic | base-locus | gamma-s");
  sub->add_option("--oracle", opt.oracle_box, "cross-check with the ratio oracle [BOX]")
      ->expected(0, 1);
  sub->add_flag("--strict", opt.strict, "exit 2 when no criterion applies");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact positivity invariants and Seshadri constants on Grassmann "
               "bundles over curves",
               "grasshadri"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "HN data, theta, normalization, criteria");
  auto* cones = app.add_subcommand("cones", "nef, pseudo-effective and curve cones");
  auto* seshadri = app.add_subcommand("seshadri", "Seshadri constants of a L + b M");
  auto* h0 = app.add_subcommand("h0", "sections of O(1) for split bundles");
  auto* prop1 = app.add_subcommand("prop1", "unique effective divisor in [O(1)] - zeta L");
  auto* sweep = app.add_subcommand("sweep", "Seshadri constants over a grid of (a, b)");
  for (auto* sub : {analyze, cones, seshadri, h0, prop1, sweep}) add_common(sub, opt);
  seshadri->add_option("--a", opt.a, "coefficient of L (p or p/q)");
  seshadri->add_option("--b", opt.b, "coefficient of M (p or p/q)");
  add_seshadri_options(seshadri, opt);
  sweep->add_option("--a-range", opt.a_range, "lo:hi[:step]");
  sweep->add_option("--b-range", opt.b_range, "lo:hi[:step]");
  sweep->add_flag("--strict", opt.strict, "exit 2 when no criterion applies");

  std::vector<std::string> argv_storage{"grasshadri"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  opt.oracle = seshadri->count("--oracle") > 0;

  try {
    Outcome outcome;
    if (analyze->parsed()) outcome = cmd_analyze(opt);
    else if (cones->parsed()) outcome = cmd_cones(opt);
    else if (seshadri->parsed()) outcome = cmd_seshadri(opt);
    else if (h0->parsed()) outcome = cmd_h0(opt);
    else if (prop1->parsed()) outcome = cmd_prop1(opt);
    else outcome = cmd_sweep(opt);
    emit(outcome, opt, out);
    if (outcome.code == kExitOracleDisagreement) {
      err << "error: oracle disagrees with the closed-form value\n";
    }
    return outcome.code;
  } catch (const Unavailable& u) {
    err << "error: " << u.message << "\n";
    return kExitHypothesisUnavailable;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace grasshadri::cli
