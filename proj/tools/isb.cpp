// Command-line front end for the isb library.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isb/classify.hpp"
#include "isb/constructions.hpp"
#include "isb/io.hpp"
#include "isb/search.hpp"
#include "isb/semibrace.hpp"
#include "isb/solutions.hpp"

namespace fs = std::filesystem;
using isb::io::Json;

namespace {

enum Exit : int { kHolds = 0, kFails = 1, kMalformed = 2, kCapped = 3 };

struct Output {
  bool json = false;
  bool witnesses = false;
  std::vector<std::string> labels;

  std::string label(Json const& e) const {
    if (!e.is_number_unsigned()) return e.dump();
    auto const i = e.get<std::size_t>();
    return i < labels.size() ? labels[i] : std::to_string(i);
  }

  void text(Json const& doc, std::string const& prefix = "") const {
    for (auto const& [key, value] : doc.items()) {
      std::string const name = prefix.empty() ? key : prefix + "." + key;
      if (value.is_object() && value.contains("holds") && value.at("holds").is_boolean()) {
        bool const holds = value.at("holds").get<bool>();
        std::cout << name << ": " << (holds ? "holds" : "fails");
        if (!holds && witnesses && value.contains("witness")) {
          std::cout << " at (";
          bool first = true;
          for (auto const& w : value.at("witness")) {
            std::cout << (first ? "" : ", ") << label(w);
            first = false;
          }
          std::cout << ")";
        }
        std::cout << "\n";
      } else if (value.is_object()) {
        text(value, name);
      } else if (key == "add" || key == "mul" || key == "table" || key == "lambda" || key == "rho") {
        std::cout << name << ":\n";
        for (auto const& row : value) {
          std::cout << " ";
          for (auto const& x : row) std::cout << " " << label(x);
          std::cout << "\n";
        }
      } else {
        std::cout << name << ": " << value.dump() << "\n";
      }
    }
  }

  void emit(Json const& doc) const {
    if (json)
      std::cout << doc.dump(2) << "\n";
    else
      text(doc);
  }
};

int exit_for(isb::ErrorKind kind) {
  switch (kind) {
    case isb::ErrorKind::MalformedTable:
    case isb::ErrorKind::DimensionMismatch:
      return kMalformed;
    case isb::ErrorKind::OrderExceedsCap:
    case isb::ErrorKind::Timeout:
      return kCapped;
    default:
      return kFails;
  }
}

std::optional<std::chrono::milliseconds> parse_timeout(std::string const& text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  double value = 0;
  try {
    value = std::stod(text, &pos);
  } catch (std::exception const&) {
    throw isb::AlgebraError(isb::ErrorKind::MalformedTable, "bad --timeout " + text);
  }
  std::string const unit = text.substr(pos);
  double scale = 1000.0;
  if (unit == "ms")
    scale = 1.0;
  else if (unit == "m")
    scale = 60000.0;
  else if (!unit.empty() && unit != "s")
    throw isb::AlgebraError(isb::ErrorKind::MalformedTable, "bad --timeout unit " + unit);
  return std::chrono::milliseconds(static_cast<long long>(value * scale));
}

std::vector<isb::Element> parse_prefix(std::string const& text) {
  std::vector<isb::Element> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(static_cast<isb::Element>(std::stoul(item)));
    } catch (std::exception const&) {
      throw isb::AlgebraError(isb::ErrorKind::MalformedTable, "bad --start-prefix entry " + item);
    }
  }
  return out;
}

std::vector<std::string> labels_of(Json const& doc) {
  if (doc.contains("labels")) return doc.at("labels").get<std::vector<std::string>>();
  return {};
}

// ---------------------------------------------------------------------------

int cmd_check_semigroup(Output& out, std::string const& path) {
  Json const doc = isb::io::load_json_file(path);
  auto t = isb::io::magma_from_json(doc);
  out.labels = t.labels();
  auto assoc = isb::check_associative(t);
  Json report{{"order", t.order()}, {"associative", isb::io::to_json(assoc)}};
  if (assoc) report["idempotents"] = isb::FiniteSemigroup(t).idempotents();
  out.emit(report);
  return assoc ? kHolds : kFails;
}

int cmd_check_inverse(Output& out, std::string const& path) {
  auto t = isb::io::magma_from_json(isb::io::load_json_file(path));
  out.labels = t.labels();
  Json report{{"order", t.order()}};
  auto assoc = isb::check_associative(t);
  report["associative"] = isb::io::to_json(assoc);
  if (!assoc) {
    report["inverse"] = Json{{"holds", false}};
    out.emit(report);
    return kFails;
  }
  try {
    isb::InverseSemigroup m{isb::FiniteSemigroup(t)};
    report["inverse"] = Json{{"holds", true}};
    report["inv"] = m.inverses();
    report["classification"] = isb::io::to_json(isb::classify_multiplicative(m));
    out.emit(report);
    return kHolds;
  } catch (isb::AlgebraError const& e) {
    if (e.kind() != isb::ErrorKind::NotRegular && e.kind() != isb::ErrorKind::NonUniqueInverse) throw;
    report["inverse"] = Json{{"holds", false}, {"witness", e.witness()}, {"error", isb::to_string(e.kind())}};
    out.emit(report);
    return kFails;
  }
}

int cmd_check_semibrace(Output& out, std::string const& path) {
  Json doc = isb::io::load_json_file(path);
  if (doc.contains("semibrace")) doc = doc.at("semibrace");
  out.labels = labels_of(doc);
  auto s = isb::io::semibrace_from_json(doc);
  auto cls = isb::classify_semibrace(s);
  Json report{{"valid", true},
              {"order", s.order()},
              {"classification", isb::io::to_json(cls)},
              {"lambda_endomorphism", isb::io::to_json(isb::check_lambda_endomorphism(s))},
              {"lambda_product_identity", isb::io::to_json(isb::check_lambda_product_identity(s))}};
  out.emit(report);
  return kHolds;
}

struct SolutionOptions {
  std::string from_semibrace;
  std::string pairmap;
  std::string input;
  std::string which = "braid";
  bool flip = false;
  bool include_pairmap = false;
};

int cmd_solution(Output& out, SolutionOptions const& o) {
  std::string path = !o.from_semibrace.empty() ? o.from_semibrace : !o.pairmap.empty() ? o.pairmap : o.input;
  if (path.empty()) throw isb::AlgebraError(isb::ErrorKind::MalformedTable, "no input given");
  Json doc = isb::io::load_json_file(path);
  if (doc.contains("semibrace")) doc = doc.at("semibrace");
  bool const is_pairmap = !o.pairmap.empty() || (o.from_semibrace.empty() && doc.contains("lambda"));

  Json report;
  std::optional<isb::InverseSemiBrace> s;
  isb::PairMap r;
  if (is_pairmap) {
    r = isb::io::pairmap_from_json(doc);
  } else {
    s = isb::io::semibrace_from_json(doc);
    r = isb::lambda_rho(*s);
  }
  out.labels = r.labels();
  if (o.flip) r = isb::flip_compose(r);

  auto const sol = isb::solution_report(r);
  report["report"] = isb::io::to_json(sol);
  report["flip"] = o.flip;
  if (o.include_pairmap) report["pairmap"] = isb::io::to_json(r);
  if (s && !o.flip) {
    report["sufficient_conditions"] = isb::io::to_json(isb::check_sufficient_conditions(*s));
    if (isb::classify_semibrace(*s).is_left_semibrace)
      report["condsolution"] = isb::io::to_json(isb::check_condsolution(*s));
  }

  bool holds = true;
  if (o.which == "braid")
    holds = sol.braid.holds;
  else if (o.which == "qybe")
    holds = sol.qybe.holds;
  else if (o.which == "pentagon")
    holds = sol.pentagon.holds;
  else if (o.which == "all")
    holds = sol.braid.holds && sol.qybe.holds && sol.pentagon.holds;
  report["which"] = o.which;
  report["holds"] = holds;
  out.emit(report);
  return holds ? kHolds : kFails;
}

struct BuildOptions {
  std::string kind;
  std::string spec;
  std::string variant;
  std::optional<isb::Element> e;
  std::size_t cap = isb::kProductCap;
};

int cmd_build(Output& out, BuildOptions const& o) {
  auto kind = isb::io::parse_product_kind(o.kind);
  if (!kind) throw isb::AlgebraError(isb::ErrorKind::MalformedTable, "unknown --kind " + o.kind);
  Json doc = isb::io::load_json_file(o.spec);
  if (*kind == isb::io::ProductKind::Example && doc.contains("table")) doc = Json{{"M", doc}};
  if (!o.variant.empty()) doc["variant"] = o.variant;
  if (o.e) doc["e"] = *o.e;
  auto spec = isb::io::parse_product_spec(doc, *kind, fs::path(o.spec).parent_path());
  auto built = isb::io::build_product(spec, o.cap);
  out.labels = built.structure.labels();
  Json report{{"kind", o.kind},
              {"semibrace", isb::io::to_json(built.structure)},
              {"verdict", built.verdict},
              {"consistent", built.consistent}};
  out.emit(report);
  return built.consistent ? kHolds : kFails;
}

struct SearchOptions {
  std::string input;
  std::optional<std::size_t> inverse_semigroups;
  std::string emit = "all";
  bool canonical = false;
  std::string timeout;
  std::string start_prefix;
  std::optional<std::size_t> cap;
};

isb::SearchConfig search_config(SearchOptions const& o) {
  isb::SearchConfig cfg;
  auto mode = isb::parse_emit_mode(o.emit);
  if (!mode) throw isb::AlgebraError(isb::ErrorKind::MalformedTable, "unknown --emit " + o.emit);
  cfg.emit = *mode;
  cfg.canonical_only = o.canonical;
  cfg.timeout = parse_timeout(o.timeout);
  cfg.start_prefix = parse_prefix(o.start_prefix);
  cfg.max_order = o.cap;
  return cfg;
}

int cmd_enumerate(SearchOptions const& o) {
  if (o.inverse_semigroups) {
    auto list = isb::enumerate_inverse_semigroups(*o.inverse_semigroups, parse_timeout(o.timeout));
    std::size_t i = 0;
    for (auto const& m : list)
      std::cout << Json{{"index", i++}, {"semigroup", isb::io::to_json(m.table())}, {"inv", m.inverses()}}.dump()
                << "\n";
    std::cout << Json{{"summary", {{"complete", true}, {"count", list.size()}, {"order", *o.inverse_semigroups}}}}.dump()
              << "\n";
    return kHolds;
  }
  if (o.input.empty()) throw isb::AlgebraError(isb::ErrorKind::MalformedTable, "no semigroup given");
  isb::InverseSemigroup m{isb::FiniteSemigroup(isb::io::magma_from_json(isb::io::load_json_file(o.input)))};
  std::vector<isb::SurveyRow> rows;
  std::size_t i = 0;
  auto outcome = isb::enumerate_additions(m, search_config(o), [&](isb::AdditionResult const& r) {
    std::string const id = "addition-" + std::to_string(i);
    std::cout << Json{{"index", i}, {"id", id}, {"semibrace", isb::io::to_json(r.structure)},
                      {"report", isb::io::to_json(r.report)}}
                     .dump()
              << "\n";
    rows.push_back(isb::make_survey_row(id, r.structure, r.report));
    ++i;
  });
  Json summary = isb::io::to_json(outcome);
  summary["counts"] = isb::io::to_json(isb::survey(std::move(rows))).at("counts");
  std::cout << Json{{"summary", summary}}.dump() << "\n";
  return outcome.complete ? kHolds : kCapped;
}

int cmd_search_cocycles(std::string const& spec_path, SearchOptions const& o) {
  Json doc = isb::io::load_json_file(spec_path);
  auto const base = fs::path(spec_path).parent_path();
  auto resolve = [&](Json const& v) { return v.is_string() ? isb::io::load_json_file(base / v.get<std::string>()) : v; };
  if (!doc.contains("S") || !doc.contains("T"))
    throw isb::AlgebraError(isb::ErrorKind::MalformedTable, "spec needs \"S\" and \"T\"");
  auto s = isb::io::semibrace_from_json(resolve(doc.at("S")));
  auto t = isb::io::semibrace_from_json(resolve(doc.at("T")));
  auto delta = doc.contains("delta") ? isb::io::family_from_json(resolve(doc.at("delta")), s.order(), t.order())
                                     : isb::ActionFamily::trivial(s.order(), t.order());
  auto result = isb::search_cocycles(s, t, delta, search_config(o));
  std::size_t i = 0;
  for (auto const& c : result.cocycles)
    std::cout << Json{{"index", i++}, {"cocycle", isb::io::to_json(c)}}.dump() << "\n";
  std::cout << Json{{"summary", isb::io::to_json(result.outcome)}}.dump() << "\n";
  return result.outcome.complete ? kHolds : kCapped;
}

int cmd_survey(Output& out, std::vector<std::string> const& inputs) {
  std::vector<isb::SurveyRow> rows;
  for (auto const& path : inputs) {
    std::ifstream in(path);
    if (!in) throw isb::AlgebraError(isb::ErrorKind::MalformedTable, "cannot open " + path);
    std::string const text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<Json> docs;
    try {
      docs.push_back(Json::parse(text));
    } catch (Json::exception const&) {
      std::stringstream ss(text);
      std::string line;
      while (std::getline(ss, line))
        if (!line.empty()) docs.push_back(isb::io::parse_json(line));
    }
    std::size_t line_no = 0;
    for (auto const& d : docs) {
      ++line_no;
      if (d.contains("summary")) continue;
      Json const sb = d.contains("semibrace") ? d.at("semibrace") : d;
      std::string const id = d.contains("id") && d.at("id").is_string()
                                 ? d.at("id").get<std::string>()
                                 : fs::path(path).filename().string() + ":" + std::to_string(line_no);
      auto s = isb::io::semibrace_from_json(sb);
      rows.push_back(isb::make_survey_row(id, s, isb::solution_report(isb::lambda_rho(s))));
    }
  }
  out.emit(isb::io::to_json(isb::survey(std::move(rows))));
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse semi-brace toolkit: validators, solution checks, products and searches"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "Emit a single JSON document");
  app.add_flag("--witnesses", out.witnesses, "Show counterexample tuples in text output");

  std::string input;
  auto* check_semigroup = app.add_subcommand("check-semigroup", "Check associativity of a table");
  check_semigroup->add_option("file", input, "Semigroup JSON")->required();
  auto* check_inverse = app.add_subcommand("check-inverse", "Derive inverses and classify");
  check_inverse->add_option("file", input, "Semigroup JSON")->required();
  auto* check_semibrace = app.add_subcommand("check-semibrace", "Validate and classify a semi-brace");
  check_semibrace->add_option("file", input, "Semi-brace JSON")->required();

  SolutionOptions sol;
  auto* solution = app.add_subcommand("solution", "Check the associated map of a semi-brace or a pair map");
  solution->add_option("file", sol.input, "Semi-brace, build output or pair map JSON");
  solution->add_option("--from-semibrace", sol.from_semibrace, "Semi-brace or build output JSON");
  solution->add_option("--pairmap", sol.pairmap, "Pair map JSON");
  solution->add_option("--which", sol.which, "Equation deciding the exit code")
      ->check(CLI::IsMember({"braid", "qybe", "pentagon", "all"}));
  solution->add_flag("--flip", sol.flip, "Check tau composed with r instead of r");
  solution->add_flag("--emit-pairmap", sol.include_pairmap, "Include the pair map in the report");

  BuildOptions bo;
  auto* build = app.add_subcommand("build", "Build a semi-brace from a product spec");
  build->add_option("--kind", bo.kind, "example|strong_semilattice|matched|semidirect|double_semidirect|asymmetric")
      ->required();
  build->add_option("--spec", bo.spec, "Product spec JSON")->required();
  build->add_option("--variant", bo.variant, "Example family variant");
  build->add_option("--e", bo.e, "Idempotent for the b_times_e variant");
  build->add_option("--cap", bo.cap, "Maximum product order");

  SearchOptions so;
  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--timeout", so.timeout, "Time budget, e.g. 500ms, 10s");
    cmd->add_option("--start-prefix", so.start_prefix, "Comma-separated row-major partial table");
    cmd->add_option("--cap", so.cap, "Maximum order");
  };
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate semi-brace additions or inverse semigroups");
  enumerate->add_option("file", so.input, "Multiplicative semigroup JSON");
  enumerate->add_option("--inverse-semigroups", so.inverse_semigroups, "Enumerate inverse semigroups of this order");
  enumerate->add_option("--emit", so.emit, "all|solutions_only|counterexamples_only");
  enumerate->add_flag("--canonical", so.canonical, "Keep one addition per automorphism orbit");
  add_search_flags(enumerate);

  std::string cocycle_spec;
  auto* search_cocycles = app.add_subcommand("search-cocycles", "Enumerate delta-cocycles");
  search_cocycles->add_option("--spec", cocycle_spec, "JSON with S, T and optional delta")->required();
  add_search_flags(search_cocycles);

  std::vector<std::string> survey_inputs;
  auto* survey = app.add_subcommand("survey", "Aggregate solution properties over semi-braces");
  survey->add_option("files", survey_inputs, "JSON or JSON-lines files");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kHolds : kMalformed;
  }

  try {
    if (*check_semigroup) return cmd_check_semigroup(out, input);
    if (*check_inverse) return cmd_check_inverse(out, input);
    if (*check_semibrace) return cmd_check_semibrace(out, input);
    if (*solution) return cmd_solution(out, sol);
    if (*build) return cmd_build(out, bo);
    if (*enumerate) return cmd_enumerate(so);
    if (*search_cocycles) return cmd_search_cocycles(cocycle_spec, so);
    if (*survey) return cmd_survey(out, survey_inputs);
  } catch (isb::AlgebraError const& e) {
    std::cerr << "isb: " << e.what() << "\n";
    int const code = exit_for(e.kind());
    if (code == kFails) out.emit(Json{{"holds", false}, {"error", isb::io::to_json(e)}});
    return code;
  } catch (std::exception const& e) {
    std::cerr << "isb: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}
