#include "isb/io.hpp"

#include <fstream>
#include <sstream>

namespace isb::io {

namespace {

[[noreturn]] void malformed(std::string const& what) {
  throw AlgebraError(ErrorKind::MalformedTable, what);
}

Json const& require(Json const& doc, char const* key) {
  if (!doc.is_object() || !doc.contains(key)) malformed(std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

Element element_from_json(Json const& v) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    malformed("expected a non-negative integer, got " + v.dump());
  return v.get<Element>();
}

std::vector<Element> vector_from_json(Json const& v) {
  if (!v.is_array()) malformed("expected an array, got " + v.dump());
  std::vector<Element> out;
  out.reserve(v.size());
  for (auto const& x : v) out.push_back(element_from_json(x));
  return out;
}

// rows x cols matrix, row-major.
std::vector<Element> matrix_from_json(Json const& v, std::size_t rows, std::optional<std::size_t> cols) {
  if (!v.is_array() || v.size() != rows)
    malformed("expected " + std::to_string(rows) + " rows");
  std::vector<Element> out;
  for (auto const& row : v) {
    auto r = vector_from_json(row);
    if (cols && r.size() != *cols) malformed("row has wrong length");
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

Json matrix_to_json(std::span<Element const> entries, std::size_t cols) {
  Json rows = Json::array();
  for (std::size_t i = 0; cols && i < entries.size(); i += cols)
    rows.push_back(std::vector<Element>(entries.begin() + i, entries.begin() + i + cols));
  return rows;
}

std::vector<std::string> labels_from_json(Json const& doc, std::size_t order) {
  if (!doc.contains("labels")) return {};
  auto const& l = doc.at("labels");
  if (!l.is_array() || l.size() != order) malformed("labels must list one string per element");
  std::vector<std::string> out;
  for (auto const& x : l) {
    if (!x.is_string()) malformed("labels must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::size_t order_of(Json const& doc, Json const& square) {
  if (!square.is_array()) malformed("table must be an array of rows");
  std::size_t const n = square.size();
  if (doc.contains("order") && element_from_json(doc.at("order")) != n)
    malformed("\"order\" does not match the table size");
  if (n == 0) malformed("empty table");
  return n;
}

MagmaTable square_from_json(Json const& doc, char const* key, std::vector<std::string> labels) {
  auto const& table = require(doc, key);
  std::size_t const n = order_of(doc, table);
  return MagmaTable(n, matrix_from_json(table, n, n), std::move(labels));
}

Json witness_json(Witness const& w) { return Json(w); }

Json resolve(Json const& v, std::filesystem::path const& base_dir) {
  if (v.is_string()) return load_json_file(base_dir / v.get<std::string>());
  return v;
}

}  // namespace

Json parse_json(std::string const& text) {
  try {
    return Json::parse(text);
  } catch (Json::exception const& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json load_json_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json to_json(MagmaTable const& t) {
  Json doc{{"order", t.order()}, {"table", matrix_to_json(t.entries(), t.order())}};
  if (!t.labels().empty()) doc["labels"] = t.labels();
  return doc;
}

MagmaTable magma_from_json(Json const& doc) {
  try {
    auto const& table = require(doc, "table");
    std::size_t const n = order_of(doc, table);
    return square_from_json(doc, "table", labels_from_json(doc, n));
  } catch (Json::exception const& e) {
    malformed(e.what());
  }
}

Json to_json(InverseSemiBrace const& s) {
  Json doc{{"order", s.order()},
           {"add", matrix_to_json(s.additive().table().entries(), s.order())},
           {"mul", matrix_to_json(s.multiplicative().table().entries(), s.order())}};
  if (!s.labels().empty()) doc["labels"] = s.labels();
  return doc;
}

InverseSemiBrace semibrace_from_json(Json const& doc) {
  try {
    std::size_t const n = order_of(doc, require(doc, "add"));
    auto labels = labels_from_json(doc, n);
    MagmaTable add = square_from_json(doc, "add", labels);
    MagmaTable mul = square_from_json(doc, "mul", labels);
    if (mul.order() != n) throw AlgebraError(ErrorKind::DimensionMismatch, "add and mul differ in order");
    return validate_semibrace(std::move(add), std::move(mul));
  } catch (Json::exception const& e) {
    malformed(e.what());
  }
}

Json to_json(PairMap const& r) {
  Json doc{{"order", r.order()},
           {"lambda", matrix_to_json(r.lambda_table(), r.order())},
           {"rho", matrix_to_json(r.rho_table(), r.order())}};
  if (!r.labels().empty()) doc["labels"] = r.labels();
  return doc;
}

PairMap pairmap_from_json(Json const& doc) {
  try {
    std::size_t const n = order_of(doc, require(doc, "lambda"));
    return PairMap(n, matrix_from_json(doc.at("lambda"), n, n),
                   matrix_from_json(require(doc, "rho"), n, n), labels_from_json(doc, n));
  } catch (Json::exception const& e) {
    malformed(e.what());
  }
}

Json to_json(Check const& c) {
  Json doc{{"holds", c.holds}};
  if (c.witness) doc["witness"] = witness_json(*c.witness);
  return doc;
}

namespace {

Json optional_element(std::optional<Element> e) { return e ? Json(*e) : Json(nullptr); }

}  // namespace

Json to_json(MultiplicativeClassification const& c) {
  return Json{{"is_group", to_json(c.is_group)},
              {"is_clifford", to_json(c.is_clifford)},
              {"is_completely_regular", to_json(c.is_completely_regular)},
              {"is_commutative", to_json(c.is_commutative)},
              {"is_semilattice", to_json(c.is_semilattice)},
              {"idempotents", c.idempotents},
              {"identity", optional_element(c.identity)}};
}

Json to_json(AdditiveClassification const& c) {
  return Json{{"is_group", to_json(c.is_group)},
              {"is_commutative", to_json(c.is_commutative)},
              {"is_band", to_json(c.is_band)},
              {"is_left_zero", to_json(c.is_left_zero)},
              {"is_right_zero", to_json(c.is_right_zero)},
              {"is_rectangular_band", to_json(c.is_rectangular_band)},
              {"is_left_cancellative", to_json(c.is_left_cancellative)},
              {"is_stationary_right", to_json(c.is_stationary_right)},
              {"is_rectangular", to_json(c.is_rectangular)},
              {"idempotents", c.idempotents},
              {"middle_units", c.middle_units},
              {"identity", optional_element(c.identity)}};
}

Json to_json(SemiBraceClassification const& c) {
  return Json{{"multiplicative", to_json(c.mul)},
              {"additive", to_json(c.add)},
              {"is_left_semibrace", c.is_left_semibrace},
              {"is_skew_brace", c.is_skew_brace},
              {"is_generalized", c.is_generalized},
              {"is_two_sided", to_json(c.is_two_sided)},
              {"add_left_cancellative", c.add_left_cancellative},
              {"identity", c.is_left_semibrace ? optional_element(c.mul.identity) : Json(nullptr)}};
}

Json to_json(PowerProfile const& p) {
  return Json{{"index", p.index},
              {"period", p.period},
              {"is_idempotent", p.is_idempotent},
              {"is_cubic", p.is_cubic},
              {"is_involutive", p.is_involutive}};
}

Json to_json(DegeneracyProfile const& d) {
  return Json{{"left_nondegenerate", to_json(d.left_nondegenerate)},
              {"right_nondegenerate", to_json(d.right_nondegenerate)},
              {"bijective", to_json(d.bijective)},
              {"class", d.degeneracy_class()}};
}

Json to_json(SolutionReport const& r) {
  Json doc{{"braid", to_json(r.braid)},
           {"qybe", to_json(r.qybe)},
           {"pentagon", to_json(r.pentagon)},
           {"degeneracy", to_json(r.degeneracy)}};
  doc.update(to_json(r.power));
  return doc;
}

Json to_json(SufficientConditionsReport const& r) {
  return Json{{"idempotent_absorption", to_json(r.idempotent_absorption)},
              {"lambda_shift", to_json(r.lambda_shift)},
              {"rho_factorization", to_json(r.rho_factorization)},
              {"lambda_lambda", to_json(r.lambda_lambda)},
              {"lambda_rho_mixed", to_json(r.lambda_rho_mixed)},
              {"rho_rho", to_json(r.rho_rho)},
              {"braid", to_json(r.braid)},
              {"conditions_hold", r.conditions_hold()},
              {"identities_hold", r.identities_hold()},
              {"chain_consistent", r.chain_consistent()}};
}

Json to_json(CondSolutionVerdict const& v) {
  return Json{{"condition", to_json(v.condition)}, {"braid", to_json(v.braid)}, {"agrees", v.agrees()}};
}

Json to_json(MatchedSystemVerdict const& v) {
  return Json{{"alpha_additive_automorphism", to_json(v.alpha_additive_automorphism)},
              {"beta_additive_automorphism", to_json(v.beta_additive_automorphism)},
              {"alpha_homomorphism", to_json(v.alpha_homomorphism)},
              {"beta_homomorphism", to_json(v.beta_homomorphism)},
              {"alpha_product_compatible", to_json(v.alpha_product_compatible)},
              {"beta_product_compatible", to_json(v.beta_product_compatible)},
              {"fixed_point_implication", to_json(v.fixed_point_implication)},
              {"alpha_inverse_identity", to_json(v.alpha_inverse_identity)},
              {"beta_inverse_identity", to_json(v.beta_inverse_identity)},
              {"alpha_idempotent_trivial", to_json(v.alpha_idempotent_trivial)},
              {"beta_idempotent_trivial", to_json(v.beta_idempotent_trivial)},
              {"valid", v.valid()}};
}

Json to_json(SolutionMatchedVerdict const& v) {
  return Json{{"alpha_braided", to_json(v.alpha_braided)},
              {"beta_braided", to_json(v.beta_braided)},
              {"rho_alpha_twist", to_json(v.rho_alpha_twist)},
              {"rho_beta_twist", to_json(v.rho_beta_twist)},
              {"lambda_alpha_twist", to_json(v.lambda_alpha_twist)},
              {"lambda_beta_twist", to_json(v.lambda_beta_twist)},
              {"valid", v.valid()}};
}

Json to_json(DoubleSemidirectSolutionReport const& r) {
  auto opt = [](std::optional<Check> const& c) { return c ? to_json(*c) : Json(nullptr); };
  return Json{{"closed_form_matches", to_json(r.closed_form_matches)},
              {"conditions_applicable", r.conditions_applicable},
              {"delta_identity_absorbs", opt(r.delta_identity_absorbs)},
              {"identity_shift", opt(r.identity_shift)},
              {"delta_twisted_product", opt(r.delta_twisted_product)},
              {"braid", to_json(r.braid)},
              {"implication_consistent", r.implication_consistent}};
}

Json to_json(AsymmetricSolutionReport const& r) {
  return Json{{"delta_identity_absorbs", to_json(r.delta_identity_absorbs)},
              {"cocycle_identity_row", to_json(r.cocycle_identity_row)},
              {"cocycle_right_absorbs", to_json(r.cocycle_right_absorbs)},
              {"delta_twisted_product", to_json(r.delta_twisted_product)},
              {"braid", to_json(r.braid)},
              {"implication_consistent", r.implication_consistent}};
}

Json to_json(SurveyRow const& row) {
  return Json{{"id", row.id},
              {"left_semibrace", row.left_semibrace},
              {"skew_brace", row.skew_brace},
              {"two_sided", row.two_sided},
              {"clifford", row.clifford},
              {"solution", row.solution},
              {"idempotent", row.idempotent},
              {"cubic", row.cubic},
              {"involutive", row.involutive},
              {"index", row.index},
              {"period", row.period},
              {"left_nondegenerate", row.left_nondegenerate},
              {"right_nondegenerate", row.right_nondegenerate},
              {"bijective", row.bijective},
              {"degeneracy_class", row.degeneracy_class}};
}

Json to_json(Survey const& s) {
  Json rows = Json::array();
  for (auto const& r : s.rows) rows.push_back(to_json(r));
  Json counts = Json::array();
  for (auto const& [k, n] : s.counts)
    counts.push_back(Json{{"solution", k.solution},
                          {"idempotent", k.idempotent},
                          {"cubic", k.cubic},
                          {"degeneracy_class", k.degeneracy_class},
                          {"count", n}});
  return Json{{"rows", rows}, {"counts", counts}};
}

Json to_json(SearchOutcome const& o) {
  return Json{{"complete", o.complete},
              {"emitted", o.emitted},
              {"nodes", o.nodes},
              {"resume_prefix", o.resume_prefix}};
}

Json to_json(AlgebraError const& e) {
  return Json{{"error", to_string(e.kind())}, {"message", e.what()}, {"witness", e.witness()}};
}

ActionFamily family_from_json(Json const& doc, std::size_t acting_order, std::size_t target_order) {
  try {
    Json const& rows = doc.is_object() ? require(doc, "family") : doc;
    if (!rows.is_array()) malformed("family must be an array of maps");
    std::vector<CarrierMap> maps;
    for (auto const& r : rows) maps.push_back(vector_from_json(r));
    return ActionFamily(acting_order, target_order, std::move(maps));
  } catch (Json::exception const& e) {
    malformed(e.what());
  }
}

Json to_json(ActionFamily const& f) { return Json{{"family", f.maps()}}; }

Cocycle cocycle_from_json(Json const& doc, std::size_t s_order, std::size_t t_order) {
  try {
    Json const& table = doc.is_object() ? require(doc, "table") : doc;
    return Cocycle(s_order, t_order, matrix_from_json(table, s_order, s_order));
  } catch (Json::exception const& e) {
    malformed(e.what());
  }
}

Json to_json(Cocycle const& c) { return Json{{"table", matrix_to_json(c.table(), c.s_order())}}; }

// ---------------------------------------------------------------------------

namespace {

constexpr std::pair<ProductKind, std::string_view> kKindNames[] = {
    {ProductKind::Example, "example"},
    {ProductKind::StrongSemilattice, "strong_semilattice"},
    {ProductKind::Matched, "matched"},
    {ProductKind::Semidirect, "semidirect"},
    {ProductKind::DoubleSemidirect, "double_semidirect"},
    {ProductKind::Asymmetric, "asymmetric"},
};

}  // namespace

std::string_view to_string(ProductKind k) noexcept {
  for (auto const& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

std::optional<ProductKind> parse_product_kind(std::string_view name) noexcept {
  for (auto const& [kind, n] : kKindNames)
    if (n == name) return kind;
  return std::nullopt;
}

ProductSpec parse_product_spec(Json const& doc, ProductKind kind, std::filesystem::path const& base_dir) {
  if (!doc.is_object()) malformed("product spec must be a JSON object");
  if (doc.contains("kind")) {
    auto const& k = doc.at("kind");
    if (!k.is_string() || parse_product_kind(k.get<std::string>()) != kind)
      malformed("spec \"kind\" disagrees with the requested kind");
  }
  ProductSpec spec;
  spec.kind = kind;
  auto load = [&](char const* key) { return resolve(require(doc, key), base_dir); };

  if (kind == ProductKind::Example) {
    spec.m.emplace(FiniteSemigroup(magma_from_json(load("M"))));
    if (doc.contains("variant")) {
      auto const& v = doc.at("variant");
      if (!v.is_string() || !(spec.variant = parse_example_variant(v.get<std::string>())))
        malformed("unknown example variant " + v.dump());
    }
    if (doc.contains("e")) spec.e = element_from_json(doc.at("e"));
    return spec;
  }

  if (kind == ProductKind::StrongSemilattice) {
    Json const sl = load("semilattice");
    FiniteSemigroup y(magma_from_json(resolve(require(sl, "Y"), base_dir)));
    std::vector<InverseSemiBrace> components;
    for (auto const& c : require(sl, "components")) components.push_back(semibrace_from_json(resolve(c, base_dir)));
    std::map<std::pair<Element, Element>, CarrierMap> morphisms;
    for (auto const& m : require(sl, "morphisms")) {
      Element const from = element_from_json(require(m, "from"));
      Element const to = element_from_json(require(m, "to"));
      if (!morphisms.emplace(std::pair{from, to}, vector_from_json(require(m, "map"))).second)
        malformed("duplicate morphism");
    }
    spec.semilattice = StrongSemilatticeData{std::move(y), std::move(components), std::move(morphisms)};
    return spec;
  }

  spec.s = semibrace_from_json(load("S"));
  spec.t = semibrace_from_json(load("T"));
  std::size_t const n = spec.s->order(), m = spec.t->order();
  auto family = [&](char const* key, std::size_t acting, std::size_t target) -> std::optional<ActionFamily> {
    if (!doc.contains(key)) return std::nullopt;
    return family_from_json(resolve(doc.at(key), base_dir), acting, target);
  };
  spec.alpha = family("alpha", m, n);
  spec.beta = family("beta", n, m);
  spec.sigma = family("sigma", m, n);
  spec.delta = family("delta", n, m);
  if (doc.contains("cocycle")) spec.cocycle = cocycle_from_json(resolve(doc.at("cocycle"), base_dir), n, m);

  switch (kind) {
    case ProductKind::Matched:
      if (!spec.alpha) spec.alpha = ActionFamily::trivial(m, n);
      if (!spec.beta) spec.beta = ActionFamily::trivial(n, m);
      break;
    case ProductKind::Semidirect:
      if (!spec.sigma) spec.sigma = ActionFamily::trivial(m, n);
      break;
    case ProductKind::DoubleSemidirect:
      if (!spec.sigma) spec.sigma = ActionFamily::trivial(m, n);
      if (!spec.delta) malformed("double_semidirect needs \"delta\"");
      break;
    case ProductKind::Asymmetric:
      if (!spec.sigma) spec.sigma = ActionFamily::trivial(m, n);
      if (!spec.delta) spec.delta = ActionFamily::trivial(n, m);
      if (!spec.cocycle) malformed("asymmetric needs \"cocycle\"");
      break;
    default:
      break;
  }
  return spec;
}

namespace {

bool all_hold(std::initializer_list<Check const*> checks) {
  for (auto const* c : checks)
    if (!c->holds) return false;
  return true;
}

Json product_verdict(ProductResult const& p) {
  return Json{{"closed_form_matches", to_json(p.closed_form_matches)},
              {"inverse_formula", to_json(p.inverse_formula)}};
}

}  // namespace

BuildOutcome build_product(ProductSpec const& spec, std::size_t cap) {
  switch (spec.kind) {
    case ProductKind::Example: {
      if (!spec.m || !spec.variant) malformed("example needs \"M\" and a variant");
      auto s = build_example_family(*spec.m, *spec.variant, spec.e);
      Json v{{"variant", to_string(*spec.variant)}};
      if (spec.e) v["e"] = *spec.e;
      return BuildOutcome{std::move(s), std::move(v), true};
    }
    case ProductKind::StrongSemilattice: {
      auto const& d = *spec.semilattice;
      auto s = build_strong_semilattice(d);
      std::vector<PairMap> rs;
      for (auto const& c : d.components) rs.push_back(lambda_rho(c));
      Check match = check_equal(strong_semilattice_solution(d, rs), lambda_rho(s));
      return BuildOutcome{std::move(s), Json{{"solution_matches", to_json(match)}}, match.holds};
    }
    case ProductKind::Matched: {
      auto p = build_matched_product(*spec.s, *spec.t, *spec.alpha, *spec.beta, cap);
      auto sys = validate_matched_system(*spec.s, *spec.t, *spec.alpha, *spec.beta);
      auto sol = validate_solution_matched_system(lambda_rho(*spec.s), lambda_rho(*spec.t), *spec.alpha,
                                                  *spec.beta);
      Json v = product_verdict(p);
      v["matched_system"] = to_json(sys);
      v["solution_matched_system"] = to_json(sol);
      bool const ok = all_hold({&p.closed_form_matches, &p.inverse_formula}) && sol.valid();
      return BuildOutcome{std::move(p.structure), std::move(v), ok};
    }
    case ProductKind::Semidirect: {
      auto r = build_semidirect(*spec.s, *spec.t, *spec.sigma, cap);
      Json v = product_verdict(r.product);
      v["action_commutes_lambda"] = to_json(r.action_commutes_lambda);
      v["action_commutes_rho"] = to_json(r.action_commutes_rho);
      bool const ok = all_hold({&r.product.closed_form_matches, &r.product.inverse_formula,
                                &r.action_commutes_lambda, &r.action_commutes_rho});
      return BuildOutcome{std::move(r.product.structure), std::move(v), ok};
    }
    case ProductKind::DoubleSemidirect: {
      auto r = build_double_semidirect(*spec.s, *spec.t, *spec.sigma, *spec.delta, cap);
      auto sol = double_semidirect_solution(r.product.structure, *spec.s, *spec.t, *spec.sigma, *spec.delta);
      Json v = product_verdict(r.product);
      v["factors_left_cancellative"] = r.factors_left_cancellative;
      v["factors_skew_with_invertible_delta"] = r.factors_skew_with_invertible_delta;
      v["solution_conditions"] = to_json(sol);
      bool const ok = all_hold({&r.product.closed_form_matches, &r.product.inverse_formula}) &&
                      sol.implication_consistent;
      return BuildOutcome{std::move(r.product.structure), std::move(v), ok};
    }
    case ProductKind::Asymmetric: {
      auto p = build_asymmetric(*spec.s, *spec.t, *spec.sigma, *spec.delta, *spec.cocycle, cap);
      Json v = product_verdict(p);
      bool ok = all_hold({&p.closed_form_matches, &p.inverse_formula});
      if (classify_semibrace(*spec.s).is_left_semibrace && classify_semibrace(*spec.t).is_left_semibrace) {
        auto sol = check_asymmetric_solution_conditions(*spec.s, *spec.t, *spec.sigma, *spec.delta,
                                                        *spec.cocycle);
        v["solution_conditions"] = to_json(sol);
        ok = ok && sol.implication_consistent;
      } else {
        v["solution_conditions"] = nullptr;
      }
      return BuildOutcome{std::move(p.structure), std::move(v), ok};
    }
  }
  throw AlgebraError(ErrorKind::InternalError, "unknown product kind");
}

}  // namespace isb::io
