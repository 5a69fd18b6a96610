#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "isb/classify.hpp"
#include "isb/constructions.hpp"
#include "isb/search.hpp"
#include "isb/semibrace.hpp"
#include "isb/solutions.hpp"

namespace isb::io {

using Json = nlohmann::json;

// Parse failures and shape errors surface as AlgebraError(MalformedTable).
Json load_json_file(std::filesystem::path const& path);
Json parse_json(std::string const& text);

// {"order": n, "labels"?: [...], "table": [[...]]}
Json to_json(MagmaTable const& t);
MagmaTable magma_from_json(Json const& doc);

// {"order": n, "labels"?: [...], "add": [[...]], "mul": [[...]]}
Json to_json(InverseSemiBrace const& s);
InverseSemiBrace semibrace_from_json(Json const& doc);

// {"order": n, "lambda": [[...]], "rho": [[...]]}; rho[a][b] is the second
// component of r(a, b).
Json to_json(PairMap const& r);
PairMap pairmap_from_json(Json const& doc);

Json to_json(Check const& c);
Json to_json(MultiplicativeClassification const& c);
Json to_json(AdditiveClassification const& c);
Json to_json(SemiBraceClassification const& c);
Json to_json(PowerProfile const& p);
Json to_json(DegeneracyProfile const& d);
Json to_json(SolutionReport const& r);
Json to_json(SufficientConditionsReport const& r);
Json to_json(CondSolutionVerdict const& v);
Json to_json(MatchedSystemVerdict const& v);
Json to_json(SolutionMatchedVerdict const& v);
Json to_json(DoubleSemidirectSolutionReport const& r);
Json to_json(AsymmetricSolutionReport const& r);
Json to_json(SurveyRow const& row);
Json to_json(Survey const& s);
Json to_json(SearchOutcome const& o);
Json to_json(AlgebraError const& e);

ActionFamily family_from_json(Json const& doc, std::size_t acting_order, std::size_t target_order);
Json to_json(ActionFamily const& f);
Cocycle cocycle_from_json(Json const& doc, std::size_t s_order, std::size_t t_order);
Json to_json(Cocycle const& c);

// ---------------------------------------------------------------------------

enum class ProductKind { Example, StrongSemilattice, Matched, Semidirect, DoubleSemidirect, Asymmetric };

std::string_view to_string(ProductKind k) noexcept;
std::optional<ProductKind> parse_product_kind(std::string_view name) noexcept;

// Component documents may be inline objects or paths relative to base_dir.
struct ProductSpec {
  ProductKind kind = ProductKind::Semidirect;
  std::optional<InverseSemiBrace> s;
  std::optional<InverseSemiBrace> t;
  std::optional<ActionFamily> sigma, alpha, beta, delta;
  std::optional<Cocycle> cocycle;
  std::optional<StrongSemilatticeData> semilattice;
  // Example families.
  std::optional<InverseSemigroup> m;
  std::optional<ExampleVariant> variant;
  std::optional<Element> e;
};

ProductSpec parse_product_spec(Json const& doc, ProductKind kind,
                               std::filesystem::path const& base_dir = {});

struct BuildOutcome {
  InverseSemiBrace structure;
  // Theorem cross-checks recorded during the build.
  Json verdict;
  bool consistent = true;
};

BuildOutcome build_product(ProductSpec const& spec, std::size_t cap = kProductCap);

}  // namespace isb::io
