#include <catch_amalgamated.hpp>

#include "isb/constructions.hpp"
#include "isb/fixtures.hpp"
#include "isb/io.hpp"
#include "isb/search.hpp"
#include "isb/solutions.hpp"

using namespace isb;
using io::Json;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (AlgebraError const& e) {
    return e.kind();
  }
  FAIL("no AlgebraError thrown");
  return ErrorKind::InternalError;
}

std::filesystem::path data_dir() { return ISB_DATA_DIR; }

}  // namespace

TEST_CASE("magma tables round-trip with and without labels") {
  auto t = fixtures::t3().table();
  auto doc = io::to_json(t);
  CHECK(doc["order"] == 3);
  CHECK(doc["table"] == Json::parse("[[0,1,2],[1,1,2],[2,2,1]]"));
  CHECK(io::magma_from_json(doc) == t);
  auto plain = io::magma_from_json(Json::parse(R"({"order": 2, "table": [[0,1],[1,0]]})"));
  CHECK(plain.labels().empty());
  CHECK(io::to_json(plain).dump() == R"({"order":2,"table":[[0,1],[1,0]]})");
}

TEST_CASE("semi-braces and pair maps round-trip") {
  auto s = build_example_family(fixtures::t3(), ExampleVariant::AaInvB);
  auto back = io::semibrace_from_json(io::to_json(s));
  CHECK(back.additive().table() == s.additive().table());
  CHECK(back.multiplicative().table() == s.multiplicative().table());
  auto r = lambda_rho(s);
  CHECK(io::pairmap_from_json(io::to_json(r)) == r);
}

TEST_CASE("action families and cocycles round-trip") {
  ActionFamily f(3, 3, {identity_map(3), identity_map(3), fixtures::tau()});
  auto g = io::family_from_json(io::to_json(f), 3, 3);
  CHECK(g.maps() == f.maps());
  CHECK(io::family_from_json(Json::parse("[[0,1],[1,0],[0,1]]"), 3, 2).map(1) == CarrierMap{1, 0});
  Cocycle c(2, 3, {0, 1, 2, 0});
  CHECK(io::cocycle_from_json(io::to_json(c), 2, 3) == c);
}

TEST_CASE("malformed documents") {
  CHECK(kind_of([] { io::parse_json("{not json"); }) == ErrorKind::MalformedTable);
  CHECK(kind_of([] { io::magma_from_json(Json::parse(R"({"order": 2, "table": [[0,1]]})")); }) ==
        ErrorKind::MalformedTable);
  CHECK(kind_of([] { io::magma_from_json(Json::parse(R"({"order": 2, "table": [[0,1],[1,2]]})")); }) ==
        ErrorKind::MalformedTable);
  CHECK(kind_of([] { io::magma_from_json(Json::parse(R"({"order": 2, "table": [[0,"a"],[1,0]]})")); }) ==
        ErrorKind::MalformedTable);
  CHECK(io::magma_from_json(Json::parse(R"({"table": [[0]]})")).order() == 1);
  CHECK(kind_of([] { io::magma_from_json(Json::parse(R"({"order": 3, "table": [[0]]})")); }) ==
        ErrorKind::MalformedTable);
  CHECK(kind_of([] {
          io::magma_from_json(Json::parse(R"({"order": 2, "labels": ["a","a"], "table": [[0,1],[1,0]]})"));
        }) == ErrorKind::MalformedTable);
  CHECK(kind_of([] {
          io::semibrace_from_json(Json::parse(R"({"add": [[0,0],[0,0]], "mul": [[0,0,0],[0,0,0],[0,0,0]]})"));
        }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { io::family_from_json(Json::parse("[[0,1]]"), 3, 2); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { io::load_json_file("/nonexistent/file.json"); }) == ErrorKind::MalformedTable);
}

TEST_CASE("errors serialize with kind, message and witness") {
  AlgebraError e(ErrorKind::NotAssociative, "(ab)c != a(bc)", {1, 0, 1});
  auto doc = io::to_json(e);
  CHECK(doc["error"] == "NotAssociative");
  CHECK(doc["witness"] == Json::parse("[1,0,1]"));
  CHECK(io::to_json(Check::pass()).dump() == R"({"holds":true})");
  CHECK(io::to_json(Check::fail({2, 3})).dump() == R"({"holds":false,"witness":[2,3]})");
}

TEST_CASE("product specs from the data directory build consistently") {
  for (auto const& [file, kind, order] :
       std::vector<std::tuple<std::string, io::ProductKind, std::size_t>>{
           {"case_phi1.json", io::ProductKind::DoubleSemidirect, 9},
           {"case_phi5.json", io::ProductKind::DoubleSemidirect, 9},
           {"semidirect_rz_tau.json", io::ProductKind::Semidirect, 9},
           {"matched_lz_rz_tau.json", io::ProductKind::Matched, 9}}) {
    CAPTURE(file);
    auto spec = io::parse_product_spec(io::load_json_file(data_dir() / file), kind, data_dir());
    auto out = io::build_product(spec);
    CHECK(out.structure.order() == order);
    CHECK(out.consistent);
  }
}

TEST_CASE("product spec shape errors") {
  auto doc = io::load_json_file(data_dir() / "case_phi1.json");
  doc.erase("delta");
  CHECK(kind_of([&] { io::parse_product_spec(doc, io::ProductKind::DoubleSemidirect, data_dir()); }) ==
        ErrorKind::MalformedTable);
  CHECK(io::parse_product_kind("double_semidirect") == io::ProductKind::DoubleSemidirect);
  CHECK_FALSE(io::parse_product_kind("zappa"));
}

TEST_CASE("JSON output is byte-stable") {
  auto s = build_example_family(fixtures::t3(), ExampleVariant::CliffordAb);
  auto a = io::to_json(solution_report(lambda_rho(s))).dump();
  auto b = io::to_json(solution_report(lambda_rho(s))).dump();
  CHECK(a == b);
  std::vector<SurveyRow> rows;
  for (auto const& r : collect_additions(fixtures::t3())) rows.push_back(make_survey_row("x", r.structure, r.report));
  CHECK(io::to_json(survey(rows)).dump() == io::to_json(survey(rows)).dump());
}
