// Stated values that the computation does not reproduce. Each case asserts the
// stated value; the decisions ledger records the analysis for every failure.
#include <catch_amalgamated.hpp>

#include "isb/constructions.hpp"
#include "isb/fixtures.hpp"
#include "isb/morphism.hpp"
#include "isb/search.hpp"
#include "isb/solutions.hpp"
#include "support.hpp"

using namespace isb;

namespace {

ActionFamily sigma_tau() { return ActionFamily(3, 3, {identity_map(3), identity_map(3), fixtures::tau()}); }

PairMap case_study_solution(CarrierMap const& phi) {
  return build_double_semidirect(fixtures::s3_constant_sum(), fixtures::t3_clifford_sum(), sigma_tau(),
                                 ActionFamily::constant(3, phi))
      .product.closed_form;
}

struct C6Data {
  InverseSemiBrace s, t;
  ActionFamily sigma, delta;
  Cocycle cocycle;
};

C6Data c6_data() {
  auto f = [](Element a) { return static_cast<Element>((3 * a) % 6); };
  auto c6 = fixtures::cyclic_group(6);
  std::vector<Element> tab(36);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) tab[a * 6 + b] = a;
  return {InverseSemiBrace(MagmaTable::from_function(6, [&](Element a, Element b) {
                             return static_cast<Element>((b + f((a + 6 - b) % 6)) % 6);
                           }),
                           c6.table()),
          InverseSemiBrace(MagmaTable::from_function(6, [](Element u, Element v) { return static_cast<Element>((u + v) % 6); }),
                           c6.table()),
          ActionFamily::trivial(6, 6), ActionFamily::constant(6, CarrierMap(6, 0)), Cocycle(6, 6, tab)};
}

}  // namespace

TEST_CASE("double semidirect with phi = (x, x, y) fails braid with u = w = 1, v = y") {
  auto r = case_study_solution({1, 1, 2});
  auto chk = check_braid(r);
  CHECK(oracle::naive_braid(r).has_value());
  REQUIRE_FALSE(chk.holds);
  ProductCarrier pc{3, 3};
  CHECK(pc.second((*chk.witness)[0]) == 0);
  CHECK(pc.second((*chk.witness)[1]) == 2);
  CHECK(pc.second((*chk.witness)[2]) == 0);
}

TEST_CASE("survey of the five double semidirect products has four solutions") {
  std::vector<SurveyRow> rows;
  for (auto const& phi : enumerate_endomorphisms(fixtures::t3().table()))
    rows.push_back(make_survey_row("phi", build_double_semidirect(fixtures::s3_constant_sum(),
                                                                  fixtures::t3_clifford_sum(), sigma_tau(),
                                                                  ActionFamily::constant(3, phi))
                                              .product.structure,
                                   solution_report(case_study_solution(phi))));
  auto solutions = std::count_if(rows.begin(), rows.end(), [](SurveyRow const& r) { return r.solution; });
  CHECK(solutions == 4);
  CHECK(rows.size() - solutions == 1);
}

TEST_CASE("b(a, b) = a is a cocycle on C6 with constant-identity delta") {
  auto d = c6_data();
  CHECK(validate_cocycle(d.s, d.t, d.delta, d.cocycle).holds);
}

TEST_CASE("the C6 asymmetric product validates and its map solves braid") {
  auto d = c6_data();
  CHECK_NOTHROW(build_asymmetric(d.s, d.t, d.sigma, d.delta, d.cocycle));
  auto rep = check_asymmetric_solution_conditions(d.s, d.t, d.sigma, d.delta, d.cocycle);
  CHECK(rep.braid.holds);
}

TEST_CASE("tau r for r = (ab, b^-1 b) over T3 satisfies the pentagon equation") {
  auto r = lambda_rho(build_example_family(fixtures::t3(), ExampleVariant::RightZero));
  CHECK(check_equation(flip_compose(r), Equation::Pentagon).holds);
}

TEST_CASE("the identity map is left and right non-degenerate") {
  auto d = degeneracy_profile(oracle::identity_map(3));
  CHECK(d.left_nondegenerate.holds);
  CHECK(d.right_nondegenerate.holds);
  CHECK(d.bijective.holds);
}
