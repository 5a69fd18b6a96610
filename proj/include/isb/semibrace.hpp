#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isb/classify.hpp"
#include "isb/magma.hpp"
#include "isb/pairmap.hpp"

namespace isb {

// (S, +, .) with (S,+) a semigroup, (S,.) an inverse semigroup and
// a(b+c) = ab + a(a^-1 + c).
class InverseSemiBrace {
 public:
  // Validation order: additive associativity, multiplicative inverse
  // semigroup, left axiom. Throws NotAssociativeAdd, NotInverseMul or
  // LeftAxiomFails with the first failing tuple.
  InverseSemiBrace(MagmaTable add, MagmaTable mul);

  std::size_t order() const noexcept { return add_.order(); }
  Element add(Element a, Element b) const noexcept { return add_.mul(a, b); }
  Element mul(Element a, Element b) const noexcept { return mul_.mul(a, b); }
  Element inv(Element a) const noexcept { return mul_.inv(a); }

  FiniteSemigroup const& additive() const noexcept { return add_; }
  InverseSemigroup const& multiplicative() const noexcept { return mul_; }
  std::vector<std::string> const& labels() const noexcept { return add_.table().labels(); }
  std::string label(Element a) const { return add_.table().label(a); }

 private:
  FiniteSemigroup add_;
  InverseSemigroup mul_;
};

InverseSemiBrace validate_semibrace(MagmaTable add, MagmaTable mul);

// First (a,b,c) with a(b+c) != ab + a(a^-1 + c).
Check check_left_axiom(MagmaTable const& add, InverseSemigroup const& mul);

struct SemiBraceClassification {
  MultiplicativeClassification mul;
  AdditiveClassification add;
  bool is_left_semibrace = false;  // (S,.) is a group
  bool is_skew_brace = false;      // both operations are groups
  bool is_generalized = false;     // (S,.) completely regular
  Check is_two_sided;
  bool add_left_cancellative = false;
};

SemiBraceClassification classify_semibrace(InverseSemiBrace const& s);

// First (a,b,c) with (a+b)c != (a+c^-1)c + bc.
Check check_right_axiom(InverseSemiBrace const& s);

// lambda_a(b) = a(a^-1 + b), rho_b(a) = (a^-1 + b)^-1 b.
PairMap lambda_rho(InverseSemiBrace const& s);
// Same formulas on an addition that has not been validated.
PairMap lambda_rho(MagmaTable const& add, InverseSemigroup const& mul);

// lambda_a(b + c) = lambda_a(b) + lambda_a(c); witness (a,b,c).
Check check_lambda_endomorphism(InverseSemiBrace const& s);
// lambda_{ab}(c) = abb^-1a^-1 + lambda_a lambda_b(c); witness (a,b,c).
Check check_lambda_product_identity(InverseSemiBrace const& s);

// The multiplicative identity of a left semi-brace, or NotLeftSemibrace.
Element group_identity(InverseSemiBrace const& s);

}  // namespace isb
