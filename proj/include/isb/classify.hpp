#pragma once

#include <optional>
#include <vector>

#include "isb/magma.hpp"

namespace isb {

// Each flag is a Check so that a false flag carries its counterexample.
struct MultiplicativeClassification {
  Check is_group;
  Check is_clifford;
  Check is_completely_regular;
  Check is_commutative;
  Check is_semilattice;
  std::vector<Element> idempotents;
  std::optional<Element> identity;
};

MultiplicativeClassification classify_multiplicative(InverseSemigroup const& s);

struct AdditiveClassification {
  Check is_group;
  Check is_commutative;
  Check is_band;
  Check is_left_zero;
  Check is_right_zero;
  Check is_rectangular_band;
  Check is_left_cancellative;
  Check is_stationary_right;
  Check is_rectangular;
  std::vector<Element> idempotents;
  std::vector<Element> middle_units;
  std::optional<Element> identity;
};

AdditiveClassification classify_additive(FiniteSemigroup const& s);

std::optional<Element> find_identity(MagmaTable const& t);
Check check_commutative(MagmaTable const& t);
// a+b = a+c implies x+b = x+c.
Check check_stationary_right(MagmaTable const& t);
// a+x = b+x = a+y implies a+x = b+y.
Check check_rectangular(MagmaTable const& t);
// a+b = a+c implies b = c.
Check check_left_cancellative(MagmaTable const& t);
std::vector<Element> middle_units(MagmaTable const& t);

}  // namespace isb
