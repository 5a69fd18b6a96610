#include "isb/fixtures.hpp"

#include <string>

namespace isb::fixtures {

namespace {

std::vector<std::string> const kT3Labels{"1", "x", "y"};

}  // namespace

InverseSemigroup t3() {
  return InverseSemigroup(FiniteSemigroup(
      MagmaTable::from_rows({{0, 1, 2}, {1, 1, 2}, {2, 2, 1}}, kT3Labels)));
}

MagmaTable s3_table() {
  return MagmaTable::from_rows({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}, kT3Labels);
}

InverseSemigroup s3() { return InverseSemigroup(FiniteSemigroup(s3_table())); }

CarrierMap tau() { return {0, 2, 1}; }

InverseSemigroup cyclic_group(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return InverseSemigroup(FiniteSemigroup(MagmaTable::from_function(
      n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); },
      std::move(labels))));
}

InverseSemigroup brandt_b2() {
  // e_ij e_kl = e_il when j = k, else 0.
  struct Unit {
    Element i, j;
  };
  Unit const units[] = {{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
  auto index = [](Element i, Element l) -> Element { return 1 + (i - 1) * 2 + (l - 1); };
  return InverseSemigroup(FiniteSemigroup(MagmaTable::from_function(
      5,
      [&](Element p, Element q) -> Element {
        if (p == 0 || q == 0) return 0;
        if (units[p].j != units[q].i) return 0;
        return index(units[p].i, units[q].j);
      },
      {"0", "e11", "e12", "e21", "e22"})));
}

InverseSemigroup trivial_semigroup() {
  return InverseSemigroup(FiniteSemigroup(MagmaTable(1, {0}, {"1"})));
}

MagmaTable right_zero_table(std::size_t n) {
  return MagmaTable::from_function(n, [](Element, Element b) { return b; });
}

MagmaTable left_zero_table(std::size_t n) {
  return MagmaTable::from_function(n, [](Element a, Element) { return a; });
}

InverseSemiBrace t3_clifford_sum() {
  auto m = t3();
  return InverseSemiBrace(m.table(), m.table());
}

InverseSemiBrace s3_constant_sum() {
  return InverseSemiBrace(MagmaTable(3, std::vector<Element>(9, 0), kT3Labels), s3_table());
}

}  // namespace isb::fixtures
