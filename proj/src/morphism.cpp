#include "isb/morphism.hpp"

#include <algorithm>

namespace isb {

Check is_morphism(CarrierMap const& f, MagmaTable const& from, MagmaTable const& to,
                  MorphismMode mode) {
  if (f.size() != from.order())
    throw AlgebraError(ErrorKind::DimensionMismatch, "map domain differs from table order");
  for (Element x : f)
    if (x >= to.order()) throw AlgebraError(ErrorKind::DimensionMismatch, "map value out of range");
  auto const n = static_cast<Element>(from.order());
  bool const anti = mode == MorphismMode::AntiHomomorphism;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element const rhs = anti ? to(f[b], f[a]) : to(f[a], f[b]);
      if (f[from(a, b)] != rhs) return Check::fail({a, b});
    }
  return Check::pass();
}

Check is_morphism(CarrierMap const& f, InverseSemigroup const& from, InverseSemigroup const& to,
                  MorphismMode mode) {
  Check chk = is_morphism(f, from.table(), to.table(), mode);
  if (chk)
    for (Element a = 0; a < from.order(); ++a)
      if (f[from.inv(a)] != to.inv(f[a]))
        throw AlgebraError(ErrorKind::InternalError, "morphism does not preserve inverses", {a});
  return chk;
}

std::vector<CarrierMap> enumerate_endomorphisms(MagmaTable const& t, std::size_t cap) {
  std::size_t const n = t.order();
  if (n > cap)
    throw AlgebraError(ErrorKind::OrderExceedsCap,
                       "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<CarrierMap> out;
  if (n == 0) return out;
  CarrierMap f(n, 0);
  // Depth-first over f(0), f(1), ...; every pair with a, b, ab already assigned is checked.
  auto consistent = [&](Element k) {
    for (Element a = 0; a <= k; ++a)
      for (Element b = 0; b <= k; ++b) {
        if (a != k && b != k && t(a, b) != k) continue;
        Element const ab = t(a, b);
        if (ab <= k && f[ab] != t(f[a], f[b])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, Element k) -> void {
    if (k == n) {
      out.push_back(f);
      return;
    }
    for (Element v = 0; v < n; ++v) {
      f[k] = v;
      if (consistent(k)) self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<CarrierMap> enumerate_automorphisms(MagmaTable const& t, std::size_t cap) {
  std::size_t const n = t.order();
  if (n > cap)
    throw AlgebraError(ErrorKind::OrderExceedsCap,
                       "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<CarrierMap> out;
  CarrierMap p = identity_map(n);
  do {
    if (is_morphism(p, t, t)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

MagmaTable relabel(MagmaTable const& t, CarrierMap const& p) {
  std::size_t const n = t.order();
  std::vector<Element> e(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) e[p[a] * n + p[b]] = p[t(a, b)];
  return MagmaTable(n, std::move(e));
}

}  // namespace isb
