#include "isb/classify.hpp"

namespace isb {

namespace {

Check check_right_cancellative(MagmaTable const& t) {
  auto const n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = b + 1; c < n; ++c)
        if (t(b, a) == t(c, a)) return Check::fail({a, b, c});
  return Check::pass();
}

}  // namespace

std::optional<Element> find_identity(MagmaTable const& t) {
  auto const n = static_cast<Element>(t.order());
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = t(e, a) == a && t(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

Check check_commutative(MagmaTable const& t) {
  auto const n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (t(a, b) != t(b, a)) return Check::fail({a, b});
  return Check::pass();
}

Check check_left_cancellative(MagmaTable const& t) {
  auto const n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = b + 1; c < n; ++c)
        if (t(a, b) == t(a, c)) return Check::fail({a, b, c});
  return Check::pass();
}

Check check_stationary_right(MagmaTable const& t) {
  auto const n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        if (t(a, b) != t(a, c)) continue;
        for (Element x = 0; x < n; ++x)
          if (t(x, b) != t(x, c)) return Check::fail({a, b, c, x});
      }
  return Check::pass();
}

Check check_rectangular(MagmaTable const& t) {
  auto const n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element x = 0; x < n; ++x) {
        if (t(a, x) != t(b, x)) continue;
        for (Element y = 0; y < n; ++y)
          if (t(a, y) == t(a, x) && t(a, x) != t(b, y)) return Check::fail({a, b, x, y});
      }
  return Check::pass();
}

std::vector<Element> middle_units(MagmaTable const& t) {
  auto const n = static_cast<Element>(t.order());
  std::vector<Element> out;
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b) ok = t(t(a, e), b) == t(a, b);
    if (ok) out.push_back(e);
  }
  return out;
}

MultiplicativeClassification classify_multiplicative(InverseSemigroup const& s) {
  MultiplicativeClassification c;
  auto const n = static_cast<Element>(s.order());
  c.idempotents = s.idempotents();
  c.identity = find_identity(s.table());
  c.is_commutative = check_commutative(s.table());

  if (c.idempotents.size() > 1) c.is_group = Check::fail({c.idempotents[0], c.idempotents[1]});

  for (Element e : c.idempotents) {
    for (Element a = 0; a < n; ++a)
      if (s.mul(e, a) != s.mul(a, e)) {
        c.is_clifford = Check::fail({e, a});
        break;
      }
    if (!c.is_clifford) break;
  }

  for (Element a = 0; a < n; ++a)
    if (s.mul(a, s.inv(a)) != s.mul(s.inv(a), a)) {
      c.is_completely_regular = Check::fail({a});
      break;
    }

  if (!c.is_commutative) {
    c.is_semilattice = c.is_commutative;
  } else if (c.idempotents.size() != n) {
    for (Element a = 0; a < n; ++a)
      if (!s.is_idempotent(a)) {
        c.is_semilattice = Check::fail({a});
        break;
      }
  }
  return c;
}

AdditiveClassification classify_additive(FiniteSemigroup const& s) {
  AdditiveClassification c;
  auto const& t = s.table();
  auto const n = static_cast<Element>(s.order());
  c.idempotents = s.idempotents();
  c.identity = find_identity(t);
  c.middle_units = middle_units(t);
  c.is_commutative = check_commutative(t);
  c.is_left_cancellative = check_left_cancellative(t);
  c.is_stationary_right = check_stationary_right(t);
  c.is_rectangular = check_rectangular(t);

  c.is_group = c.is_left_cancellative;
  if (c.is_group) c.is_group = check_right_cancellative(t);

  for (Element a = 0; a < n; ++a)
    if (t(a, a) != a) {
      c.is_band = Check::fail({a});
      break;
    }
  for (Element a = 0; a < n && c.is_left_zero; ++a)
    for (Element b = 0; b < n; ++b)
      if (t(a, b) != a) {
        c.is_left_zero = Check::fail({a, b});
        break;
      }
  for (Element a = 0; a < n && c.is_right_zero; ++a)
    for (Element b = 0; b < n; ++b)
      if (t(a, b) != b) {
        c.is_right_zero = Check::fail({a, b});
        break;
      }
  c.is_rectangular_band = c.is_band;
  for (Element a = 0; a < n && c.is_rectangular_band; ++a)
    for (Element b = 0; b < n; ++b)
      if (t(t(a, b), a) != a) {
        c.is_rectangular_band = Check::fail({a, b});
        break;
      }
  return c;
}

}  // namespace isb
