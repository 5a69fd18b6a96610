#include "isb/solutions.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace isb {

namespace {

using Triple = std::array<Element, 3>;

Triple r12(PairMap const& r, Triple t) {
  auto [x, y] = r(t[0], t[1]);
  return {x, y, t[2]};
}

Triple r23(PairMap const& r, Triple t) {
  auto [y, z] = r(t[1], t[2]);
  return {t[0], y, z};
}

Triple r13(PairMap const& r, Triple t) {
  auto [x, z] = r(t[0], t[2]);
  return {x, t[1], z};
}

template <class Lhs, class Rhs>
Check scan_triples(std::size_t n, Lhs lhs, Rhs rhs) {
  auto const m = static_cast<Element>(n);
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b)
      for (Element c = 0; c < m; ++c)
        if (lhs(a, b, c) != rhs(a, b, c)) return Check::fail({a, b, c});
  return Check::pass();
}

std::size_t hash_table(std::vector<Element> const& v) {
  std::size_t h = 1469598103934665603ull;
  for (Element x : v) h = (h ^ x) * 1099511628211ull;
  return h;
}

}  // namespace

std::string_view to_string(Equation e) noexcept {
  switch (e) {
    case Equation::Braid: return "braid";
    case Equation::Qybe: return "qybe";
    case Equation::Pentagon: return "pentagon";
  }
  return "?";
}

Check check_braid(PairMap const& r) {
  return scan_triples(
      r.order(),
      [&](Element a, Element b, Element c) { return r12(r, r23(r, r12(r, {a, b, c}))); },
      [&](Element a, Element b, Element c) { return r23(r, r12(r, r23(r, {a, b, c}))); });
}

Check check_equation(PairMap const& r, Equation which) {
  switch (which) {
    case Equation::Braid:
      return check_braid(r);
    case Equation::Qybe:
      return scan_triples(
          r.order(),
          [&](Element a, Element b, Element c) { return r12(r, r13(r, r23(r, {a, b, c}))); },
          [&](Element a, Element b, Element c) { return r23(r, r13(r, r12(r, {a, b, c}))); });
    case Equation::Pentagon:
      return scan_triples(
          r.order(),
          [&](Element a, Element b, Element c) { return r23(r, r13(r, r12(r, {a, b, c}))); },
          [&](Element a, Element b, Element c) { return r12(r, r23(r, {a, b, c})); });
  }
  throw AlgebraError(ErrorKind::InternalError, "unknown equation");
}

PairMap flip_compose(PairMap const& r) {
  return PairMap(r.order(), r.rho_table(), r.lambda_table(), r.labels());
}

PowerProfile power_profile(PairMap const& r, std::size_t max_power) {
  std::size_t const n = r.order();
  std::size_t const points = n * n;
  std::vector<Element> step(points);
  for (std::size_t p = 0; p < points; ++p) {
    auto [x, y] = r(static_cast<Element>(p / n), static_cast<Element>(p % n));
    step[p] = static_cast<Element>(x * n + y);
  }

  std::vector<std::vector<Element>> powers;
  std::unordered_multimap<std::size_t, std::size_t> seen;
  std::vector<Element> cur(points);
  for (std::size_t p = 0; p < points; ++p) cur[p] = static_cast<Element>(p);

  PowerProfile prof;
  for (std::size_t k = 0;; ++k) {
    std::size_t const h = hash_table(cur);
    auto [lo, hi] = seen.equal_range(h);
    auto hit = std::find_if(lo, hi, [&](auto const& kv) { return powers[kv.second] == cur; });
    if (hit != hi) {
      prof.index = hit->second;
      prof.period = k - hit->second;
      break;
    }
    if (k > max_power)
      throw AlgebraError(ErrorKind::OrderExceedsCap,
                         "no repeated power of r within " + std::to_string(max_power) + " steps");
    seen.emplace(h, k);
    powers.push_back(cur);
    for (auto& q : cur) q = step[q];
  }

  auto reduce = [&](std::size_t j) {
    return j < prof.index ? j : prof.index + (j - prof.index) % prof.period;
  };
  prof.is_idempotent = reduce(2) == reduce(1);
  prof.is_cubic = reduce(3) == reduce(1);
  prof.is_involutive = reduce(2) == reduce(0);
  return prof;
}

std::string_view DegeneracyProfile::degeneracy_class() const noexcept {
  if (left_nondegenerate.holds && right_nondegenerate.holds) return "nondegenerate";
  if (left_nondegenerate.holds) return "left_nondegenerate";
  if (right_nondegenerate.holds) return "right_nondegenerate";
  return "degenerate";
}

DegeneracyProfile degeneracy_profile(PairMap const& r) {
  DegeneracyProfile d;
  auto const n = static_cast<Element>(r.order());
  for (Element a = 0; a < n && d.left_nondegenerate; ++a)
    for (Element b = 0; b < n && d.left_nondegenerate; ++b)
      for (Element c = b + 1; c < n; ++c)
        if (r.lambda(a, b) == r.lambda(a, c)) {
          d.left_nondegenerate = Check::fail({a, b, c});
          break;
        }
  for (Element b = 0; b < n && d.right_nondegenerate; ++b)
    for (Element a = 0; a < n && d.right_nondegenerate; ++a)
      for (Element c = a + 1; c < n; ++c)
        if (r.rho(a, b) == r.rho(c, b)) {
          d.right_nondegenerate = Check::fail({b, a, c});
          break;
        }
  std::vector<std::optional<std::pair<Element, Element>>> pre(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n && d.bijective; ++a)
    for (Element b = 0; b < n; ++b) {
      auto [x, y] = r(a, b);
      auto& slot = pre[x * n + y];
      if (slot) {
        d.bijective = Check::fail({slot->first, slot->second, a, b});
        break;
      }
      slot = std::pair{a, b};
    }
  return d;
}

SolutionReport solution_report(PairMap const& r) {
  SolutionReport rep;
  rep.braid = check_braid(r);
  rep.qybe = check_equation(r, Equation::Qybe);
  rep.pentagon = check_equation(r, Equation::Pentagon);
  rep.power = power_profile(r);
  rep.degeneracy = degeneracy_profile(r);
  return rep;
}

std::optional<CarrierMap> solutions_isomorphic(PairMap const& r1, PairMap const& r2,
                                               std::size_t cap) {
  if (r1.order() != r2.order())
    throw AlgebraError(ErrorKind::DimensionMismatch, "pair maps have different orders");
  if (r1.order() > cap)
    throw AlgebraError(ErrorKind::OrderExceedsCap,
                       "order " + std::to_string(r1.order()) + " exceeds cap " + std::to_string(cap));
  auto const n = static_cast<Element>(r1.order());
  CarrierMap phi = identity_map(n);
  do {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b) {
        auto [x, y] = r1(a, b);
        ok = r2(phi[a], phi[b]) == std::pair{phi[x], phi[y]};
      }
    if (ok) return phi;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return std::nullopt;
}

SufficientConditionsReport check_sufficient_conditions(InverseSemiBrace const& s) {
  PairMap const r = lambda_rho(s);
  std::size_t const n = s.order();
  auto add = [&](Element x, Element y) { return s.add(x, y); };
  auto mul = [&](Element x, Element y) { return s.mul(x, y); };
  auto inv = [&](Element x) { return s.inv(x); };
  auto lam = [&](Element a, Element b) { return r.lambda(a, b); };
  auto rho = [&](Element b, Element a) { return r.rho(a, b); };  // rho_b(a)

  SufficientConditionsReport rep;
  rep.idempotent_absorption = scan_triples(
      n,
      [&](Element a, Element b, Element c) {
        Element const ab = add(a, b);
        return mul(mul(ab, inv(ab)), add(a, mul(b, c)));
      },
      [&](Element a, Element b, Element c) { return add(a, mul(b, c)); });
  rep.lambda_shift = scan_triples(
      n,
      [&](Element a, Element b, Element c) { return add(inv(lam(a, b)), lam(rho(b, a), c)); },
      [&](Element a, Element b, Element c) {
        return add(inv(lam(a, b)), lam(inv(add(inv(a), b)), lam(b, c)));
      });
  rep.rho_factorization = scan_triples(
      n, [&](Element a, Element b, Element c) { return add(inv(rho(b, a)), c); },
      [&](Element a, Element b, Element c) {
        return mul(add(inv(b), c), add(inv(rho(lam(b, c), a)), rho(c, b)));
      });

  rep.lambda_lambda = scan_triples(
      n, [&](Element a, Element b, Element c) { return lam(a, lam(b, c)); },
      [&](Element a, Element b, Element c) { return lam(lam(a, b), lam(rho(b, a), c)); });
  rep.lambda_rho_mixed = scan_triples(
      n, [&](Element a, Element b, Element c) { return lam(rho(lam(b, c), a), rho(c, b)); },
      [&](Element a, Element b, Element c) { return rho(lam(rho(b, a), c), lam(a, b)); });
  rep.rho_rho = scan_triples(
      n, [&](Element a, Element b, Element c) { return rho(c, rho(b, a)); },
      [&](Element a, Element b, Element c) { return rho(rho(c, b), rho(lam(b, c), a)); });
  rep.braid = check_braid(r);
  return rep;
}

CondSolutionVerdict check_condsolution(InverseSemiBrace const& s) {
  Element const one = group_identity(s);
  PairMap const r = lambda_rho(s);
  CondSolutionVerdict v;
  v.condition = scan_triples(
      s.order(),
      [&](Element a, Element b, Element c) {
        return s.add(a, s.mul(r.lambda(b, c), s.add(one, r.rho(b, c))));
      },
      [&](Element a, Element b, Element c) { return s.add(a, s.mul(b, s.add(one, c))); });
  v.braid = check_braid(r);
  return v;
}

}  // namespace isb
