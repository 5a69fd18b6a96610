#include "isb/constructions.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "isb/classify.hpp"
#include "isb/morphism.hpp"
#include "isb/solutions.hpp"

namespace isb {

namespace {

void require_cap(std::size_t order, std::size_t cap) {
  if (order > cap)
    throw AlgebraError(ErrorKind::OrderExceedsCap,
                       "product order " + std::to_string(order) + " exceeds cap " +
                           std::to_string(cap));
}

void require_orders(ActionFamily const& f, std::size_t acting, std::size_t target,
                    char const* what) {
  if (f.acting_order() != acting || f.target_order() != target)
    throw AlgebraError(ErrorKind::DimensionMismatch, std::string(what) + " has wrong dimensions");
}

std::vector<CarrierMap> inverses_of(ActionFamily const& f) {
  std::vector<CarrierMap> out;
  out.reserve(f.acting_order());
  for (Element u = 0; u < f.acting_order(); ++u) {
    if (!is_bijective(f.map(u)))
      throw AlgebraError(ErrorKind::NotBijective, "action map is not a permutation", {u});
    out.push_back(inverse_permutation(f.map(u)));
  }
  return out;
}

// Lexicographically first element of a scan over a box of tuples.
template <class Pred>
Check scan(std::vector<std::size_t> const& bounds, Pred holds) {
  Witness w(bounds.size(), 0);
  for (auto b : bounds)
    if (b == 0) return Check::pass();
  while (true) {
    if (!holds(w)) return Check::fail(w);
    std::size_t i = w.size();
    while (i > 0) {
      --i;
      if (++w[i] < bounds[i]) break;
      w[i] = 0;
      if (i == 0) return Check::pass();
    }
    if (w.empty()) return Check::pass();
  }
}

Check product_closed_form_check(InverseSemiBrace const& b, PairMap const& closed) {
  return check_equal(closed, lambda_rho(b));
}

ProductResult finish_product(MagmaTable add, MagmaTable mul, std::vector<std::string> labels,
                             PairMap closed, auto&& expected_inverse) {
  add.set_labels(labels);
  mul.set_labels(std::move(labels));
  InverseSemiBrace b = validate_semibrace(std::move(add), std::move(mul));
  Check inv_ok = scan({b.order()}, [&](Witness const& w) { return b.inv(w[0]) == expected_inverse(w[0]); });
  Check closed_ok = product_closed_form_check(b, closed);
  return ProductResult{std::move(b), std::move(closed), std::move(closed_ok), std::move(inv_ok)};
}

}  // namespace

// ---------------------------------------------------------------------------

ActionFamily::ActionFamily(std::size_t acting_order, std::size_t target_order,
                           std::vector<CarrierMap> maps)
    : target_(target_order), maps_(std::move(maps)) {
  if (maps_.size() != acting_order)
    throw AlgebraError(ErrorKind::DimensionMismatch, "action family has wrong number of maps");
  for (Element u = 0; u < maps_.size(); ++u) {
    if (maps_[u].size() != target_)
      throw AlgebraError(ErrorKind::DimensionMismatch, "action map has wrong length", {u});
    for (Element x : maps_[u])
      if (x >= target_)
        throw AlgebraError(ErrorKind::MalformedTable, "action map value out of range", {u});
  }
}

ActionFamily ActionFamily::trivial(std::size_t acting_order, std::size_t target_order) {
  return ActionFamily(acting_order, target_order,
                      std::vector<CarrierMap>(acting_order, identity_map(target_order)));
}

ActionFamily ActionFamily::constant(std::size_t acting_order, CarrierMap const& map) {
  return ActionFamily(acting_order, map.size(), std::vector<CarrierMap>(acting_order, map));
}

Cocycle::Cocycle(std::size_t s_order, std::size_t t_order, std::vector<Element> table)
    : s_(s_order), t_(t_order), table_(std::move(table)) {
  if (table_.size() != s_ * s_)
    throw AlgebraError(ErrorKind::MalformedTable, "cocycle table is not |S| x |S|");
  for (Element x : table_)
    if (x >= t_) throw AlgebraError(ErrorKind::MalformedTable, "cocycle value out of range");
}

Cocycle Cocycle::constant(std::size_t s_order, std::size_t t_order, Element value) {
  return Cocycle(s_order, t_order, std::vector<Element>(s_order * s_order, value));
}

std::vector<std::string> product_labels(InverseSemiBrace const& s, InverseSemiBrace const& t) {
  std::vector<std::string> out;
  out.reserve(s.order() * t.order());
  for (Element a = 0; a < s.order(); ++a)
    for (Element u = 0; u < t.order(); ++u)
      out.push_back("(" + s.label(a) + "," + t.label(u) + ")");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::pair<ExampleVariant, std::string_view> kVariantNames[] = {
    {ExampleVariant::RightZero, "right_zero"},
    {ExampleVariant::LeftZero, "left_zero"},
    {ExampleVariant::AaInvB, "aa_inv_b"},
    {ExampleVariant::OppositeBbInvA, "opposite_bb_inv_a"},
    {ExampleVariant::BTimesE, "b_times_e"},
    {ExampleVariant::CliffordAb, "clifford_ab"},
    {ExampleVariant::CliffordBa, "clifford_ba"},
};

}  // namespace

std::string_view to_string(ExampleVariant v) noexcept {
  for (auto const& [k, name] : kVariantNames)
    if (k == v) return name;
  return "?";
}

std::optional<ExampleVariant> parse_example_variant(std::string_view name) noexcept {
  for (auto const& [k, n] : kVariantNames)
    if (n == name) return k;
  return std::nullopt;
}

std::vector<ExampleVariant> all_example_variants() {
  std::vector<ExampleVariant> out;
  for (auto const& [k, name] : kVariantNames) out.push_back(k);
  return out;
}

InverseSemiBrace build_example_family(InverseSemigroup const& m, ExampleVariant variant,
                                      std::optional<Element> e) {
  auto const& mul = m.table();
  auto inv = [&](Element x) { return m.inv(x); };
  std::function<Element(Element, Element)> op;
  switch (variant) {
    case ExampleVariant::RightZero:
      op = [](Element, Element b) { return b; };
      break;
    case ExampleVariant::LeftZero:
      op = [](Element a, Element) { return a; };
      break;
    case ExampleVariant::AaInvB:
      op = [&](Element a, Element b) { return mul(mul(a, inv(a)), b); };
      break;
    case ExampleVariant::OppositeBbInvA:
      op = [&](Element a, Element b) { return mul(mul(b, inv(b)), a); };
      break;
    case ExampleVariant::BTimesE: {
      if (!e || *e >= m.order())
        throw AlgebraError(ErrorKind::ElementNotIdempotent, "b_times_e needs an element e");
      if (!m.is_idempotent(*e))
        throw AlgebraError(ErrorKind::ElementNotIdempotent, "e is not idempotent", {*e});
      Element const ee = *e;
      op = [&, ee](Element, Element b) { return mul(b, ee); };
      break;
    }
    case ExampleVariant::CliffordAb:
    case ExampleVariant::CliffordBa: {
      auto cls = classify_multiplicative(m);
      if (!cls.is_clifford)
        throw AlgebraError(ErrorKind::NotClifford, "multiplication is not Clifford",
                           *cls.is_clifford.witness);
      if (variant == ExampleVariant::CliffordAb)
        op = [&](Element a, Element b) { return mul(a, b); };
      else
        op = [&](Element a, Element b) { return mul(b, a); };
      break;
    }
  }
  MagmaTable add = MagmaTable::from_function(m.order(), op, mul.labels());
  try {
    return validate_semibrace(std::move(add), mul);
  } catch (AlgebraError const& err) {
    throw AlgebraError(ErrorKind::InternalError,
                       std::string("example family failed validation: ") + err.what(),
                       err.witness());
  }
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> strong_semilattice_offsets(StrongSemilatticeData const& data) {
  std::vector<std::size_t> off(data.components.size() + 1, 0);
  for (std::size_t i = 0; i < data.components.size(); ++i)
    off[i + 1] = off[i] + data.components[i].order();
  return off;
}

namespace {

struct SemilatticeIndex {
  std::vector<std::size_t> offsets;
  std::vector<Element> component;  // global index -> alpha
  std::vector<Element> local;      // global index -> local index

  explicit SemilatticeIndex(StrongSemilatticeData const& data)
      : offsets(strong_semilattice_offsets(data)) {
    for (Element al = 0; al < data.components.size(); ++al)
      for (Element x = 0; x < data.components[al].order(); ++x) {
        component.push_back(al);
        local.push_back(x);
      }
  }
  Element global(Element alpha, Element x) const {
    return static_cast<Element>(offsets[alpha] + x);
  }
};

void validate_strong_semilattice(StrongSemilatticeData const& d) {
  auto const& y = d.y;
  auto const k = static_cast<Element>(y.order());
  if (d.components.size() != k)
    throw AlgebraError(ErrorKind::DimensionMismatch, "one component per semilattice element");
  if (auto c = check_commutative(y.table()); !c)
    throw AlgebraError(ErrorKind::NotSemilattice, "Y is not commutative", *c.witness);
  for (Element a = 0; a < k; ++a)
    if (!y.is_idempotent(a)) throw AlgebraError(ErrorKind::NotSemilattice, "Y is not idempotent", {a});

  auto geq = [&](Element a, Element b) { return y.mul(a, b) == b; };
  for (auto const& [key, f] : d.morphisms)
    if (key.first >= k || key.second >= k || !geq(key.first, key.second))
      throw AlgebraError(ErrorKind::MalformedTable, "morphism given for an incomparable pair",
                         {key.first, key.second});

  for (Element al = 0; al < k; ++al)
    for (Element be = 0; be < k; ++be) {
      if (!geq(al, be)) continue;
      auto it = d.morphisms.find({al, be});
      if (it == d.morphisms.end()) {
        if (al == be) throw AlgebraError(ErrorKind::IdentityConditionFails, "missing identity", {al});
        throw AlgebraError(ErrorKind::MalformedTable, "missing morphism", {al, be});
      }
      auto const& f = it->second;
      auto const& from = d.components[al];
      auto const& to = d.components[be];
      if (f.size() != from.order() ||
          std::any_of(f.begin(), f.end(), [&](Element x) { return x >= to.order(); }))
        throw AlgebraError(ErrorKind::DimensionMismatch, "morphism has wrong dimensions", {al, be});
      if (auto c = is_morphism(f, from.additive().table(), to.additive().table()); !c)
        throw AlgebraError(ErrorKind::MorphismNotHomomorphism, "structure map is not additive",
                           {al, be, (*c.witness)[0], (*c.witness)[1]});
      if (auto c = is_morphism(f, from.multiplicative().table(), to.multiplicative().table()); !c)
        throw AlgebraError(ErrorKind::MorphismNotHomomorphism, "structure map is not multiplicative",
                           {al, be, (*c.witness)[0], (*c.witness)[1]});
      if (al == be && f != identity_map(f.size()))
        throw AlgebraError(ErrorKind::IdentityConditionFails, "phi_{a,a} is not the identity", {al});
    }

  for (Element al = 0; al < k; ++al)
    for (Element be = 0; be < k; ++be)
      for (Element ga = 0; ga < k; ++ga) {
        if (!geq(al, be) || !geq(be, ga)) continue;
        auto const& ab = d.morphisms.at({al, be});
        auto const& bg = d.morphisms.at({be, ga});
        auto const& ag = d.morphisms.at({al, ga});
        if (compose(bg, ab) != ag)
          throw AlgebraError(ErrorKind::CompositionConditionFails,
                             "phi_{b,g} phi_{a,b} != phi_{a,g}", {al, be, ga});
      }
}

}  // namespace

InverseSemiBrace build_strong_semilattice(StrongSemilatticeData const& d) {
  validate_strong_semilattice(d);
  SemilatticeIndex idx(d);
  std::size_t const n = idx.component.size();
  auto glue = [&](bool additive) {
    return MagmaTable::from_function(n, [&](Element x, Element z) {
      Element const al = idx.component[x], be = idx.component[z];
      Element const m = d.y.mul(al, be);
      Element const xl = d.morphisms.at({al, m})[idx.local[x]];
      Element const zl = d.morphisms.at({be, m})[idx.local[z]];
      auto const& c = d.components[m];
      return idx.global(m, additive ? c.add(xl, zl) : c.mul(xl, zl));
    });
  };
  std::vector<std::string> labels;
  for (Element x = 0; x < n; ++x)
    labels.push_back(d.y.table().label(idx.component[x]) + ":" +
                     d.components[idx.component[x]].label(idx.local[x]));
  MagmaTable add = glue(true);
  MagmaTable mul = glue(false);
  add.set_labels(labels);
  mul.set_labels(std::move(labels));
  return validate_semibrace(std::move(add), std::move(mul));
}

PairMap strong_semilattice_solution(StrongSemilatticeData const& d,
                                    std::vector<PairMap> const& component_solutions) {
  validate_strong_semilattice(d);
  if (component_solutions.size() != d.components.size())
    throw AlgebraError(ErrorKind::DimensionMismatch, "one solution per component");
  for (Element al = 0; al < d.components.size(); ++al)
    if (component_solutions[al].order() != d.components[al].order())
      throw AlgebraError(ErrorKind::DimensionMismatch, "component solution has wrong order", {al});
  SemilatticeIndex idx(d);
  return PairMap::from_function(idx.component.size(), [&](Element x, Element z) {
    Element const al = idx.component[x], be = idx.component[z];
    Element const m = d.y.mul(al, be);
    auto [l, r] = component_solutions[m](d.morphisms.at({al, m})[idx.local[x]],
                                         d.morphisms.at({be, m})[idx.local[z]]);
    return std::pair{idx.global(m, l), idx.global(m, r)};
  });
}

// ---------------------------------------------------------------------------

bool MatchedSystemVerdict::valid() const noexcept {
  return alpha_additive_automorphism.holds && beta_additive_automorphism.holds &&
         alpha_homomorphism.holds && beta_homomorphism.holds && alpha_product_compatible.holds &&
         beta_product_compatible.holds && fixed_point_implication.holds &&
         alpha_inverse_identity.holds && beta_inverse_identity.holds &&
         alpha_idempotent_trivial.holds && beta_idempotent_trivial.holds;
}

MatchedSystemVerdict validate_matched_system(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                             ActionFamily const& alpha, ActionFamily const& beta) {
  std::size_t const n = s.order(), m = t.order();
  require_orders(alpha, m, n, "alpha");
  require_orders(beta, n, m, "beta");
  auto const ai = inverses_of(alpha);
  auto const bi = inverses_of(beta);

  MatchedSystemVerdict v;
  v.alpha_additive_automorphism = scan({m, n, n}, [&](Witness const& w) {
    return alpha(w[0], s.add(w[1], w[2])) == s.add(alpha(w[0], w[1]), alpha(w[0], w[2]));
  });
  v.beta_additive_automorphism = scan({n, m, m}, [&](Witness const& w) {
    return beta(w[0], t.add(w[1], w[2])) == t.add(beta(w[0], w[1]), beta(w[0], w[2]));
  });
  v.alpha_homomorphism = scan({m, m, n}, [&](Witness const& w) {
    return alpha(t.mul(w[0], w[1]), w[2]) == alpha(w[0], alpha(w[1], w[2]));
  });
  v.beta_homomorphism = scan({n, n, m}, [&](Witness const& w) {
    return beta(s.mul(w[0], w[1]), w[2]) == beta(w[0], beta(w[1], w[2]));
  });
  v.alpha_product_compatible = scan({n, n, m}, [&](Witness const& w) {
    Element const a = w[0], b = w[1], u = w[2];
    return alpha(u, s.mul(ai[u][a], b)) == s.mul(a, alpha(bi[a][u], b));
  });
  v.beta_product_compatible = scan({n, m, m}, [&](Witness const& w) {
    Element const a = w[0], u = w[1], vv = w[2];
    return beta(a, t.mul(bi[a][u], vv)) == t.mul(u, beta(ai[u][a], vv));
  });
  v.fixed_point_implication = scan({n, m}, [&](Witness const& w) {
    Element const a = w[0], u = w[1];
    bool const premise = alpha(u, s.mul(ai[u][a], a)) == a && beta(a, t.mul(bi[a][u], u)) == u;
    return !premise || (alpha(u, a) == a && beta(a, u) == u);
  });
  v.alpha_inverse_identity = scan({n, m}, [&](Witness const& w) {
    Element const a = w[0], u = w[1];
    return s.inv(ai[u][a]) == ai[bi[a][u]][s.inv(a)];
  });
  v.beta_inverse_identity = scan({n, m}, [&](Witness const& w) {
    Element const a = w[0], u = w[1];
    return t.inv(bi[a][u]) == bi[ai[u][a]][t.inv(u)];
  });
  v.alpha_idempotent_trivial = scan({m, n}, [&](Witness const& w) {
    return !t.multiplicative().is_idempotent(w[0]) || alpha(w[0], w[1]) == w[1];
  });
  v.beta_idempotent_trivial = scan({n, m}, [&](Witness const& w) {
    return !s.multiplicative().is_idempotent(w[0]) || beta(w[0], w[1]) == w[1];
  });
  return v;
}

namespace {

Witness first_failure(std::initializer_list<Check const*> checks) {
  for (auto const* c : checks)
    if (!c->holds) return *c->witness;
  return {};
}

}  // namespace

ProductResult build_matched_product(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                    ActionFamily const& alpha, ActionFamily const& beta,
                                    std::size_t cap) {
  ProductCarrier const pc{s.order(), t.order()};
  require_cap(pc.order(), cap);
  auto const v = validate_matched_system(s, t, alpha, beta);
  if (!v.valid())
    throw AlgebraError(
        ErrorKind::MatchedSystemInvalid, "matched product system check failed",
        first_failure({&v.alpha_additive_automorphism, &v.beta_additive_automorphism,
                       &v.alpha_homomorphism, &v.beta_homomorphism, &v.alpha_product_compatible,
                       &v.beta_product_compatible, &v.fixed_point_implication,
                       &v.alpha_inverse_identity, &v.beta_inverse_identity,
                       &v.alpha_idempotent_trivial, &v.beta_idempotent_trivial}));
  auto const ai = inverses_of(alpha);
  auto const bi = inverses_of(beta);

  MagmaTable add = MagmaTable::from_function(pc.order(), [&](Element p, Element q) {
    return pc.flat(s.add(pc.first(p), pc.first(q)), t.add(pc.second(p), pc.second(q)));
  });
  MagmaTable mul = MagmaTable::from_function(pc.order(), [&](Element p, Element q) {
    Element const a = pc.first(p), u = pc.second(p), b = pc.first(q), w = pc.second(q);
    return pc.flat(alpha(u, s.mul(ai[u][a], b)), beta(a, t.mul(bi[a][u], w)));
  });
  PairMap closed = build_matched_solution(lambda_rho(s), lambda_rho(t), alpha, beta);
  return finish_product(std::move(add), std::move(mul), product_labels(s, t), std::move(closed),
                        [&](Element p) {
                          Element const a = pc.first(p), u = pc.second(p);
                          return pc.flat(ai[bi[a][u]][s.inv(a)], bi[ai[u][a]][t.inv(u)]);
                        });
}

bool SolutionMatchedVerdict::valid() const noexcept {
  return alpha_braided.holds && beta_braided.holds && rho_alpha_twist.holds &&
         rho_beta_twist.holds && lambda_alpha_twist.holds && lambda_beta_twist.holds;
}

SolutionMatchedVerdict validate_solution_matched_system(PairMap const& rs, PairMap const& rt,
                                                        ActionFamily const& alpha,
                                                        ActionFamily const& beta) {
  std::size_t const n = rs.order(), m = rt.order();
  require_orders(alpha, m, n, "alpha");
  require_orders(beta, n, m, "beta");
  auto const ai = inverses_of(alpha);
  auto const bi = inverses_of(beta);
  auto lam_s = [&](Element a, Element b) { return rs.lambda(a, b); };
  auto rho_s = [&](Element b, Element a) { return rs.rho(a, b); };
  auto lam_t = [&](Element u, Element v) { return rt.lambda(u, v); };
  auto rho_t = [&](Element v, Element u) { return rt.rho(u, v); };

  SolutionMatchedVerdict out;
  out.alpha_braided = scan({m, m, n}, [&](Witness const& w) {
    Element const u = w[0], v = w[1], a = w[2];
    return alpha(u, alpha(v, a)) == alpha(lam_t(u, v), alpha(rho_t(v, u), a));
  });
  out.beta_braided = scan({n, n, m}, [&](Witness const& w) {
    Element const a = w[0], b = w[1], u = w[2];
    return beta(a, beta(b, u)) == beta(lam_s(a, b), beta(rho_s(b, a), u));
  });
  out.rho_alpha_twist = scan({n, n, m}, [&](Witness const& w) {
    Element const a = w[0], b = w[1], u = w[2];
    Element const rba = rho_s(b, a);
    return rho_s(ai[u][b], ai[beta(a, u)][a]) == ai[beta(rba, bi[b][u])][rba];
  });
  out.rho_beta_twist = scan({n, m, m}, [&](Witness const& w) {
    Element const a = w[0], u = w[1], v = w[2];
    Element const rvu = rho_t(v, u);
    return rho_t(bi[a][v], bi[alpha(u, a)][u]) == bi[alpha(rvu, ai[v][a])][rvu];
  });
  out.lambda_alpha_twist = scan({n, m, n}, [&](Witness const& w) {
    Element const a = w[0], u = w[1], b = w[2];
    return lam_s(a, alpha(bi[a][u], b)) == alpha(u, lam_s(ai[u][a], b));
  });
  out.lambda_beta_twist = scan({n, m, m}, [&](Witness const& w) {
    Element const a = w[0], u = w[1], v = w[2];
    return lam_t(u, beta(ai[u][a], v)) == beta(a, lam_t(bi[a][u], v));
  });
  return out;
}

PairMap build_matched_solution(PairMap const& rs, PairMap const& rt, ActionFamily const& alpha,
                               ActionFamily const& beta) {
  auto const v = validate_solution_matched_system(rs, rt, alpha, beta);
  if (!v.valid())
    throw AlgebraError(ErrorKind::MatchedSystemInvalid, "matched system of solutions check failed",
                       first_failure({&v.alpha_braided, &v.beta_braided, &v.rho_alpha_twist,
                                      &v.rho_beta_twist, &v.lambda_alpha_twist,
                                      &v.lambda_beta_twist}));
  auto const ai = inverses_of(alpha);
  auto const bi = inverses_of(beta);
  ProductCarrier const pc{rs.order(), rt.order()};
  return PairMap::from_function(pc.order(), [&](Element p, Element q) {
    Element const a = pc.first(p), u = pc.second(p), b = pc.first(q), w = pc.second(q);
    Element const abar = ai[u][a];
    Element const ubar = bi[a][u];
    Element const big_a = alpha(u, rs.lambda(abar, b));
    Element const big_u = beta(a, rt.lambda(ubar, w));
    Element const big_abar = ai[big_u][big_a];
    Element const big_ubar = bi[big_a][big_u];
    Element const first = ai[big_ubar][rs.rho(a, alpha(ubar, b))];
    Element const second = bi[big_abar][rt.rho(u, beta(abar, w))];
    return std::pair{pc.flat(big_a, big_u), pc.flat(first, second)};
  });
}

// ---------------------------------------------------------------------------

void validate_action(ActionFamily const& sigma, InverseSemigroup const& t, InverseSemiBrace const& s,
                     ActionTarget target) {
  require_orders(sigma, t.order(), s.order(), "sigma");
  for (Element u = 0; u < t.order(); ++u) {
    if (!is_bijective(sigma.map(u)))
      throw AlgebraError(ErrorKind::SigmaNotSemibraceAutomorphism, "sigma(u) is not bijective", {u});
    if (auto c = is_morphism(sigma.map(u), s.additive().table(), s.additive().table()); !c)
      throw AlgebraError(ErrorKind::SigmaNotSemibraceAutomorphism,
                         "sigma(u) does not preserve addition", {u, (*c.witness)[0], (*c.witness)[1]});
    if (target == ActionTarget::SemibraceAutomorphisms)
      if (auto c = is_morphism(sigma.map(u), s.multiplicative().table(), s.multiplicative().table()); !c)
        throw AlgebraError(ErrorKind::SigmaNotSemibraceAutomorphism,
                           "sigma(u) does not preserve multiplication",
                           {u, (*c.witness)[0], (*c.witness)[1]});
  }
  for (Element u = 0; u < t.order(); ++u)
    for (Element v = 0; v < t.order(); ++v)
      for (Element a = 0; a < s.order(); ++a)
        if (sigma(t.mul(u, v), a) != sigma(u, sigma(v, a)))
          throw AlgebraError(ErrorKind::SigmaNotHomomorphism, "sigma(uv) != sigma(u) sigma(v)",
                             {u, v, a});
  for (Element e : t.idempotents())
    for (Element a = 0; a < s.order(); ++a)
      if (sigma(e, a) != a)
        throw AlgebraError(ErrorKind::SigmaNotHomomorphism, "idempotent acts non-trivially", {e, a});
}

MagmaTable semidirect_multiplication(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                     ActionFamily const& sigma) {
  require_orders(sigma, t.order(), s.order(), "sigma");
  ProductCarrier const pc{s.order(), t.order()};
  return MagmaTable::from_function(
      pc.order(),
      [&](Element p, Element q) {
        Element const a = pc.first(p), u = pc.second(p), b = pc.first(q), v = pc.second(q);
        return pc.flat(s.mul(a, sigma(u, b)), t.mul(u, v));
      },
      product_labels(s, t));
}

namespace {

Element semidirect_inverse(InverseSemiBrace const& s, InverseSemiBrace const& t,
                           ActionFamily const& sigma, Element p) {
  ProductCarrier const pc{s.order(), t.order()};
  Element const a = pc.first(p), u = pc.second(p);
  return pc.flat(sigma(t.inv(u), s.inv(a)), t.inv(u));
}

PairMap semidirect_closed_form(InverseSemiBrace const& s, InverseSemiBrace const& t,
                               ActionFamily const& sigma) {
  PairMap const rs = lambda_rho(s), rt = lambda_rho(t);
  ProductCarrier const pc{s.order(), t.order()};
  return PairMap::from_function(pc.order(), [&](Element p, Element q) {
    Element const a = pc.first(p), u = pc.second(p), b = pc.first(q), v = pc.second(q);
    Element const uinv = t.inv(u);
    Element const luv = rt.lambda(u, v);
    Element const first_s = sigma(u, rs.lambda(sigma(uinv, a), b));
    Element const second_s = sigma(t.inv(luv), rs.rho(a, sigma(u, b)));
    return std::pair{pc.flat(first_s, luv), pc.flat(second_s, rt.rho(u, v))};
  });
}

}  // namespace

SemidirectResult build_semidirect(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                  ActionFamily const& sigma, std::size_t cap) {
  ProductCarrier const pc{s.order(), t.order()};
  require_cap(pc.order(), cap);
  validate_action(sigma, t.multiplicative(), s);
  MagmaTable add = MagmaTable::from_function(pc.order(), [&](Element p, Element q) {
    return pc.flat(s.add(pc.first(p), pc.first(q)), t.add(pc.second(p), pc.second(q)));
  });
  auto product = finish_product(std::move(add), semidirect_multiplication(s, t, sigma),
                                product_labels(s, t), semidirect_closed_form(s, t, sigma),
                                [&](Element p) { return semidirect_inverse(s, t, sigma, p); });
  PairMap const rs = lambda_rho(s);
  std::size_t const n = s.order();
  auto lam_ok = scan({t.order(), n, n}, [&](Witness const& w) {
    Element const u = w[0], a = w[1], b = w[2];
    return sigma(u, rs.lambda(a, b)) == rs.lambda(sigma(u, a), sigma(u, b));
  });
  auto rho_ok = scan({t.order(), n, n}, [&](Witness const& w) {
    Element const u = w[0], a = w[1], b = w[2];
    return sigma(u, rs.rho(a, b)) == rs.rho(sigma(u, a), sigma(u, b));
  });
  return SemidirectResult{std::move(product), std::move(lam_ok), std::move(rho_ok)};
}

// ---------------------------------------------------------------------------

MagmaTable double_semidirect_addition(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                      ActionFamily const& delta) {
  require_orders(delta, s.order(), t.order(), "delta");
  ProductCarrier const pc{s.order(), t.order()};
  return MagmaTable::from_function(
      pc.order(),
      [&](Element p, Element q) {
        Element const a = pc.first(p), u = pc.second(p), b = pc.first(q), v = pc.second(q);
        return pc.flat(s.add(a, b), t.add(delta(b, u), v));
      },
      product_labels(s, t));
}

MagmaTable asymmetric_addition(InverseSemiBrace const& s, InverseSemiBrace const& t,
                               ActionFamily const& delta, Cocycle const& co) {
  require_orders(delta, s.order(), t.order(), "delta");
  if (co.s_order() != s.order() || co.t_order() != t.order())
    throw AlgebraError(ErrorKind::DimensionMismatch, "cocycle has wrong dimensions");
  ProductCarrier const pc{s.order(), t.order()};
  return MagmaTable::from_function(
      pc.order(),
      [&](Element p, Element q) {
        Element const a = pc.first(p), u = pc.second(p), b = pc.first(q), v = pc.second(q);
        return pc.flat(s.add(a, b), t.add(t.add(co(a, b), delta(b, u)), v));
      },
      product_labels(s, t));
}

namespace {

void require_delta_endomorphisms(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                 ActionFamily const& delta) {
  require_orders(delta, s.order(), t.order(), "delta");
  for (Element a = 0; a < s.order(); ++a)
    if (auto c = is_morphism(delta.map(a), t.additive().table(), t.additive().table()); !c)
      throw AlgebraError(ErrorKind::DeltaNotEndomorphism, "delta(a) is not additive",
                         {a, (*c.witness)[0], (*c.witness)[1]});
}

}  // namespace

Check check_double_semidirect_compatibility(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                            ActionFamily const& sigma, ActionFamily const& delta) {
  require_orders(sigma, t.order(), s.order(), "sigma");
  require_orders(delta, s.order(), t.order(), "delta");
  PairMap const rs = lambda_rho(s);
  std::size_t const n = s.order(), m = t.order();
  return scan({n, n, m, m, m}, [&](Witness const& x) {
    Element const a = x[0], b = x[1], u = x[2], v = x[3], w = x[4];
    Element const lhs = t.add(delta(rs.lambda(a, sigma(u, b)), t.mul(u, v)),
                              t.mul(u, t.add(delta(b, t.inv(u)), w)));
    Element const rhs = t.mul(u, t.add(delta(b, v), w));
    return lhs == rhs;
  });
}

PairMap double_semidirect_closed_form(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                      ActionFamily const& sigma, ActionFamily const& delta) {
  PairMap const rs = lambda_rho(s);
  ProductCarrier const pc{s.order(), t.order()};
  return PairMap::from_function(pc.order(), [&](Element p, Element q) {
    Element const a = pc.first(p), u = pc.second(p), b = pc.first(q), v = pc.second(q);
    Element const ub = sigma(u, b);
    Element const omega = t.add(delta(b, t.inv(u)), v);
    Element const omega_inv = t.inv(omega);
    Element const first = pc.flat(rs.lambda(a, ub), t.mul(u, omega));
    Element const second =
        pc.flat(sigma(t.mul(omega_inv, t.inv(u)), rs.rho(a, ub)), t.mul(omega_inv, v));
    return std::pair{first, second};
  });
}

DoubleSemidirectResult build_double_semidirect(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                               ActionFamily const& sigma, ActionFamily const& delta,
                                               std::size_t cap) {
  ProductCarrier const pc{s.order(), t.order()};
  require_cap(pc.order(), cap);
  validate_action(sigma, t.multiplicative(), s);
  require_delta_endomorphisms(s, t, delta);
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = 0; b < s.order(); ++b)
      for (Element u = 0; u < t.order(); ++u)
        if (delta(s.add(a, b), u) != delta(b, delta(a, u)))
          throw AlgebraError(ErrorKind::DeltaNotAntiHomomorphism, "u^{a+b} != (u^a)^b", {a, b, u});
  if (auto c = check_double_semidirect_compatibility(s, t, sigma, delta); !c)
    throw AlgebraError(ErrorKind::DoubleSemidirectCompatibilityFails,
                       "(uv)^{lambda_a(^u b)} + u((u^-1)^b + w) != u(v^b + w)", *c.witness);

  DoubleSemidirectResult out{
      finish_product(double_semidirect_addition(s, t, delta), semidirect_multiplication(s, t, sigma),
                     product_labels(s, t), double_semidirect_closed_form(s, t, sigma, delta),
                     [&](Element p) { return semidirect_inverse(s, t, sigma, p); })};

  auto cs = classify_semibrace(s), ct = classify_semibrace(t);
  if (cs.is_left_semibrace && ct.is_left_semibrace) {
    out.factors_left_cancellative = cs.add_left_cancellative && ct.add_left_cancellative;
    bool invertible = true;
    for (Element a = 0; a < s.order(); ++a) invertible = invertible && is_bijective(delta.map(a));
    out.factors_skew_with_invertible_delta = cs.is_skew_brace && ct.is_skew_brace && invertible;
  }
  return out;
}

DoubleSemidirectSolutionReport double_semidirect_solution(InverseSemiBrace const& b,
                                                          InverseSemiBrace const& s,
                                                          InverseSemiBrace const& t,
                                                          ActionFamily const& sigma,
                                                          ActionFamily const& delta) {
  DoubleSemidirectSolutionReport rep;
  rep.closed_form = double_semidirect_closed_form(s, t, sigma, delta);
  rep.closed_form_matches = check_equal(rep.closed_form, lambda_rho(b));
  rep.braid = check_braid(rep.closed_form);

  auto const cs = classify_semibrace(s), ct = classify_semibrace(t);
  rep.conditions_applicable = cs.is_left_semibrace && ct.is_left_semibrace &&
                              check_braid(lambda_rho(s)).holds && check_braid(lambda_rho(t)).holds;
  if (!rep.conditions_applicable) return rep;

  Element const one_s = group_identity(s), one_t = group_identity(t);
  PairMap const rs = lambda_rho(s);
  std::size_t const n = s.order(), m = t.order();
  rep.delta_identity_absorbs = scan({n, m}, [&](Witness const& w) {
    return delta(w[0], delta(one_s, w[1])) == delta(w[0], w[1]);
  });
  rep.identity_shift = scan({n, m}, [&](Witness const& w) {
    return t.add(delta(w[0], one_t), w[1]) == t.add(one_t, w[1]);
  });
  rep.delta_twisted_product = scan({n, n, m}, [&](Witness const& w) {
    Element const a = w[0], bb = w[1], u = w[2];
    return delta(s.mul(a, bb), u) == delta(rs.lambda(a, bb), delta(a, u));
  });
  bool const premise = (rep.delta_identity_absorbs->holds || rep.delta_twisted_product->holds) &&
                       rep.identity_shift->holds;
  rep.implication_consistent = !premise || rep.braid.holds;
  return rep;
}

// ---------------------------------------------------------------------------

Check validate_cocycle(InverseSemiBrace const& s, InverseSemiBrace const& t, ActionFamily const& delta,
                       Cocycle const& co) {
  require_delta_endomorphisms(s, t, delta);
  if (co.s_order() != s.order() || co.t_order() != t.order())
    throw AlgebraError(ErrorKind::DimensionMismatch, "cocycle has wrong dimensions");
  std::size_t const n = s.order(), m = t.order();
  return scan({n, n, n, m, m}, [&](Witness const& x) {
    Element const a = x[0], b = x[1], c = x[2], u = x[3], v = x[4];
    Element const vc = delta(c, v);
    Element const lhs = t.add(t.add(t.add(co(s.add(a, b), c), delta(c, co(a, b))),
                                    delta(c, delta(b, u))),
                              vc);
    Element const rhs =
        t.add(t.add(t.add(co(a, s.add(b, c)), delta(s.add(b, c), u)), co(b, c)), vc);
    return lhs == rhs;
  });
}

Check check_asymmetric_compatibility(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                     ActionFamily const& sigma, ActionFamily const& delta,
                                     Cocycle const& co) {
  require_orders(sigma, t.order(), s.order(), "sigma");
  require_orders(delta, s.order(), t.order(), "delta");
  PairMap const rs = lambda_rho(s);
  std::size_t const n = s.order(), m = t.order();
  return scan({n, n, n, m, m}, [&](Witness const& x) {
    Element const a = x[0], b = x[1], c = x[2], u = x[3], v = x[4];
    Element const uinv = t.inv(u);
    Element const lam = rs.lambda(a, sigma(u, c));
    Element const lhs = t.add(
        t.add(co(s.mul(a, sigma(u, b)), lam), delta(lam, t.mul(u, v))),
        t.mul(u, t.add(co(sigma(uinv, s.inv(a)), c), delta(c, uinv))));
    Element const rhs = t.mul(u, t.add(co(b, c), delta(c, v)));
    return lhs == rhs;
  });
}

PairMap asymmetric_closed_form(InverseSemiBrace const& s, InverseSemiBrace const& t,
                               ActionFamily const& sigma, ActionFamily const& delta,
                               Cocycle const& co) {
  PairMap const rs = lambda_rho(s);
  ProductCarrier const pc{s.order(), t.order()};
  return PairMap::from_function(pc.order(), [&](Element p, Element q) {
    Element const a = pc.first(p), u = pc.second(p), b = pc.first(q), v = pc.second(q);
    Element const uinv = t.inv(u);
    Element const ub = sigma(u, b);
    Element const twist = t.add(co(sigma(uinv, s.inv(a)), b), t.add(delta(b, uinv), v));
    Element const twist_inv = t.inv(twist);
    Element const first = pc.flat(rs.lambda(a, ub), t.mul(u, twist));
    Element const second =
        pc.flat(sigma(t.mul(twist_inv, uinv), rs.rho(a, ub)), t.mul(twist_inv, v));
    return std::pair{first, second};
  });
}

ProductResult build_asymmetric(InverseSemiBrace const& s, InverseSemiBrace const& t,
                               ActionFamily const& sigma, ActionFamily const& delta,
                               Cocycle const& co, std::size_t cap) {
  ProductCarrier const pc{s.order(), t.order()};
  require_cap(pc.order(), cap);
  validate_action(sigma, t.multiplicative(), s);
  if (auto c = validate_cocycle(s, t, delta, co); !c)
    throw AlgebraError(ErrorKind::CocycleFails, "cocycle identity fails", *c.witness);
  if (auto c = check_asymmetric_compatibility(s, t, sigma, delta, co); !c)
    throw AlgebraError(ErrorKind::AsymmetricCompatibilityFails,
                       "asymmetric compatibility identity fails", *c.witness);
  return finish_product(asymmetric_addition(s, t, delta, co), semidirect_multiplication(s, t, sigma),
                        product_labels(s, t), asymmetric_closed_form(s, t, sigma, delta, co),
                        [&](Element p) { return semidirect_inverse(s, t, sigma, p); });
}

AsymmetricSolutionReport check_asymmetric_solution_conditions(InverseSemiBrace const& s,
                                                              InverseSemiBrace const& t,
                                                              ActionFamily const& sigma,
                                                              ActionFamily const& delta,
                                                              Cocycle const& co) {
  Element const one_s = group_identity(s), one_t = group_identity(t);
  PairMap const rs = lambda_rho(s);
  std::size_t const n = s.order(), m = t.order();
  AsymmetricSolutionReport rep;
  rep.delta_identity_absorbs = scan({n, m}, [&](Witness const& w) {
    return delta(w[0], delta(one_s, w[1])) == delta(w[0], w[1]);
  });
  rep.cocycle_identity_row = scan({n, m}, [&](Witness const& w) {
    return t.add(co(one_s, w[0]), w[1]) == t.add(one_t, w[1]);
  });
  rep.cocycle_right_absorbs = scan({n, n}, [&](Witness const& w) {
    return co(w[0], s.add(one_s, w[1])) == co(w[0], w[1]);
  });
  rep.delta_twisted_product = scan({n, n, m}, [&](Witness const& w) {
    Element const a = w[0], b = w[1], u = w[2];
    return delta(s.mul(a, b), u) == delta(rs.lambda(a, b), delta(a, u));
  });
  rep.closed_form = asymmetric_closed_form(s, t, sigma, delta, co);
  rep.braid = check_braid(rep.closed_form);
  bool const premise = (rep.delta_identity_absorbs.holds || rep.delta_twisted_product.holds) &&
                       rep.cocycle_identity_row.holds && rep.cocycle_right_absorbs.holds;
  rep.implication_consistent = !premise || rep.braid.holds;
  return rep;
}

}  // namespace isb
