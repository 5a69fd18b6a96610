#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "isb/magma.hpp"
#include "isb/pairmap.hpp"
#include "isb/semibrace.hpp"

namespace isb {

// maps[u] is the map on the target carrier attached to acting element u.
class ActionFamily {
 public:
  ActionFamily(std::size_t acting_order, std::size_t target_order, std::vector<CarrierMap> maps);

  static ActionFamily trivial(std::size_t acting_order, std::size_t target_order);
  static ActionFamily constant(std::size_t acting_order, CarrierMap const& map);

  std::size_t acting_order() const noexcept { return maps_.size(); }
  std::size_t target_order() const noexcept { return target_; }
  Element operator()(Element u, Element a) const noexcept { return maps_[u][a]; }
  CarrierMap const& map(Element u) const noexcept { return maps_[u]; }
  std::vector<CarrierMap> const& maps() const noexcept { return maps_; }

 private:
  std::size_t target_;
  std::vector<CarrierMap> maps_;
};

// table[a][b] = b(a, b), a map S x S -> T.
class Cocycle {
 public:
  Cocycle(std::size_t s_order, std::size_t t_order, std::vector<Element> table);
  static Cocycle constant(std::size_t s_order, std::size_t t_order, Element value);

  std::size_t s_order() const noexcept { return s_; }
  std::size_t t_order() const noexcept { return t_; }
  Element operator()(Element a, Element b) const noexcept { return table_[a * s_ + b]; }
  std::vector<Element> const& table() const noexcept { return table_; }
  bool operator==(Cocycle const& o) const noexcept { return s_ == o.s_ && table_ == o.table_; }

 private:
  std::size_t s_;
  std::size_t t_;
  std::vector<Element> table_;
};

// Pairs (a, u) are stored at index a * |T| + u.
struct ProductCarrier {
  std::size_t s_order;
  std::size_t t_order;

  std::size_t order() const noexcept { return s_order * t_order; }
  Element flat(Element a, Element u) const noexcept { return static_cast<Element>(a * t_order + u); }
  Element first(Element p) const noexcept { return static_cast<Element>(p / t_order); }
  Element second(Element p) const noexcept { return static_cast<Element>(p % t_order); }
};

inline constexpr std::size_t kProductCap = 64;

// ---------------------------------------------------------------------------
// Example families over a fixed inverse semigroup M.

enum class ExampleVariant {
  RightZero,       // a + b = b
  LeftZero,        // a + b = a
  AaInvB,          // a + b = a a^-1 b
  OppositeBbInvA,  // a + b = b b^-1 a
  BTimesE,         // a + b = b e, e idempotent
  CliffordAb,      // a + b = ab, M Clifford
  CliffordBa,      // a + b = ba, M Clifford
};

std::string_view to_string(ExampleVariant v) noexcept;
std::optional<ExampleVariant> parse_example_variant(std::string_view name) noexcept;
std::vector<ExampleVariant> all_example_variants();

InverseSemiBrace build_example_family(InverseSemigroup const& m, ExampleVariant variant,
                                      std::optional<Element> e = std::nullopt);

// ---------------------------------------------------------------------------
// Strong semilattice [Y; S_alpha, phi_{alpha,beta}].

struct StrongSemilatticeData {
  FiniteSemigroup y;
  std::vector<InverseSemiBrace> components;
  // Keyed by (alpha, beta) with alpha >= beta, i.e. alpha * beta = beta.
  std::map<std::pair<Element, Element>, CarrierMap> morphisms;
};

// Component alpha occupies the index block starting at offsets[alpha].
std::vector<std::size_t> strong_semilattice_offsets(StrongSemilatticeData const& data);

InverseSemiBrace build_strong_semilattice(StrongSemilatticeData const& data);

// r(x, y) = r_{alpha beta}(phi_{alpha, alpha beta}(x), phi_{beta, alpha beta}(y)).
PairMap strong_semilattice_solution(StrongSemilatticeData const& data,
                                    std::vector<PairMap> const& component_solutions);

// ---------------------------------------------------------------------------
// Matched products.

struct MatchedSystemVerdict {
  Check alpha_additive_automorphism;  // (u, a, b)
  Check beta_additive_automorphism;   // (a, u, v)
  Check alpha_homomorphism;           // (u, v, a)
  Check beta_homomorphism;            // (a, b, u)
  Check alpha_product_compatible;     // alpha_u(alpha_u^-1(a) b) = a alpha_{beta_a^-1(u)}(b); (a, b, u)
  Check beta_product_compatible;      // beta_a(beta_a^-1(u) v) = u beta_{alpha_u^-1(a)}(v); (a, u, v)
  Check fixed_point_implication;      // (a, u)
  Check alpha_inverse_identity;       // (alpha_u^-1(a))^-1 = alpha^-1_{beta_a^-1(u)}(a^-1); (a, u)
  Check beta_inverse_identity;        // (a, u)
  Check alpha_idempotent_trivial;     // (e, a)
  Check beta_idempotent_trivial;      // (e, u)

  bool valid() const noexcept;
};

// alpha acts on S indexed by T; beta acts on T indexed by S. Every map must be
// a permutation (NotBijective otherwise).
MatchedSystemVerdict validate_matched_system(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                             ActionFamily const& alpha, ActionFamily const& beta);

struct ProductResult {
  InverseSemiBrace structure;
  PairMap closed_form;
  Check closed_form_matches;  // closed_form == lambda_rho(structure); witness (p, q)
  Check inverse_formula;      // derived inverse equals the product formula; witness (p)
};

// Throws MatchedSystemInvalid with the first failing check's witness.
ProductResult build_matched_product(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                    ActionFamily const& alpha, ActionFamily const& beta,
                                    std::size_t cap = kProductCap);

struct SolutionMatchedVerdict {
  Check alpha_braided;       // alpha_u alpha_v = alpha_{lambda_u(v)} alpha_{rho_v(u)}; (u, v, a)
  Check beta_braided;        // (a, b, u)
  Check rho_alpha_twist;     // (a, b, u)
  Check rho_beta_twist;      // (a, u, v)
  Check lambda_alpha_twist;  // lambda_a alpha_{beta_a^-1(u)} = alpha_u lambda_{alpha_u^-1(a)}; (a, u, b)
  Check lambda_beta_twist;   // (a, u, v)

  bool valid() const noexcept;
};

SolutionMatchedVerdict validate_solution_matched_system(PairMap const& rs, PairMap const& rt,
                                                        ActionFamily const& alpha,
                                                        ActionFamily const& beta);

// Throws MatchedSystemInvalid when the verdict above is not valid.
PairMap build_matched_solution(PairMap const& rs, PairMap const& rt, ActionFamily const& alpha,
                               ActionFamily const& beta);

// ---------------------------------------------------------------------------
// Semidirect, double semidirect and asymmetric products.

enum class ActionTarget { AdditiveAutomorphisms, SemibraceAutomorphisms };

// sigma must map (T,.) homomorphically into automorphisms of S and fix S
// pointwise at idempotents of T. Throws SigmaNotSemibraceAutomorphism or
// SigmaNotHomomorphism.
void validate_action(ActionFamily const& sigma, InverseSemigroup const& t, InverseSemiBrace const& s,
                     ActionTarget target = ActionTarget::SemibraceAutomorphisms);

struct SemidirectResult {
  ProductResult product;
  Check action_commutes_lambda;  // ^u lambda_a(b) = lambda_{^u a}(^u b); (u, a, b)
  Check action_commutes_rho;     // ^u rho_b(a) = rho_{^u b}(^u a); (u, a, b)
};

SemidirectResult build_semidirect(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                  ActionFamily const& sigma, std::size_t cap = kProductCap);

// Raw tables of the twisted sums, usable when validation fails.
MagmaTable semidirect_multiplication(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                     ActionFamily const& sigma);
MagmaTable double_semidirect_addition(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                      ActionFamily const& delta);
MagmaTable asymmetric_addition(InverseSemiBrace const& s, InverseSemiBrace const& t,
                               ActionFamily const& delta, Cocycle const& b);

// (uv)^{lambda_a(^u b)} + u((u^-1)^b + w) = u(v^b + w); witness (a, b, u, v, w).
Check check_double_semidirect_compatibility(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                            ActionFamily const& sigma, ActionFamily const& delta);

struct DoubleSemidirectResult {
  ProductResult product;
  // Set when both factors are left semi-braces.
  bool factors_left_cancellative = false;
  bool factors_skew_with_invertible_delta = false;
};

// Throws DeltaNotEndomorphism, DeltaNotAntiHomomorphism,
// DoubleSemidirectCompatibilityFails or propagated validation errors.
DoubleSemidirectResult build_double_semidirect(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                               ActionFamily const& sigma, ActionFamily const& delta,
                                               std::size_t cap = kProductCap);

PairMap double_semidirect_closed_form(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                      ActionFamily const& sigma, ActionFamily const& delta);

struct DoubleSemidirectSolutionReport {
  PairMap closed_form;
  Check closed_form_matches;
  bool conditions_applicable = false;  // both factors left semi-braces with braid solutions
  std::optional<Check> delta_identity_absorbs;  // (u^1)^a = u^a; (a, u)
  std::optional<Check> identity_shift;          // 1^a + u = 1 + u; (a, u)
  std::optional<Check> delta_twisted_product;   // u^{ab} = (u^a)^{lambda_a(b)}; (a, b, u)
  Check braid;
  bool implication_consistent = true;
};

DoubleSemidirectSolutionReport double_semidirect_solution(InverseSemiBrace const& b,
                                                          InverseSemiBrace const& s,
                                                          InverseSemiBrace const& t,
                                                          ActionFamily const& sigma,
                                                          ActionFamily const& delta);

// b(a+b,c) + b(a,b)^c + (u^b)^c + v^c = b(a,b+c) + u^{b+c} + b(b,c) + v^c;
// witness (a, b, c, u, v). Throws DeltaNotEndomorphism.
Check validate_cocycle(InverseSemiBrace const& s, InverseSemiBrace const& t, ActionFamily const& delta,
                       Cocycle const& b);

// witness (a, b, c, u, v)
Check check_asymmetric_compatibility(InverseSemiBrace const& s, InverseSemiBrace const& t,
                                     ActionFamily const& sigma, ActionFamily const& delta,
                                     Cocycle const& b);

// Throws CocycleFails, AsymmetricCompatibilityFails or propagated errors.
ProductResult build_asymmetric(InverseSemiBrace const& s, InverseSemiBrace const& t,
                               ActionFamily const& sigma, ActionFamily const& delta,
                               Cocycle const& b, std::size_t cap = kProductCap);

PairMap asymmetric_closed_form(InverseSemiBrace const& s, InverseSemiBrace const& t,
                               ActionFamily const& sigma, ActionFamily const& delta,
                               Cocycle const& b);

struct AsymmetricSolutionReport {
  Check delta_identity_absorbs;  // (u^1)^a = u^a; (a, u)
  Check cocycle_identity_row;    // b(1,a) + u = 1 + u; (a, u)
  Check cocycle_right_absorbs;   // b(a, 1+b) = b(a,b); (a, b)
  Check delta_twisted_product;   // u^{ab} = (u^a)^{lambda_a(b)}; (a, b, u)
  PairMap closed_form;
  Check braid;
  bool implication_consistent = true;
};

// Requires left semi-braces S and T (NotLeftSemibrace otherwise).
AsymmetricSolutionReport check_asymmetric_solution_conditions(InverseSemiBrace const& s,
                                                              InverseSemiBrace const& t,
                                                              ActionFamily const& sigma,
                                                              ActionFamily const& delta,
                                                              Cocycle const& b);

std::vector<std::string> product_labels(InverseSemiBrace const& s, InverseSemiBrace const& t);

}  // namespace isb
