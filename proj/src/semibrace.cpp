#include "isb/semibrace.hpp"

namespace isb {

namespace {

FiniteSemigroup additive_part(MagmaTable add) {
  if (auto chk = check_associative(add); !chk)
    throw AlgebraError(ErrorKind::NotAssociativeAdd, "(a+b)+c != a+(b+c)", *chk.witness);
  return FiniteSemigroup(std::move(add));
}

InverseSemigroup multiplicative_part(MagmaTable mul) {
  if (auto chk = check_associative(mul); !chk)
    throw AlgebraError(ErrorKind::NotInverseMul, "multiplication is not associative",
                       *chk.witness);
  try {
    return InverseSemigroup(FiniteSemigroup(std::move(mul)));
  } catch (AlgebraError const& e) {
    throw AlgebraError(ErrorKind::NotInverseMul, e.what(), e.witness());
  }
}

MagmaTable with_labels_from(MagmaTable add, MagmaTable const& mul) {
  if (add.order() != mul.order())
    throw AlgebraError(ErrorKind::DimensionMismatch, "addition and multiplication orders differ");
  if (add.labels().empty() && !mul.labels().empty()) add.set_labels(mul.labels());
  return add;
}

}  // namespace

PairMap::PairMap(std::size_t order, std::vector<Element> lambda, std::vector<Element> rho,
                 std::vector<std::string> labels)
    : n_(order), lam_(std::move(lambda)), rho_(std::move(rho)), labels_(std::move(labels)) {
  if (lam_.size() != n_ * n_ || rho_.size() != n_ * n_)
    throw AlgebraError(ErrorKind::MalformedTable, "pair map tables are not n x n");
  for (std::size_t i = 0; i < n_ * n_; ++i)
    if (lam_[i] >= n_ || rho_[i] >= n_)
      throw AlgebraError(ErrorKind::MalformedTable, "pair map entry out of range",
                         {static_cast<Element>(i / n_), static_cast<Element>(i % n_)});
  if (!labels_.empty() && labels_.size() != n_)
    throw AlgebraError(ErrorKind::MalformedTable, "label count differs from order");
}

Check check_equal(PairMap const& r1, PairMap const& r2) {
  if (r1.order() != r2.order())
    throw AlgebraError(ErrorKind::DimensionMismatch, "pair maps have different orders");
  auto const n = static_cast<Element>(r1.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (r1(a, b) != r2(a, b)) return Check::fail({a, b});
  return Check::pass();
}

InverseSemiBrace::InverseSemiBrace(MagmaTable add, MagmaTable mul)
    : add_(additive_part(with_labels_from(std::move(add), mul))),
      mul_(multiplicative_part(std::move(mul))) {
  if (auto chk = check_left_axiom(add_.table(), mul_); !chk)
    throw AlgebraError(ErrorKind::LeftAxiomFails, "a(b+c) != ab + a(a^-1+c)", *chk.witness);
}

InverseSemiBrace validate_semibrace(MagmaTable add, MagmaTable mul) {
  return InverseSemiBrace(std::move(add), std::move(mul));
}

Check check_left_axiom(MagmaTable const& add, InverseSemigroup const& mul) {
  if (add.order() != mul.order())
    throw AlgebraError(ErrorKind::DimensionMismatch, "addition and multiplication orders differ");
  auto const n = static_cast<Element>(add.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        Element const lhs = mul.mul(a, add(b, c));
        Element const rhs = add(mul.mul(a, b), mul.mul(a, add(mul.inv(a), c)));
        if (lhs != rhs) return Check::fail({a, b, c});
      }
  return Check::pass();
}

SemiBraceClassification classify_semibrace(InverseSemiBrace const& s) {
  SemiBraceClassification c;
  c.mul = classify_multiplicative(s.multiplicative());
  c.add = classify_additive(s.additive());
  c.is_left_semibrace = c.mul.is_group.holds;
  c.is_skew_brace = c.is_left_semibrace && c.add.is_group.holds;
  c.is_generalized = c.mul.is_completely_regular.holds;
  c.is_two_sided = check_right_axiom(s);
  c.add_left_cancellative = c.add.is_left_cancellative.holds;
  return c;
}

Check check_right_axiom(InverseSemiBrace const& s) {
  auto const n = static_cast<Element>(s.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        Element const lhs = s.mul(s.add(a, b), c);
        Element const rhs = s.add(s.mul(s.add(a, s.inv(c)), c), s.mul(b, c));
        if (lhs != rhs) return Check::fail({a, b, c});
      }
  return Check::pass();
}

PairMap lambda_rho(MagmaTable const& add, InverseSemigroup const& mul) {
  if (add.order() != mul.order())
    throw AlgebraError(ErrorKind::DimensionMismatch, "addition and multiplication orders differ");
  auto labels = add.labels().empty() ? mul.table().labels() : add.labels();
  return PairMap::from_function(
      add.order(),
      [&](Element a, Element b) {
        Element const s = add(mul.inv(a), b);
        return std::pair{mul.mul(a, s), mul.mul(mul.inv(s), b)};
      },
      std::move(labels));
}

PairMap lambda_rho(InverseSemiBrace const& s) {
  return lambda_rho(s.additive().table(), s.multiplicative());
}

Check check_lambda_endomorphism(InverseSemiBrace const& s) {
  PairMap const r = lambda_rho(s);
  auto const n = static_cast<Element>(s.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (r.lambda(a, s.add(b, c)) != s.add(r.lambda(a, b), r.lambda(a, c)))
          return Check::fail({a, b, c});
  return Check::pass();
}

Check check_lambda_product_identity(InverseSemiBrace const& s) {
  PairMap const r = lambda_rho(s);
  auto const n = static_cast<Element>(s.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element const ab = s.mul(a, b);
      Element const e = s.mul(ab, s.inv(ab));
      for (Element c = 0; c < n; ++c)
        if (r.lambda(ab, c) != s.add(e, r.lambda(a, r.lambda(b, c))))
          return Check::fail({a, b, c});
    }
  return Check::pass();
}

Element group_identity(InverseSemiBrace const& s) {
  auto const idem = s.multiplicative().idempotents();
  if (idem.size() != 1)
    throw AlgebraError(ErrorKind::NotLeftSemibrace, "multiplication is not a group",
                       {idem[0], idem[1]});
  return idem[0];
}

}  // namespace isb
