#include "isb/magma.hpp"

#include <algorithm>
#include <numeric>

namespace isb {

namespace {

constexpr std::string_view kErrorNames[] = {
    "MalformedTable",
    "DimensionMismatch",
    "NotAssociative",
    "NotRegular",
    "NonUniqueInverse",
    "OrderExceedsCap",
    "NotAssociativeAdd",
    "NotInverseMul",
    "LeftAxiomFails",
    "NotLeftSemibrace",
    "ElementNotIdempotent",
    "NotClifford",
    "NotSemilattice",
    "NotBijective",
    "IdentityConditionFails",
    "CompositionConditionFails",
    "MorphismNotHomomorphism",
    "MatchedSystemInvalid",
    "SigmaNotHomomorphism",
    "SigmaNotSemibraceAutomorphism",
    "DeltaNotAntiHomomorphism",
    "DeltaNotEndomorphism",
    "DoubleSemidirectCompatibilityFails",
    "CocycleFails",
    "AsymmetricCompatibilityFails",
    "Timeout",
    "InternalError",
};

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  return kErrorNames[static_cast<std::size_t>(kind)];
}

AlgebraError::AlgebraError(ErrorKind kind, std::string const& message, Witness witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

MagmaTable::MagmaTable(std::size_t order, std::vector<Element> entries,
                       std::vector<std::string> labels)
    : n_(order), data_(std::move(entries)) {
  if (data_.size() != n_ * n_)
    throw AlgebraError(ErrorKind::MalformedTable, "table is not " + std::to_string(n_) + "x" +
                                                      std::to_string(n_));
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] >= n_)
      throw AlgebraError(ErrorKind::MalformedTable, "entry out of range",
                         {static_cast<Element>(i / n_), static_cast<Element>(i % n_)});
  set_labels(std::move(labels));
}

MagmaTable MagmaTable::from_rows(std::vector<std::vector<Element>> const& rows,
                                 std::vector<std::string> labels) {
  std::size_t const n = rows.size();
  std::vector<Element> e;
  e.reserve(n * n);
  for (auto const& row : rows) {
    if (row.size() != n) throw AlgebraError(ErrorKind::MalformedTable, "table is not square");
    e.insert(e.end(), row.begin(), row.end());
  }
  return MagmaTable(n, std::move(e), std::move(labels));
}

std::vector<std::vector<Element>> MagmaTable::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (std::size_t a = 0; a < n_; ++a)
    out[a].assign(data_.begin() + a * n_, data_.begin() + (a + 1) * n_);
  return out;
}

std::string MagmaTable::label(Element a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

void MagmaTable::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_)
    throw AlgebraError(ErrorKind::MalformedTable, "label count differs from order");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw AlgebraError(ErrorKind::MalformedTable, "labels are not distinct");
  labels_ = std::move(labels);
}

Check check_associative(MagmaTable const& t) {
  auto const n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return Check::fail({a, b, c});
  return Check::pass();
}

FiniteSemigroup::FiniteSemigroup(MagmaTable table) : table_(std::move(table)) {
  if (auto chk = check_associative(table_); !chk)
    throw AlgebraError(ErrorKind::NotAssociative, "(ab)c != a(bc)", *chk.witness);
}

std::vector<Element> FiniteSemigroup::idempotents() const {
  std::vector<Element> out;
  for (Element a = 0; a < order(); ++a)
    if (is_idempotent(a)) out.push_back(a);
  return out;
}

FiniteSemigroup validate_semigroup(MagmaTable table) { return FiniteSemigroup(std::move(table)); }

std::vector<Element> derive_inverses(FiniteSemigroup const& s) {
  auto const n = static_cast<Element>(s.order());
  std::vector<Element> inv(n);
  for (Element a = 0; a < n; ++a) {
    std::vector<Element> found;
    for (Element x = 0; x < n && found.size() < 2; ++x)
      if (s.mul(s.mul(a, x), a) == a && s.mul(s.mul(x, a), x) == x) found.push_back(x);
    if (found.empty()) throw AlgebraError(ErrorKind::NotRegular, "element has no inverse", {a});
    if (found.size() > 1)
      throw AlgebraError(ErrorKind::NonUniqueInverse, "element has two inverses",
                         {a, found[0], found[1]});
    inv[a] = found[0];
  }
  return inv;
}

InverseSemigroup::InverseSemigroup(FiniteSemigroup s) : s_(std::move(s)), inv_(derive_inverses(s_)) {}

CarrierMap identity_map(std::size_t n) {
  CarrierMap f(n);
  std::iota(f.begin(), f.end(), Element{0});
  return f;
}

CarrierMap compose(CarrierMap const& f, CarrierMap const& g) {
  CarrierMap h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

bool is_bijective(CarrierMap const& f) {
  std::vector<bool> seen(f.size(), false);
  for (Element x : f) {
    if (x >= f.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

CarrierMap inverse_permutation(CarrierMap const& f) {
  if (!is_bijective(f)) throw AlgebraError(ErrorKind::NotBijective, "map is not a permutation");
  CarrierMap g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[f[i]] = static_cast<Element>(i);
  return g;
}

}  // namespace isb
