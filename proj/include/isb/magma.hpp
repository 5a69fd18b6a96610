#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "isb/types.hpp"

namespace isb {

// A binary operation on {0, ..., n-1}, stored row-major.
class MagmaTable {
 public:
  MagmaTable() = default;
  MagmaTable(std::size_t order, std::vector<Element> entries,
             std::vector<std::string> labels = {});

  static MagmaTable from_rows(std::vector<std::vector<Element>> const& rows,
                              std::vector<std::string> labels = {});
  static MagmaTable from_function(std::size_t order, auto&& op,
                                  std::vector<std::string> labels = {}) {
    std::vector<Element> e(order * order);
    for (Element a = 0; a < order; ++a)
      for (Element b = 0; b < order; ++b) e[a * order + b] = op(a, b);
    return MagmaTable(order, std::move(e), std::move(labels));
  }

  std::size_t order() const noexcept { return n_; }
  Element operator()(Element a, Element b) const noexcept { return data_[a * n_ + b]; }
  std::span<Element const> entries() const noexcept { return data_; }
  std::vector<std::vector<Element>> rows() const;

  std::vector<std::string> const& labels() const noexcept { return labels_; }
  std::string label(Element a) const;
  void set_labels(std::vector<std::string> labels);

  bool operator==(MagmaTable const& other) const noexcept { return n_ == other.n_ && data_ == other.data_; }

 private:
  std::size_t n_ = 0;
  std::vector<Element> data_;
  std::vector<std::string> labels_;
};

// First (a,b,c) with (ab)c != a(bc).
Check check_associative(MagmaTable const& t);

class FiniteSemigroup {
 public:
  // Throws AlgebraError(NotAssociative) with the first failing triple.
  explicit FiniteSemigroup(MagmaTable table);

  std::size_t order() const noexcept { return table_.order(); }
  Element mul(Element a, Element b) const noexcept { return table_(a, b); }
  MagmaTable const& table() const noexcept { return table_; }
  std::vector<Element> idempotents() const;
  bool is_idempotent(Element a) const noexcept { return mul(a, a) == a; }

 private:
  MagmaTable table_;
};

FiniteSemigroup validate_semigroup(MagmaTable table);

class InverseSemigroup {
 public:
  // Throws NotRegular or NonUniqueInverse.
  explicit InverseSemigroup(FiniteSemigroup s);

  std::size_t order() const noexcept { return s_.order(); }
  Element mul(Element a, Element b) const noexcept { return s_.mul(a, b); }
  Element inv(Element a) const noexcept { return inv_[a]; }
  std::vector<Element> const& inverses() const noexcept { return inv_; }
  MagmaTable const& table() const noexcept { return s_.table(); }
  FiniteSemigroup const& semigroup() const noexcept { return s_; }
  std::vector<Element> idempotents() const { return s_.idempotents(); }
  bool is_idempotent(Element a) const noexcept { return s_.is_idempotent(a); }

 private:
  FiniteSemigroup s_;
  std::vector<Element> inv_;
};

std::vector<Element> derive_inverses(FiniteSemigroup const& s);

// Total maps between finite carriers.
using CarrierMap = std::vector<Element>;

CarrierMap identity_map(std::size_t n);
CarrierMap compose(CarrierMap const& f, CarrierMap const& g);  // f after g
bool is_bijective(CarrierMap const& f);
CarrierMap inverse_permutation(CarrierMap const& f);

}  // namespace isb
