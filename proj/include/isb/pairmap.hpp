#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "isb/types.hpp"

namespace isb {

// A map r: X x X -> X x X written r(a,b) = (lambda_a(b), rho_b(a)).
// rho is stored as rho(a, b) = rho_b(a), so both tables index by the input pair.
class PairMap {
 public:
  PairMap() = default;
  PairMap(std::size_t order, std::vector<Element> lambda, std::vector<Element> rho,
          std::vector<std::string> labels = {});

  static PairMap from_function(std::size_t order, auto&& f, std::vector<std::string> labels = {}) {
    std::vector<Element> l(order * order), r(order * order);
    for (Element a = 0; a < order; ++a)
      for (Element b = 0; b < order; ++b) {
        auto [x, y] = f(a, b);
        l[a * order + b] = x;
        r[a * order + b] = y;
      }
    return PairMap(order, std::move(l), std::move(r), std::move(labels));
  }

  std::size_t order() const noexcept { return n_; }
  Element lambda(Element a, Element b) const noexcept { return lam_[a * n_ + b]; }
  Element rho(Element a, Element b) const noexcept { return rho_[a * n_ + b]; }
  std::pair<Element, Element> operator()(Element a, Element b) const noexcept {
    return {lambda(a, b), rho(a, b)};
  }
  std::vector<Element> const& lambda_table() const noexcept { return lam_; }
  std::vector<Element> const& rho_table() const noexcept { return rho_; }

  std::vector<std::string> const& labels() const noexcept { return labels_; }
  std::string label(Element a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }

  bool operator==(PairMap const& o) const noexcept {
    return n_ == o.n_ && lam_ == o.lam_ && rho_ == o.rho_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Element> lam_;
  std::vector<Element> rho_;
  std::vector<std::string> labels_;
};

// First (a,b) where the two maps differ.
Check check_equal(PairMap const& r1, PairMap const& r2);

}  // namespace isb
