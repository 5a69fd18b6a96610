// Naive reference implementations used as test oracles. They share no code
// with the library beyond the table types.
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "isb/magma.hpp"
#include "isb/pairmap.hpp"
#include "isb/semibrace.hpp"

namespace oracle {

using isb::Element;
using Table = std::vector<Element>;

inline Element at(Table const& t, std::size_t n, Element a, Element b) { return t[a * n + b]; }

inline Table entries(isb::MagmaTable const& t) { return {t.entries().begin(), t.entries().end()}; }

inline std::optional<std::array<Element, 3>> first_nonassociative(Table const& t, std::size_t n) {
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (at(t, n, at(t, n, a, b), c) != at(t, n, a, at(t, n, b, c))) return std::array{a, b, c};
  return std::nullopt;
}

// All candidates x with axa = a and xax = x.
inline std::vector<Element> inverse_candidates(Table const& t, std::size_t n, Element a) {
  std::vector<Element> out;
  for (Element x = 0; x < n; ++x)
    if (at(t, n, at(t, n, a, x), a) == a && at(t, n, at(t, n, x, a), x) == x) out.push_back(x);
  return out;
}

// Regular with commuting idempotents: the classical characterization.
inline bool regular_with_commuting_idempotents(Table const& t, std::size_t n) {
  for (Element a = 0; a < n; ++a) {
    bool regular = false;
    for (Element x = 0; x < n; ++x) regular = regular || at(t, n, at(t, n, a, x), a) == a;
    if (!regular) return false;
  }
  for (Element e = 0; e < n; ++e)
    for (Element f = 0; f < n; ++f)
      if (at(t, n, e, e) == e && at(t, n, f, f) == f && at(t, n, e, f) != at(t, n, f, e)) return false;
  return true;
}

// Every total table of order n, in lexicographic order.
inline void for_each_table(std::size_t n, std::function<void(Table const&)> const& f) {
  std::size_t const cells = n * n;
  Table t(cells, 0);
  while (true) {
    f(t);
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (cells == 0) return;
  }
}

inline void for_each_map(std::size_t from, std::size_t to, std::function<void(Table const&)> const& f) {
  Table m(from, 0);
  while (true) {
    f(m);
    std::size_t i = from;
    while (i > 0) {
      --i;
      if (++m[i] < to) break;
      m[i] = 0;
      if (i == 0) return;
    }
    if (from == 0) return;
  }
}

inline std::vector<Table> naive_endomorphisms(Table const& t, std::size_t n) {
  std::vector<Table> out;
  for_each_map(n, n, [&](Table const& f) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (f[at(t, n, a, b)] != at(t, n, f[a], f[b])) return;
    out.push_back(f);
  });
  return out;
}

using Triple = std::array<Element, 3>;

// Braid relation evaluated by explicit composition of coordinate maps.
inline std::optional<Triple> naive_braid(isb::PairMap const& r) {
  std::size_t const n = r.order();
  auto r12 = [&](Triple t) { auto [x, y] = r(t[0], t[1]); return Triple{x, y, t[2]}; };
  auto r23 = [&](Triple t) { auto [x, y] = r(t[1], t[2]); return Triple{t[0], x, y}; };
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        Triple const t{a, b, c};
        if (r12(r23(r12(t))) != r23(r12(r23(t)))) return t;
      }
  return std::nullopt;
}

// Index and period through the functional graph of r on n^2 points:
// index = longest tail over all points, period = lcm of cycle lengths.
inline std::pair<std::size_t, std::size_t> functional_graph_index_period(isb::PairMap const& r) {
  std::size_t const n = r.order();
  std::size_t const points = n * n;
  auto step = [&](std::size_t p) {
    auto [x, y] = r(static_cast<Element>(p / n), static_cast<Element>(p % n));
    return static_cast<std::size_t>(x) * n + y;
  };
  std::size_t index = 0, period = 1;
  for (std::size_t p = 0; p < points; ++p) {
    std::map<std::size_t, std::size_t> seen;
    std::size_t q = p, k = 0;
    while (!seen.count(q)) {
      seen[q] = k++;
      q = step(q);
    }
    index = std::max(index, seen[q]);
    period = std::lcm(period, k - seen[q]);
  }
  return {index, period};
}

inline isb::PairMap compose(isb::PairMap const& r, isb::PairMap const& s) {
  return isb::PairMap::from_function(r.order(), [&](Element a, Element b) {
    auto [x, y] = s(a, b);
    return r(x, y);
  });
}

inline isb::PairMap power(isb::PairMap const& r, std::size_t k) {
  auto out = isb::PairMap::from_function(r.order(), [](Element a, Element b) { return std::pair{a, b}; });
  for (std::size_t i = 0; i < k; ++i) out = compose(r, out);
  return out;
}

inline isb::PairMap identity_map(std::size_t n) {
  return isb::PairMap::from_function(n, [](Element a, Element b) { return std::pair{a, b}; });
}

inline isb::PairMap flip_map(std::size_t n) {
  return isb::PairMap::from_function(n, [](Element a, Element b) { return std::pair{b, a}; });
}

// Left axiom a(b+c) = ab + a(a^-1+c) with the inverse found by brute force.
inline bool satisfies_left_axiom(Table const& add, isb::InverseSemigroup const& m) {
  std::size_t const n = m.order();
  for (Element a = 0; a < n; ++a) {
    Element const ai = inverse_candidates(oracle::entries(m.table()), n, a).front();
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m.mul(a, at(add, n, b, c)) != at(add, n, m.mul(a, b), m.mul(a, at(add, n, ai, c)))) return false;
  }
  return true;
}

// Additions over M that pass associativity and the left axiom, by full scan.
inline std::vector<Table> naive_additions(isb::InverseSemigroup const& m) {
  std::vector<Table> out;
  std::size_t const n = m.order();
  for_each_table(n, [&](Table const& t) {
    if (!first_nonassociative(t, n) && satisfies_left_axiom(t, m)) out.push_back(t);
  });
  return out;
}

inline std::vector<Table> all_permutations(std::size_t n) {
  Table p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Table> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Table relabel(Table const& t, std::size_t n, Table const& p) {
  Table out(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) out[p[a] * n + p[b]] = p[at(t, n, a, b)];
  return out;
}

inline bool isomorphic_tables(Table const& a, Table const& b, std::size_t n) {
  for (auto const& p : all_permutations(n))
    if (relabel(a, n, p) == b) return true;
  return false;
}

// Deterministic pseudo-random source for property tests.
inline std::mt19937& rng() {
  static std::mt19937 gen(20261016u);
  return gen;
}

}  // namespace oracle
