#pragma once

#include <cstddef>
#include <vector>

#include "isb/magma.hpp"

namespace isb {

enum class MorphismMode { Homomorphism, AntiHomomorphism };

// Witness is the first (a,b) with f(ab) != f(a)f(b) (or f(b)f(a) for anti).
Check is_morphism(CarrierMap const& f, MagmaTable const& from, MagmaTable const& to,
                  MorphismMode mode = MorphismMode::Homomorphism);

// Also cross-checks f(a^-1) = f(a)^-1, throwing InternalError if a
// homomorphism of inverse semigroups ever fails to preserve inverses.
Check is_morphism(CarrierMap const& f, InverseSemigroup const& from, InverseSemigroup const& to,
                  MorphismMode mode = MorphismMode::Homomorphism);

inline constexpr std::size_t kEndomorphismCap = 6;
inline constexpr std::size_t kAutomorphismCap = 8;

// Lexicographic order. Throws OrderExceedsCap above the cap.
std::vector<CarrierMap> enumerate_endomorphisms(MagmaTable const& t,
                                                std::size_t cap = kEndomorphismCap);
std::vector<CarrierMap> enumerate_automorphisms(MagmaTable const& t,
                                                std::size_t cap = kAutomorphismCap);

// Relabel a table through a permutation p: result(p a, p b) = p(t(a, b)).
MagmaTable relabel(MagmaTable const& t, CarrierMap const& p);

}  // namespace isb
