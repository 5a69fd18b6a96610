#pragma once

#include <cstddef>
#include <vector>

#include "isb/magma.hpp"
#include "isb/semibrace.hpp"

namespace isb::fixtures {

// Clifford monoid {1, x, y}: x and y form a group with identity x.
InverseSemigroup t3();
// The semilattice {1, x, y} with 1 = x + y, used as an additive or multiplicative table.
MagmaTable s3_table();
InverseSemigroup s3();
// Swaps x and y; an automorphism of S3.
CarrierMap tau();

InverseSemigroup cyclic_group(std::size_t n);
// Brandt semigroup B2 on {0, e11, e12, e21, e22}.
InverseSemigroup brandt_b2();
InverseSemigroup trivial_semigroup();

MagmaTable right_zero_table(std::size_t n);
MagmaTable left_zero_table(std::size_t n);

// (T3, u+v = uv).
InverseSemiBrace t3_clifford_sum();
// (S3, a+b = 1, a.b from the semilattice).
InverseSemiBrace s3_constant_sum();

}  // namespace isb::fixtures
