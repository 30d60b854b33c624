#pragma once

// Named semigroups used by the tests, the corpus and the CLI.

#include <cstddef>

#include "csm/semigroup.hpp"

namespace csm::catalog {

/// Z_n under addition.
Semigroup cyclic_group(std::size_t n);

/// {0, ..., n-1} under multiplication mod n.
Semigroup multiplicative_mod(std::size_t n);

/// x * y = x.
Semigroup left_zero(std::size_t n);

/// x * y = y.
Semigroup right_zero(std::size_t n);

/// Every product is 0.
Semigroup null_semigroup(std::size_t n);

/// x * y = min(x, y).
Semigroup min_semilattice(std::size_t n);

/// {1, ..., e} with i * j = min(i + j, e); the value i is stored as index
/// i - 1, so the zero e is index e - 1.
Semigroup truncated_addition(std::size_t e);

Semigroup trivial();

/// Permutation groups; indices follow the lexicographic order of the
/// permutations, so the identity is 0.
Semigroup symmetric_group(std::size_t n);
Semigroup alternating_group(std::size_t n);
/// The symmetries of the regular polygon with n >= 3 vertices (order 2n).
Semigroup dihedral_group(std::size_t n);

/// {±1, ±i, ±j, ±k}; index = 4 * sign + unit with units 1, i, j, k and sign
/// 1 for negative.
Semigroup quaternion_group();

}  // namespace csm::catalog
