#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "csm/circuit.hpp"
#include "csm/semigroup.hpp"

namespace csm {

struct PowerFactor {
  Element       generator;
  std::uint64_t exponent;  // >= 1
  bool          operator==(PowerFactor const&) const = default;
};

/// x_1^{i_1} ... x_k^{i_k} with distinct generators in ascending order.
struct PowerProduct {
  std::vector<PowerFactor> factors;
  bool                     operator==(PowerProduct const&) const = default;
};

/// Value of a nonempty power product in s. Throws Error(empty_sequence).
Element evaluate_power_product(Semigroup const& s, PowerProduct const& p);

/// Removes factors by subset-product collisions until 2^k <= N + 1, where
/// the empty subset maps to a fresh identity. Exponents are kept normalized
/// into [1, N]. Requires a commutative s; the value is preserved.
PowerProduct reduce_power_product(Semigroup const& s, PowerProduct p);

/// A product of at most floor(log2(N + 1)) generator powers equal to y.
/// Throws Error(not_commutative) and Error(target_not_generated).
PowerProduct power_basis_decomposition(Semigroup const&         s,
                                       std::span<Element const> generators,
                                       Element                  y);

/// Chain of power circuits for the decomposition of y, with the matching
/// generators as input assignment.
AssignedCircuit commutative_circuit(Semigroup const&         s,
                                    std::span<Element const> generators,
                                    Element                  y);

}  // namespace csm
