#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "csm/semigroup.hpp"

namespace csm {

/// Images of the points 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t degree);

/// Right action: compose(p, q) applies p first, then q.
Permutation compose(Permutation const& p, Permutation const& q);

bool is_permutation(Permutation const& p);

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

/// The group generated by a list of permutations of equal degree, with its
/// elements indexed in lexicographic order (so the identity is element 0).
class PermutationGroup {
 public:
  static constexpr std::size_t unlimited
      = std::numeric_limits<std::size_t>::max();

  /// Throws Error(invalid_argument) on malformed generators and
  /// Error(witness_too_large) when the group has more than max_order
  /// elements.
  explicit PermutationGroup(std::vector<Permutation> const& generators,
                            std::size_t max_order = unlimited);

  std::size_t order() const noexcept {
    return elements_.size();
  }

  std::size_t degree() const noexcept {
    return degree_;
  }

  Permutation const& element(Element i) const {
    return elements_[i];
  }

  std::optional<Element> index_of(Permutation const& p) const;

  Element identity() const noexcept {
    return 0;
  }

  Element product(Element a, Element b) const;

  /// Materializes the Cayley table (order^2 entries).
  Semigroup cayley_table() const;

 private:
  std::size_t                                             degree_;
  std::vector<Permutation>                                elements_;
  std::unordered_map<Permutation, Element, PermutationHash> index_;
};

}  // namespace csm
