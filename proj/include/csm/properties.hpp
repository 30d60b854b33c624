#pragma once

#include <optional>
#include <vector>

#include "csm/semigroup.hpp"

namespace csm {

struct GroupStructure {
  Element              identity;
  std::vector<Element> inverse;  // inverse[x] is the two-sided inverse of x
};

/// Two-sided identity, if any.
std::optional<Element> find_identity(Semigroup const& s);

/// Two-sided zero, if any.
std::optional<Element> find_zero(Semigroup const& s);

/// Identity and inverses when s is a group. Searches for the identity first
/// and then scans the table for inverses.
std::optional<GroupStructure> group_structure(Semigroup const& s);

/// Like group_structure but throws Error(not_a_group).
GroupStructure require_group(Semigroup const& s);

bool is_commutative(Semigroup const& s);

std::vector<Element> idempotents(Semigroup const& s);

struct Classification {
  bool                   commutative;
  bool                   group;
  std::optional<Element> zero;
  std::vector<Element>   idempotents;
  bool                   nilpotent;   // a zero exists and is the only idempotent
  bool                   zero_simple; // a zero exists and SsS = S for s != 0
};

Classification classify(Semigroup const& s);

/// SsS = S for every non-zero s; \p zero must be the zero of s.
bool is_zero_simple(Semigroup const& s, Element zero);

}  // namespace csm
