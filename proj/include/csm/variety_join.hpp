#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csm/permutation.hpp"
#include "csm/semigroup.hpp"

namespace csm {

/// Least e >= 1 with S^e = {0}, i.e. every product of e elements is the
/// zero. Throws Error(not_nilpotent).
std::size_t nilpotency_degree(Semigroup const& s);

/// A word over the non-zero elements, as indices into JoinWitness::letters.
using Word = std::vector<std::uint32_t>;

struct JoinCaps {
  std::size_t max_words = 10;
  std::size_t max_group = 20000;
};

/// S as a quotient of a subsemigroup U of G x T, where G permutes the short
/// words over S \ {0} and T is {1..e} under min(i + j, e).
struct JoinWitness {
  std::size_t          degree;   // e
  Element              zero;     // zero of S
  std::vector<Element> letters;  // S \ {0}, ascending
  std::vector<Word>    words;    // Q, shortlex; words[0] is the empty word
  std::vector<Permutation> letter_actions;  // pi_x for each letter
  PermutationGroup     group;    // G
  Semigroup            counter;  // T, value v stored at index v - 1
  // U as (element of G, value in 1..e), in discovery order.
  std::vector<std::pair<Element, std::size_t>> members;
  std::vector<std::pair<Element, std::size_t>> member_generators;
  std::vector<Element> phi;  // phi[i] is the image of members[i]
};

/// Throws Error(not_nilpotent), Error(invalid_argument) when N < 2, and
/// Error(witness_too_large) when |Q| or |G| exceeds the caps.
JoinWitness build_join_witness(Semigroup const& s, JoinCaps caps = {});

struct QuotientCheck {
  bool        ok;
  std::string message;
  // For a failed morphism check, the offending pair of U members.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

/// Checks that products of fewer than e letter actions are pairwise
/// distinct (each sends the empty word to its own word), that phi is a
/// morphism U -> S, and that phi is onto.
QuotientCheck verify_quotient(JoinWitness const& w, Semigroup const& s);

}  // namespace csm
