#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csm/semigroup.hpp"

namespace csm {

/// A Cayley semigroup membership query: is target in the subsemigroup of
/// semigroup generated by generators?
struct MembershipInstance {
  Semigroup            semigroup;
  std::vector<Element> generators;  // sorted, duplicate-free
  Element              target;
};

/// Validates ranges, sorts and deduplicates the generators.
/// Throws Error(entry_out_of_range).
MembershipInstance make_instance(Semigroup            semigroup,
                                 std::vector<Element> generators,
                                 Element              target);

/// Instance file: a table file, then "X <indices...>", then "t <index>".
MembershipInstance parse_instance(std::string_view text);
std::string        format_instance(MembershipInstance const& inst);

struct FromGenerator {
  Element generator;
  bool    operator==(FromGenerator const&) const = default;
};

struct FromProduct {
  Element left;
  Element right;
  bool    operator==(FromProduct const&) const = default;
};

/// How an element of a generated subsemigroup was first obtained.
using Derivation = std::variant<FromGenerator, FromProduct>;

struct DerivationStep {
  Element    value;
  Derivation how;
};

/// Replays a derivation trace: every product must refer to values of
/// earlier steps. Returns the value of the last step after checking every
/// step reproduces its recorded value. Throws Error(invalid_reference).
Element replay(Semigroup const& s, std::span<DerivationStep const> trace);

/// The subsemigroup generated by a set, with a derivation for every member.
class Subsemigroup {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit Subsemigroup(std::size_t universe)
      : position_(universe, npos), derivation_(universe) {}

  bool contains(Element x) const noexcept {
    return x < position_.size() && position_[x] != npos;
  }

  std::size_t size() const noexcept {
    return elements_.size();
  }

  bool empty() const noexcept {
    return elements_.empty();
  }

  /// Members in discovery order.
  std::span<Element const> elements() const noexcept {
    return elements_;
  }

  std::vector<Element> sorted_elements() const;

  /// Precondition: contains(x).
  Derivation const& derivation(Element x) const {
    return derivation_[x];
  }

  /// The ancestors of x (including x) in discovery order, so x is last.
  std::vector<DerivationStep> trace(Element x) const;

  /// Records a new member; returns false when x was already present.
  bool add(Element x, Derivation how);

 private:
  std::vector<std::size_t> position_;
  std::vector<Derivation>  derivation_;
  std::vector<Element>     elements_;
};

/// Worklist closure over an arbitrary associative product on the universe
/// 0..universe-1. Each member, once reached, is multiplied on both sides with
/// every member found before it (and with itself).
template <typename Mul>
Subsemigroup generate(std::size_t              universe,
                      std::span<Element const> generators,
                      Mul&&                    mul) {
  Subsemigroup result(universe);
  for (Element x : generators) {
    result.add(x, FromGenerator{x});
  }
  for (std::size_t i = 0; i < result.size(); ++i) {
    Element const a = result.elements()[i];
    for (std::size_t j = 0; j <= i; ++j) {
      Element const b = result.elements()[j];
      result.add(mul(a, b), FromProduct{a, b});
      if (j != i) {
        result.add(mul(b, a), FromProduct{b, a});
      }
    }
  }
  return result;
}

/// Least subset of s containing generators and closed under the product.
/// The empty generating set yields the empty subsemigroup.
Subsemigroup closure(Semigroup const& s, std::span<Element const> generators);

struct MembershipResult {
  bool member;
  // Present iff member; replays to the target.
  std::optional<std::vector<DerivationStep>> witness;
};

MembershipResult is_member(MembershipInstance const& inst);

}  // namespace csm
