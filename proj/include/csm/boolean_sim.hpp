#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csm/circuit.hpp"
#include "csm/semigroup.hpp"

namespace csm {

/// An input bit, possibly negated. NOT gates are free and live on the wire.
struct Literal {
  std::uint32_t bit;
  bool          positive;
  auto          operator<=>(Literal const&) const = default;
};

/// Depth-2 unbounded fan-in circuit: a layer of AND gates over literals
/// followed by a layer of OR gates over AND gates. Output bit j is OR j.
struct BooleanNetlist {
  std::size_t                             input_bits = 0;
  std::vector<std::vector<Literal>>       and_gates;  // sorted, duplicate-free
  std::vector<std::vector<std::uint32_t>> or_gates;   // AND gate indices
  // Provenance: order N, circuit size m, circuit inputs k.
  std::size_t order         = 0;
  std::size_t circuit_size  = 0;
  std::size_t circuit_inputs = 0;

  bool operator==(BooleanNetlist const&) const = default;
};

/// Bits per element: max(1, ceil(log2 N)).
std::size_t element_bits(std::size_t order);

/// Input layout: the N^2 table entries row-major, entry (a, b) at bit offset
/// (a N + b) b_enc, then the k inputs; every value most-significant bit
/// first.
std::vector<bool> encode_input(Semigroup const&         s,
                               std::span<Element const> inputs);

std::vector<bool> encode_element(Element x, std::size_t order);

/// Reads \p width bits starting at \p offset, most significant first.
Element decode_element(std::vector<bool> const& bits,
                       std::size_t              offset,
                       std::size_t              width);

/// Default cap on N^m accepted by compile_to_boolean.
inline constexpr std::uint64_t default_netlist_budget = std::uint64_t{1} << 20;

/// One AND gate per guessed value vector (y_1..y_m) in S^m, checking input
/// gates against the input encodings and product gates against the table
/// entry (y_l, y_r); OR gate j collects the vectors whose y_m has bit j set.
/// Throws Error(budget_exceeded) when N^m > budget.
BooleanNetlist compile_to_boolean(CayleyCircuit const& c,
                                  std::size_t          order,
                                  std::uint64_t budget = default_netlist_budget);

/// Throws Error(arity_mismatch) if bits.size() != input_bits.
std::vector<bool> evaluate_netlist(BooleanNetlist const&    net,
                                   std::vector<bool> const& bits);

/// Number of AND gates that evaluate to true.
std::size_t firing_and_gates(BooleanNetlist const&    net,
                             std::vector<bool> const& bits);

/// Netlist file: header "BSIM <input_bits> <n_and> <n_or> <N> <m> <k>", then
/// one "and" line of signed 0-based literals (+i, -i) per AND gate, then one
/// "or" line of 0-based AND indices per OR gate.
BooleanNetlist parse_netlist(std::string_view text);
std::string    format_netlist(BooleanNetlist const& net);

/// Default cap on (circuit, assignment) evaluations in exhaustive search.
inline constexpr std::uint64_t default_search_budget = 50'000'000;

struct ExhaustiveResult {
  bool                           member;
  std::optional<AssignedCircuit> witness;
  std::uint64_t                  evaluations;
};

/// Tries every circuit with at most max_size gates, by size and then in
/// lexicographic gate order, with every assignment of generators to its
/// inputs in lexicographic order; the first circuit valued target wins.
/// Throws Error(budget_exceeded) once more than \p budget evaluations are
/// needed without finding a witness.
ExhaustiveResult exhaustive_membership(Semigroup const&         s,
                                       std::span<Element const> generators,
                                       Element                  target,
                                       std::size_t              max_size,
                                       std::uint64_t budget = default_search_budget);

}  // namespace csm
