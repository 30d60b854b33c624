#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csm/circuit.hpp"
#include "csm/semigroup.hpp"

namespace csm {

enum class SlpOp : std::uint8_t { gen, inv, mul };

/// One item of a straight-line program. For gen, \c first holds the
/// generator element; for inv and mul, \c first and \c second are 0-based
/// indices of earlier items.
struct SlpItem {
  SlpOp         op     = SlpOp::gen;
  std::uint32_t first  = 0;
  std::uint32_t second = 0;

  static constexpr SlpItem gen(Element x) noexcept {
    return {SlpOp::gen, x, 0};
  }
  static constexpr SlpItem inv(std::uint32_t p) noexcept {
    return {SlpOp::inv, p, 0};
  }
  static constexpr SlpItem mul(std::uint32_t p, std::uint32_t q) noexcept {
    return {SlpOp::mul, p, q};
  }
  bool operator==(SlpItem const&) const = default;
};

class StraightLineProgram {
 public:
  StraightLineProgram() = default;

  /// Throws Error(invalid_reference) if an item refers to itself or later.
  explicit StraightLineProgram(std::vector<SlpItem> items);

  std::span<SlpItem const> items() const noexcept {
    return items_;
  }
  std::size_t length() const noexcept {
    return items_.size();
  }
  bool empty() const noexcept {
    return items_.empty();
  }

  bool operator==(StraightLineProgram const&) const = default;

 private:
  std::vector<SlpItem> items_;
};

/// Values of all items over the group g. Throws Error(not_a_group) and
/// Error(entry_out_of_range) for generators outside g.
std::vector<Element> evaluate_slp(Semigroup const&           g,
                                  StraightLineProgram const& slp);

struct SlpResult {
  StraightLineProgram program;
  // True when some doubling round had to settle for a candidate that did
  // not double the cube.
  bool bound_slack = false;
  // Number of cube-doubling rounds performed.
  std::size_t rounds = 0;
};

/// A short straight-line program over \p generators ending in \p target,
/// built by cube doubling. Throws Error(not_a_group) and
/// Error(target_not_generated).
SlpResult slp_reachability(Semigroup const&         g,
                           std::span<Element const> generators,
                           Element                  target);

/// Exponent used to invert by powering in a group of order n: the least
/// e >= 2 with e = -1 (mod n).
std::uint64_t inverse_exponent(std::size_t group_order);

/// Compiles the program into a circuit whose output computes its last item.
/// Inverses are inlined power circuits for inverse_exponent(group_order).
/// Throws Error(empty_sequence) for an empty program.
AssignedCircuit slp_to_circuit(StraightLineProgram const& slp,
                               std::size_t                group_order);

/// SLP file: "gen <element>", "inv <p>", "mul <p> <q>" with 1-based
/// references, one item per line.
StraightLineProgram parse_slp(std::string_view text);
std::string         format_slp(StraightLineProgram const& slp);

}  // namespace csm
