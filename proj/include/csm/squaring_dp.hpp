#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "csm/semigroup.hpp"

namespace csm {

/// The relation P(z, y, i) over S^w x S^w for one level i: y is obtainable
/// from the state z (plus generators) by a width-w computation of at most
/// 2^i product steps. Vectors in S^w are encoded in base N with the first
/// coordinate most significant.
class PredicateTable {
 public:
  PredicateTable(std::size_t order, std::size_t width, std::size_t level);

  std::size_t order() const noexcept {
    return order_;
  }
  std::size_t width() const noexcept {
    return width_;
  }
  std::size_t level() const noexcept {
    return level_;
  }
  /// N^w.
  std::size_t states() const noexcept {
    return states_;
  }

  bool holds(std::size_t z, std::size_t y) const noexcept {
    return (bits_[z * words_ + y / 64] >> (y % 64)) & 1;
  }
  bool holds(std::span<Element const> z, std::span<Element const> y) const;

  void set(std::size_t z, std::size_t y) noexcept {
    bits_[z * words_ + y / 64] |= std::uint64_t{1} << (y % 64);
  }

  std::size_t encode(std::span<Element const> v) const;
  std::vector<Element> decode(std::size_t index) const;

  /// Number of related pairs.
  std::size_t count() const;

  /// Same relation, ignoring the level.
  bool same_relation(PredicateTable const& other) const noexcept {
    return bits_ == other.bits_;
  }

  /// Every pair of this table is also in \p other.
  bool subset_of(PredicateTable const& other) const noexcept;

 private:
  friend PredicateTable dp_step(PredicateTable const&);

  std::size_t                order_;
  std::size_t                width_;
  std::size_t                level_;
  std::size_t                states_;
  std::size_t                words_;
  std::vector<std::uint64_t> bits_;  // row z: words_ words over y
};

/// Largest width accepted; the table has N^(2w) bits.
inline constexpr std::size_t max_dp_width = 3;

/// Level 0: y is related to z iff every y_j lies in
/// B(z) = {z_1..z_w} u X u {a b : a, b in {z_1..z_w} u X}.
/// Throws Error(invalid_argument) for w = 0 or w > max_dp_width.
PredicateTable dp_base(Semigroup const&         s,
                       std::span<Element const> generators,
                       std::size_t              width);

/// (z, y) at level i iff some z' has (z, z') and (z', y) at level i - 1.
PredicateTable dp_step(PredicateTable const& previous);

/// Number of levels built for a size bound: ceil(log2 s) + 1.
std::size_t dp_level_count(std::uint64_t size_bound);

/// Default size bound ceil(5 (log2 N + 1)^2).
std::uint64_t default_size_bound(std::size_t order);

struct DpResult {
  bool member;
  // Levels materialized (0..levels-1); stops early at a fixpoint.
  std::size_t levels;
  bool        fixpoint_reached;
};

/// Whether (x,...,x ; t,...,t) holds at level ceil(log2 s) for the smallest
/// generator x. Empty generating sets answer false.
DpResult dp_membership(Semigroup const&         s,
                       std::span<Element const> generators,
                       Element                  target,
                       std::size_t              width,
                       std::uint64_t            size_bound);

struct DpSweep {
  std::vector<bool> member;  // member[t] is the final check for target t
  std::size_t       levels;
  bool              fixpoint_reached;
};

/// dp_membership for every target at once, sharing the levels.
DpSweep dp_sweep(Semigroup const&         s,
                 std::span<Element const> generators,
                 std::size_t              width,
                 std::uint64_t            size_bound);

/// All levels 0..ceil(log2 s) without early exit, for structural checks.
std::vector<PredicateTable> dp_levels(Semigroup const&         s,
                                      std::span<Element const> generators,
                                      std::size_t              width,
                                      std::uint64_t            size_bound);

}  // namespace csm
