#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csm/error.hpp"

namespace csm {

/// A finite semigroup given by its Cayley table. Elements are the dense
/// indices 0..order()-1 and entry (a, b) is the product a * b.
///
/// Construction validates both the entry range and associativity, so every
/// Semigroup that exists is a genuine semigroup. The type is immutable.
class Semigroup {
 public:
  /// Limit on the order accepted by the constructor (the table is dense).
  static constexpr std::size_t max_order = 4096;

  /// \p table is row-major with order * order entries.
  /// Throws Error(malformed_input), Error(entry_out_of_range) or
  /// NotAssociative.
  Semigroup(std::size_t order, std::vector<Element> table);

  /// Builds the table from a callable mul(a, b) -> Element.
  template <typename Mul>
  static Semigroup from_function(std::size_t order, Mul&& mul) {
    std::vector<Element> table(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        table[a * order + b] = static_cast<Element>(
            mul(static_cast<Element>(a), static_cast<Element>(b)));
      }
    }
    return Semigroup(order, std::move(table));
  }

  std::size_t order() const noexcept {
    return order_;
  }

  Element product(Element a, Element b) const noexcept {
    return table_[a * order_ + b];
  }

  std::span<Element const> row(Element a) const noexcept {
    return {table_.data() + a * order_, order_};
  }

  std::span<Element const> table() const noexcept {
    return table_;
  }

  bool contains(std::size_t x) const noexcept {
    return x < order_;
  }

  bool operator==(Semigroup const&) const = default;

 private:
  std::size_t          order_;
  std::vector<Element> table_;
};

/// First triple (a, b, c) in lexicographic order violating associativity,
/// or nothing. Entries must already be in range.
std::optional<std::array<Element, 3>>
find_non_associative_triple(std::size_t order, std::span<Element const> table);

/// Reads the table file format: the order N on the first line, then N rows
/// of N space-separated entries. '#' starts a comment; blank lines are
/// ignored.
Semigroup parse_semigroup(std::string_view text);

/// Writes the table file format (no comments, LF endings).
std::string format_semigroup(Semigroup const& s);

/// S x T with (a, b) encoded as a * |T| + b.
Semigroup direct_product(Semigroup const& s, Semigroup const& t);

struct IndexPeriod {
  std::size_t index;
  std::size_t period;
};

/// Minimal r, p >= 1 with x^(r+p) = x^r.
IndexPeriod element_index_period(Semigroup const& s, Element x);

/// Reduces an exponent i >= 1 to the smallest exponent giving the same
/// power, which lies in [1, r + p - 1].
std::uint64_t normalize_exponent(IndexPeriod ip, std::uint64_t i) noexcept;

/// x^e for e >= 1 by repeated squaring.
Element power(Semigroup const& s, Element x, std::uint64_t e);

}  // namespace csm
