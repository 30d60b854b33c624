#include "csm/semigroup.hpp"

#include <sstream>

#include "text_io.hpp"

namespace csm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed_input:
      return "MalformedInput";
    case ErrorKind::entry_out_of_range:
      return "EntryOutOfRange";
    case ErrorKind::not_associative:
      return "NotAssociative";
    case ErrorKind::arity_mismatch:
      return "ArityMismatch";
    case ErrorKind::invalid_exponent:
      return "InvalidExponent";
    case ErrorKind::empty_sequence:
      return "EmptySequence";
    case ErrorKind::not_a_group:
      return "NotAGroup";
    case ErrorKind::target_not_generated:
      return "TargetNotGenerated";
    case ErrorKind::invalid_reference:
      return "InvalidReference";
    case ErrorKind::not_commutative:
      return "NotCommutative";
    case ErrorKind::budget_exceeded:
      return "BudgetExceeded";
    case ErrorKind::vertex_out_of_range:
      return "VertexOutOfRange";
    case ErrorKind::graph_too_small:
      return "GraphTooSmall";
    case ErrorKind::not_nilpotent:
      return "NotNilpotent";
    case ErrorKind::witness_too_large:
      return "WitnessTooLarge";
    case ErrorKind::invalid_argument:
      return "InvalidArgument";
  }
  return "Unknown";
}

namespace {
  std::string triple_message(std::array<Element, 3> const& t) {
    std::ostringstream os;
    os << "(" << t[0] << "*" << t[1] << ")*" << t[2] << " != " << t[0] << "*("
       << t[1] << "*" << t[2] << ") at (" << t[0] << ", " << t[1] << ", "
       << t[2] << ")";
    return os.str();
  }
}  // namespace

NotAssociative::NotAssociative(std::array<Element, 3> triple)
    : Error(ErrorKind::not_associative, triple_message(triple)),
      triple_(triple) {}

std::optional<std::array<Element, 3>>
find_non_associative_triple(std::size_t order, std::span<Element const> table) {
  for (std::size_t a = 0; a < order; ++a) {
    Element const* row_a = table.data() + a * order;
    for (std::size_t b = 0; b < order; ++b) {
      Element const  ab    = row_a[b];
      Element const* row_b = table.data() + b * order;
      Element const* row_ab = table.data() + ab * order;
      for (std::size_t c = 0; c < order; ++c) {
        if (row_ab[c] != row_a[row_b[c]]) {
          return std::array<Element, 3>{static_cast<Element>(a),
                                        static_cast<Element>(b),
                                        static_cast<Element>(c)};
        }
      }
    }
  }
  return std::nullopt;
}

Semigroup::Semigroup(std::size_t order, std::vector<Element> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0) {
    throw Error(ErrorKind::malformed_input, "a semigroup needs order >= 1");
  }
  if (order_ > max_order) {
    throw Error(ErrorKind::malformed_input,
                "order " + std::to_string(order_) + " exceeds the limit "
                    + std::to_string(max_order));
  }
  if (table_.size() != order_ * order_) {
    throw Error(ErrorKind::malformed_input,
                "table has " + std::to_string(table_.size())
                    + " entries, expected " + std::to_string(order_ * order_));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= order_) {
      throw Error(ErrorKind::entry_out_of_range,
                  "entry (" + std::to_string(i / order_) + ", "
                      + std::to_string(i % order_)
                      + ") = " + std::to_string(table_[i]) + " is not below "
                      + std::to_string(order_));
    }
  }
  if (auto triple = find_non_associative_triple(order_, table_)) {
    throw NotAssociative(*triple);
  }
}

Semigroup parse_semigroup(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) {
    throw Error(ErrorKind::malformed_input, "empty table file");
  }
  if (lines[0].tokens.size() != 1) {
    detail::malformed(lines[0].number, "expected the order on its own line");
  }
  auto order = detail::parse_unsigned(lines[0].tokens[0], "order");
  if (order == 0 || order > Semigroup::max_order) {
    detail::malformed(lines[0].number,
                      "order must be in [1, "
                          + std::to_string(Semigroup::max_order) + "]");
  }
  if (lines.size() != order + 1) {
    throw Error(ErrorKind::malformed_input,
                "expected " + std::to_string(order) + " table rows, found "
                    + std::to_string(lines.size() - 1));
  }
  std::vector<Element> table;
  table.reserve(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    auto const& line = lines[a + 1];
    if (line.tokens.size() != order) {
      detail::malformed(line.number,
                        "row " + std::to_string(a) + " has "
                            + std::to_string(line.tokens.size())
                            + " entries, expected " + std::to_string(order));
    }
    for (auto const& token : line.tokens) {
      auto value = detail::parse_integer(token, "table entry");
      if (value < 0 || static_cast<std::uint64_t>(value) >= order) {
        throw Error(ErrorKind::entry_out_of_range,
                    "line " + std::to_string(line.number) + ": entry "
                        + token + " is not in [0, " + std::to_string(order)
                        + ")");
      }
      table.push_back(static_cast<Element>(value));
    }
  }
  return Semigroup(order, std::move(table));
}

std::string format_semigroup(Semigroup const& s) {
  std::ostringstream os;
  os << s.order() << '\n';
  for (Element a = 0; a < s.order(); ++a) {
    auto row = s.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) {
      os << (b == 0 ? "" : " ") << row[b];
    }
    os << '\n';
  }
  return os.str();
}

Semigroup direct_product(Semigroup const& s, Semigroup const& t) {
  std::size_t const m = t.order();
  return Semigroup::from_function(s.order() * m, [&](Element x, Element y) {
    return s.product(x / m, y / m) * m + t.product(x % m, y % m);
  });
}

IndexPeriod element_index_period(Semigroup const& s, Element x) {
  // first_seen[v] = exponent i with x^i = v
  std::vector<std::size_t> first_seen(s.order(), 0);
  Element                  current = x;
  for (std::size_t i = 1;; ++i) {
    if (first_seen[current] != 0) {
      return {first_seen[current], i - first_seen[current]};
    }
    first_seen[current] = i;
    current             = s.product(current, x);
  }
}

std::uint64_t normalize_exponent(IndexPeriod ip, std::uint64_t i) noexcept {
  if (i < ip.index) {
    return i;
  }
  return ip.index + (i - ip.index) % ip.period;
}

Element power(Semigroup const& s, Element x, std::uint64_t e) {
  if (e == 0) {
    throw Error(ErrorKind::invalid_exponent, "exponent must be >= 1");
  }
  std::optional<Element> result;
  Element                base = x;
  while (e > 0) {
    if (e & 1) {
      result = result ? s.product(*result, base) : base;
    }
    e >>= 1;
    if (e > 0) {
      base = s.product(base, base);
    }
  }
  return *result;
}

}  // namespace csm
