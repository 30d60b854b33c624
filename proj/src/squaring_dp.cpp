#include "csm/squaring_dp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace csm {

namespace {
  // 512 MiB of relation bits
  constexpr std::uint64_t max_relation_bits = std::uint64_t{1} << 32;
}

PredicateTable::PredicateTable(std::size_t order,
                               std::size_t width,
                               std::size_t level)
    : order_(order), width_(width), level_(level), states_(1) {
  if (width == 0 || width > max_dp_width) {
    throw Error(ErrorKind::invalid_argument,
                "width must be in [1, " + std::to_string(max_dp_width) + "]");
  }
  for (std::size_t j = 0; j < width; ++j) {
    states_ *= order;
  }
  if (static_cast<std::uint64_t>(states_) * states_ > max_relation_bits) {
    throw Error(ErrorKind::budget_exceeded,
                "predicate table of " + std::to_string(states_) + "^2 bits");
  }
  words_ = (states_ + 63) / 64;
  bits_.assign(states_ * words_, 0);
}

std::size_t PredicateTable::encode(std::span<Element const> v) const {
  std::size_t index = 0;
  for (Element x : v) {
    index = index * order_ + x;
  }
  return index;
}

std::vector<Element> PredicateTable::decode(std::size_t index) const {
  std::vector<Element> v(width_);
  for (std::size_t j = width_; j-- > 0;) {
    v[j] = static_cast<Element>(index % order_);
    index /= order_;
  }
  return v;
}

bool PredicateTable::holds(std::span<Element const> z,
                           std::span<Element const> y) const {
  return holds(encode(z), encode(y));
}

std::size_t PredicateTable::count() const {
  std::size_t total = 0;
  for (auto w : bits_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool PredicateTable::subset_of(PredicateTable const& other) const noexcept {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~other.bits_[i]) {
      return false;
    }
  }
  return true;
}

PredicateTable dp_base(Semigroup const&         s,
                       std::span<Element const> generators,
                       std::size_t              width) {
  PredicateTable    table(s.order(), width, 0);
  std::size_t const n = s.order();
  for (Element x : generators) {
    if (!s.contains(x)) {
      throw Error(ErrorKind::entry_out_of_range,
                  "generator " + std::to_string(x) + " is not an element");
    }
  }
  std::vector<bool> reach(n);
  std::vector<Element> operands, allowed;
  for (std::size_t z = 0; z < table.states(); ++z) {
    auto const zs = table.decode(z);
    operands.assign(zs.begin(), zs.end());
    operands.insert(operands.end(), generators.begin(), generators.end());
    std::fill(reach.begin(), reach.end(), false);
    for (Element a : operands) {
      reach[a] = true;
      for (Element b : operands) {
        reach[s.product(a, b)] = true;
      }
    }
    allowed.clear();
    for (Element x = 0; x < n; ++x) {
      if (reach[x]) {
        allowed.push_back(x);
      }
    }
    // every y in allowed^w
    std::vector<std::size_t> digit(width, 0);
    for (;;) {
      std::size_t y = 0;
      for (std::size_t j = 0; j < width; ++j) {
        y = y * n + allowed[digit[j]];
      }
      table.set(z, y);
      std::size_t j = width;
      while (j > 0 && ++digit[j - 1] == allowed.size()) {
        digit[j - 1] = 0;
        --j;
      }
      if (j == 0) {
        break;
      }
    }
  }
  return table;
}

PredicateTable dp_step(PredicateTable const& previous) {
  PredicateTable next(previous.order_, previous.width_, previous.level_ + 1);
  std::size_t const words = previous.words_;
  for (std::size_t z = 0; z < previous.states_; ++z) {
    std::uint64_t const* row = previous.bits_.data() + z * words;
    std::uint64_t*       out = next.bits_.data() + z * words;
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
        std::size_t const mid = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        std::uint64_t const* via = previous.bits_.data() + mid * words;
        for (std::size_t k = 0; k < words; ++k) {
          out[k] |= via[k];
        }
      }
    }
  }
  return next;
}

std::size_t dp_level_count(std::uint64_t size_bound) {
  if (size_bound == 0) {
    throw Error(ErrorKind::invalid_argument, "size bound must be >= 1");
  }
  // ceil(log2 s) + 1
  return static_cast<std::size_t>(std::bit_width(size_bound - 1)) + 1;
}

std::uint64_t default_size_bound(std::size_t order) {
  double const l = std::log2(static_cast<double>(order)) + 1.0;
  return static_cast<std::uint64_t>(std::ceil(5.0 * l * l - 1e-9));
}

std::vector<PredicateTable> dp_levels(Semigroup const&         s,
                                      std::span<Element const> generators,
                                      std::size_t              width,
                                      std::uint64_t            size_bound) {
  std::size_t const           levels = dp_level_count(size_bound);
  std::vector<PredicateTable> out;
  out.push_back(dp_base(s, generators, width));
  while (out.size() < levels) {
    out.push_back(dp_step(out.back()));
  }
  return out;
}

namespace {
  struct TopLevel {
    PredicateTable table;
    std::size_t    built;
    bool           fixpoint;
  };

  TopLevel top_level(Semigroup const&         s,
                     std::span<Element const> generators,
                     std::size_t              width,
                     std::size_t              levels) {
    TopLevel top{dp_base(s, generators, width), 1, false};
    while (top.built < levels) {
      PredicateTable next = dp_step(top.table);
      ++top.built;
      top.fixpoint = next.same_relation(top.table);
      top.table    = std::move(next);
      if (top.fixpoint) {
        break;
      }
    }
    return top;
  }
}  // namespace

DpResult dp_membership(Semigroup const&         s,
                       std::span<Element const> generators,
                       Element                  target,
                       std::size_t              width,
                       std::uint64_t            size_bound) {
  if (!s.contains(target)) {
    throw Error(ErrorKind::entry_out_of_range, "target is not an element");
  }
  std::size_t const levels = dp_level_count(size_bound);
  if (generators.empty()) {
    return {false, 0, false};
  }
  Element const x   = *std::min_element(generators.begin(), generators.end());
  auto const    top = top_level(s, generators, width, levels);
  std::vector<Element> xs(width, x), ts(width, target);
  return {top.table.holds(xs, ts), top.built, top.fixpoint};
}

DpSweep dp_sweep(Semigroup const&         s,
                 std::span<Element const> generators,
                 std::size_t              width,
                 std::uint64_t            size_bound) {
  std::size_t const levels = dp_level_count(size_bound);
  DpSweep           out{std::vector<bool>(s.order(), false), 0, false};
  if (generators.empty()) {
    return out;
  }
  Element const x   = *std::min_element(generators.begin(), generators.end());
  auto const    top = top_level(s, generators, width, levels);
  std::vector<Element> xs(width, x), ts(width);
  for (Element t = 0; t < s.order(); ++t) {
    std::fill(ts.begin(), ts.end(), t);
    out.member[t] = top.table.holds(xs, ts);
  }
  out.levels           = top.built;
  out.fixpoint_reached = top.fixpoint;
  return out;
}

}  // namespace csm
