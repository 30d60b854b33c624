#include "csm/slp.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

#include "csm/membership.hpp"
#include "csm/properties.hpp"
#include "text_io.hpp"

namespace csm {

StraightLineProgram::StraightLineProgram(std::vector<SlpItem> items)
    : items_(std::move(items)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    auto const& item = items_[i];
    bool        bad  = false;
    switch (item.op) {
      case SlpOp::gen:
        break;
      case SlpOp::inv:
        bad = item.first >= i;
        break;
      case SlpOp::mul:
        bad = item.first >= i || item.second >= i;
        break;
    }
    if (bad) {
      throw Error(ErrorKind::invalid_reference,
                  "item " + std::to_string(i + 1)
                      + " refers to an item that is not earlier");
    }
  }
}

std::vector<Element> evaluate_slp(Semigroup const&           g,
                                  StraightLineProgram const& slp) {
  auto const           group = require_group(g);
  std::vector<Element> values;
  values.reserve(slp.length());
  for (auto const& item : slp.items()) {
    switch (item.op) {
      case SlpOp::gen:
        if (!g.contains(item.first)) {
          throw Error(ErrorKind::entry_out_of_range,
                      "generator " + std::to_string(item.first)
                          + " is not an element");
        }
        values.push_back(item.first);
        break;
      case SlpOp::inv:
        values.push_back(group.inverse[values[item.first]]);
        break;
      case SlpOp::mul:
        values.push_back(g.product(values[item.first], values[item.second]));
        break;
    }
  }
  return values;
}

namespace {

  // Emits items while sharing every value: asking for a value the program
  // already computes returns the existing item, so values stay pairwise
  // distinct.
  class SlpBuilder {
   public:
    SlpBuilder(Semigroup const& g, GroupStructure const& group)
        : g_(g), group_(group), item_of_(g.order(), none) {}

    std::uint32_t gen(Element x) {
      return emit(SlpItem::gen(x), x);
    }
    std::uint32_t inv(std::uint32_t p) {
      return emit(SlpItem::inv(p), group_.inverse[values_[p]]);
    }
    std::uint32_t mul(std::uint32_t p, std::uint32_t q) {
      return emit(SlpItem::mul(p, q), g_.product(values_[p], values_[q]));
    }
    // Product of optional factors, left to right.
    std::optional<std::uint32_t> mul(std::optional<std::uint32_t> p,
                                     std::optional<std::uint32_t> q) {
      if (!p) {
        return q;
      }
      if (!q) {
        return p;
      }
      return mul(*p, *q);
    }

    StraightLineProgram finish(std::uint32_t last) && {
      // The requested item must be the final one; it may have been shared
      // with an earlier item, in which case the tail is dropped.
      items_.resize(last + 1);
      return StraightLineProgram(std::move(items_));
    }

   private:
    static constexpr std::uint32_t none
        = std::numeric_limits<std::uint32_t>::max();

    std::uint32_t emit(SlpItem item, Element value) {
      if (item_of_[value] != none) {
        return item_of_[value];
      }
      item_of_[value] = static_cast<std::uint32_t>(items_.size());
      items_.push_back(item);
      values_.push_back(value);
      return item_of_[value];
    }

    Semigroup const&           g_;
    GroupStructure const&      group_;
    std::vector<std::uint32_t> item_of_;
    std::vector<SlpItem>       items_;
    std::vector<Element>       values_;
  };

  struct CubeEntry {
    Element       value;
    std::uint64_t mask;  // which h_j occur in the subset product
  };

}  // namespace

SlpResult slp_reachability(Semigroup const&         g,
                           std::span<Element const> generators,
                           Element                  target) {
  auto const group = require_group(g);
  if (!g.contains(target)) {
    throw Error(ErrorKind::entry_out_of_range, "target is not an element");
  }
  std::vector<Element> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (!closure(g, gens).contains(target)) {
    throw Error(ErrorKind::target_not_generated,
                "target " + std::to_string(target)
                    + " is not in the generated subgroup");
  }

  SlpBuilder builder(g, group);
  SlpResult  result;
  if (std::binary_search(gens.begin(), gens.end(), target)) {
    result.program = std::move(builder).finish(builder.gen(target));
    return result;
  }

  Element const              id = group.identity;
  std::vector<CubeEntry>     cube{{id, 0}};
  std::vector<bool>          in_cube(g.order(), false);
  std::vector<std::uint32_t> h_items;
  in_cube[id] = true;

  auto cube_item = [&](std::uint64_t mask) -> std::optional<std::uint32_t> {
    std::optional<std::uint32_t> acc;
    for (std::size_t j = 0; j < h_items.size(); ++j) {
      if (mask >> j & 1) {
        acc = builder.mul(acc, h_items[j]);
      }
    }
    return acc;
  };
  auto inverse_item =
      [&](CubeEntry const& a) -> std::optional<std::uint32_t> {
    if (a.mask == 0) {
      return std::nullopt;
    }
    return builder.inv(*cube_item(a.mask));
  };

  // growth[v]: size of the cube extended by v (0 = not evaluated yet)
  std::vector<std::size_t> growth(g.order());
  for (;;) {
    for (auto const& a : cube) {
      for (auto const& b : cube) {
        if (g.product(group.inverse[a.value], b.value) != target) {
          continue;
        }
        auto last = builder.mul(inverse_item(a), cube_item(b.mask));
        if (!last) {
          // target is the identity and the cube is still trivial
          auto x = builder.gen(gens.front());
          last   = builder.mul(x, builder.inv(x));
        }
        result.program = std::move(builder).finish(*last);
        return result;
      }
    }

    std::fill(growth.begin(), growth.end(), 0);
    std::optional<std::size_t> doubling;
    struct Candidate {
      CubeEntry const*       a;
      CubeEntry const*       b;
      std::optional<Element> x;
      Element                h;
    };
    std::optional<Candidate> chosen, best;
    std::size_t              best_size = cube.size();
    for (auto const& a : cube) {
      for (auto const& b : cube) {
        Element const ab = g.product(group.inverse[a.value], b.value);
        for (std::size_t xi = 0; xi <= gens.size() && !chosen; ++xi) {
          std::optional<Element> x;
          if (xi > 0) {
            x = gens[xi - 1];
          }
          Element const h = x ? g.product(ab, *x) : ab;
          if (growth[h] == 0) {
            std::size_t size = cube.size();
            for (auto const& k : cube) {
              size += in_cube[g.product(k.value, h)] ? 0 : 1;
            }
            growth[h] = size;
          }
          if (growth[h] >= 2 * cube.size()) {
            chosen = Candidate{&a, &b, x, h};
          } else if (growth[h] > best_size) {
            best      = Candidate{&a, &b, x, h};
            best_size = growth[h];
          }
        }
        if (chosen) {
          break;
        }
      }
      if (chosen) {
        break;
      }
    }
    if (!chosen) {
      // Unreachable while target is outside K^-1 K: some a^-1 b x doubles
      // the cube there. Kept as a guarded fallback.
      if (!best) {
        throw Error(ErrorKind::target_not_generated,
                    "cube doubling made no progress");
      }
      result.bound_slack = true;
      chosen             = best;
    }
    if (h_items.size() >= 63) {
      throw Error(ErrorKind::budget_exceeded, "cube doubling ran too long");
    }
    std::optional<std::uint32_t> item = builder.mul(
        builder.mul(inverse_item(*chosen->a), cube_item(chosen->b->mask)),
        chosen->x ? std::optional<std::uint32_t>(builder.gen(*chosen->x))
                  : std::nullopt);
    h_items.push_back(*item);
    ++result.rounds;

    std::uint64_t const bit  = std::uint64_t{1} << (h_items.size() - 1);
    std::size_t const   prev = cube.size();
    for (std::size_t i = 0; i < prev; ++i) {
      Element v = g.product(cube[i].value, chosen->h);
      if (!in_cube[v]) {
        in_cube[v] = true;
        cube.push_back({v, cube[i].mask | bit});
      }
    }
  }
}

std::uint64_t inverse_exponent(std::size_t group_order) {
  if (group_order == 0) {
    throw Error(ErrorKind::invalid_argument, "group order must be >= 1");
  }
  std::uint64_t e = group_order - 1;
  while (e < 2) {
    e += group_order;
  }
  return e;
}

AssignedCircuit slp_to_circuit(StraightLineProgram const& slp,
                               std::size_t                group_order) {
  if (slp.empty()) {
    throw Error(ErrorKind::empty_sequence, "empty straight-line program");
  }
  CayleyCircuit const        inverter = power_circuit(inverse_exponent(group_order));
  std::vector<Gate>          gates;
  std::vector<Element>       assignment;
  std::vector<std::uint32_t> gate_of;
  for (auto const& item : slp.items()) {
    switch (item.op) {
      case SlpOp::gen:
        gates.push_back(Gate::input());
        assignment.push_back(item.first);
        break;
      case SlpOp::mul:
        gates.push_back(Gate::mul(gate_of[item.first], gate_of[item.second]));
        break;
      case SlpOp::inv: {
        // The inverter's input gate (index 0) becomes the operand's gate;
        // its remaining gates shift to the end of the circuit.
        std::uint32_t const root   = gate_of[item.first];
        auto const          offset = static_cast<std::uint32_t>(gates.size());
        auto                remap  = [&](std::uint32_t k) {
          return k == 0 ? root : offset + k - 1;
        };
        for (auto const& g : inverter.gates().subspan(1)) {
          gates.push_back(Gate::mul(remap(g.left), remap(g.right)));
        }
        break;
      }
    }
    gate_of.push_back(static_cast<std::uint32_t>(gates.size() - 1));
  }
  return {CayleyCircuit(std::move(gates)), std::move(assignment)};
}

StraightLineProgram parse_slp(std::string_view text) {
  std::vector<SlpItem> items;
  for (auto const& line : detail::tokenize_lines(text)) {
    auto const& t = line.tokens;
    auto        ref = [&](std::string const& token) {
      auto v = detail::parse_unsigned(token, "item reference");
      if (v == 0 || v > items.size()) {
        throw Error(ErrorKind::invalid_reference,
                    "line " + std::to_string(line.number)
                        + ": references must point to earlier items (1-based)");
      }
      return static_cast<std::uint32_t>(v - 1);
    };
    if (t[0] == "gen" && t.size() == 2) {
      items.push_back(SlpItem::gen(
          static_cast<Element>(detail::parse_unsigned(t[1], "generator"))));
    } else if (t[0] == "inv" && t.size() == 2) {
      items.push_back(SlpItem::inv(ref(t[1])));
    } else if (t[0] == "mul" && t.size() == 3) {
      items.push_back(SlpItem::mul(ref(t[1]), ref(t[2])));
    } else {
      detail::malformed(line.number,
                        "expected 'gen <x>', 'inv <p>' or 'mul <p> <q>'");
    }
  }
  return StraightLineProgram(std::move(items));
}

std::string format_slp(StraightLineProgram const& slp) {
  std::ostringstream os;
  for (auto const& item : slp.items()) {
    switch (item.op) {
      case SlpOp::gen:
        os << "gen " << item.first << '\n';
        break;
      case SlpOp::inv:
        os << "inv " << item.first + 1 << '\n';
        break;
      case SlpOp::mul:
        os << "mul " << item.first + 1 << ' ' << item.second + 1 << '\n';
        break;
    }
  }
  return os.str();
}

}  // namespace csm
