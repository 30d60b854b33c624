#include "csm/power_basis.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "csm/membership.hpp"
#include "csm/properties.hpp"

namespace csm {

namespace {
  void require_commutative(Semigroup const& s) {
    if (!is_commutative(s)) {
      throw Error(ErrorKind::not_commutative,
                  "power-basis decomposition needs a commutative semigroup");
    }
  }

  void normalize(Semigroup const& s, PowerProduct& p) {
    for (auto& f : p.factors) {
      f.exponent = normalize_exponent(element_index_period(s, f.generator),
                                      f.exponent);
    }
  }
}  // namespace

Element evaluate_power_product(Semigroup const& s, PowerProduct const& p) {
  if (p.factors.empty()) {
    throw Error(ErrorKind::empty_sequence, "empty power product");
  }
  Element value = power(s, p.factors[0].generator, p.factors[0].exponent);
  for (std::size_t j = 1; j < p.factors.size(); ++j) {
    value = s.product(value,
                      power(s, p.factors[j].generator, p.factors[j].exponent));
  }
  return value;
}

PowerProduct reduce_power_product(Semigroup const& s, PowerProduct p) {
  require_commutative(s);
  std::sort(p.factors.begin(), p.factors.end(), [](auto const& a, auto const& b) {
    return a.generator < b.generator;
  });
  normalize(s, p);
  std::size_t const n        = s.order();
  Element const     identity = static_cast<Element>(n);  // adjoined
  auto              mul      = [&](Element a, Element b) {
    return a == identity ? b : (b == identity ? a : s.product(a, b));
  };

  // Loop while 2^k > N + 1, i.e. while a collision is forced.
  while (p.factors.size() >= 64
         || (std::uint64_t{1} << p.factors.size()) > n + 1) {
    auto const           k = p.factors.size();
    std::vector<Element> powers(k);
    for (std::size_t j = 0; j < k; ++j) {
      powers[j] = power(s, p.factors[j].generator, p.factors[j].exponent);
    }
    // Subsets in increasing bitmask order; only the first N + 2 are needed,
    // so the masks fit comfortably in 64 bits.
    std::vector<Element>                   h{identity};
    std::unordered_map<Element, std::uint64_t> first{{identity, 0}};
    std::uint64_t                          earlier = 0, later = 0;
    for (std::uint64_t mask = 1;; ++mask) {
      auto const low = static_cast<std::size_t>(std::countr_zero(mask));
      Element    v   = mul(h[mask & (mask - 1)], powers[low]);
      h.push_back(v);
      auto [it, inserted] = first.emplace(v, mask);
      if (!inserted) {
        earlier = it->second;
        later   = mask;
        break;
      }
    }
    // y = h(later) h(rest \ later) = h(earlier) h(rest \ later); some j lies
    // in later \ earlier and disappears. Indices in both parts double up.
    PowerProduct next;
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t const bit   = j < 64 ? std::uint64_t{1} << j : 0;
      std::uint64_t const times = ((earlier & bit) ? 1 : 0)
                                  + ((later & bit) ? 0 : 1);
      if (times > 0) {
        next.factors.push_back(
            {p.factors[j].generator, p.factors[j].exponent * times});
      }
    }
    normalize(s, next);
    p = std::move(next);
  }
  return p;
}

PowerProduct power_basis_decomposition(Semigroup const&         s,
                                       std::span<Element const> generators,
                                       Element                  y) {
  require_commutative(s);
  std::vector<Element> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto sub = closure(s, gens);
  if (!s.contains(y) || !sub.contains(y)) {
    throw Error(ErrorKind::target_not_generated,
                "element " + std::to_string(y) + " is not generated");
  }
  if (std::binary_search(gens.begin(), gens.end(), y)) {
    return PowerProduct{{{y, 1}}};
  }

  // Multiplicity of each generator along the derivation, normalized per
  // generator after every addition so counts stay below 2N.
  std::vector<IndexPeriod> periods;
  for (Element x : gens) {
    periods.push_back(element_index_period(s, x));
  }
  std::unordered_map<Element, std::vector<std::uint64_t>> counts;
  for (auto const& step : sub.trace(y)) {
    std::vector<std::uint64_t> c(gens.size(), 0);
    if (auto const* g = std::get_if<FromGenerator>(&step.how)) {
      auto pos = std::lower_bound(gens.begin(), gens.end(), g->generator)
                 - gens.begin();
      c[pos] = 1;
    } else {
      auto const& prod = std::get<FromProduct>(step.how);
      auto const& l    = counts.at(prod.left);
      auto const& r    = counts.at(prod.right);
      for (std::size_t j = 0; j < c.size(); ++j) {
        c[j] = normalize_exponent(periods[j], l[j] + r[j]);
      }
    }
    counts.emplace(step.value, std::move(c));
  }
  PowerProduct p;
  auto const&  c = counts.at(y);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (c[j] > 0) {
      p.factors.push_back({gens[j], c[j]});
    }
  }
  return reduce_power_product(s, std::move(p));
}

AssignedCircuit commutative_circuit(Semigroup const&         s,
                                    std::span<Element const> generators,
                                    Element                  y) {
  auto                       p = power_basis_decomposition(s, generators, y);
  std::vector<CayleyCircuit> blocks;
  std::vector<Element>       assignment;
  for (auto const& f : p.factors) {
    blocks.push_back(power_circuit(f.exponent));
    assignment.push_back(f.generator);
  }
  return {chain_product(blocks), std::move(assignment)};
}

}  // namespace csm
