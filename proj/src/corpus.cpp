#include "csm/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "csm/catalog.hpp"
#include "csm/membership.hpp"
#include "csm/properties.hpp"

namespace csm::corpus {

std::vector<Semigroup> associative_tables(std::size_t order) {
  if (order == 0 || order > 3) {
    throw Error(ErrorKind::invalid_argument,
                "the table screen only covers orders 1 to 3");
  }
  std::size_t const    cells = order * order;
  std::vector<Element> table(cells, 0);
  std::vector<Semigroup> out;
  for (;;) {
    if (!find_non_associative_triple(order, table)) {
      out.emplace_back(order, table);
    }
    std::size_t i = cells;
    while (i > 0 && ++table[i - 1] == order) {
      table[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      return out;
    }
  }
}

std::vector<Semigroup> nilpotent_tables(std::size_t order) {
  if (order == 0 || order > 4) {
    throw Error(ErrorKind::invalid_argument,
                "nilpotent tables are only enumerated up to order 4");
  }
  std::size_t const    n = order;
  std::vector<Element> free((n - 1) * (n - 1), 0);
  std::vector<Element> table(n * n, 0);
  std::vector<Semigroup> out;
  for (;;) {
    for (std::size_t a = 1; a < n; ++a) {
      for (std::size_t b = 1; b < n; ++b) {
        table[a * n + b] = free[(a - 1) * (n - 1) + (b - 1)];
      }
    }
    if (!find_non_associative_triple(n, table)) {
      Semigroup s(n, table);
      if (classify(s).nilpotent) {
        out.push_back(std::move(s));
      }
    }
    std::size_t i = free.size();
    while (i > 0 && ++free[i - 1] == n) {
      free[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      return out;
    }
  }
}

Semigroup relabel(Semigroup const& s, std::vector<Element> const& perm) {
  std::size_t const    n = s.order();
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      table[perm[a] * n + perm[b]] = perm[s.product(a, b)];
    }
  }
  return Semigroup(n, std::move(table));
}

Digraph random_digraph(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double const density = 0.1 + 0.4 * unit(rng);
  Digraph      g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && unit(rng) < density) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

namespace {
  Digraph path_graph(std::size_t n) {
    Digraph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) {
      g.add_edge(v, v + 1);
    }
    return g;
  }

  std::vector<NamedSemigroup> small_factors() {
    using namespace catalog;
    return {{"Z2", cyclic_group(2)},
            {"Z3", cyclic_group(3)},
            {"Z4", cyclic_group(4)},
            {"M4", multiplicative_mod(4)},
            {"M6", multiplicative_mod(6)},
            {"LZ2", left_zero(2)},
            {"RZ2", right_zero(2)},
            {"RZ3", right_zero(3)},
            {"Null2", null_semigroup(2)},
            {"Null3", null_semigroup(3)},
            {"Min2", min_semilattice(2)},
            {"Min3", min_semilattice(3)},
            {"Trunc2", truncated_addition(2)},
            {"Trunc3", truncated_addition(3)},
            {"Trunc4", truncated_addition(4)},
            {"S3", symmetric_group(3)}};
  }
}  // namespace

std::vector<NamedSemigroup> standard_corpus(std::size_t max_order) {
  using namespace catalog;
  std::vector<NamedSemigroup> all;
  for (std::size_t n = 1; n <= 32; ++n) {
    all.push_back({"Z" + std::to_string(n), cyclic_group(n)});
  }
  for (std::size_t n = 2; n <= 32; ++n) {
    all.push_back({"M" + std::to_string(n), multiplicative_mod(n)});
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    all.push_back({"LZ" + std::to_string(n), left_zero(n)});
    all.push_back({"RZ" + std::to_string(n), right_zero(n)});
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    all.push_back({"Null" + std::to_string(n), null_semigroup(n)});
    all.push_back({"Min" + std::to_string(n), min_semilattice(n)});
  }
  for (std::size_t e = 2; e <= 8; ++e) {
    all.push_back({"Trunc" + std::to_string(e), truncated_addition(e)});
  }
  all.push_back({"S3", symmetric_group(3)});
  all.push_back({"D4", dihedral_group(4)});
  all.push_back({"D5", dihedral_group(5)});
  all.push_back({"Q8", quaternion_group()});
  all.push_back({"A4", alternating_group(4)});
  all.push_back({"S4", symmetric_group(4)});
  all.push_back({"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))});
  all.push_back({"Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4))});
  all.push_back({"Z2xZ2xZ2",
                 direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                cyclic_group(2))});
  all.push_back(
      {"Z3xTrunc3", direct_product(cyclic_group(3), truncated_addition(3))});
  all.push_back({"Min2xZ4", direct_product(min_semilattice(2), cyclic_group(4))});
  all.push_back(
      {"Null2xZ3", direct_product(null_semigroup(2), cyclic_group(3))});
  all.push_back({"LZ2xZ3", direct_product(left_zero(2), cyclic_group(3))});
  all.push_back({"M4xTrunc2",
                 direct_product(multiplicative_mod(4), truncated_addition(2))});
  all.push_back({"ZS(path2)", ZeroSimpleReduction(path_graph(2)).semigroup()});
  all.push_back({"ZS(path3)", ZeroSimpleReduction(path_graph(3)).semigroup()});
  all.push_back({"NP(path2)", NilpotentReduction(path_graph(2)).semigroup()});
  all.push_back({"NP(path3)", NilpotentReduction(path_graph(3)).semigroup()});

  std::vector<NamedSemigroup> out;
  for (auto& item : all) {
    if (item.semigroup.order() <= max_order) {
      out.push_back(std::move(item));
    }
  }
  return out;
}

std::vector<NamedSemigroup> random_semigroups(std::size_t   count,
                                              std::uint64_t seed,
                                              std::size_t   max_order) {
  if (max_order < 2) {
    throw Error(ErrorKind::invalid_argument, "max_order must be >= 2");
  }
  std::mt19937_64 rng(seed);
  auto const      factors = small_factors();
  auto const      screened = associative_tables(3);
  auto pick = [&](std::size_t bound) -> std::size_t {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
  };

  std::vector<NamedSemigroup> out;
  while (out.size() < count) {
    std::optional<NamedSemigroup> item;
    switch (pick(5)) {
      case 0: {
        auto const& s = screened[pick(screened.size())];
        item          = NamedSemigroup{"table3", s};
        break;
      }
      case 1: {
        auto const& a = factors[pick(factors.size())];
        auto const& b = factors[pick(factors.size())];
        if (a.semigroup.order() * b.semigroup.order() <= max_order) {
          item = NamedSemigroup{a.name + "x" + b.name,
                                direct_product(a.semigroup, b.semigroup)};
        }
        break;
      }
      case 2: {
        std::size_t const n = 1 + pick(3);
        if (n * n + 1 <= max_order) {
          item = NamedSemigroup{"ZS(rand" + std::to_string(n) + ")",
                                ZeroSimpleReduction(random_digraph(n, rng))
                                    .semigroup()};
        }
        break;
      }
      case 3: {
        item = NamedSemigroup{"NP(rand2)",
                              NilpotentReduction(random_digraph(2, rng))
                                  .semigroup()};
        break;
      }
      default: {
        auto const& a = factors[pick(factors.size())];
        auto const& b = screened[pick(screened.size())];
        if (a.semigroup.order() * 3 <= max_order) {
          item = NamedSemigroup{a.name + "xtable3", direct_product(a.semigroup, b)};
        }
        break;
      }
    }
    if (!item || item->semigroup.order() > max_order) {
      continue;
    }
    std::vector<Element> perm(item->semigroup.order());
    std::iota(perm.begin(), perm.end(), Element{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    out.push_back({item->name, relabel(item->semigroup, perm)});
  }
  return out;
}

namespace {
  bool generates(Semigroup const& g, std::vector<Element> const& gens) {
    return closure(g, gens).size() == g.order();
  }

  std::vector<std::vector<Element>> group_generating_sets(Semigroup const& g) {
    std::vector<std::vector<Element>> sets;
    auto const                        id = *find_identity(g);
    // smallest generating set found in lexicographic order of sizes 1 and 2
    for (Element a = 0; a < g.order() && sets.empty(); ++a) {
      if (generates(g, {a})) {
        sets.push_back({a});
      }
    }
    for (Element a = 0; a < g.order() && sets.empty(); ++a) {
      for (Element b = a + 1; b < g.order() && sets.empty(); ++b) {
        if (generates(g, {a, b})) {
          sets.push_back({a, b});
        }
      }
    }
    // the largest cyclic generator, or else the last generating pair
    std::vector<Element> other;
    for (Element a = g.order(); a-- > 0 && other.empty();) {
      if (generates(g, {a}) && std::vector<Element>{a} != sets.front()) {
        other = {a};
      }
    }
    for (Element a = g.order(); a-- > 0 && other.empty();) {
      for (Element b = a; b-- > 0 && other.empty();) {
        if (generates(g, {b, a}) && std::vector<Element>{b, a} != sets.front()) {
          other = {b, a};
        }
      }
    }
    if (!other.empty()) {
      sets.push_back(std::move(other));
    }
    std::vector<Element> non_identity;
    for (Element a = 0; a < g.order(); ++a) {
      if (a != id) {
        non_identity.push_back(a);
      }
    }
    if (non_identity.empty()) {
      non_identity.push_back(id);
    }
    sets.push_back(std::move(non_identity));
    return sets;
  }
}  // namespace

std::vector<GroupCase> group_corpus() {
  using namespace catalog;
  std::vector<GroupCase> out;
  for (std::size_t n = 2; n <= 64; ++n) {
    out.push_back({"Z" + std::to_string(n), cyclic_group(n), {}});
  }
  out.push_back({"S3", symmetric_group(3), {}});
  out.push_back({"D4", dihedral_group(4), {}});
  out.push_back({"Q8", quaternion_group(), {}});
  out.push_back({"A4", alternating_group(4), {}});
  out.push_back({"S4", symmetric_group(4), {}});
  for (auto& c : out) {
    c.generating_sets = group_generating_sets(c.group);
  }
  return out;
}

}  // namespace csm::corpus
