#include "csm/catalog.hpp"

#include <algorithm>
#include <array>

#include "csm/permutation.hpp"

namespace csm::catalog {

Semigroup cyclic_group(std::size_t n) {
  return Semigroup::from_function(
      n, [n](Element a, Element b) { return (a + b) % n; });
}

Semigroup multiplicative_mod(std::size_t n) {
  return Semigroup::from_function(n, [n](Element a, Element b) {
    return (static_cast<std::uint64_t>(a) * b) % n;
  });
}

Semigroup left_zero(std::size_t n) {
  return Semigroup::from_function(n, [](Element a, Element) { return a; });
}

Semigroup right_zero(std::size_t n) {
  return Semigroup::from_function(n, [](Element, Element b) { return b; });
}

Semigroup null_semigroup(std::size_t n) {
  return Semigroup::from_function(n, [](Element, Element) { return 0; });
}

Semigroup min_semilattice(std::size_t n) {
  return Semigroup::from_function(
      n, [](Element a, Element b) { return std::min(a, b); });
}

Semigroup truncated_addition(std::size_t e) {
  // value v = index + 1; product min(v1 + v2, e) stored at index - 1
  return Semigroup::from_function(e, [e](Element a, Element b) {
    return static_cast<Element>(std::min<std::size_t>(a + b + 2, e) - 1);
  });
}

Semigroup trivial() {
  return cyclic_group(1);
}

namespace {
  Permutation cycle(std::size_t n, std::vector<std::uint32_t> const& points) {
    Permutation p = identity_permutation(n);
    for (std::size_t i = 0; i < points.size(); ++i) {
      p[points[i]] = points[(i + 1) % points.size()];
    }
    return p;
  }

  Permutation full_cycle(std::size_t n) {
    std::vector<std::uint32_t> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
      pts[i] = static_cast<std::uint32_t>(i);
    }
    return cycle(n, pts);
  }
}  // namespace

Semigroup symmetric_group(std::size_t n) {
  if (n <= 1) {
    return trivial();
  }
  return PermutationGroup({cycle(n, {0, 1}), full_cycle(n)}).cayley_table();
}

Semigroup alternating_group(std::size_t n) {
  if (n <= 2) {
    return trivial();
  }
  std::vector<Permutation> gens;
  for (std::uint32_t i = 2; i < n; ++i) {
    gens.push_back(cycle(n, {0, 1, i}));
  }
  return PermutationGroup(gens).cayley_table();
}

Semigroup dihedral_group(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorKind::invalid_argument,
                "dihedral_group needs at least 3 vertices");
  }
  Permutation flip(n);
  for (std::size_t i = 0; i < n; ++i) {
    flip[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return PermutationGroup({full_cycle(n), flip}).cayley_table();
}

Semigroup quaternion_group() {
  // unit products: (sign, unit) of u * v for units 1, i, j, k
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> units{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  return Semigroup::from_function(8, [](Element a, Element b) {
    auto [sign, unit] = units[a % 4][b % 4];
    return static_cast<Element>(4 * ((sign + a / 4 + b / 4) % 2) + unit);
  });
}

}  // namespace csm::catalog
