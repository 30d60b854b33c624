#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "csm/reductions.hpp"
#include "csm/semigroup.hpp"

namespace csm::corpus {

struct NamedSemigroup {
  std::string name;
  Semigroup   semigroup;
};

/// Every associative table on 0..order-1, in lexicographic table order.
/// Only orders 1..3 are accepted (the screen walks order^(order^2) tables).
std::vector<Semigroup> associative_tables(std::size_t order);

/// Every nilpotent table on 0..order-1 whose zero is 0; order 1..4.
std::vector<Semigroup> nilpotent_tables(std::size_t order);

/// Catalog families, small direct products and reduction outputs with at
/// most max_order elements.
std::vector<NamedSemigroup> standard_corpus(std::size_t max_order);

/// count semigroups of order <= max_order drawn from direct products,
/// reductions of random digraphs and screened tables, randomly relabeled.
std::vector<NamedSemigroup> random_semigroups(std::size_t   count,
                                              std::uint64_t seed,
                                              std::size_t   max_order = 12);

/// The same semigroup with element x renamed to perm[x].
Semigroup relabel(Semigroup const& s, std::vector<Element> const& perm);

/// Each ordered pair of distinct vertices is an edge with a density drawn
/// per graph.
Digraph random_digraph(std::size_t n, std::mt19937_64& rng);

struct GroupCase {
  std::string                       name;
  Semigroup                         group;
  std::vector<std::vector<Element>> generating_sets;
};

/// Z2..Z64, S3, D4, Q8, A4 and S4, each with at least two generating sets.
std::vector<GroupCase> group_corpus();

}  // namespace csm::corpus
