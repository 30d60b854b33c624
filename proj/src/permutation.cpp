#include "csm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace csm {

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(Permutation const& p, Permutation const& q) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = q[p[i]];
  }
  return out;
}

bool is_permutation(Permutation const& p) {
  std::vector<bool> hit(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  return true;
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : p) {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return h;
}

PermutationGroup::PermutationGroup(std::vector<Permutation> const& generators,
                                   std::size_t max_order) {
  if (generators.empty()) {
    throw Error(ErrorKind::invalid_argument,
                "a permutation group needs at least one generator");
  }
  degree_ = generators.front().size();
  for (auto const& g : generators) {
    if (g.size() != degree_ || !is_permutation(g)) {
      throw Error(ErrorKind::invalid_argument,
                  "generators must be permutations of equal degree");
    }
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation>                          found;
  auto                                              visit = [&](Permutation p) {
    if (seen.insert(p).second) {
      found.push_back(std::move(p));
      if (found.size() > max_order) {
        throw Error(ErrorKind::witness_too_large,
                    "permutation group exceeds " + std::to_string(max_order)
                        + " elements");
      }
    }
  };
  for (auto const& g : generators) {
    visit(g);
  }
  // Right multiplication by generators reaches the whole group because every
  // element of a finite group is a positive product of generators.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto const& g : generators) {
      visit(compose(found[i], g));
    }
  }
  std::sort(found.begin(), found.end());
  elements_ = std::move(found);
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i], static_cast<Element>(i));
  }
}

std::optional<Element> PermutationGroup::index_of(Permutation const& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Element PermutationGroup::product(Element a, Element b) const {
  return index_.at(compose(elements_[a], elements_[b]));
}

Semigroup PermutationGroup::cayley_table() const {
  return Semigroup::from_function(
      order(), [this](Element a, Element b) { return product(a, b); });
}

}  // namespace csm
