#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csm/membership.hpp"

namespace csm {

/// Directed graph on vertices 0..n-1; self-loops allowed, no multi-edges.
class Digraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  explicit Digraph(std::size_t vertex_count) : n_(vertex_count) {}

  /// Throws Error(vertex_out_of_range).
  void add_edge(std::size_t u, std::size_t v);

  std::size_t vertex_count() const noexcept {
    return n_;
  }
  std::set<Edge> const& edges() const noexcept {
    return edges_;
  }
  bool has_edge(std::size_t u, std::size_t v) const {
    return edges_.contains({u, v});
  }

 private:
  std::size_t    n_;
  std::set<Edge> edges_;
};

/// Graph file: "n m" then m lines "u v" (0-based).
Digraph     parse_graph(std::string_view text);
std::string format_graph(Digraph const& g);

/// The semigroup on V x V u {0} with (v,w)(x,y) = (v,y) if w = x and 0
/// otherwise, generated by the edges and the diagonal. (v, w) is element
/// v n + w and 0 is element n^2. Requires n >= 1.
class ZeroSimpleReduction {
 public:
  explicit ZeroSimpleReduction(Digraph const& g);

  Semigroup const& semigroup() const noexcept {
    return semigroup_;
  }
  std::vector<Element> const& generators() const noexcept {
    return generators_;
  }
  Element encode(std::size_t v, std::size_t w) const;
  Element zero() const noexcept {
    return static_cast<Element>(n_ * n_);
  }
  /// Throws Error(vertex_out_of_range).
  MembershipInstance instance(std::size_t s, std::size_t t) const;
  /// Lines "index -> (v,w)" and "index -> 0".
  std::string element_map() const;

 private:
  std::size_t          n_;
  Semigroup            semigroup_;
  std::vector<Element> generators_;
};

/// The semigroup on V x {1..n-1} x V u {0} with
/// (v,i,w)(x,j,y) = (v,i+j,y) if w = x and i + j < n, else 0, generated by
/// the (v,1,w) with v = w or (v,w) an edge. (v,i,w) is element
/// ((v (n-1)) + i - 1) n + w and 0 is element n^2 (n-1). Requires n >= 2.
class NilpotentReduction {
 public:
  /// Throws Error(graph_too_small) for n < 2.
  explicit NilpotentReduction(Digraph const& g);

  Semigroup const& semigroup() const noexcept {
    return semigroup_;
  }
  std::vector<Element> const& generators() const noexcept {
    return generators_;
  }
  Element encode(std::size_t v, std::size_t layer, std::size_t w) const;
  Element zero() const noexcept {
    return static_cast<Element>(n_ * n_ * (n_ - 1));
  }
  /// Target (s, n-1, t). Throws Error(vertex_out_of_range).
  MembershipInstance instance(std::size_t s, std::size_t t) const;
  /// Lines "index -> (v,i,w)" and "index -> 0".
  std::string element_map() const;

 private:
  std::size_t          n_;
  Semigroup            semigroup_;
  std::vector<Element> generators_;
};

MembershipInstance reduce_stconn_zero_simple(Digraph const& g,
                                             std::size_t    s,
                                             std::size_t    t);

MembershipInstance reduce_stconn_nilpotent(Digraph const& g,
                                           std::size_t    s,
                                           std::size_t    t);

}  // namespace csm
