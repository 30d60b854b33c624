#include "csm/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "text_io.hpp"

namespace csm {

namespace {
  void check_vertex(std::size_t v, std::size_t n) {
    if (v >= n) {
      throw Error(ErrorKind::vertex_out_of_range,
                  "vertex " + std::to_string(v) + " is not below "
                      + std::to_string(n));
    }
  }
}  // namespace

void Digraph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  edges_.insert({u, v});
}

Digraph parse_graph(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty() || lines[0].tokens.size() != 2) {
    throw Error(ErrorKind::malformed_input, "expected header 'n m'");
  }
  auto n = detail::parse_unsigned(lines[0].tokens[0], "vertex count");
  auto m = detail::parse_unsigned(lines[0].tokens[1], "edge count");
  if (lines.size() != m + 1) {
    throw Error(ErrorKind::malformed_input,
                "expected " + std::to_string(m) + " edge lines, found "
                    + std::to_string(lines.size() - 1));
  }
  Digraph g(n);
  for (std::size_t i = 1; i <= m; ++i) {
    if (lines[i].tokens.size() != 2) {
      detail::malformed(lines[i].number, "expected 'u v'");
    }
    auto u = detail::parse_unsigned(lines[i].tokens[0], "vertex");
    auto v = detail::parse_unsigned(lines[i].tokens[1], "vertex");
    g.add_edge(u, v);
  }
  return g;
}

std::string format_graph(Digraph const& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edges().size() << '\n';
  for (auto [u, v] : g.edges()) {
    os << u << ' ' << v << '\n';
  }
  return os.str();
}

namespace {
  Semigroup zero_simple_table(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorKind::graph_too_small, "the graph has no vertices");
    }
    std::size_t const zero = n * n;
    return Semigroup::from_function(zero + 1, [n, zero](Element a, Element b) {
      if (a == zero || b == zero || a % n != b / n) {
        return zero;
      }
      return (a / n) * n + b % n;
    });
  }

  Semigroup nilpotent_table(std::size_t n) {
    if (n < 2) {
      throw Error(ErrorKind::graph_too_small,
                  "the layered reduction needs at least 2 vertices");
    }
    std::size_t const layers = n - 1;
    std::size_t const zero   = n * n * layers;
    return Semigroup::from_function(zero + 1, [=](Element a, Element b) {
      if (a == zero || b == zero) {
        return zero;
      }
      std::size_t const v = a / n / layers, i = a / n % layers + 1, w = a % n;
      std::size_t const x = b / n / layers, j = b / n % layers + 1, y = b % n;
      if (w != x || i + j >= n) {
        return zero;
      }
      return (v * layers + (i + j - 1)) * n + y;
    });
  }
}  // namespace

ZeroSimpleReduction::ZeroSimpleReduction(Digraph const& g)
    : n_(g.vertex_count()), semigroup_(zero_simple_table(g.vertex_count())) {
  for (std::size_t v = 0; v < n_; ++v) {
    generators_.push_back(encode(v, v));
  }
  for (auto [u, v] : g.edges()) {
    generators_.push_back(encode(u, v));
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
}

Element ZeroSimpleReduction::encode(std::size_t v, std::size_t w) const {
  check_vertex(v, n_);
  check_vertex(w, n_);
  return static_cast<Element>(v * n_ + w);
}

MembershipInstance ZeroSimpleReduction::instance(std::size_t s,
                                                 std::size_t t) const {
  return make_instance(semigroup_, generators_, encode(s, t));
}

std::string ZeroSimpleReduction::element_map() const {
  std::ostringstream os;
  for (std::size_t v = 0; v < n_; ++v) {
    for (std::size_t w = 0; w < n_; ++w) {
      os << encode(v, w) << " -> (" << v << ',' << w << ")\n";
    }
  }
  os << zero() << " -> 0\n";
  return os.str();
}

NilpotentReduction::NilpotentReduction(Digraph const& g)
    : n_(g.vertex_count()), semigroup_(nilpotent_table(g.vertex_count())) {
  for (std::size_t v = 0; v < n_; ++v) {
    generators_.push_back(encode(v, 1, v));
  }
  for (auto [u, v] : g.edges()) {
    generators_.push_back(encode(u, 1, v));
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
}

Element NilpotentReduction::encode(std::size_t v,
                                   std::size_t layer,
                                   std::size_t w) const {
  check_vertex(v, n_);
  check_vertex(w, n_);
  if (layer == 0 || layer >= n_) {
    throw Error(ErrorKind::invalid_argument,
                "layer must be in [1, " + std::to_string(n_ - 1) + "]");
  }
  return static_cast<Element>((v * (n_ - 1) + (layer - 1)) * n_ + w);
}

MembershipInstance NilpotentReduction::instance(std::size_t s,
                                                std::size_t t) const {
  return make_instance(semigroup_, generators_, encode(s, n_ - 1, t));
}

std::string NilpotentReduction::element_map() const {
  std::ostringstream os;
  for (std::size_t v = 0; v < n_; ++v) {
    for (std::size_t i = 1; i < n_; ++i) {
      for (std::size_t w = 0; w < n_; ++w) {
        os << encode(v, i, w) << " -> (" << v << ',' << i << ',' << w
           << ")\n";
      }
    }
  }
  os << zero() << " -> 0\n";
  return os.str();
}

MembershipInstance reduce_stconn_zero_simple(Digraph const& g,
                                             std::size_t    s,
                                             std::size_t    t) {
  check_vertex(s, g.vertex_count());
  check_vertex(t, g.vertex_count());
  return ZeroSimpleReduction(g).instance(s, t);
}

MembershipInstance reduce_stconn_nilpotent(Digraph const& g,
                                           std::size_t    s,
                                           std::size_t    t) {
  if (g.vertex_count() < 2) {
    throw Error(ErrorKind::graph_too_small,
                "the layered reduction needs at least 2 vertices");
  }
  check_vertex(s, g.vertex_count());
  check_vertex(t, g.vertex_count());
  return NilpotentReduction(g).instance(s, t);
}

}  // namespace csm
