#include "catch_amalgamated.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "csm/catalog.hpp"
#include "csm/corpus.hpp"
#include "csm/membership.hpp"
#include "csm/power_basis.hpp"
#include "csm/properties.hpp"

using namespace csm;

namespace {
  std::size_t ceil_log2(std::size_t n) {
    return static_cast<std::size_t>(std::bit_width(n - 1));
  }
}  // namespace

TEST_CASE("decomposition examples", "[power_basis]") {
  auto z12 = catalog::cyclic_group(12);
  auto p   = power_basis_decomposition(z12, std::vector<Element>{4, 6}, 10);
  CHECK(p == PowerProduct{{{4, 1}, {6, 1}}});
  auto c = commutative_circuit(z12, std::vector<Element>{4, 6}, 10);
  CHECK(c.circuit.size() == 3);
  CHECK(evaluate(c.circuit, z12, c.assignment) == 10);

  auto z6 = catalog::cyclic_group(6);
  CHECK(power_basis_decomposition(z6, std::vector<Element>{1, 3}, 3)
        == PowerProduct{{{3, 1}}});
  auto y0 = commutative_circuit(z6, std::vector<Element>{2}, 0);
  CHECK(y0.circuit.size() <= 2 * ceil_log2(6));
  CHECK(evaluate(y0.circuit, z6, y0.assignment) == 0);
  auto in = commutative_circuit(z6, std::vector<Element>{2, 5}, 5);
  CHECK(in.circuit.size() == 1);

  CHECK_THROWS_AS(power_basis_decomposition(z6, std::vector<Element>{2}, 3), Error);
  CHECK_THROWS_AS(
      power_basis_decomposition(catalog::left_zero(2), std::vector<Element>{0}, 0),
      Error);
}

TEST_CASE("reduction of a fat representation", "[power_basis]") {
  auto z6 = catalog::cyclic_group(6);
  PowerProduct fat{{{1, 3}, {2, 1}, {3, 1}, {4, 1}}};
  Element const y = evaluate_power_product(z6, fat);
  auto const    r = reduce_power_product(z6, fat);
  CHECK(r.factors.size() <= 3);
  CHECK(evaluate_power_product(z6, r) == y);
  CHECK_THROWS_AS(evaluate_power_product(z6, PowerProduct{}), Error);
}

TEST_CASE("reduction keeps the value", "[power_basis][property]") {
  std::mt19937_64 rng(41);
  for (auto const& [name, s] : corpus::standard_corpus(32)) {
    if (!is_commutative(s)) {
      continue;
    }
    for (int rep = 0; rep < 30; ++rep) {
      PowerProduct p;
      for (Element x = 0; x < s.order(); ++x) {
        if (rng() % 3 == 0) {
          p.factors.push_back({x, 1 + rng() % (3 * s.order())});
        }
      }
      if (p.factors.empty()) {
        continue;
      }
      auto const r = reduce_power_product(s, p);
      INFO(name);
      CHECK(evaluate_power_product(s, r) == evaluate_power_product(s, p));
      CHECK((std::uint64_t{1} << r.factors.size()) <= s.order() + 1);
      for (auto const& f : r.factors) {
        CHECK(f.exponent >= 1);
        CHECK(f.exponent <= s.order());
      }
    }
  }
}

TEST_CASE("decompositions over small commutative semigroups", "[power_basis][property]") {
  std::vector<Semigroup> all;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& s : corpus::associative_tables(n)) {
      all.push_back(std::move(s));
    }
  }
  for (std::size_t n = 1; n <= 32; ++n) {
    all.push_back(catalog::cyclic_group(n));
  }
  for (auto const& s : all) {
    if (!is_commutative(s)) {
      continue;
    }
    std::size_t const n     = s.order();
    std::size_t const k_max = ceil_log2(n + 1);
    std::uint64_t const masks = n <= 6 ? (std::uint64_t{1} << n) : 64;
    for (std::uint64_t mask = 1; mask < masks; ++mask) {
      std::vector<Element> xs;
      for (Element x = 0; x < n; ++x) {
        if ((mask >> (x % 6)) & 1 && (n <= 6 || x % 5 == 0)) {
          xs.push_back(x);
        }
      }
      if (xs.empty()) {
        continue;
      }
      auto const sub = closure(s, xs);
      for (Element y : sub.elements()) {
        auto const p = power_basis_decomposition(s, xs, y);
        CHECK(evaluate_power_product(s, p) == y);
        CHECK(p.factors.size() <= k_max);
        auto const c = commutative_circuit(s, xs, y);
        CHECK(evaluate(c.circuit, s, c.assignment) == y);
        CHECK(ordering_width(c.circuit) <= 2);
        CHECK(c.circuit.size()
              <= p.factors.size() * std::max<std::size_t>(2 * ceil_log2(n), 1)
                     + p.factors.size() - 1);
        CHECK(static_cast<double>(c.circuit.size())
              <= 5 * std::pow(std::log2(static_cast<double>(n)) + 1, 2));
      }
    }
  }
}
