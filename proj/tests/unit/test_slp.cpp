#include "catch_amalgamated.hpp"

#include <cmath>
#include <random>

#include "csm/catalog.hpp"
#include "csm/circuit.hpp"
#include "csm/corpus.hpp"
#include "csm/properties.hpp"
#include "csm/slp.hpp"

using namespace csm;

TEST_CASE("evaluate_slp examples", "[slp]") {
  auto z5 = catalog::cyclic_group(5);
  StraightLineProgram inv({SlpItem::gen(1), SlpItem::inv(0)});
  CHECK(evaluate_slp(z5, inv) == std::vector<Element>{1, 4});
  StraightLineProgram dbl({SlpItem::gen(1), SlpItem::mul(0, 0)});
  CHECK(evaluate_slp(z5, dbl) == std::vector<Element>{1, 2});

  auto z8 = catalog::cyclic_group(8);
  StraightLineProgram seven({SlpItem::gen(1), SlpItem::mul(0, 0), SlpItem::mul(1, 1),
                             SlpItem::mul(2, 1), SlpItem::mul(3, 0)});
  CHECK(evaluate_slp(z8, seven).back() == 7);
  CHECK_THROWS_AS(evaluate_slp(catalog::null_semigroup(2), dbl), Error);
  CHECK_THROWS_AS(StraightLineProgram({SlpItem::mul(0, 0)}), Error);
  CHECK_THROWS_AS(StraightLineProgram({SlpItem::gen(1), SlpItem::inv(1)}), Error);
}

TEST_CASE("slp_reachability examples", "[slp]") {
  auto z8 = catalog::cyclic_group(8);
  auto r  = slp_reachability(z8, std::vector<Element>{1}, 7);
  CHECK(r.program.length() <= 16);
  CHECK(evaluate_slp(z8, r.program).back() == 7);

  auto same = slp_reachability(z8, std::vector<Element>{3, 5}, 5);
  CHECK(same.program == StraightLineProgram({SlpItem::gen(5)}));

  auto s3 = catalog::symmetric_group(3);
  // find a 3-cycle and a transposition
  Element cycle = 0, swap = 0;
  for (Element x = 1; x < 6; ++x) {
    if (s3.product(x, x) == 0) {
      swap = x;
    } else {
      cycle = x;
    }
  }
  auto id = slp_reachability(s3, std::vector<Element>{cycle, swap}, 0);
  CHECK(static_cast<double>(id.program.length()) < std::pow(std::log2(6.0) + 1, 2));
  CHECK(evaluate_slp(s3, id.program).back() == 0);

  CHECK_THROWS_AS(slp_reachability(z8, std::vector<Element>{2}, 3), Error);
  CHECK_THROWS_AS(slp_reachability(catalog::left_zero(2), std::vector<Element>{0}, 0),
                  Error);
}

TEST_CASE("inverse exponent", "[slp]") {
  CHECK(inverse_exponent(1) == 2);
  CHECK(inverse_exponent(2) == 3);
  CHECK(inverse_exponent(3) == 2);
  CHECK(inverse_exponent(5) == 4);
  CHECK(inverse_exponent(24) == 23);
  for (auto const& g : corpus::group_corpus()) {
    auto const n  = g.group.order();
    auto const gs = require_group(g.group);
    auto const c  = power_circuit(inverse_exponent(n));
    for (Element x = 0; x < n; ++x) {
      Element const inv = evaluate(c, g.group, std::vector<Element>{x});
      CHECK(g.group.product(inv, x) == gs.identity);
    }
  }
}

TEST_CASE("slp_to_circuit examples", "[slp]") {
  auto z5 = catalog::cyclic_group(5);
  auto c  = slp_to_circuit(StraightLineProgram({SlpItem::gen(1), SlpItem::inv(0)}), 5);
  CHECK(c.circuit.size() == 3);
  CHECK(c.assignment == std::vector<Element>{1});
  CHECK(evaluate(c.circuit, z5, c.assignment) == 4);

  auto one = slp_to_circuit(StraightLineProgram({SlpItem::gen(3)}), 5);
  CHECK(one.circuit == CayleyCircuit({Gate::input()}));
  CHECK(one.assignment == std::vector<Element>{3});

  StraightLineProgram seven({SlpItem::gen(1), SlpItem::mul(0, 0), SlpItem::mul(1, 1),
                             SlpItem::mul(2, 1), SlpItem::mul(3, 0)});
  auto s = slp_to_circuit(seven, 8);
  CHECK(s.circuit.size() == 5);
  CHECK(evaluate(s.circuit, catalog::cyclic_group(8), s.assignment) == 7);
  CHECK_THROWS_AS(slp_to_circuit(StraightLineProgram{}, 5), Error);
}

TEST_CASE("compiled random programs agree with the program", "[slp][property]") {
  std::mt19937_64 rng(23);
  for (auto const& g : corpus::group_corpus()) {
    auto const n = g.group.order();
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<SlpItem> items{SlpItem::gen(static_cast<Element>(rng() % n))};
      std::size_t const    len = 1 + rng() % 12;
      while (items.size() < len) {
        auto const k = static_cast<std::uint32_t>(items.size());
        switch (rng() % 3) {
          case 0: items.push_back(SlpItem::gen(static_cast<Element>(rng() % n))); break;
          case 1: items.push_back(SlpItem::inv(static_cast<std::uint32_t>(rng() % k))); break;
          default:
            items.push_back(SlpItem::mul(static_cast<std::uint32_t>(rng() % k),
                                         static_cast<std::uint32_t>(rng() % k)));
        }
      }
      StraightLineProgram const p(items);
      auto const                c = slp_to_circuit(p, n);
      INFO(g.name);
      CHECK(evaluate(c.circuit, g.group, c.assignment) == evaluate_slp(g.group, p).back());
      auto const width = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
      CHECK(c.circuit.size() <= p.length() * std::max<std::size_t>(2 * width, 2));
      CHECK(parse_slp(format_slp(p)) == p);
    }
  }
}

TEST_CASE("slp files", "[slp]") {
  auto p = parse_slp("# seven\ngen 1\nmul 1 1\ninv 2\n");
  CHECK(p == StraightLineProgram({SlpItem::gen(1), SlpItem::mul(0, 0), SlpItem::inv(1)}));
  CHECK(format_slp(p) == "gen 1\nmul 1 1\ninv 2\n");
  CHECK_THROWS_AS(parse_slp("inv 1\n"), Error);
  CHECK_THROWS_AS(parse_slp("gen 1\nmul 1 3\n"), Error);
  CHECK_THROWS_AS(parse_slp("pow 1\n"), Error);
}
