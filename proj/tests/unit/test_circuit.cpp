#include "catch_amalgamated.hpp"

#include <bit>
#include <random>

#include "csm/catalog.hpp"
#include "csm/circuit.hpp"
#include "csm/corpus.hpp"
#include "csm/membership.hpp"

using namespace csm;

namespace {
  CayleyCircuit random_circuit(std::mt19937_64& rng, std::size_t size) {
    std::vector<Gate> gates{Gate::input()};
    while (gates.size() < size) {
      auto const i = static_cast<std::uint32_t>(gates.size());
      if (rng() % 3 == 0) {
        gates.push_back(Gate::input());
      } else {
        gates.push_back(Gate::mul(static_cast<std::uint32_t>(rng() % i),
                                  static_cast<std::uint32_t>(rng() % i)));
      }
    }
    return CayleyCircuit(std::move(gates));
  }
}  // namespace

TEST_CASE("evaluate examples", "[circuit]") {
  auto z6 = catalog::cyclic_group(6);
  CayleyCircuit single({Gate::input()});
  std::vector<Element> five{5}, two{2};
  CHECK(evaluate(single, z6, five) == 5);
  CayleyCircuit sq({Gate::input(), Gate::mul(0, 0)});
  CHECK(evaluate(sq, z6, two) == 4);
  CHECK(evaluate(power_circuit(5), z6, two) == 4);
  CHECK_THROWS_AS(evaluate(sq, z6, std::vector<Element>{}), Error);
  CHECK_THROWS_AS(evaluate(sq, z6, std::vector<Element>{1, 2}), Error);
}

TEST_CASE("gate references must point backwards", "[circuit]") {
  CHECK_THROWS_AS(CayleyCircuit({Gate::mul(0, 0)}), Error);
  CHECK_THROWS_AS(CayleyCircuit({Gate::input(), Gate::mul(0, 1)}), Error);
  CHECK_THROWS_AS(CayleyCircuit(std::vector<Gate>{}), Error);
  CHECK_THROWS_AS(parse_circuit("in\nmul 1 2\n"), Error);
  CHECK_THROWS_AS(parse_circuit("in\nmul 0 1\n"), Error);
  CHECK_THROWS_AS(parse_circuit("in\nadd 1 1\n"), Error);
}

TEST_CASE("power circuit examples", "[circuit]") {
  CHECK(power_circuit(1).size() == 1);
  CHECK(power_circuit(4).size() == 3);
  auto m7 = catalog::multiplicative_mod(7);
  CHECK(evaluate(power_circuit(5), m7, std::vector<Element>{3}) == 5);
  CHECK_THROWS_AS(power_circuit(0), Error);
  CHECK(power_circuit(13).size() == 6);
}

TEST_CASE("power circuit size and value", "[circuit][property]") {
  for (std::uint64_t e = 2; e <= 5000; ++e) {
    auto const c = power_circuit(e);
    CHECK(c.size() <= 2 * static_cast<std::size_t>(std::bit_width(e - 1)));
    CHECK(c.size() == power_circuit_size(e));
    CHECK(c.input_count() == 1);
  }
  for (std::uint64_t e : {std::uint64_t{1} << 40, (std::uint64_t{1} << 40) - 1,
                          std::uint64_t{999'999'937}}) {
    CHECK(power_circuit(e).size() == power_circuit_size(e));
  }
  auto z97 = catalog::cyclic_group(97);
  for (std::uint64_t e = 1; e <= 300; ++e) {
    CHECK(evaluate(power_circuit(e), z97, std::vector<Element>{1}) == e % 97);
  }
}

TEST_CASE("chain product", "[circuit]") {
  auto z6 = catalog::cyclic_group(6);
  std::vector<CayleyCircuit> one{power_circuit(3)};
  CHECK(chain_product(one) == power_circuit(3));

  std::vector<CayleyCircuit> pair{power_circuit(1), power_circuit(1)};
  CHECK(evaluate(chain_product(pair), z6, std::vector<Element>{2, 3}) == 5);
  std::vector<CayleyCircuit> sq{power_circuit(2), power_circuit(3)};
  auto const c = chain_product(sq);
  CHECK(evaluate(c, z6, std::vector<Element>{1, 1}) == 5);
  CHECK(c.size() == power_circuit(2).size() + power_circuit(3).size() + 1);
  CHECK_THROWS_AS(chain_product(std::vector<CayleyCircuit>{}), Error);
}

TEST_CASE("chain product evaluates to the fold", "[circuit][property]") {
  std::mt19937_64 rng(5);
  auto            semigroups = corpus::random_semigroups(30, 99, 6);
  for (auto const& [name, s] : semigroups) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<CayleyCircuit> parts;
      std::vector<Element>       inputs;
      Element                    expected = 0;
      std::size_t const          count    = 1 + rng() % 4;
      std::size_t                total    = 0;
      for (std::size_t i = 0; i < count; ++i) {
        parts.push_back(random_circuit(rng, 1 + rng() % 6));
        std::vector<Element> in;
        for (std::size_t k = 0; k < parts.back().input_count(); ++k) {
          in.push_back(static_cast<Element>(rng() % s.order()));
        }
        Element v = evaluate(parts.back(), s, in);
        expected  = i == 0 ? v : s.product(expected, v);
        inputs.insert(inputs.end(), in.begin(), in.end());
        total += parts.back().size();
      }
      auto const c = chain_product(parts);
      INFO(name);
      CHECK(evaluate(c, s, inputs) == expected);
      CHECK(c.size() == total + count - 1);
    }
  }
}

TEST_CASE("ordering width", "[circuit]") {
  CHECK(ordering_width(CayleyCircuit({Gate::input()})) == 0);
  CHECK(ordering_width(power_circuit(8)) == 1);
  // a lone product gate feeds nothing
  CHECK(ordering_width(power_circuit(2)) == 0);
  for (std::uint64_t e = 3; e <= 2000; ++e) {
    CHECK(ordering_width(power_circuit(e)) == 1);
  }
  // two squaring chains kept alive until the end
  CayleyCircuit two({Gate::input(), Gate::mul(0, 0), Gate::input(),
                     Gate::mul(2, 2), Gate::mul(1, 3)});
  CHECK(ordering_width(two) == 2);
}

TEST_CASE("circuit enumeration counts", "[circuit]") {
  std::vector<std::vector<Gate>> seen;
  auto count = enumerate_circuits(2, [&](std::span<Gate const> g) {
    seen.emplace_back(g.begin(), g.end());
    return true;
  });
  REQUIRE(count == 3);
  CHECK(seen[0] == std::vector<Gate>{Gate::input()});
  CHECK(seen[1] == std::vector<Gate>{Gate::input(), Gate::input()});
  CHECK(seen[2] == std::vector<Gate>{Gate::input(), Gate::mul(0, 0)});
  CHECK(enumerate_circuits(1, [](auto) { return true; }) == 1);

  for (std::size_t m = 1; m <= 5; ++m) {
    // independent recount of the closed formula
    std::uint64_t total = 0, product = 1;
    for (std::size_t size = 1; size <= m; ++size) {
      product *= 1 + (size - 1) * (size - 1);
      total += product;
    }
    CHECK(circuit_count(m) == total);
    std::uint64_t visited = 0;
    CHECK(enumerate_circuits(m, [&](auto) {
            ++visited;
            return true;
          })
          == total);
    CHECK(visited == total);
  }
  std::uint64_t stopped = 0;
  enumerate_circuits(4, [&](auto) { return ++stopped < 7; });
  CHECK(stopped == 7);
}

TEST_CASE("circuit files round trip", "[circuit]") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 200; ++rep) {
    auto const c = random_circuit(rng, 1 + rng() % 12);
    CHECK(parse_circuit(format_circuit(c)) == c);
  }
  CHECK(format_circuit(power_circuit(3)) == "in\nmul 1 1\nmul 2 1\n");
  CHECK(parse_circuit("# x^2\nin\nmul 1 1 # square\n") == power_circuit(2));
}

TEST_CASE("derivation circuits reproduce the target", "[circuit]") {
  for (auto const& [name, s] : corpus::random_semigroups(30, 4, 12)) {
    std::vector<Element> xs{0, static_cast<Element>(s.order() - 1)};
    auto const           sub = closure(s, xs);
    for (Element x : sub.elements()) {
      auto const c = derivation_circuit(sub.trace(x));
      CHECK(evaluate(c.circuit, s, c.assignment) == x);
      CHECK(c.circuit.size() == sub.trace(x).size());
    }
  }
}
