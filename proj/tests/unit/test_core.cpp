#include "catch_amalgamated.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "csm/catalog.hpp"
#include "csm/corpus.hpp"
#include "csm/membership.hpp"
#include "csm/properties.hpp"
#include "csm/semigroup.hpp"

using namespace csm;

namespace {
  // Independent fixpoint oracle: keep adding all pairwise products.
  std::set<Element> naive_closure(Semigroup const& s, std::vector<Element> xs) {
    std::set<Element> cur(xs.begin(), xs.end());
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<Element> now(cur.begin(), cur.end());
      for (Element a : now) {
        for (Element b : now) {
          grew = cur.insert(s.product(a, b)).second || grew;
        }
      }
    }
    return cur;
  }

  bool brute_associative(std::size_t n, std::vector<Element> const& t) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]])
            return false;
    return true;
  }
}  // namespace

TEST_CASE("parse_semigroup reads small tables", "[semigroup]") {
  auto z3 = parse_semigroup("3\n0 1 2\n1 2 0\n2 0 1");
  REQUIRE(z3 == catalog::cyclic_group(3));
  auto l2 = parse_semigroup("2\n0 0\n1 1\n");
  REQUIRE(l2 == catalog::left_zero(2));
  REQUIRE(l2.product(1, 0) == 1);
  auto commented = parse_semigroup("# comment\r\n2\r\n0 0 # row 0\r\n\r\n1 1\r\n");
  REQUIRE(commented == l2);
}

TEST_CASE("parse_semigroup rejects bad input", "[semigroup]") {
  auto kind_of = [](std::string const& text) {
    try {
      parse_semigroup(text);
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error for " << text);
    return ErrorKind::invalid_argument;
  };
  CHECK(kind_of("") == ErrorKind::malformed_input);
  CHECK(kind_of("2\n0 0\n") == ErrorKind::malformed_input);
  CHECK(kind_of("2\n0 0 0\n0 0\n") == ErrorKind::malformed_input);
  CHECK(kind_of("2\n0 x\n0 0\n") == ErrorKind::malformed_input);
  CHECK(kind_of("0\n") == ErrorKind::malformed_input);
  CHECK(kind_of("2\n0 2\n0 0\n") == ErrorKind::entry_out_of_range);
  CHECK(kind_of("2\n0 -1\n0 0\n") != ErrorKind::not_associative);
}

TEST_CASE("a non-associative 2x2 table found by brute force", "[semigroup]") {
  // Scan all 16 binary tables; the first non-associative one is pinned.
  std::optional<std::vector<Element>> first;
  std::size_t                         associative = 0;
  for (unsigned code = 0; code < 16; ++code) {
    std::vector<Element> t{(code >> 3) & 1u, (code >> 2) & 1u, (code >> 1) & 1u,
                           code & 1u};
    if (brute_associative(2, t)) {
      ++associative;
      REQUIRE_NOTHROW(Semigroup(2, t));
    } else {
      REQUIRE_THROWS_AS(Semigroup(2, t), NotAssociative);
      if (!first) {
        first = t;
      }
    }
  }
  REQUIRE(associative == 8);
  REQUIRE(first == std::vector<Element>{0, 0, 1, 0});

  try {
    parse_semigroup("2\n0 0\n1 0\n");
    FAIL("table accepted");
  } catch (NotAssociative const& e) {
    auto [a, b, c] = e.triple();
    auto t         = *first;
    CHECK(t[t[a * 2 + b] * 2 + c] != t[a * 2 + t[b * 2 + c]]);
    CHECK(e.kind() == ErrorKind::not_associative);
  }
}

TEST_CASE("associative table counts match a direct count", "[semigroup]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t cells = n * n, total = 1, count = 0;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= n;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Element> t(cells);
      std::size_t          c = code;
      for (std::size_t i = cells; i-- > 0;) {
        t[i] = static_cast<Element>(c % n);
        c /= n;
      }
      count += brute_associative(n, t) ? 1 : 0;
    }
    CHECK(corpus::associative_tables(n).size() == count);
  }
}

TEST_CASE("format and parse round trip", "[semigroup]") {
  for (auto const& [name, s] : corpus::standard_corpus(12)) {
    INFO(name);
    CHECK(parse_semigroup(format_semigroup(s)) == s);
  }
}

TEST_CASE("direct products", "[semigroup]") {
  auto z2z3 = direct_product(catalog::cyclic_group(2), catalog::cyclic_group(3));
  REQUIRE(z2z3.order() == 6);
  // (1, 1) generates a cyclic group of order 6
  REQUIRE(closure(z2z3, std::vector<Element>{1 * 3 + 1}).size() == 6);
  REQUIRE(is_commutative(z2z3));
  REQUIRE(group_structure(z2z3).has_value());

  auto ln = direct_product(catalog::left_zero(2), catalog::null_semigroup(2));
  REQUIRE(ln.order() == 4);
  REQUIRE(!find_non_associative_triple(4, ln.table()));

  auto s  = catalog::truncated_addition(3);
  auto st = direct_product(s, catalog::trivial());
  REQUIRE(st == s);
}

TEST_CASE("index and period", "[semigroup]") {
  auto z6 = catalog::cyclic_group(6);
  CHECK(element_index_period(z6, 2).index == 1);
  CHECK(element_index_period(z6, 2).period == 3);
  auto n2 = catalog::null_semigroup(2);
  CHECK(element_index_period(n2, 1).index == 2);
  CHECK(element_index_period(n2, 1).period == 1);
  auto min3 = catalog::min_semilattice(3);
  for (Element x = 0; x < 3; ++x) {
    CHECK(element_index_period(min3, x).index == 1);
    CHECK(element_index_period(min3, x).period == 1);
  }
}

TEST_CASE("index and period agree with iterated powers", "[semigroup][property]") {
  for (auto const& [name, s] : corpus::standard_corpus(12)) {
    for (Element x = 0; x < s.order(); ++x) {
      auto const ip = element_index_period(s, x);
      std::vector<Element> powers{x};
      for (std::size_t i = 2; i <= 3 * s.order() + 2; ++i) {
        powers.push_back(s.product(powers.back(), x));
      }
      for (std::uint64_t i = 1; i <= powers.size(); ++i) {
        INFO(name << " x=" << x << " i=" << i);
        CHECK(power(s, x, i) == powers[i - 1]);
        auto const j = normalize_exponent(ip, i);
        CHECK(j >= 1);
        CHECK(powers[j - 1] == powers[i - 1]);
      }
      // index and period are minimal
      CHECK(powers[ip.index - 1] == powers[ip.index + ip.period - 1]);
      if (ip.index > 1) {
        CHECK(powers[ip.index - 2] != powers[ip.index + ip.period - 2]);
      }
    }
  }
  REQUIRE_THROWS_AS(power(catalog::cyclic_group(3), 1, 0), Error);
}

TEST_CASE("closure examples", "[membership]") {
  auto z6  = catalog::cyclic_group(6);
  auto sub = closure(z6, std::vector<Element>{2});
  CHECK(sub.sorted_elements() == std::vector<Element>{0, 2, 4});
  CHECK(closure(z6, std::vector<Element>{}).empty());
  CHECK(closure(catalog::cyclic_group(3), std::vector<Element>{1}).size() == 3);

  CHECK(is_member(make_instance(z6, {2}, 4)).member);
  CHECK(!is_member(make_instance(z6, {2}, 3)).member);
  CHECK(!is_member(make_instance(z6, {2}, 3)).witness);
  CHECK(is_member(make_instance(z6, {5}, 5)).witness->size() == 1);
  for (Element t = 0; t < 6; ++t) {
    CHECK(!is_member(make_instance(z6, {}, t)).member);
  }
  REQUIRE_THROWS_AS(make_instance(z6, {6}, 0), Error);
  REQUIRE_THROWS_AS(make_instance(z6, {1}, 9), Error);
}

TEST_CASE("instance files round trip", "[membership]") {
  auto inst = parse_instance("3\n0 1 2\n1 2 0\n2 0 1\nX 2 1 2\nt 0\n");
  CHECK(inst.generators == std::vector<Element>{1, 2});
  CHECK(inst.target == 0);
  auto again = parse_instance(format_instance(inst));
  CHECK(again.semigroup == inst.semigroup);
  CHECK(again.generators == inst.generators);
  CHECK(again.target == inst.target);
  CHECK_THROWS_AS(parse_instance("1\n0\nt 0\n"), Error);
  CHECK_THROWS_AS(parse_instance("1\n0\nX 0\n"), Error);
  CHECK_THROWS_AS(parse_instance("1\n0\nX 0\nt 1\n"), Error);
}

TEST_CASE("closure agrees with a naive fixpoint", "[membership][property]") {
  auto semigroups = corpus::random_semigroups(60, 7, 12);
  std::mt19937_64 rng(11);
  for (auto const& [name, s] : semigroups) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Element> xs;
      for (Element x = 0; x < s.order(); ++x) {
        if (rng() % 4 == 0) {
          xs.push_back(x);
        }
      }
      auto const sub = closure(s, xs);
      auto const ref = naive_closure(s, xs);
      INFO(name);
      REQUIRE(std::set<Element>(sub.elements().begin(), sub.elements().end()) == ref);
      // fixpoint, containment and monotonicity
      auto const again = closure(s, sub.sorted_elements());
      CHECK(again.size() == sub.size());
      for (Element x : xs) {
        CHECK(sub.contains(x));
      }
      auto more = xs;
      more.push_back(static_cast<Element>(rng() % s.order()));
      auto const bigger = closure(s, more);
      for (Element x : sub.elements()) {
        CHECK(bigger.contains(x));
      }
      // every trace replays to its element
      for (Element x : sub.elements()) {
        auto const trace = sub.trace(x);
        CHECK(trace.back().value == x);
        CHECK(replay(s, trace) == x);
      }
    }
  }
}

TEST_CASE("replay rejects broken traces", "[membership]") {
  auto z6 = catalog::cyclic_group(6);
  std::vector<DerivationStep> bad{{2, FromGenerator{2}}, {4, FromProduct{2, 3}}};
  CHECK_THROWS_AS(replay(z6, bad), Error);
  std::vector<DerivationStep> wrong{{2, FromGenerator{2}}, {5, FromProduct{2, 2}}};
  CHECK_THROWS_AS(replay(z6, wrong), Error);
  std::vector<DerivationStep> good{{2, FromGenerator{2}}, {4, FromProduct{2, 2}}};
  CHECK(replay(z6, good) == 4);
}

TEST_CASE("classify examples", "[properties]") {
  auto c = classify(catalog::cyclic_group(3));
  CHECK(c.commutative);
  CHECK(c.group);
  CHECK(!c.zero);
  CHECK(!c.nilpotent);

  auto n = classify(catalog::null_semigroup(2));
  CHECK(n.nilpotent);
  CHECK(n.zero == Element{0});
  CHECK(n.idempotents == std::vector<Element>{0});

  auto l = classify(catalog::left_zero(2));
  CHECK(!l.commutative);
  CHECK(!l.group);
  CHECK(l.idempotents.size() == 2);

  CHECK(classify(catalog::symmetric_group(3)).group);
  CHECK(!classify(catalog::symmetric_group(3)).commutative);
  CHECK(classify(catalog::trivial()).group);
  CHECK(classify(catalog::truncated_addition(4)).nilpotent);
  CHECK(!classify(catalog::multiplicative_mod(6)).nilpotent);
  CHECK(!group_structure(catalog::multiplicative_mod(6)));
  CHECK_THROWS_AS(require_group(catalog::left_zero(2)), Error);
}

TEST_CASE("classify is consistent", "[properties][property]") {
  auto all = corpus::standard_corpus(24);
  for (auto& r : corpus::random_semigroups(40, 3, 12)) {
    all.push_back(std::move(r));
  }
  for (auto const& [name, s] : all) {
    INFO(name);
    auto const c = classify(s);
    if (c.group && s.order() > 1) {
      CHECK(!c.nilpotent);
    }
    if (c.zero_simple || c.nilpotent) {
      CHECK(c.zero);
    }
    if (auto g = group_structure(s)) {
      for (Element x = 0; x < s.order(); ++x) {
        CHECK(s.product(x, g->inverse[x]) == g->identity);
        CHECK(s.product(g->inverse[x], x) == g->identity);
      }
    }
    for (Element e : c.idempotents) {
      CHECK(s.product(e, e) == e);
    }
  }
}

TEST_CASE("catalog groups have the expected orders", "[catalog]") {
  CHECK(catalog::symmetric_group(3).order() == 6);
  CHECK(catalog::symmetric_group(4).order() == 24);
  CHECK(catalog::alternating_group(4).order() == 12);
  CHECK(catalog::dihedral_group(4).order() == 8);
  CHECK(catalog::quaternion_group().order() == 8);
  // Q8 has a single involution, D4 has five
  auto involutions = [](Semigroup const& g) {
    auto const id = *find_identity(g);
    int        k  = 0;
    for (Element x = 0; x < g.order(); ++x) {
      k += (x != id && g.product(x, x) == id) ? 1 : 0;
    }
    return k;
  };
  CHECK(involutions(catalog::quaternion_group()) == 1);
  CHECK(involutions(catalog::dihedral_group(4)) == 5);
  for (auto const& g : {catalog::symmetric_group(4), catalog::alternating_group(4),
                        catalog::dihedral_group(5), catalog::quaternion_group()}) {
    CHECK(group_structure(g));
    CHECK(find_identity(g) == Element{0});
  }
}
