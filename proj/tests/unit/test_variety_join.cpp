#include "catch_amalgamated.hpp"

#include "csm/catalog.hpp"
#include "csm/corpus.hpp"
#include "csm/properties.hpp"
#include "csm/variety_join.hpp"

using namespace csm;

TEST_CASE("nilpotency degree", "[variety_join]") {
  CHECK(nilpotency_degree(catalog::null_semigroup(2)) == 2);
  CHECK(nilpotency_degree(catalog::trivial()) == 1);
  CHECK(nilpotency_degree(catalog::truncated_addition(2)) == 2);
  CHECK(nilpotency_degree(catalog::truncated_addition(5)) == 5);
  CHECK_THROWS_AS(nilpotency_degree(catalog::cyclic_group(2)), Error);
  try {
    nilpotency_degree(catalog::min_semilattice(3));
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_nilpotent);
  }
}

TEST_CASE("degree is minimal with S^e = 0", "[variety_join][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& s : corpus::nilpotent_tables(n)) {
      auto const e = nilpotency_degree(s);
      CHECK(e <= n);
      // every product of e elements is the zero, some product of e-1 is not
      std::vector<bool> level(n, true);
      for (std::size_t k = 1; k < e; ++k) {
        std::vector<bool> next(n, false);
        for (Element a = 0; a < n; ++a)
          if (level[a])
            for (Element b = 0; b < n; ++b)
              next[s.product(a, b)] = true;
        level = next;
      }
      for (Element x = 1; x < n; ++x) {
        CHECK(!level[x]);
      }
    }
  }
}

TEST_CASE("witness for the null semigroup", "[variety_join]") {
  auto const s = catalog::null_semigroup(2);
  auto const w = build_join_witness(s);
  CHECK(w.degree == 2);
  CHECK(w.letters == std::vector<Element>{1});
  CHECK(w.words == std::vector<Word>{{}, {0}});
  CHECK(w.letter_actions == std::vector<Permutation>{{1, 0}});
  CHECK(w.group.order() == 2);
  CHECK(w.counter == catalog::truncated_addition(2));
  REQUIRE(w.members.size() == 3);
  Element const swap = *w.group.index_of({1, 0});
  Element const id   = *w.group.index_of({0, 1});
  std::set<std::pair<Element, std::size_t>> members(w.members.begin(), w.members.end());
  CHECK(members == std::set<std::pair<Element, std::size_t>>{{swap, 1}, {id, 2}, {swap, 2}});
  for (std::size_t i = 0; i < w.members.size(); ++i) {
    CHECK(w.phi[i] == (w.members[i].second == 1 ? 1u : 0u));
  }
  auto const check = verify_quotient(w, s);
  CHECK(check.ok);
  CHECK(group_structure(w.group.cayley_table()));
}

TEST_CASE("witness for truncated addition", "[variety_join]") {
  auto const s = catalog::truncated_addition(2);
  auto const w = build_join_witness(s);
  CHECK(w.degree == 2);
  CHECK(w.zero == 1);
  CHECK(w.group.order() == 2);
  CHECK(w.members.size() == 3);
  CHECK(verify_quotient(w, s).ok);

  auto const t3 = catalog::truncated_addition(3);
  auto const w3 = build_join_witness(t3);
  CHECK(w3.words.size() == 7);
  CHECK(verify_quotient(w3, t3).ok);
}

TEST_CASE("corrupted witnesses are rejected", "[variety_join]") {
  auto const s = catalog::null_semigroup(3);
  auto       w = build_join_witness(s);
  REQUIRE(verify_quotient(w, s).ok);
  for (std::size_t i = 0; i < w.phi.size(); ++i) {
    auto bad   = w;
    bad.phi[i] = bad.phi[i] == 1 ? 2 : 1;
    auto const check = verify_quotient(bad, s);
    CHECK(!check.ok);
    if (bad.members[i].second == 1) {
      // a generator image is only caught by the morphism check or onto-ness
      CHECK(!check.message.empty());
    }
  }
  auto scrambled = w;
  std::swap(scrambled.letter_actions[0], scrambled.letter_actions[1]);
  CHECK(!verify_quotient(scrambled, s).ok);
}

TEST_CASE("preconditions and caps", "[variety_join]") {
  CHECK_THROWS_AS(build_join_witness(catalog::trivial()), Error);
  CHECK_THROWS_AS(build_join_witness(catalog::cyclic_group(3)), Error);
  try {
    build_join_witness(catalog::truncated_addition(4));
    FAIL("no cap error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::witness_too_large);
  }
  JoinCaps tiny{10, 1};
  CHECK_THROWS_AS(build_join_witness(catalog::null_semigroup(2), tiny), Error);
  // 40 words fit the wider word cap, the group still does not
  try {
    build_join_witness(catalog::truncated_addition(4), JoinCaps{100, 20000});
    FAIL("no cap error");
  } catch (Error const& e) {
    CHECK(std::string(e.what()).find("group") != std::string::npos);
  }
}

TEST_CASE("every small nilpotent semigroup within caps", "[variety_join][property]") {
  std::size_t verified = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto const& s : corpus::nilpotent_tables(n)) {
      try {
        auto const w = build_join_witness(s);
        CHECK(verify_quotient(w, s).ok);
        for (auto [g, l] : w.members) {
          CHECK(g < w.group.order());
          CHECK(l >= 1);
          CHECK(l <= w.degree);
        }
        ++verified;
      } catch (Error const& e) {
        CHECK(e.kind() == ErrorKind::witness_too_large);
      }
    }
  }
  CHECK(verified >= 3);
}
