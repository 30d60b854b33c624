#include "catch_amalgamated.hpp"

#include "csm/catalog.hpp"
#include "csm/corpus.hpp"
#include "csm/membership.hpp"
#include "csm/properties.hpp"
#include "csm/squaring_dp.hpp"

using namespace csm;

namespace {
  std::vector<Element> vec(std::initializer_list<Element> xs) {
    return xs;
  }
}  // namespace

TEST_CASE("base level", "[squaring_dp]") {
  auto z6   = catalog::cyclic_group(6);
  auto base = dp_base(z6, vec({2}), 2);
  CHECK(base.level() == 0);
  CHECK(base.states() == 36);
  CHECK(base.holds(vec({2, 2}), vec({4, 2})));
  CHECK(!base.holds(vec({2, 2}), vec({3, 2})));
  for (std::size_t z = 0; z < base.states(); ++z) {
    CHECK(base.holds(z, z));
  }
  CHECK(base.encode(vec({3, 5})) == 23);
  CHECK(base.decode(23) == vec({3, 5}));
  CHECK_THROWS_AS(dp_base(z6, vec({2}), 0), Error);
  CHECK_THROWS_AS(dp_base(z6, vec({2}), max_dp_width + 1), Error);
  CHECK_THROWS_AS(dp_base(z6, vec({6}), 1), Error);
}

TEST_CASE("one squaring step", "[squaring_dp]") {
  auto z6   = catalog::cyclic_group(6);
  auto base = dp_base(z6, vec({2}), 1);
  CHECK(!base.holds(vec({2}), vec({0})));
  auto next = dp_step(base);
  CHECK(next.level() == 1);
  CHECK(next.holds(vec({2}), vec({0})));
  CHECK(base.subset_of(next));
  CHECK(!next.holds(vec({2}), vec({3})));
}

TEST_CASE("dp_step is the relational square", "[squaring_dp][property]") {
  for (auto const& [name, s] : corpus::random_semigroups(25, 13, 6)) {
    auto const base = dp_base(s, vec({0}), 1);
    auto const next = dp_step(base);
    for (std::size_t z = 0; z < base.states(); ++z) {
      for (std::size_t y = 0; y < base.states(); ++y) {
        bool composed = false;
        for (std::size_t m = 0; m < base.states() && !composed; ++m) {
          composed = base.holds(z, m) && base.holds(m, y);
        }
        INFO(name);
        CHECK(next.holds(z, y) == composed);
      }
    }
  }
}

TEST_CASE("membership examples", "[squaring_dp]") {
  auto z6 = catalog::cyclic_group(6);
  CHECK(dp_membership(z6, vec({2}), 4, 2, 20).member);
  CHECK(!dp_membership(z6, vec({2}), 3, 2, 20).member);
  auto in_x = dp_membership(z6, vec({1, 5}), 5, 2, 1);
  CHECK(in_x.member);
  CHECK(in_x.levels == 1);
  CHECK(!dp_membership(z6, vec({}), 0, 2, 20).member);
  CHECK(dp_level_count(1) == 1);
  CHECK(dp_level_count(2) == 2);
  CHECK(dp_level_count(20) == 6);
  CHECK(dp_level_count(32) == 6);
  CHECK(dp_level_count(33) == 7);
  CHECK(default_size_bound(1) == 5);
  CHECK(default_size_bound(2) == 20);
  CHECK(default_size_bound(4) == 45);
  CHECK(default_size_bound(6) == 65);
}

TEST_CASE("agrees with closure on commutative semigroups", "[squaring_dp][property]") {
  auto all = corpus::standard_corpus(12);
  for (auto& r : corpus::random_semigroups(60, 77, 12)) {
    all.push_back(std::move(r));
  }
  for (auto const& [name, s] : all) {
    bool const comm = is_commutative(s);
    for (Element a = 0; a < s.order(); ++a) {
      for (Element b = a; b < s.order(); b += 3) {
        auto const xs    = vec({a, b});
        auto const sub   = closure(s, xs);
        auto const sweep = dp_sweep(s, xs, 2, default_size_bound(s.order()));
        for (Element t = 0; t < s.order(); ++t) {
          INFO(name << " X={" << a << "," << b << "} t=" << t);
          if (comm) {
            CHECK(sweep.member[t] == sub.contains(t));
          } else if (sweep.member[t]) {
            CHECK(sub.contains(t));
          }
        }
      }
    }
  }
}

TEST_CASE("dp_sweep matches dp_membership", "[squaring_dp]") {
  auto s     = catalog::truncated_addition(6);
  auto sweep = dp_sweep(s, vec({0, 2}), 2, 7);
  for (Element t = 0; t < s.order(); ++t) {
    CHECK(sweep.member[t] == dp_membership(s, vec({0, 2}), t, 2, 7).member);
  }
}

TEST_CASE("levels are monotone and settle", "[squaring_dp][property]") {
  for (auto const& [name, s] : corpus::standard_corpus(9)) {
    auto const levels = dp_levels(s, vec({0}), 2, 1000);
    REQUIRE(levels.size() == dp_level_count(1000));
    bool settled = false;
    for (std::size_t i = 1; i < levels.size(); ++i) {
      INFO(name << " level " << i);
      CHECK(levels[i - 1].subset_of(levels[i]));
      CHECK(levels[i - 1].count() <= levels[i].count());
      if (settled) {
        CHECK(levels[i - 1].same_relation(levels[i]));
      }
      settled = settled || levels[i - 1].same_relation(levels[i]);
    }
  }
}
