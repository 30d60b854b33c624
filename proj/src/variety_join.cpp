#include "csm/variety_join.hpp"

#include <algorithm>
#include <map>

#include "csm/catalog.hpp"
#include "csm/membership.hpp"
#include "csm/properties.hpp"

namespace csm {

std::size_t nilpotency_degree(Semigroup const& s) {
  auto const c = classify(s);
  if (!c.nilpotent) {
    throw Error(ErrorKind::not_nilpotent,
                "the semigroup has a non-zero idempotent or no zero");
  }
  Element const     zero = *c.zero;
  std::size_t const n    = s.order();
  // level holds S^e as a membership mask
  std::vector<bool> level(n, true);
  for (std::size_t e = 1; e <= n; ++e) {
    bool only_zero = true;
    for (Element x = 0; x < n; ++x) {
      if (level[x] && x != zero) {
        only_zero = false;
        break;
      }
    }
    if (only_zero) {
      return e;
    }
    std::vector<bool> next(n, false);
    for (Element a = 0; a < n; ++a) {
      if (level[a]) {
        for (Element b = 0; b < n; ++b) {
          next[s.product(a, b)] = true;
        }
      }
    }
    level = std::move(next);
  }
  throw Error(ErrorKind::not_nilpotent, "S^e never collapses to the zero");
}

namespace {
  std::vector<Word> shortlex_words(std::size_t letters, std::size_t max_len,
                                   std::size_t cap) {
    std::vector<Word> words{Word{}};
    std::size_t       begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t const end = words.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::uint32_t x = 0; x < letters; ++x) {
          if (words.size() == cap) {
            throw Error(ErrorKind::witness_too_large,
                        "more than " + std::to_string(cap) + " words");
          }
          Word w = words[i];
          w.push_back(x);
          words.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return words;
  }

  Element word_value(Semigroup const&            s,
                     std::vector<Element> const& letters,
                     Word const&                 w) {
    Element v = letters[w.front()];
    for (std::size_t i = 1; i < w.size(); ++i) {
      v = s.product(v, letters[w[i]]);
    }
    return v;
  }

  Element encode_member(Element g, std::size_t l, std::size_t e) {
    return static_cast<Element>(g * e + (l - 1));
  }
}  // namespace

JoinWitness build_join_witness(Semigroup const& s, JoinCaps caps) {
  if (s.order() < 2) {
    throw Error(ErrorKind::invalid_argument,
                "a witness needs at least one non-zero element");
  }
  std::size_t const e    = nilpotency_degree(s);
  Element const     zero = *find_zero(s);

  std::vector<Element> letters;
  for (Element x = 0; x < s.order(); ++x) {
    if (x != zero) {
      letters.push_back(x);
    }
  }
  auto words = shortlex_words(letters.size(), e - 1, caps.max_words);
  std::map<Word, std::uint32_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) {
    index.emplace(words[i], static_cast<std::uint32_t>(i));
  }

  std::size_t const        q = words.size();
  std::vector<Permutation> actions;
  for (std::uint32_t x = 0; x < letters.size(); ++x) {
    Permutation       pi(q);
    std::vector<bool> hit(q, false);
    std::vector<std::size_t> free_domain;
    for (std::size_t i = 0; i < q; ++i) {
      if (words[i].size() + 2 <= e) {
        Word w = words[i];
        w.push_back(x);
        pi[i]     = index.at(w);
        hit[pi[i]] = true;
      } else {
        free_domain.push_back(i);
      }
    }
    std::size_t next = 0;
    for (std::uint32_t j = 0; j < q; ++j) {
      if (!hit[j]) {
        pi[free_domain[next++]] = j;
      }
    }
    actions.push_back(std::move(pi));
  }

  PermutationGroup group(actions, caps.max_group);
  std::vector<std::pair<Element, std::size_t>> gens;
  std::vector<Element>                         gen_codes;
  for (auto const& pi : actions) {
    Element g = *group.index_of(pi);
    gens.emplace_back(g, 1);
    gen_codes.push_back(encode_member(g, 1, e));
  }
  auto const closure_u
      = generate(group.order() * e, gen_codes, [&](Element a, Element b) {
          Element const     g = group.product(a / e, b / e);
          std::size_t const l = std::min(a % e + b % e + 2, e);
          return encode_member(g, l, e);
        });

  JoinWitness w{e,
                zero,
                std::move(letters),
                std::move(words),
                std::move(actions),
                std::move(group),
                catalog::truncated_addition(e),
                {},
                std::move(gens),
                {}};
  for (Element code : closure_u.elements()) {
    Element const     g = code / e;
    std::size_t const l = code % e + 1;
    w.members.emplace_back(g, l);
    if (l == e) {
      w.phi.push_back(zero);
      continue;
    }
    // g is a product of l letter actions; it spells its word on the empty one
    Word const& spelled = w.words[w.group.element(g)[0]];
    if (spelled.size() != l) {
      throw Error(ErrorKind::invalid_argument,
                  "a member of U does not spell a word of its length");
    }
    w.phi.push_back(word_value(s, w.letters, spelled));
  }
  return w;
}

QuotientCheck verify_quotient(JoinWitness const& w, Semigroup const& s) {
  std::size_t const e = w.degree;
  std::size_t const q = w.words.size();

  // separation: the product of the actions along u sends the empty word to u
  for (std::size_t i = 1; i < q; ++i) {
    std::uint32_t point = 0;
    for (auto x : w.words[i]) {
      point = w.letter_actions[x][point];
    }
    if (point != i) {
      return {false,
              "the actions along word " + std::to_string(i)
                  + " do not spell it",
              std::nullopt};
    }
  }

  if (w.phi.size() != w.members.size()) {
    return {false, "phi is not total on U", std::nullopt};
  }
  std::vector<std::size_t> position(w.group.order() * e, Subsemigroup::npos);
  for (std::size_t i = 0; i < w.members.size(); ++i) {
    auto [g, l] = w.members[i];
    if (g >= w.group.order() || l == 0 || l > e) {
      return {false, "a member of U lies outside G x T", std::nullopt};
    }
    position[encode_member(g, l, e)] = i;
  }
  for (std::size_t i = 0; i < w.members.size(); ++i) {
    auto const [gu, lu] = w.members[i];
    for (std::size_t j = 0; j < w.members.size(); ++j) {
      auto const [gv, lv] = w.members[j];
      Element const     g = w.group.product(gu, gv);
      std::size_t const l = std::min(lu + lv, e);
      std::size_t const k = position[encode_member(g, l, e)];
      if (k == Subsemigroup::npos) {
        return {false, "U is not closed", std::pair{i, j}};
      }
      if (w.phi[k] != s.product(w.phi[i], w.phi[j])) {
        return {false,
                "phi(uv) != phi(u) phi(v) for members " + std::to_string(i)
                    + " and " + std::to_string(j),
                std::pair{i, j}};
      }
    }
  }

  std::vector<bool> image(s.order(), false);
  for (Element x : w.phi) {
    if (!s.contains(x)) {
      return {false, "phi leaves S", std::nullopt};
    }
    image[x] = true;
  }
  for (Element x = 0; x < s.order(); ++x) {
    if (!image[x]) {
      return {false,
              "element " + std::to_string(x) + " is not in the image of phi",
              std::nullopt};
    }
  }
  return {true, "ok", std::nullopt};
}

}  // namespace csm
