#include "csm/properties.hpp"

#include <algorithm>

namespace csm {

std::optional<Element> find_identity(Semigroup const& s) {
  for (Element e = 0; e < s.order(); ++e) {
    bool ok = true;
    for (Element x = 0; x < s.order() && ok; ++x) {
      ok = s.product(e, x) == x && s.product(x, e) == x;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

std::optional<Element> find_zero(Semigroup const& s) {
  for (Element z = 0; z < s.order(); ++z) {
    bool ok = true;
    for (Element x = 0; x < s.order() && ok; ++x) {
      ok = s.product(z, x) == z && s.product(x, z) == z;
    }
    if (ok) {
      return z;
    }
  }
  return std::nullopt;
}

std::optional<GroupStructure> group_structure(Semigroup const& s) {
  auto identity = find_identity(s);
  if (!identity) {
    return std::nullopt;
  }
  GroupStructure g{*identity, std::vector<Element>(s.order())};
  for (Element x = 0; x < s.order(); ++x) {
    bool found = false;
    for (Element y = 0; y < s.order() && !found; ++y) {
      if (s.product(x, y) == *identity && s.product(y, x) == *identity) {
        g.inverse[x] = y;
        found        = true;
      }
    }
    if (!found) {
      return std::nullopt;
    }
  }
  return g;
}

GroupStructure require_group(Semigroup const& s) {
  auto g = group_structure(s);
  if (!g) {
    throw Error(ErrorKind::not_a_group, "the semigroup is not a group");
  }
  return std::move(*g);
}

bool is_commutative(Semigroup const& s) {
  for (Element a = 0; a < s.order(); ++a) {
    for (Element b = a + 1; b < s.order(); ++b) {
      if (s.product(a, b) != s.product(b, a)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Element> idempotents(Semigroup const& s) {
  std::vector<Element> out;
  for (Element x = 0; x < s.order(); ++x) {
    if (s.product(x, x) == x) {
      out.push_back(x);
    }
  }
  return out;
}

bool is_zero_simple(Semigroup const& s, Element zero) {
  std::size_t const n = s.order();
  std::vector<bool> left(n), both(n);
  for (Element x = 0; x < n; ++x) {
    if (x == zero) {
      continue;
    }
    std::fill(left.begin(), left.end(), false);
    std::fill(both.begin(), both.end(), false);
    for (Element a = 0; a < n; ++a) {
      left[s.product(a, x)] = true;
    }
    std::size_t covered = 0;
    for (Element u = 0; u < n && covered < n; ++u) {
      if (!left[u]) {
        continue;
      }
      for (Element b = 0; b < n; ++b) {
        Element v = s.product(u, b);
        if (!both[v]) {
          both[v] = true;
          ++covered;
        }
      }
    }
    if (covered != n) {
      return false;
    }
  }
  return true;
}

Classification classify(Semigroup const& s) {
  Classification c;
  c.commutative = is_commutative(s);
  c.group       = group_structure(s).has_value();
  c.zero        = find_zero(s);
  c.idempotents = idempotents(s);
  c.nilpotent   = c.zero && c.idempotents.size() == 1;
  c.zero_simple = c.zero && is_zero_simple(s, *c.zero);
  return c;
}

}  // namespace csm
