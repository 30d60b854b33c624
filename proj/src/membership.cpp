#include "csm/membership.hpp"

#include <algorithm>
#include <sstream>

#include "text_io.hpp"

namespace csm {

MembershipInstance make_instance(Semigroup            semigroup,
                                 std::vector<Element> generators,
                                 Element              target) {
  for (Element x : generators) {
    if (!semigroup.contains(x)) {
      throw Error(ErrorKind::entry_out_of_range,
                  "generator " + std::to_string(x) + " is not an element");
    }
  }
  if (!semigroup.contains(target)) {
    throw Error(ErrorKind::entry_out_of_range,
                "target " + std::to_string(target) + " is not an element");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  return MembershipInstance{
      std::move(semigroup), std::move(generators), target};
}

MembershipInstance parse_instance(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  // The table ends at the line starting with "X".
  auto x_line = std::find_if(lines.begin(), lines.end(), [](auto const& l) {
    return l.tokens.front() == "X";
  });
  if (x_line == lines.end()) {
    throw Error(ErrorKind::malformed_input, "instance has no 'X' line");
  }
  if (std::next(x_line) == lines.end()) {
    throw Error(ErrorKind::malformed_input, "instance has no 't' line");
  }
  auto const& t_line = *std::next(x_line);
  if (t_line.tokens.size() != 2 || t_line.tokens[0] != "t") {
    detail::malformed(t_line.number, "expected 't <index>'");
  }
  if (std::next(x_line, 2) != lines.end()) {
    detail::malformed(std::next(x_line, 2)->number,
                      "unexpected content after the 't' line");
  }
  std::ostringstream table_text;
  for (auto it = lines.begin(); it != x_line; ++it) {
    for (auto const& token : it->tokens) {
      table_text << token << ' ';
    }
    table_text << '\n';
  }
  Semigroup            s = parse_semigroup(table_text.str());
  std::vector<Element> gens;
  for (std::size_t i = 1; i < x_line->tokens.size(); ++i) {
    auto v = detail::parse_integer(x_line->tokens[i], "generator");
    if (v < 0 || static_cast<std::uint64_t>(v) >= s.order()) {
      throw Error(ErrorKind::entry_out_of_range,
                  "generator " + x_line->tokens[i] + " is not an element");
    }
    gens.push_back(static_cast<Element>(v));
  }
  auto t = detail::parse_integer(t_line.tokens[1], "target");
  if (t < 0 || static_cast<std::uint64_t>(t) >= s.order()) {
    throw Error(ErrorKind::entry_out_of_range,
                "target " + t_line.tokens[1] + " is not an element");
  }
  return make_instance(std::move(s), std::move(gens), static_cast<Element>(t));
}

std::string format_instance(MembershipInstance const& inst) {
  std::ostringstream os;
  os << format_semigroup(inst.semigroup) << "X";
  for (Element x : inst.generators) {
    os << ' ' << x;
  }
  os << "\nt " << inst.target << '\n';
  return os.str();
}

Element replay(Semigroup const& s, std::span<DerivationStep const> trace) {
  if (trace.empty()) {
    throw Error(ErrorKind::invalid_reference, "empty derivation trace");
  }
  std::vector<bool> seen(s.order(), false);
  for (auto const& step : trace) {
    Element value;
    if (auto const* gen = std::get_if<FromGenerator>(&step.how)) {
      value = gen->generator;
    } else {
      auto const& prod = std::get<FromProduct>(step.how);
      if (!s.contains(prod.left) || !s.contains(prod.right)
          || !seen[prod.left] || !seen[prod.right]) {
        throw Error(ErrorKind::invalid_reference,
                    "product step refers to a value not derived earlier");
      }
      value = s.product(prod.left, prod.right);
    }
    if (!s.contains(value) || value != step.value) {
      throw Error(ErrorKind::invalid_reference,
                  "step does not reproduce its recorded value "
                      + std::to_string(step.value));
    }
    seen[value] = true;
  }
  return trace.back().value;
}

std::vector<Element> Subsemigroup::sorted_elements() const {
  std::vector<Element> out(elements_.begin(), elements_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Subsemigroup::add(Element x, Derivation how) {
  if (position_[x] != npos) {
    return false;
  }
  position_[x]   = elements_.size();
  derivation_[x] = how;
  elements_.push_back(x);
  return true;
}

std::vector<DerivationStep> Subsemigroup::trace(Element x) const {
  std::vector<bool>    needed(position_.size(), false);
  std::vector<Element> stack{x};
  needed[x] = true;
  while (!stack.empty()) {
    Element y = stack.back();
    stack.pop_back();
    if (auto const* p = std::get_if<FromProduct>(&derivation_[y])) {
      for (Element z : {p->left, p->right}) {
        if (!needed[z]) {
          needed[z] = true;
          stack.push_back(z);
        }
      }
    }
  }
  std::vector<DerivationStep> out;
  for (Element y : elements_) {
    if (needed[y]) {
      out.push_back({y, derivation_[y]});
    }
  }
  return out;
}

Subsemigroup closure(Semigroup const& s, std::span<Element const> generators) {
  return generate(s.order(), generators, [&s](Element a, Element b) {
    return s.product(a, b);
  });
}

MembershipResult is_member(MembershipInstance const& inst) {
  auto sub = closure(inst.semigroup, inst.generators);
  if (!sub.contains(inst.target)) {
    return {false, std::nullopt};
  }
  return {true, sub.trace(inst.target)};
}

}  // namespace csm
