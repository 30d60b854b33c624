#include "csm/boolean_sim.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "text_io.hpp"

namespace csm {

std::size_t element_bits(std::size_t order) {
  if (order <= 2) {
    return 1;
  }
  return static_cast<std::size_t>(std::bit_width(order - 1));
}

std::vector<bool> encode_element(Element x, std::size_t order) {
  std::size_t const b = element_bits(order);
  std::vector<bool> out(b);
  for (std::size_t q = 0; q < b; ++q) {
    out[q] = (x >> (b - 1 - q)) & 1;
  }
  return out;
}

Element decode_element(std::vector<bool> const& bits,
                       std::size_t              offset,
                       std::size_t              width) {
  Element x = 0;
  for (std::size_t q = 0; q < width; ++q) {
    x = (x << 1) | (bits.at(offset + q) ? 1 : 0);
  }
  return x;
}

std::vector<bool> encode_input(Semigroup const&         s,
                               std::span<Element const> inputs) {
  std::size_t const n = s.order();
  std::vector<bool> out;
  out.reserve((n * n + inputs.size()) * element_bits(n));
  auto append = [&](Element x) {
    auto bits = encode_element(x, n);
    out.insert(out.end(), bits.begin(), bits.end());
  };
  for (Element v : s.table()) {
    append(v);
  }
  for (Element x : inputs) {
    if (!s.contains(x)) {
      throw Error(ErrorKind::entry_out_of_range,
                  "input " + std::to_string(x) + " is not an element");
    }
    append(x);
  }
  return out;
}

BooleanNetlist compile_to_boolean(CayleyCircuit const& c,
                                  std::size_t          order,
                                  std::uint64_t        budget) {
  if (order == 0) {
    throw Error(ErrorKind::invalid_argument, "order must be >= 1");
  }
  std::size_t const m = c.size();
  std::uint64_t     vectors = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (vectors > budget / order) {
      throw Error(ErrorKind::budget_exceeded,
                  std::to_string(order) + "^" + std::to_string(m)
                      + " AND gates exceed the budget of "
                      + std::to_string(budget));
    }
    vectors *= order;
  }
  if (vectors > budget) {
    throw Error(ErrorKind::budget_exceeded, "netlist exceeds the budget");
  }

  std::size_t const b = element_bits(order);
  BooleanNetlist    net;
  net.order          = order;
  net.circuit_size   = m;
  net.circuit_inputs = c.input_count();
  net.input_bits     = (order * order + c.input_count()) * b;
  net.and_gates.reserve(vectors);
  net.or_gates.assign(b, {});

  // Bit offset of the value checked for each gate, given the guesses.
  std::vector<std::size_t> input_offset(m, 0);
  {
    std::size_t next = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (c.gates()[i].kind == GateKind::input) {
        input_offset[i] = (order * order + next++) * b;
      }
    }
  }

  std::vector<Element> y(m, 0);
  for (std::uint64_t v = 0; v < vectors; ++v) {
    std::vector<Literal> literals;
    literals.reserve(m * b);
    for (std::size_t i = 0; i < m; ++i) {
      auto const& g = c.gates()[i];
      std::size_t offset
          = g.kind == GateKind::input
                ? input_offset[i]
                : (static_cast<std::size_t>(y[g.left]) * order + y[g.right]) * b;
      for (std::size_t q = 0; q < b; ++q) {
        literals.push_back({static_cast<std::uint32_t>(offset + q),
                            static_cast<bool>((y[i] >> (b - 1 - q)) & 1)});
      }
    }
    std::sort(literals.begin(), literals.end());
    literals.erase(std::unique(literals.begin(), literals.end()),
                   literals.end());
    auto const index = static_cast<std::uint32_t>(net.and_gates.size());
    net.and_gates.push_back(std::move(literals));
    for (std::size_t q = 0; q < b; ++q) {
      if ((y[m - 1] >> (b - 1 - q)) & 1) {
        net.or_gates[q].push_back(index);
      }
    }
    // next guess vector, y_1 most significant
    for (std::size_t i = m; i-- > 0;) {
      if (++y[i] < order) {
        break;
      }
      y[i] = 0;
    }
  }
  return net;
}

namespace {
  std::vector<bool> and_values(BooleanNetlist const&    net,
                               std::vector<bool> const& bits) {
    if (bits.size() != net.input_bits) {
      throw Error(ErrorKind::arity_mismatch,
                  "netlist has " + std::to_string(net.input_bits)
                      + " input bits, got " + std::to_string(bits.size()));
    }
    std::vector<bool> out(net.and_gates.size());
    for (std::size_t a = 0; a < net.and_gates.size(); ++a) {
      bool value = true;
      for (auto const& lit : net.and_gates[a]) {
        if (bits[lit.bit] != lit.positive) {
          value = false;
          break;
        }
      }
      out[a] = value;
    }
    return out;
  }
}  // namespace

std::vector<bool> evaluate_netlist(BooleanNetlist const&    net,
                                   std::vector<bool> const& bits) {
  auto const        ands = and_values(net, bits);
  std::vector<bool> out(net.or_gates.size(), false);
  for (std::size_t j = 0; j < net.or_gates.size(); ++j) {
    for (auto a : net.or_gates[j]) {
      if (ands[a]) {
        out[j] = true;
        break;
      }
    }
  }
  return out;
}

std::size_t firing_and_gates(BooleanNetlist const&    net,
                             std::vector<bool> const& bits) {
  auto const ands = and_values(net, bits);
  return static_cast<std::size_t>(std::count(ands.begin(), ands.end(), true));
}

BooleanNetlist parse_netlist(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty() || lines[0].tokens.size() != 7
      || lines[0].tokens[0] != "BSIM") {
    throw Error(ErrorKind::malformed_input,
                "expected header 'BSIM <input_bits> <n_and> <n_or> <N> <m> <k>'");
  }
  auto const&    h = lines[0].tokens;
  BooleanNetlist net;
  net.input_bits     = detail::parse_unsigned(h[1], "input bit count");
  auto const n_and   = detail::parse_unsigned(h[2], "AND gate count");
  auto const n_or    = detail::parse_unsigned(h[3], "OR gate count");
  net.order          = detail::parse_unsigned(h[4], "order");
  net.circuit_size   = detail::parse_unsigned(h[5], "circuit size");
  net.circuit_inputs = detail::parse_unsigned(h[6], "circuit inputs");
  if (lines.size() != 1 + n_and + n_or) {
    throw Error(ErrorKind::malformed_input,
                "expected " + std::to_string(n_and + n_or)
                    + " gate lines, found " + std::to_string(lines.size() - 1));
  }
  for (std::size_t a = 0; a < n_and; ++a) {
    auto const& line = lines[1 + a];
    if (line.tokens[0] != "and") {
      detail::malformed(line.number, "expected an 'and' line");
    }
    std::vector<Literal> lits;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      auto const& tok = line.tokens[i];
      if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
        detail::malformed(line.number, "literal '" + tok + "' needs a sign");
      }
      auto bit = detail::parse_unsigned(tok.substr(1), "literal");
      if (bit >= net.input_bits) {
        detail::malformed(line.number, "literal '" + tok + "' out of range");
      }
      lits.push_back({static_cast<std::uint32_t>(bit), tok[0] == '+'});
    }
    net.and_gates.push_back(std::move(lits));
  }
  for (std::size_t j = 0; j < n_or; ++j) {
    auto const& line = lines[1 + n_and + j];
    if (line.tokens[0] != "or") {
      detail::malformed(line.number, "expected an 'or' line");
    }
    std::vector<std::uint32_t> ins;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      auto a = detail::parse_unsigned(line.tokens[i], "AND index");
      if (a >= n_and) {
        detail::malformed(line.number, "AND index out of range");
      }
      ins.push_back(static_cast<std::uint32_t>(a));
    }
    net.or_gates.push_back(std::move(ins));
  }
  return net;
}

std::string format_netlist(BooleanNetlist const& net) {
  std::ostringstream os;
  os << "BSIM " << net.input_bits << ' ' << net.and_gates.size() << ' '
     << net.or_gates.size() << ' ' << net.order << ' ' << net.circuit_size
     << ' ' << net.circuit_inputs << '\n';
  for (auto const& lits : net.and_gates) {
    os << "and";
    for (auto const& l : lits) {
      os << ' ' << (l.positive ? '+' : '-') << l.bit;
    }
    os << '\n';
  }
  for (auto const& ins : net.or_gates) {
    os << "or";
    for (auto a : ins) {
      os << ' ' << a;
    }
    os << '\n';
  }
  return os.str();
}

ExhaustiveResult exhaustive_membership(Semigroup const&         s,
                                       std::span<Element const> generators,
                                       Element                  target,
                                       std::size_t              max_size,
                                       std::uint64_t            budget) {
  if (max_size == 0) {
    throw Error(ErrorKind::invalid_argument, "max_size must be >= 1");
  }
  if (!s.contains(target)) {
    throw Error(ErrorKind::entry_out_of_range, "target is not an element");
  }
  std::vector<Element> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Element x : gens) {
    if (!s.contains(x)) {
      throw Error(ErrorKind::entry_out_of_range,
                  "generator " + std::to_string(x) + " is not an element");
    }
  }

  ExhaustiveResult     result{false, std::nullopt, 0};
  if (gens.empty()) {
    // every circuit starts with an input gate
    return result;
  }
  std::vector<Element> values;
  std::vector<std::size_t> choice;
  enumerate_circuits(max_size, [&](std::span<Gate const> gates) {
    std::size_t const k = static_cast<std::size_t>(
        std::count_if(gates.begin(), gates.end(),
                      [](Gate const& g) { return g.kind == GateKind::input; }));
    choice.assign(k, 0);
    values.resize(gates.size());
    for (;;) {
      if (++result.evaluations > budget) {
        throw Error(ErrorKind::budget_exceeded,
                    "exhaustive search exceeded " + std::to_string(budget)
                        + " evaluations");
      }
      std::size_t next = 0;
      for (std::size_t i = 0; i < gates.size(); ++i) {
        values[i] = gates[i].kind == GateKind::input
                        ? gens[choice[next++]]
                        : s.product(values[gates[i].left], values[gates[i].right]);
      }
      if (values.back() == target) {
        std::vector<Element> assignment;
        for (auto c : choice) {
          assignment.push_back(gens[c]);
        }
        result.member  = true;
        result.witness = AssignedCircuit{
            CayleyCircuit(std::vector<Gate>(gates.begin(), gates.end())),
            std::move(assignment)};
        return false;
      }
      // lexicographic odometer over assignments
      std::size_t j = k;
      while (j > 0 && ++choice[j - 1] == gens.size()) {
        choice[j - 1] = 0;
        --j;
      }
      if (j == 0) {
        return true;
      }
    }
  });
  return result;
}

}  // namespace csm
