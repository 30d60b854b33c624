#include "csm/circuit.hpp"

#include <bit>
#include <sstream>
#include <unordered_map>

#include "text_io.hpp"

namespace csm {

CayleyCircuit::CayleyCircuit(std::vector<Gate> gates)
    : gates_(std::move(gates)), input_count_(0) {
  if (gates_.empty()) {
    throw Error(ErrorKind::invalid_reference, "a circuit needs a gate");
  }
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    auto const& g = gates_[i];
    if (g.kind == GateKind::input) {
      ++input_count_;
    } else if (g.left >= i || g.right >= i) {
      throw Error(ErrorKind::invalid_reference,
                  "gate " + std::to_string(i + 1)
                      + " refers to a gate that is not earlier");
    }
  }
}

std::vector<Element> evaluate_all(CayleyCircuit const&     c,
                                  Semigroup const&         s,
                                  std::span<Element const> inputs) {
  if (inputs.size() != c.input_count()) {
    throw Error(ErrorKind::arity_mismatch,
                "circuit has " + std::to_string(c.input_count())
                    + " inputs, got " + std::to_string(inputs.size()));
  }
  std::vector<Element> values(c.size());
  std::size_t          next_input = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto const& g = c.gates()[i];
    if (g.kind == GateKind::input) {
      Element x = inputs[next_input++];
      if (!s.contains(x)) {
        throw Error(ErrorKind::entry_out_of_range,
                    "input " + std::to_string(x) + " is not an element");
      }
      values[i] = x;
    } else {
      values[i] = s.product(values[g.left], values[g.right]);
    }
  }
  return values;
}

Element evaluate(CayleyCircuit const&     c,
                 Semigroup const&         s,
                 std::span<Element const> inputs) {
  return evaluate_all(c, s, inputs).back();
}

CayleyCircuit power_circuit(std::uint64_t e) {
  if (e == 0) {
    throw Error(ErrorKind::invalid_exponent, "exponent must be >= 1");
  }
  // Unroll e -> e/2 (square) and e -> e-1 (times the input) down to 1, then
  // emit the gates bottom-up.
  std::vector<bool> squares;  // true: square, false: multiply by input
  for (std::uint64_t k = e; k > 1;) {
    if (k % 2 == 0) {
      squares.push_back(true);
      k /= 2;
    } else {
      squares.push_back(false);
      k -= 1;
    }
  }
  std::vector<Gate> gates{Gate::input()};
  for (auto it = squares.rbegin(); it != squares.rend(); ++it) {
    auto last = static_cast<std::uint32_t>(gates.size() - 1);
    gates.push_back(*it ? Gate::mul(last, last) : Gate::mul(last, 0));
  }
  return CayleyCircuit(std::move(gates));
}

std::size_t power_circuit_size(std::uint64_t e) {
  if (e == 0) {
    throw Error(ErrorKind::invalid_exponent, "exponent must be >= 1");
  }
  // one gate per halving and one per odd step
  auto bits = static_cast<std::size_t>(std::bit_width(e));
  auto ones = static_cast<std::size_t>(std::popcount(e));
  return 1 + (bits - 1) + (ones - 1);
}

CayleyCircuit chain_product(std::span<CayleyCircuit const> circuits) {
  if (circuits.empty()) {
    throw Error(ErrorKind::empty_sequence, "chain_product needs a circuit");
  }
  std::vector<Gate> gates;
  std::uint32_t     running = 0;
  for (std::size_t j = 0; j < circuits.size(); ++j) {
    auto const offset = static_cast<std::uint32_t>(gates.size());
    for (auto g : circuits[j].gates()) {
      if (g.kind == GateKind::mul) {
        g.left += offset;
        g.right += offset;
      }
      gates.push_back(g);
    }
    auto const block_out = static_cast<std::uint32_t>(gates.size() - 1);
    if (j == 0) {
      running = block_out;
    } else {
      gates.push_back(Gate::mul(running, block_out));
      running = static_cast<std::uint32_t>(gates.size() - 1);
    }
  }
  return CayleyCircuit(std::move(gates));
}

std::size_t ordering_width(CayleyCircuit const& c) {
  auto const           m = c.size();
  std::vector<std::size_t> last_use(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    auto const& g = c.gates()[i];
    if (g.kind == GateKind::mul) {
      last_use[g.left]  = std::max(last_use[g.left], i);
      last_use[g.right] = std::max(last_use[g.right], i);
    }
  }
  // crossing[i]: product gates g < i with a consumer at index >= i
  std::vector<std::ptrdiff_t> delta(m + 1, 0);
  for (std::size_t g = 0; g < m; ++g) {
    if (c.gates()[g].kind == GateKind::mul && last_use[g] > g) {
      delta[g + 1] += 1;
      delta[last_use[g] + 1] -= 1;
    }
  }
  std::size_t    width = 0;
  std::ptrdiff_t live  = 0;
  for (std::size_t i = 1; i < m; ++i) {
    live += delta[i];
    width = std::max(width, static_cast<std::size_t>(live));
  }
  return width;
}

namespace {
  bool enumerate_exact(std::size_t                                       size,
                       std::vector<Gate>&                                prefix,
                       std::uint64_t&                                    count,
                       std::function<bool(std::span<Gate const>)> const& on_each) {
    if (prefix.size() == size) {
      ++count;
      return on_each(prefix);
    }
    auto const i = static_cast<std::uint32_t>(prefix.size());
    prefix.push_back(Gate::input());
    if (!enumerate_exact(size, prefix, count, on_each)) {
      return false;
    }
    for (std::uint32_t l = 0; l < i; ++l) {
      for (std::uint32_t r = 0; r < i; ++r) {
        prefix.back() = Gate::mul(l, r);
        if (!enumerate_exact(size, prefix, count, on_each)) {
          return false;
        }
      }
    }
    prefix.pop_back();
    return true;
  }
}  // namespace

std::uint64_t enumerate_circuits(
    std::size_t                                       max_size,
    std::function<bool(std::span<Gate const>)> const& on_each) {
  std::uint64_t     count = 0;
  std::vector<Gate> prefix;
  for (std::size_t size = 1; size <= max_size; ++size) {
    prefix.clear();
    if (!enumerate_exact(size, prefix, count, on_each)) {
      break;
    }
  }
  return count;
}

std::uint64_t circuit_count(std::size_t max_size) {
  std::uint64_t total = 0;
  std::uint64_t prod  = 1;
  for (std::uint64_t i = 1; i <= max_size; ++i) {
    prod *= 1 + (i - 1) * (i - 1);
    total += prod;
  }
  return total;
}

AssignedCircuit derivation_circuit(std::span<DerivationStep const> trace) {
  std::vector<Gate>                          gates;
  std::vector<Element>                       assignment;
  std::unordered_map<Element, std::uint32_t> gate_of;
  for (auto const& step : trace) {
    if (auto const* gen = std::get_if<FromGenerator>(&step.how)) {
      gates.push_back(Gate::input());
      assignment.push_back(gen->generator);
    } else {
      auto const& p = std::get<FromProduct>(step.how);
      auto        l = gate_of.find(p.left);
      auto        r = gate_of.find(p.right);
      if (l == gate_of.end() || r == gate_of.end()) {
        throw Error(ErrorKind::invalid_reference,
                    "derivation step refers to a value not derived earlier");
      }
      gates.push_back(Gate::mul(l->second, r->second));
    }
    gate_of[step.value] = static_cast<std::uint32_t>(gates.size() - 1);
  }
  return {CayleyCircuit(std::move(gates)), std::move(assignment)};
}

CayleyCircuit parse_circuit(std::string_view text) {
  std::vector<Gate> gates;
  for (auto const& line : detail::tokenize_lines(text)) {
    auto const& t = line.tokens;
    if (t[0] == "in" && t.size() == 1) {
      gates.push_back(Gate::input());
    } else if (t[0] == "mul" && t.size() == 3) {
      auto l = detail::parse_unsigned(t[1], "gate reference");
      auto r = detail::parse_unsigned(t[2], "gate reference");
      if (l == 0 || r == 0 || l > gates.size() || r > gates.size()) {
        throw Error(ErrorKind::invalid_reference,
                    "line " + std::to_string(line.number)
                        + ": references must point to earlier gates (1-based)");
      }
      gates.push_back(Gate::mul(static_cast<std::uint32_t>(l - 1),
                                static_cast<std::uint32_t>(r - 1)));
    } else {
      detail::malformed(line.number, "expected 'in' or 'mul L R'");
    }
  }
  if (gates.empty()) {
    throw Error(ErrorKind::malformed_input, "circuit file has no gates");
  }
  return CayleyCircuit(std::move(gates));
}

std::string format_circuit(CayleyCircuit const& c) {
  std::ostringstream os;
  for (auto const& g : c.gates()) {
    if (g.kind == GateKind::input) {
      os << "in\n";
    } else {
      os << "mul " << g.left + 1 << ' ' << g.right + 1 << '\n';
    }
  }
  return os.str();
}

}  // namespace csm
