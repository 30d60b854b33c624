#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csm/membership.hpp"
#include "csm/semigroup.hpp"

namespace csm {

enum class GateKind : std::uint8_t { input, mul };

/// One gate of a Cayley circuit. Predecessor indices are 0-based and refer
/// to earlier gates; left == right models a doubled edge (squaring).
struct Gate {
  GateKind      kind  = GateKind::input;
  std::uint32_t left  = 0;
  std::uint32_t right = 0;

  static constexpr Gate input() noexcept {
    return {};
  }
  static constexpr Gate mul(std::uint32_t l, std::uint32_t r) noexcept {
    return {GateKind::mul, l, r};
  }
  bool operator==(Gate const&) const = default;
};

/// A DAG of input and binary product gates stored in topological order.
/// The output is always the last gate.
class CayleyCircuit {
 public:
  /// Throws Error(invalid_reference) unless the list is nonempty and every
  /// product gate refers to strictly earlier gates.
  explicit CayleyCircuit(std::vector<Gate> gates);

  std::span<Gate const> gates() const noexcept {
    return gates_;
  }
  std::size_t size() const noexcept {
    return gates_.size();
  }
  std::size_t input_count() const noexcept {
    return input_count_;
  }
  std::size_t output() const noexcept {
    return gates_.size() - 1;
  }

  bool operator==(CayleyCircuit const&) const = default;

 private:
  std::vector<Gate> gates_;
  std::size_t       input_count_;
};

/// A circuit together with the elements fed to its input gates.
struct AssignedCircuit {
  CayleyCircuit        circuit;
  std::vector<Element> assignment;
};

/// Values of all gates; the i-th input gate takes inputs[i].
/// Throws Error(arity_mismatch).
std::vector<Element> evaluate_all(CayleyCircuit const&     c,
                                  Semigroup const&         s,
                                  std::span<Element const> inputs);

Element evaluate(CayleyCircuit const&     c,
                 Semigroup const&         s,
                 std::span<Element const> inputs);

/// Repeated squaring: x^e from one input gate. Size 1 for e = 1 and at most
/// 2 * ceil(log2 e) otherwise. Throws Error(invalid_exponent) for e = 0.
CayleyCircuit power_circuit(std::uint64_t e);

/// Number of gates power_circuit(e) has, without building it.
std::size_t power_circuit_size(std::uint64_t e);

/// Left-to-right product of the circuits' values. The blocks keep their
/// gate order; each fold gate is placed right after the block it consumes,
/// so at most the running product and the current block cross any cut.
/// Size is the sum of sizes plus count - 1. Throws Error(empty_sequence).
CayleyCircuit chain_product(std::span<CayleyCircuit const> circuits);

/// Width of the stored gate ordering: the largest number of product gates
/// before a cut that feed a gate after it.
std::size_t ordering_width(CayleyCircuit const& c);

/// Visits every gate list with 1..max_size gates exactly once, ordered by
/// size and then lexicographically (input < mul(0,0) < mul(0,1) < ...).
/// Returns the number of visited lists. The visitor may return false to
/// stop early.
std::uint64_t enumerate_circuits(
    std::size_t                                           max_size,
    std::function<bool(std::span<Gate const>)> const& on_each);

/// Sum over s = 1..m of prod over i = 1..s of (1 + (i - 1)^2).
std::uint64_t circuit_count(std::size_t max_size);

/// Turns a derivation trace into a circuit with one gate per step.
AssignedCircuit derivation_circuit(std::span<DerivationStep const> trace);

/// Circuit file: one gate per line, "in" or "mul L R" with 1-based indices;
/// '#' comments allowed. The last gate is the output.
CayleyCircuit parse_circuit(std::string_view text);
std::string   format_circuit(CayleyCircuit const& c);

}  // namespace csm
