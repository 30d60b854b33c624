#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace csm {

using Element = std::uint32_t;

enum class ErrorKind {
  malformed_input,
  entry_out_of_range,
  not_associative,
  arity_mismatch,
  invalid_exponent,
  empty_sequence,
  not_a_group,
  target_not_generated,
  invalid_reference,
  not_commutative,
  budget_exceeded,
  vertex_out_of_range,
  graph_too_small,
  not_nilpotent,
  witness_too_large,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library. The kind is
/// stable and is what the CLI and the Python bindings report.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept {
    return kind_;
  }

 private:
  ErrorKind kind_;
};

/// Raised by table validation; carries the first triple (a, b, c) in
/// lexicographic order with (ab)c != a(bc).
class NotAssociative : public Error {
 public:
  explicit NotAssociative(std::array<Element, 3> triple);

  std::array<Element, 3> const& triple() const noexcept {
    return triple_;
  }

 private:
  std::array<Element, 3> triple_;
};

}  // namespace csm
