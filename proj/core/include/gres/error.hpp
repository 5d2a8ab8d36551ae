#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gres {

enum class ErrorKind {
  // input errors
  arity_mismatch,
  invalid_argument,
  syntax_error,
  unknown_identifier,
  negative_exponent,
  zero_denominator,
  // mathematical precondition failures
  division_error,
  non_invertible,
  not_zero_dimensional,
  empty_variety,
  node_not_a_zero,
  ill_posed_functional,
  // should be unreachable
  invariant_violation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for kinds that describe a failed mathematical precondition rather
/// than malformed input.
bool is_precondition_failure(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// 1-based byte offset into the parsed text, for parser errors.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace gres
