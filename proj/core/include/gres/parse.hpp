#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gres/monomial.hpp"
#include "gres/poly.hpp"
#include "gres/scalar.hpp"

namespace gres {

/// Polynomial text together with the ordered variable names it may use.
/// Variable k of the resulting polynomial is variables[k].
struct PolySource {
  std::string text;
  std::vector<std::string> variables;
};

/// s1, s2, ..., sn.
std::vector<std::string> default_variable_names(std::size_t n);

/// Throws invalid_argument unless every name is an identifier, distinct, and
/// not the reserved imaginary unit "i".
void validate_variable_names(std::span<const std::string> names);

/// Parses "3/2", "-1+2i", "1/2-3/4*i", "i", "-2*i", ... into an exact scalar.
/// Errors carry a 1-based byte position.
Scalar parse_scalar(std::string_view text);

/// Parses an expression over + - * ^ with parentheses, scalar literals and
/// the declared variables. Precedence: ^ > unary minus > * > binary + -.
/// Multiplication must be explicit, except for the "2i" literal form.
MultiPoly parse_poly(const PolySource& src);
MultiPoly parse_poly(std::string_view text, std::span<const std::string> variables);

std::string format_monomial(const Monomial& m, std::span<const std::string> names);

/// Terms in descending order under `order`, e.g. "s1^2 - s2", "1/2*i*s1".
/// The output parses back to the same polynomial.
std::string format_poly(const MultiPoly& p, const MonomialOrder& order, std::span<const std::string> names);

}  // namespace gres
