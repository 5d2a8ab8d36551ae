#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "gres/monomial.hpp"
#include "gres/scalar.hpp"

namespace gres {

using Point = std::vector<Scalar>;

/// Sparse multivariate polynomial over Q(i). Zero coefficients are never
/// stored; every monomial has exactly nvars() exponents.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Scalar& c);
  static MultiPoly variable(std::size_t nvars, std::size_t var);
  static MultiPoly term(const Monomial& m, const Scalar& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  Scalar coefficient(const Monomial& m) const;
  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// True if every term only involves variable var.
  bool depends_only_on(std::size_t var) const;

  /// Largest term under the given order; requires a nonzero polynomial.
  std::pair<Monomial, Scalar> leading_term(const MonomialOrder& order) const;

  Scalar evaluate(std::span<const Scalar> point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  /// Multiplies by the monomial m.
  MultiPoly shifted(const Monomial& m) const;
  MultiPoly pow(unsigned exponent) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  friend MultiPoly poly_canonical(std::size_t, const std::vector<std::pair<Monomial, Scalar>>&);
  void check_arity(const MultiPoly& o) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// Merges like terms and drops zeros; throws arity_mismatch on inconsistent
/// exponent-vector lengths.
MultiPoly poly_canonical(std::size_t nvars, const std::vector<std::pair<Monomial, Scalar>>& raw);

/// Exact product; throws arity_mismatch when nvars differ.
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);

/// Mixed partial derivative d^{|l|} p / ds^l.
MultiPoly poly_diff(const MultiPoly& p, const Monomial& l);

/// Returns q with q(t) = p(t + w).
MultiPoly taylor_shift(const MultiPoly& p, std::span<const Scalar> w);

/// Taylor coefficients of p at w for exponents k ≺ bound, as a polynomial in
/// the local coordinates t = s - w. Equivalent to truncating taylor_shift.
MultiPoly taylor_coefficients(const MultiPoly& p, std::span<const Scalar> w, const Monomial& bound);

struct DivModResult {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Euclidean division of f by g viewed as polynomials in variable var with
/// coefficients in the remaining variables; g must be monic in var.
DivModResult univ_divmod(const MultiPoly& f, const MultiPoly& g, std::size_t var);

/// Taylor polynomial T (in local coordinates t = s - w) of 1/u at w, correct
/// for every exponent ≺ order. Throws non_invertible when u(w) = 0.
MultiPoly series_inverse_truncated(const MultiPoly& u, std::span<const Scalar> w, const Monomial& order);

/// Product of a and b keeping only exponents ≺ bound.
MultiPoly truncated_mul(const MultiPoly& a, const MultiPoly& b, const Monomial& bound);

/// Reindexes p into a ring with new_nvars variables, sending variable i to
/// target[i].
MultiPoly embed(const MultiPoly& p, std::size_t new_nvars, std::span<const std::size_t> target);

/// Exact quotient f / g; throws division_error when g does not divide f.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

}  // namespace gres
