#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace gres {

/// Exact element of Q(i): a pair of arbitrary-precision rationals kept in
/// canonical form (positive denominators, reduced fractions).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(implicit)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }
  /// Builds num/den + 0i; throws division_error when den is zero.
  static GaussianRational fraction(const mpz_class& num, const mpz_class& den);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  /// True if the value is an integer (real, denominator one).
  bool is_integer() const noexcept;

  GaussianRational conj() const { return {re_, -im_}; }
  /// Throws non_invertible on zero.
  GaussianRational inverse() const;
  GaussianRational pow(unsigned exponent) const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text: "a/b", "c/d*i", "a/b+c/d*i"; unit imaginary parts are
  /// written "i" / "-i". No spaces.
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

using Scalar = GaussianRational;

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

/// Binomial coefficient as an exact scalar.
Scalar binomial(unsigned n, unsigned k);
/// n! as an exact scalar.
Scalar factorial(unsigned n);

}  // namespace gres
