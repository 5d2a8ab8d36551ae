#include "gres/scalar.hpp"

#include <ostream>

#include "gres/error.hpp"

namespace gres {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::arity_mismatch: return "arity_mismatch";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::syntax_error: return "syntax_error";
    case ErrorKind::unknown_identifier: return "unknown_identifier";
    case ErrorKind::negative_exponent: return "negative_exponent";
    case ErrorKind::zero_denominator: return "zero_denominator";
    case ErrorKind::division_error: return "division_error";
    case ErrorKind::non_invertible: return "non_invertible";
    case ErrorKind::not_zero_dimensional: return "not_zero_dimensional";
    case ErrorKind::empty_variety: return "empty_variety";
    case ErrorKind::node_not_a_zero: return "node_not_a_zero";
    case ErrorKind::ill_posed_functional: return "ill_posed_functional";
    case ErrorKind::invariant_violation: return "invariant_violation";
  }
  return "unknown";
}

bool is_precondition_failure(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::division_error:
    case ErrorKind::non_invertible:
    case ErrorKind::not_zero_dimensional:
    case ErrorKind::empty_variety:
    case ErrorKind::node_not_a_zero:
    case ErrorKind::ill_posed_functional:
    case ErrorKind::invariant_violation:
      return true;
    default:
      return false;
  }
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::division_error, "zero denominator");
  return GaussianRational(mpq_class(num, den));
}

bool GaussianRational::is_integer() const noexcept {
  return sgn(im_) == 0 && re_.get_den() == 1;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::non_invertible, "inverse of zero");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational GaussianRational::pow(unsigned exponent) const {
  GaussianRational result = 1;
  GaussianRational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorKind::division_error, "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = re_.get_str();
  if (sgn(im_) > 0) out += '+';
  return out + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << x.to_string();
}

Scalar binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Scalar(mpq_class(r));
}

Scalar factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Scalar(mpq_class(r));
}

}  // namespace gres
