#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gres/matrix.hpp"
#include "gres/monomial.hpp"
#include "gres/poly.hpp"

namespace gres {

/// n generators p_1..p_n in n variables, none identically zero.
class IdealPresentation {
 public:
  /// Validates the shape; throws invalid_argument / arity_mismatch.
  IdealPresentation(std::vector<MultiPoly> generators, MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<MultiPoly>& generators() const noexcept { return generators_; }
  std::size_t nvars() const noexcept { return generators_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }

  /// True if every generator vanishes at w.
  bool vanishes_at(std::span<const Scalar> w) const;

 private:
  std::vector<MultiPoly> generators_;
  MonomialOrder order_;
};

/// Reduced Gröbner basis of (p) together with exact certificates
/// basis[i] = sum_k cofactors[i][k] * p_k and the standard monomial basis
/// of C[s]/(p), sorted ascending (index 0 is the constant monomial).
struct GroebnerData {
  std::size_t nvars = 0;
  MonomialOrder order;
  std::vector<MultiPoly> generators;
  std::vector<MultiPoly> basis;
  std::vector<std::vector<MultiPoly>> cofactors;
  std::vector<Monomial> standard_monomials;

  std::size_t N() const noexcept { return standard_monomials.size(); }
  std::optional<std::size_t> index_of(const Monomial& m) const;
};

/// Buchberger's algorithm with Gebauer–Möller pair elimination.
/// Throws empty_variety when 1 ∈ (p) and not_zero_dimensional when the
/// quotient is infinite dimensional.
GroebnerData buchberger(const IdealPresentation& pres);

struct NormalForm {
  MultiPoly remainder;
  /// f = remainder + sum_k cofactors[k] * p_k.
  std::vector<MultiPoly> cofactors;
};

NormalForm normal_form(const MultiPoly& f, const GroebnerData& gb);

/// Remainder only, without certificate.
MultiPoly reduce(const MultiPoly& f, const GroebnerData& gb);

/// Coefficients of f's normal form on the standard monomials.
std::vector<Scalar> coordinates(const MultiPoly& f, const GroebnerData& gb);

/// The polynomial sum_k alpha_k s^{beta_k}.
MultiPoly from_coordinates(const std::vector<Scalar>& alpha, const GroebnerData& gb);

/// Matrix of multiplication by s_var on C[s]/(p) in the standard basis.
ScalarMatrix multiplication_matrix(std::size_t var, const GroebnerData& gb);

/// Characteristic polynomial of multiplication_matrix(var) written in s_var;
/// monic of degree N and a member of (p).
MultiPoly univariate_in_ideal(std::size_t var, const GroebnerData& gb);

enum class UnivariateChoice { characteristic, minimal };

/// Separated polynomials q_j(s_j) and a matrix A with q = A p.
struct TransformationData {
  std::vector<MultiPoly> q;
  PolyMatrix A;
  MultiPoly detA;
};

/// Builds q from the characteristic (default) or minimal polynomials of the
/// multiplication matrices and A from normal-form certificates. The identity
/// q = A p is checked before returning.
TransformationData transformation_data(const GroebnerData& gb,
                                       UnivariateChoice choice = UnivariateChoice::characteristic);

/// Checks q_j = sum_k A[j][k] p_k for every j.
bool satisfies_transformation_law(const TransformationData& td, const std::vector<MultiPoly>& generators);

}  // namespace gres
