#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gres/ideal.hpp"
#include "gres/matrix.hpp"
#include "gres/poly.hpp"

namespace gres {

/// Bézoutian matrix B(s, z) with p_j(s) - p_j(z) = sum_l B[j][l] (s_l - z_l).
/// Entries live in 2n variables: s_1..s_n are indices 0..n-1 and z_1..z_n
/// are indices n..2n-1.
struct HeferMatrix {
  std::size_t nvars = 0;
  std::vector<std::size_t> variable_order;
  PolyMatrix entries;
  MultiPoly det;
};

/// Telescoping construction: the variables are switched from s to z one at a
/// time in `variable_order` (identity by default) and each difference is
/// divided exactly by (s_l - z_l).
HeferMatrix hefer_matrix(const IdealPresentation& pres);
HeferMatrix hefer_matrix(const IdealPresentation& pres, std::span<const std::size_t> variable_order);

bool satisfies_bezoutian_identity(const HeferMatrix& b, const std::vector<MultiPoly>& generators);

/// det [d p_j / d s_l].
MultiPoly jacobian_det(const IdealPresentation& pres);

/// Everything needed to evaluate residues of a quasi-regular sequence:
/// presentation, Gröbner data, transformation law (q, A), det A reduced
/// modulo (q), and the residue values on the standard monomials.
class ResidueSystem {
 public:
  explicit ResidueSystem(IdealPresentation pres, UnivariateChoice choice = UnivariateChoice::characteristic);
  /// Uses a caller-supplied transformation law; it must satisfy q = A p.
  ResidueSystem(IdealPresentation pres, GroebnerData gb, TransformationData td);

  const IdealPresentation& presentation() const noexcept { return pres_; }
  const GroebnerData& groebner() const noexcept { return gb_; }
  const TransformationData& transformation() const noexcept { return td_; }
  std::size_t nvars() const noexcept { return pres_.nvars(); }
  std::size_t N() const noexcept { return gb_.N(); }

  /// det A reduced by the separated polynomials q_1..q_n.
  const MultiPoly& reduced_det() const noexcept { return reduced_det_; }
  /// Res[s^{beta_k} ds / p] for every standard monomial.
  const std::vector<Scalar>& residue_covector() const noexcept { return residue_covector_; }

  /// Residue of h through its coordinates on the standard basis; agrees with
  /// global_residue by duality.
  Scalar residue_via_dual(const MultiPoly& h) const;

 private:
  void finish();

  IdealPresentation pres_;
  GroebnerData gb_;
  TransformationData td_;
  MultiPoly reduced_det_;
  std::vector<Scalar> residue_covector_;
};

/// Successive Euclidean division of f by q_1(s_1), ..., q_n(s_n).
MultiPoly reduce_separated(const MultiPoly& f, const std::vector<MultiPoly>& q);

/// Res[h ds / p] by the transformation law: reduce h det A successively by
/// q_1..q_n and read off the coefficient of s^{d_q - 1}.
Scalar global_residue(const MultiPoly& h, const TransformationData& td);
Scalar global_residue(const MultiPoly& h, const ResidueSystem& sys);
Scalar global_residue(const MultiPoly& h, const IdealPresentation& pres);

/// Contribution of the zero w to Res[h ds / p]. Throws node_not_a_zero when
/// some generator does not vanish at w.
Scalar local_residue(const MultiPoly& h, const ResidueSystem& sys, std::span<const Scalar> w);
Scalar local_residue(const MultiPoly& h, const IdealPresentation& pres, std::span<const Scalar> w);

/// Local residue of the Jacobian determinant: the intersection multiplicity
/// of p at w.
std::size_t local_multiplicity(const ResidueSystem& sys, std::span<const Scalar> w);

struct MembershipCertificate {
  bool member = false;
  /// When not a member: index k of a standard monomial with Res[s^{beta_k} f] != 0.
  std::optional<std::size_t> witness;
  Scalar witness_residue;
};

/// f ∈ (p) iff Res[s^{beta_k} f ds / p] = 0 for every standard monomial.
MembershipCertificate membership_test(const MultiPoly& f, const ResidueSystem& sys);

}  // namespace gres
