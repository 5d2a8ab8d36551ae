#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gres/ideal.hpp"
#include "gres/matrix.hpp"
#include "gres/poly.hpp"
#include "gres/residue.hpp"

namespace gres {

/// Matrix of the residue pairing (Φ, Ψ) -> Res[ΦΨ ds / p] on `basis`.
struct QpMatrix {
  ScalarMatrix entries;
  std::vector<Monomial> basis;
};

/// entries[k1][k2] = Res[s^{beta_k1 + beta_k2} ds / p] over the standard
/// monomials of sys. Throws invariant_violation if the matrix is singular.
QpMatrix qp_matrix(const ResidueSystem& sys);

/// Separated system p_j(s_j) = prod_l (s_j - w_{l,j})^{nu_{l,j}} built from
/// distinct nodes and their multiplicity vectors.
IdealPresentation separated_presentation(const std::vector<Point>& nodes,
                                         const std::vector<Monomial>& multiplicities,
                                         MonomialOrder order = MonomialOrder::grevlex());

/// Monomials k ≺ d - 1 in lexicographic order, d_j = deg p_j.
std::vector<Monomial> euclid_basis(const std::vector<Point>& nodes, const std::vector<Monomial>& multiplicities);

/// Same matrix as qp_matrix on the separated system, but computed from the
/// geometric-series expansion of 1/p_j at infinity and laid out on
/// euclid_basis.
QpMatrix qp_matrix_euclid(const std::vector<Point>& nodes, const std::vector<Monomial>& multiplicities);

/// perm with to[i] == from[perm[i]]; throws invalid_argument when the two
/// lists are not rearrangements of each other.
std::vector<std::size_t> basis_permutation(const std::vector<Monomial>& from, const std::vector<Monomial>& to);

/// Reorders the rows and columns of q onto `basis`.
QpMatrix permute(const QpMatrix& q, const std::vector<Monomial>& basis);

/// Lag[f] = sum_k alpha_k[f] s^{beta_k}, the normal form of f.
MultiPoly lagrange_poly(const MultiPoly& f, const GroebnerData& gb);

/// Lag[f] through a Bézoutian kernel: with det B = sum_k c_k(s) z^k, the
/// polynomial sum_k Res[f c_k ds / p] z^k, reduced to normal form and
/// renamed back to s.
MultiPoly lagrange_poly_hefer(const MultiPoly& f, const ResidueSystem& sys, const HeferMatrix& b);

/// Germ data sum_l a_l (s - w)^l / l! at a node, with every l ≺ bound.
struct Jet {
  Point node;
  std::map<Monomial, Scalar> coefficients;
  Monomial bound;

  /// The jet polynomial in s.
  MultiPoly germ() const;
};

/// Builds a jet and validates the support; when bound is omitted the
/// componentwise maximum of the support is used.
Jet make_jet(Point node, std::map<Monomial, Scalar> coefficients, std::optional<Monomial> bound = std::nullopt);

/// Lag of a list of jets: the standard-basis polynomial whose residue
/// pairing against every standard monomial matches that of the jets.
MultiPoly lagrange_jets(const std::vector<Jet>& jets, const ResidueSystem& sys, const QpMatrix& qp);
MultiPoly lagrange_jets(const std::vector<Jet>& jets, const ResidueSystem& sys);

/// Coefficients on euclid_basis of the Hefer-kernel interpolator
/// sum_j Res_{w_j}[germ_j(s) det B(s, z) ds / p](z).
std::vector<Scalar> tau_coefficients(const std::vector<Jet>& jets, const std::vector<Point>& nodes,
                                     const std::vector<Monomial>& multiplicities);

/// lambda_k = sum_j Res_{w_j}[s^{beta_k} germ_j ds / p].
std::vector<Scalar> noetherian_covector(const std::vector<Jet>& jets, const ResidueSystem& sys);

/// lambda_k = sum_j sum_l a_{j,l} d^l(s^{beta_k})(w_j). Throws
/// ill_posed_functional unless the functional vanishes on every
/// s^{beta_k} p_m.
std::vector<Scalar> derivative_covector(const std::vector<Jet>& jets, const GroebnerData& gb);

/// Applies sum_j sum_l a_{j,l} d^l f (w_j) directly.
Scalar apply_derivative_functional(const std::vector<Jet>& jets, const MultiPoly& f);

enum class Flavor { noetherian, derivative };

const char* to_string(Flavor flavor);
Flavor flavor_from_name(const std::string& name);

struct InterpolationProblem {
  IdealPresentation pres;
  std::vector<Jet> jets;
  Scalar c;
  Flavor flavor = Flavor::noetherian;
  /// Present when pres was built by separated_presentation.
  std::vector<Point> nodes;
  std::vector<Monomial> multiplicities;
};

enum class SolutionKind { all_functions, empty, hyperplane };

/// f solves the problem iff lambda · coordinates(f) = c (hyperplane), always
/// (all_functions) or never (empty).
struct SolutionSet {
  SolutionKind kind = SolutionKind::empty;
  std::vector<Scalar> lambda;
  Scalar c;
  std::vector<Monomial> basis;
};

const char* to_string(SolutionKind kind);

/// Throws node_not_a_zero when a jet node is not a zero of pres and
/// invalid_argument when two jets share a node.
void validate_problem(const InterpolationProblem& prob);

SolutionSet solve_problem(const InterpolationProblem& prob);
SolutionSet solve_problem(const InterpolationProblem& prob, const ResidueSystem& sys);

bool verify_solution(const MultiPoly& f, const SolutionSet& sol, const GroebnerData& gb);

}  // namespace gres
