#include "gres/interpolation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "gres/error.hpp"

namespace gres {

QpMatrix qp_matrix(const ResidueSystem& sys) {
  const auto& basis = sys.groebner().standard_monomials;
  const std::size_t n = basis.size();
  std::map<Monomial, Scalar> cache;
  QpMatrix out{ScalarMatrix(n, n), basis};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Monomial m = basis[a] * basis[b];
      auto it = cache.find(m);
      if (it == cache.end()) it = cache.emplace(m, global_residue(MultiPoly::term(m, 1), sys)).first;
      out.entries(a, b) = it->second;
      out.entries(b, a) = it->second;
    }
  }
  if (determinant(out.entries).is_zero()) {
    throw Error(ErrorKind::invariant_violation, "residue pairing matrix is singular");
  }
  return out;
}

namespace {

void check_nodes(const std::vector<Point>& nodes, const std::vector<Monomial>& multiplicities) {
  if (nodes.empty()) throw Error(ErrorKind::invalid_argument, "at least one node is required");
  if (nodes.size() != multiplicities.size()) {
    throw Error(ErrorKind::arity_mismatch, "one multiplicity vector per node is required");
  }
  const std::size_t n = nodes.front().size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "nodes must have at least one coordinate");
  for (std::size_t l = 0; l < nodes.size(); ++l) {
    if (nodes[l].size() != n || multiplicities[l].size() != n) {
      throw Error(ErrorKind::arity_mismatch, "nodes and multiplicities must share one dimension");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (multiplicities[l][j] == 0) throw Error(ErrorKind::invalid_argument, "multiplicities must be positive");
    }
    for (std::size_t k = 0; k < l; ++k) {
      if (nodes[k] == nodes[l]) throw Error(ErrorKind::invalid_argument, "nodes must be pairwise distinct");
    }
  }
}

// Coefficients of prod_l (x - xi_l)^{nu_l}, ascending.
std::vector<Scalar> univariate_factor_product(const std::vector<Point>& nodes,
                                              const std::vector<Monomial>& multiplicities, std::size_t j) {
  std::vector<Scalar> c{Scalar(1)};
  for (std::size_t l = 0; l < nodes.size(); ++l) {
    for (std::uint32_t e = 0; e < multiplicities[l][j]; ++e) {
      std::vector<Scalar> next(c.size() + 1);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= nodes[l][j] * c[i];
      }
      c = std::move(next);
    }
  }
  return c;
}

// res[k] = Res[x^k dx / p(x)] for k < limit, from 1/p = x^{-d} / (1 + u(1/x)).
std::vector<Scalar> univariate_residues(const std::vector<Scalar>& p, std::size_t limit) {
  const std::size_t d = p.size() - 1;
  // u(y) = sum_{i=1}^{d} c_{d-i} y^i, g = 1 / (1 + u).
  std::vector<Scalar> g(limit + 1);
  g[0] = 1;
  for (std::size_t m = 1; m <= limit; ++m) {
    Scalar acc;
    for (std::size_t i = 1; i <= std::min(m, d); ++i) acc += p[d - i] * g[m - i];
    g[m] = -acc;
  }
  std::vector<Scalar> res(limit);
  for (std::size_t k = 0; k < limit; ++k) {
    if (k + 1 >= d) res[k] = g[k + 1 - d];
  }
  return res;
}

}  // namespace

IdealPresentation separated_presentation(const std::vector<Point>& nodes,
                                         const std::vector<Monomial>& multiplicities, MonomialOrder order) {
  check_nodes(nodes, multiplicities);
  const std::size_t n = nodes.front().size();
  std::vector<MultiPoly> gens;
  for (std::size_t j = 0; j < n; ++j) {
    const auto c = univariate_factor_product(nodes, multiplicities, j);
    MultiPoly p(n);
    for (std::size_t e = 0; e < c.size(); ++e) p.add_term(Monomial::variable(n, j, static_cast<std::uint32_t>(e)), c[e]);
    gens.push_back(std::move(p));
  }
  return IdealPresentation(std::move(gens), order);
}

std::vector<Monomial> euclid_basis(const std::vector<Point>& nodes, const std::vector<Monomial>& multiplicities) {
  check_nodes(nodes, multiplicities);
  const std::size_t n = nodes.front().size();
  Monomial top(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& nu : multiplicities) top[j] += nu[j];
    top[j] -= 1;
  }
  return box_monomials(top);
}

QpMatrix qp_matrix_euclid(const std::vector<Point>& nodes, const std::vector<Monomial>& multiplicities) {
  const auto basis = euclid_basis(nodes, multiplicities);
  const std::size_t n = nodes.front().size();
  std::vector<std::vector<Scalar>> res(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto p = univariate_factor_product(nodes, multiplicities, j);
    res[j] = univariate_residues(p, 2 * (p.size() - 1));
  }
  const std::size_t N = basis.size();
  QpMatrix out{ScalarMatrix(N, N), basis};
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      Scalar v = 1;
      for (std::size_t j = 0; j < n && !v.is_zero(); ++j) v *= res[j][basis[a][j] + basis[b][j]];
      out.entries(a, b) = v;
    }
  }
  return out;
}

std::vector<std::size_t> basis_permutation(const std::vector<Monomial>& from, const std::vector<Monomial>& to) {
  if (from.size() != to.size()) throw Error(ErrorKind::invalid_argument, "bases have different sizes");
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < from.size(); ++i) index.emplace(from[i], i);
  std::vector<std::size_t> perm(to.size());
  std::vector<bool> used(from.size(), false);
  for (std::size_t i = 0; i < to.size(); ++i) {
    auto it = index.find(to[i]);
    if (it == index.end() || used[it->second]) {
      throw Error(ErrorKind::invalid_argument, "bases are not rearrangements of each other");
    }
    used[it->second] = true;
    perm[i] = it->second;
  }
  return perm;
}

QpMatrix permute(const QpMatrix& q, const std::vector<Monomial>& basis) {
  const auto perm = basis_permutation(q.basis, basis);
  QpMatrix out{ScalarMatrix(basis.size(), basis.size()), basis};
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) out.entries(a, b) = q.entries(perm[a], perm[b]);
  }
  return out;
}

MultiPoly lagrange_poly(const MultiPoly& f, const GroebnerData& gb) { return reduce(f, gb); }

namespace {

// det B = sum_k c_k(s) z^k.
std::map<Monomial, MultiPoly> split_kernel(const MultiPoly& det, std::size_t n) {
  std::map<Monomial, MultiPoly> out;
  for (const auto& [m, c] : det.terms()) {
    Monomial zs(n), ss(n);
    for (std::size_t j = 0; j < n; ++j) {
      ss[j] = m[j];
      zs[j] = m[n + j];
    }
    auto it = out.try_emplace(zs, MultiPoly(n)).first;
    it->second.add_term(ss, c);
  }
  return out;
}

}  // namespace

MultiPoly lagrange_poly_hefer(const MultiPoly& f, const ResidueSystem& sys, const HeferMatrix& b) {
  const std::size_t n = sys.nvars();
  if (b.nvars != n || f.nvars() != n) throw Error(ErrorKind::arity_mismatch, "kernel arity differs from the system");
  MultiPoly out(n);
  for (const auto& [zk, ck] : split_kernel(b.det, n)) out.add_term(zk, global_residue(f * ck, sys));
  return reduce(out, sys.groebner());
}

MultiPoly Jet::germ() const {
  const std::size_t n = node.size();
  MultiPoly g(n);
  for (const auto& [l, a] : coefficients) {
    MultiPoly t = MultiPoly::constant(n, a * Scalar(l.factorial_product()).inverse());
    for (std::size_t j = 0; j < n; ++j) {
      if (l[j] == 0) continue;
      MultiPoly lin = MultiPoly::variable(n, j) - MultiPoly::constant(n, node[j]);
      t = t * lin.pow(l[j]);
    }
    g += t;
  }
  return g;
}

Jet make_jet(Point node, std::map<Monomial, Scalar> coefficients, std::optional<Monomial> bound) {
  const std::size_t n = node.size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "jet node must have at least one coordinate");
  Jet jet{std::move(node), {}, bound.value_or(Monomial(n))};
  if (jet.bound.size() != n) throw Error(ErrorKind::arity_mismatch, "jet bound has the wrong arity");
  for (auto& [l, a] : coefficients) {
    if (l.size() != n) throw Error(ErrorKind::arity_mismatch, "jet exponent has the wrong arity");
    if (a.is_zero()) continue;
    if (bound) {
      if (!l.precedes(jet.bound)) throw Error(ErrorKind::invalid_argument, "jet term exceeds its bound");
    } else {
      for (std::size_t j = 0; j < n; ++j) jet.bound[j] = std::max(jet.bound[j], l[j]);
    }
    jet.coefficients.emplace(l, a);
  }
  return jet;
}

std::vector<Scalar> noetherian_covector(const std::vector<Jet>& jets, const ResidueSystem& sys) {
  const auto& basis = sys.groebner().standard_monomials;
  std::vector<Scalar> lambda(basis.size());
  for (const auto& jet : jets) {
    if (jet.coefficients.empty()) continue;
    const MultiPoly g = jet.germ();
    for (std::size_t k = 0; k < basis.size(); ++k) lambda[k] += local_residue(g.shifted(basis[k]), sys, jet.node);
  }
  return lambda;
}

MultiPoly lagrange_jets(const std::vector<Jet>& jets, const ResidueSystem& sys, const QpMatrix& qp) {
  const auto v = noetherian_covector(jets, sys);
  const auto alpha = solve(qp.entries, v);
  if (!alpha) throw Error(ErrorKind::invariant_violation, "residue pairing matrix is singular");
  return from_coordinates(*alpha, sys.groebner());
}

MultiPoly lagrange_jets(const std::vector<Jet>& jets, const ResidueSystem& sys) {
  return lagrange_jets(jets, sys, qp_matrix(sys));
}

std::vector<Scalar> tau_coefficients(const std::vector<Jet>& jets, const std::vector<Point>& nodes,
                                     const std::vector<Monomial>& multiplicities) {
  const ResidueSystem sys(separated_presentation(nodes, multiplicities));
  const auto basis = euclid_basis(nodes, multiplicities);
  const std::size_t n = sys.nvars();
  const HeferMatrix b = hefer_matrix(sys.presentation());
  std::vector<Scalar> tau(basis.size());
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  for (const auto& jet : jets) {
    if (jet.coefficients.empty()) continue;
    const MultiPoly g = jet.germ();
    for (const auto& [zk, ck] : split_kernel(b.det, n)) {
      auto it = index.find(zk);
      if (it == index.end()) throw Error(ErrorKind::invariant_violation, "kernel degree exceeds the separated box");
      tau[it->second] += local_residue(g * ck, sys, jet.node);
    }
  }
  return tau;
}

Scalar apply_derivative_functional(const std::vector<Jet>& jets, const MultiPoly& f) {
  Scalar v;
  for (const auto& jet : jets) {
    if (f.nvars() != jet.node.size()) throw Error(ErrorKind::arity_mismatch, "jet arity differs from the polynomial");
    for (const auto& [l, a] : jet.coefficients) v += a * poly_diff(f, l).evaluate(jet.node);
  }
  return v;
}

std::vector<Scalar> derivative_covector(const std::vector<Jet>& jets, const GroebnerData& gb) {
  const std::size_t n = gb.nvars;
  // The functional only sees the jet of its argument up to each bound, and
  // jets at distinct points are independent, so it kills (p) iff every node
  // part kills (s - w)^g p_m for all g ≺ bound.
  for (const auto& jet : jets) {
    if (jet.coefficients.empty()) continue;
    const std::vector<Jet> single{jet};
    for (const auto& gamma : box_monomials(jet.bound)) {
      MultiPoly shift = MultiPoly::constant(n, 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (gamma[j] == 0) continue;
        shift = shift * (MultiPoly::variable(n, j) - MultiPoly::constant(n, jet.node[j])).pow(gamma[j]);
      }
      for (const auto& p : gb.generators) {
        if (!apply_derivative_functional(single, shift * p).is_zero()) {
          throw Error(ErrorKind::ill_posed_functional,
                      "derivative data exceeds the multiplicity of the ideal at a node");
        }
      }
    }
  }
  std::vector<Scalar> lambda;
  lambda.reserve(gb.N());
  for (const auto& beta : gb.standard_monomials) {
    lambda.push_back(apply_derivative_functional(jets, MultiPoly::term(beta, 1)));
  }
  return lambda;
}

const char* to_string(Flavor flavor) {
  return flavor == Flavor::noetherian ? "noetherian" : "derivative";
}

Flavor flavor_from_name(const std::string& name) {
  if (name == "noetherian") return Flavor::noetherian;
  if (name == "derivative") return Flavor::derivative;
  throw Error(ErrorKind::invalid_argument, "unknown flavor '" + name + "'");
}

const char* to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::all_functions: return "all_functions";
    case SolutionKind::empty: return "empty";
    case SolutionKind::hyperplane: return "hyperplane";
  }
  return "empty";
}

void validate_problem(const InterpolationProblem& prob) {
  const std::size_t n = prob.pres.nvars();
  for (std::size_t i = 0; i < prob.jets.size(); ++i) {
    const auto& jet = prob.jets[i];
    if (jet.node.size() != n) throw Error(ErrorKind::arity_mismatch, "jet node has the wrong number of coordinates");
    if (!prob.pres.vanishes_at(jet.node)) {
      throw Error(ErrorKind::node_not_a_zero, "jet node is not a common zero of the generators");
    }
    for (std::size_t k = 0; k < i; ++k) {
      if (prob.jets[k].node == jet.node) throw Error(ErrorKind::invalid_argument, "jet nodes must be pairwise distinct");
    }
  }
}

namespace {

SolutionSet classify(std::vector<Scalar> lambda, const Scalar& c, const GroebnerData& gb) {
  SolutionSet sol;
  sol.c = c;
  sol.basis = gb.standard_monomials;
  const bool zero = std::all_of(lambda.begin(), lambda.end(), [](const Scalar& x) { return x.is_zero(); });
  if (zero) {
    sol.kind = c.is_zero() ? SolutionKind::all_functions : SolutionKind::empty;
    return sol;
  }
  sol.kind = SolutionKind::hyperplane;
  sol.lambda = std::move(lambda);
  return sol;
}

}  // namespace

SolutionSet solve_problem(const InterpolationProblem& prob) {
  validate_problem(prob);
  if (prob.flavor == Flavor::derivative) {
    const GroebnerData gb = buchberger(prob.pres);
    return classify(derivative_covector(prob.jets, gb), prob.c, gb);
  }
  return solve_problem(prob, ResidueSystem(prob.pres));
}

SolutionSet solve_problem(const InterpolationProblem& prob, const ResidueSystem& sys) {
  validate_problem(prob);
  const GroebnerData& gb = sys.groebner();
  if (prob.flavor == Flavor::derivative) return classify(derivative_covector(prob.jets, gb), prob.c, gb);
  return classify(noetherian_covector(prob.jets, sys), prob.c, gb);
}

bool verify_solution(const MultiPoly& f, const SolutionSet& sol, const GroebnerData& gb) {
  switch (sol.kind) {
    case SolutionKind::all_functions: return true;
    case SolutionKind::empty: return false;
    case SolutionKind::hyperplane: break;
  }
  if (sol.basis != gb.standard_monomials) {
    throw Error(ErrorKind::invalid_argument, "solution basis does not match the Gröbner data");
  }
  return dot(sol.lambda, coordinates(f, gb)) == sol.c;
}

}  // namespace gres
