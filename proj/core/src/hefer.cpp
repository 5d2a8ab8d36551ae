#include <numeric>

#include "gres/error.hpp"
#include "gres/residue.hpp"

namespace gres {

HeferMatrix hefer_matrix(const IdealPresentation& pres) {
  std::vector<std::size_t> order(pres.nvars());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return hefer_matrix(pres, order);
}

HeferMatrix hefer_matrix(const IdealPresentation& pres, std::span<const std::size_t> variable_order) {
  const std::size_t n = pres.nvars();
  const std::size_t n2 = 2 * n;
  {
    std::vector<bool> seen(n, false);
    if (variable_order.size() != n) throw Error(ErrorKind::invalid_argument, "variable order must be a permutation");
    for (auto v : variable_order) {
      if (v >= n || seen[v]) throw Error(ErrorKind::invalid_argument, "variable order must be a permutation");
      seen[v] = true;
    }
  }
  HeferMatrix b;
  b.nvars = n;
  b.variable_order.assign(variable_order.begin(), variable_order.end());
  b.entries.assign(n, std::vector<MultiPoly>(n, MultiPoly(n2)));

  for (std::size_t j = 0; j < n; ++j) {
    // stage k: variables variable_order[0..k) already moved to z.
    std::vector<std::size_t> target(n);
    std::iota(target.begin(), target.end(), std::size_t{0});
    MultiPoly before = embed(pres.generators()[j], n2, target);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t v = variable_order[k];
      target[v] = n + v;
      MultiPoly after = embed(pres.generators()[j], n2, target);
      MultiPoly divisor = MultiPoly::variable(n2, v) - MultiPoly::variable(n2, n + v);
      DivModResult qr = univ_divmod(before - after, divisor, v);
      if (!qr.remainder.is_zero()) {
        throw Error(ErrorKind::invariant_violation, "telescoping difference is not divisible by s - z");
      }
      b.entries[j][v] = std::move(qr.quotient);
      before = std::move(after);
    }
  }
  if (!satisfies_bezoutian_identity(b, pres.generators())) {
    throw Error(ErrorKind::invariant_violation, "Bézoutian identity fails");
  }
  b.det = determinant(b.entries, n2);
  return b;
}

bool satisfies_bezoutian_identity(const HeferMatrix& b, const std::vector<MultiPoly>& generators) {
  const std::size_t n = b.nvars;
  const std::size_t n2 = 2 * n;
  std::vector<std::size_t> s_target(n), z_target(n);
  std::iota(s_target.begin(), s_target.end(), std::size_t{0});
  std::iota(z_target.begin(), z_target.end(), n);
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly lhs = embed(generators[j], n2, s_target) - embed(generators[j], n2, z_target);
    MultiPoly rhs(n2);
    for (std::size_t l = 0; l < n; ++l) {
      rhs += b.entries[j][l] * (MultiPoly::variable(n2, l) - MultiPoly::variable(n2, n + l));
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

MultiPoly jacobian_det(const IdealPresentation& pres) {
  const std::size_t n = pres.nvars();
  PolyMatrix jac(n, std::vector<MultiPoly>(n, MultiPoly(n)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) jac[j][l] = poly_diff(pres.generators()[j], Monomial::variable(n, l));
  }
  return determinant(jac, n);
}

}  // namespace gres
