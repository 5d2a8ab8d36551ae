#include "gres/residue.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "gres/error.hpp"

namespace gres {

namespace {

Monomial separated_degrees(const std::vector<MultiPoly>& q) {
  Monomial d(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) d[j] = q[j].degree_in(j);
  return d;
}

// Coefficient of s^{d_q - 1} in a polynomial already reduced by q.
Scalar top_coefficient(const MultiPoly& reduced, const Monomial& dq) {
  Monomial m = dq;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) return 0;
    m[j] -= 1;
  }
  return reduced.coefficient(m);
}

void require_point(std::size_t n, std::span<const Scalar> w) {
  if (w.size() != n) throw Error(ErrorKind::arity_mismatch, "point has the wrong number of coordinates");
}

bool univariate_in(const MultiPoly& g, std::size_t var) {
  return std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) {
    for (std::size_t k = 0; k < t.first.size(); ++k) {
      if (k != var && t.first[k] != 0) return false;
    }
    return true;
  });
}

// Remainder modulo a monic g in var alone: each slice of f with fixed other
// exponents is reduced as a dense univariate polynomial.
MultiPoly slice_remainder(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  const std::uint32_t d = g.degree_in(var);
  if (!g.coefficient(Monomial::variable(g.nvars(), var, d)).is_one()) return univ_divmod(f, g, var).remainder;
  std::vector<Scalar> tail(d);
  for (const auto& [m, c] : g.terms()) {
    if (m[var] < d) tail[m[var]] = c;
  }
  std::map<Monomial, std::vector<Scalar>> slices;
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    rest[var] = 0;
    auto& a = slices[rest];
    if (a.size() <= m[var]) a.resize(m[var] + 1);
    a[m[var]] = c;
  }
  MultiPoly out(f.nvars());
  for (auto& [rest, a] : slices) {
    for (std::size_t top = a.size(); top-- > d;) {
      if (a[top].is_zero()) continue;
      const Scalar c = a[top];
      for (std::uint32_t k = 0; k < d; ++k) {
        if (!tail[k].is_zero()) a[top - d + k] -= c * tail[k];
      }
    }
    Monomial mk = rest;
    for (std::uint32_t k = 0; k < d && k < a.size(); ++k) {
      if (a[k].is_zero()) continue;
      mk[var] = k;
      out.add_term(mk, a[k]);
    }
  }
  return out;
}

}  // namespace

MultiPoly reduce_separated(const MultiPoly& f, const std::vector<MultiPoly>& q) {
  MultiPoly r = f;
  for (std::size_t j = 0; j < q.size(); ++j) {
    r = univariate_in(q[j], j) ? slice_remainder(r, q[j], j) : univ_divmod(r, q[j], j).remainder;
  }
  return r;
}

Scalar global_residue(const MultiPoly& h, const TransformationData& td) {
  if (h.nvars() != td.q.size()) throw Error(ErrorKind::arity_mismatch, "polynomial arity differs from the system");
  const MultiPoly reduced = reduce_separated(h * td.detA, td.q);
  return top_coefficient(reduced, separated_degrees(td.q));
}

Scalar global_residue(const MultiPoly& h, const ResidueSystem& sys) {
  if (h.nvars() != sys.nvars()) throw Error(ErrorKind::arity_mismatch, "polynomial arity differs from the system");
  const auto& q = sys.transformation().q;
  // Reducing h first keeps the product small; the residue only sees classes mod (q).
  const MultiPoly reduced = reduce_separated(reduce_separated(h, q) * sys.reduced_det(), q);
  return top_coefficient(reduced, separated_degrees(q));
}

Scalar global_residue(const MultiPoly& h, const IdealPresentation& pres) {
  return global_residue(h, ResidueSystem(pres));
}

ResidueSystem::ResidueSystem(IdealPresentation pres, UnivariateChoice choice)
    : pres_(std::move(pres)), gb_(buchberger(pres_)), td_(transformation_data(gb_, choice)) {
  finish();
}

ResidueSystem::ResidueSystem(IdealPresentation pres, GroebnerData gb, TransformationData td)
    : pres_(std::move(pres)), gb_(std::move(gb)), td_(std::move(td)) {
  if (td_.q.size() != pres_.nvars() || !satisfies_transformation_law(td_, pres_.generators())) {
    throw Error(ErrorKind::invariant_violation, "transformation law q = A p does not hold");
  }
  finish();
}

void ResidueSystem::finish() {
  reduced_det_ = reduce_separated(td_.detA, td_.q);
  residue_covector_.clear();
  residue_covector_.reserve(gb_.N());
  for (const auto& beta : gb_.standard_monomials) {
    residue_covector_.push_back(global_residue(MultiPoly::term(beta, 1), *this));
  }
}

Scalar ResidueSystem::residue_via_dual(const MultiPoly& h) const {
  return dot(coordinates(h, gb_), residue_covector_);
}

Scalar local_residue(const MultiPoly& h, const ResidueSystem& sys, std::span<const Scalar> w) {
  const std::size_t n = sys.nvars();
  if (h.nvars() != n) throw Error(ErrorKind::arity_mismatch, "polynomial arity differs from the system");
  require_point(n, w);
  if (!sys.presentation().vanishes_at(w)) {
    throw Error(ErrorKind::node_not_a_zero, "the point is not a common zero of the generators");
  }
  const auto& q = sys.transformation().q;

  // q_j = (s_j - w_j)^{m_j} r_j with r_j(w_j) != 0.
  Monomial m(n);
  std::vector<MultiPoly> r(n);
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly lin = MultiPoly::variable(n, j) - MultiPoly::constant(n, w[j]);
    MultiPoly cur = q[j];
    while (true) {
      DivModResult qr = univ_divmod(cur, lin, j);
      if (!qr.remainder.is_zero()) break;
      cur = std::move(qr.quotient);
      m[j] += 1;
    }
    if (m[j] == 0) throw Error(ErrorKind::invariant_violation, "separated polynomial does not vanish at the zero");
    r[j] = std::move(cur);
  }

  Monomial top(n);
  for (std::size_t j = 0; j < n; ++j) top[j] = m[j] - 1;

  // Inverse series of every r_j, univariate in t_j.
  std::vector<std::vector<Scalar>> inv(n);
  for (std::size_t j = 0; j < n; ++j) {
    Monomial order(n);
    order[j] = top[j];
    const MultiPoly t = series_inverse_truncated(r[j], w, order);
    inv[j].assign(m[j], Scalar(0));
    for (const auto& [e, c] : t.terms()) inv[j][e[j]] = c;
  }

  const MultiPoly hh = taylor_coefficients(h, w, top);
  const MultiPoly hd = taylor_coefficients(sys.reduced_det(), w, top);

  // Coefficient of t^{m-1} in hh * hd * prod_j inv_j.
  Scalar out;
  for (const auto& [a, ca] : hh.terms()) {
    const Monomial rest = top / a;
    Scalar acc;
    for (const auto& [b, cb] : hd.terms()) {
      if (!b.precedes(rest)) continue;
      Scalar t = cb;
      for (std::size_t j = 0; j < n && !t.is_zero(); ++j) t *= inv[j][rest[j] - b[j]];
      acc += t;
    }
    out += ca * acc;
  }
  return out;
}

Scalar local_residue(const MultiPoly& h, const IdealPresentation& pres, std::span<const Scalar> w) {
  return local_residue(h, ResidueSystem(pres), w);
}

std::size_t local_multiplicity(const ResidueSystem& sys, std::span<const Scalar> w) {
  const Scalar v = local_residue(jacobian_det(sys.presentation()), sys, w);
  if (!v.is_integer() || v.re() <= 0) {
    throw Error(ErrorKind::invariant_violation, "multiplicity is not a positive integer");
  }
  return v.re().get_num().get_ui();
}

MembershipCertificate membership_test(const MultiPoly& f, const ResidueSystem& sys) {
  MembershipCertificate cert;
  const auto& basis = sys.groebner().standard_monomials;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Scalar v = global_residue(f.shifted(basis[k]), sys);
    if (!v.is_zero()) {
      cert.witness = k;
      cert.witness_residue = v;
      return cert;
    }
  }
  cert.member = true;
  return cert;
}

}  // namespace gres
