#include <algorithm>
#include <map>

#include "gres/error.hpp"
#include "gres/ideal.hpp"

namespace gres {

IdealPresentation::IdealPresentation(std::vector<MultiPoly> generators, MonomialOrder order)
    : generators_(std::move(generators)), order_(order) {
  const std::size_t n = generators_.size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "at least one generator is required");
  for (std::size_t k = 0; k < n; ++k) {
    if (generators_[k].nvars() != n) {
      throw Error(ErrorKind::arity_mismatch, "generator " + std::to_string(k + 1) + " lives in " +
                                                 std::to_string(generators_[k].nvars()) +
                                                 " variables; expected " + std::to_string(n));
    }
    if (generators_[k].is_zero()) {
      throw Error(ErrorKind::invalid_argument, "generator " + std::to_string(k + 1) + " is identically zero");
    }
  }
}

bool IdealPresentation::vanishes_at(std::span<const Scalar> w) const {
  if (w.size() != nvars()) throw Error(ErrorKind::arity_mismatch, "point has the wrong dimension");
  return std::all_of(generators_.begin(), generators_.end(), [&](const MultiPoly& p) { return p.evaluate(w).is_zero(); });
}

std::optional<std::size_t> GroebnerData::index_of(const Monomial& m) const {
  for (std::size_t k = 0; k < standard_monomials.size(); ++k) {
    if (standard_monomials[k] == m) return k;
  }
  return std::nullopt;
}

namespace {

struct Division {
  MultiPoly remainder;
  std::vector<MultiPoly> quotients;  // one per basis element
};

Division divide(const MultiPoly& f, const GroebnerData& gb, bool track) {
  if (f.nvars() != gb.nvars) throw Error(ErrorKind::arity_mismatch, "polynomial and ideal have different arity");
  const std::size_t L = gb.basis.size();
  std::vector<Monomial> lms;
  lms.reserve(L);
  for (const auto& g : gb.basis) lms.push_back(g.leading_term(gb.order).first);

  std::map<Monomial, Scalar, DescendingBy> work(DescendingBy{gb.order});
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);
  Division out{MultiPoly(gb.nvars), std::vector<MultiPoly>(track ? L : 0, MultiPoly(gb.nvars))};
  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = it->first;
    const Scalar c = it->second;
    std::size_t i = 0;
    while (i < L && !lms[i].divides(m)) ++i;
    if (i == L) {
      out.remainder.add_term(m, c);
      work.erase(it);
      continue;
    }
    const Monomial t = m / lms[i];
    if (track) out.quotients[i].add_term(t, c);
    for (const auto& [gm, gc] : gb.basis[i].terms()) {
      const Scalar delta = -(c * gc);
      auto [wit, inserted] = work.try_emplace(gm * t, delta);
      if (!inserted) {
        wit->second += delta;
        if (wit->second.is_zero()) work.erase(wit);
      }
    }
  }
  return out;
}

}  // namespace

NormalForm normal_form(const MultiPoly& f, const GroebnerData& gb) {
  Division d = divide(f, gb, true);
  NormalForm nf{std::move(d.remainder), std::vector<MultiPoly>(gb.nvars, MultiPoly(gb.nvars))};
  for (std::size_t i = 0; i < d.quotients.size(); ++i) {
    if (d.quotients[i].is_zero()) continue;
    for (std::size_t k = 0; k < gb.nvars; ++k) {
      if (!gb.cofactors[i][k].is_zero()) nf.cofactors[k] += d.quotients[i] * gb.cofactors[i][k];
    }
  }
  return nf;
}

MultiPoly reduce(const MultiPoly& f, const GroebnerData& gb) { return divide(f, gb, false).remainder; }

std::vector<Scalar> coordinates(const MultiPoly& f, const GroebnerData& gb) {
  const MultiPoly r = reduce(f, gb);
  std::vector<Scalar> alpha(gb.N());
  for (std::size_t k = 0; k < gb.N(); ++k) alpha[k] = r.coefficient(gb.standard_monomials[k]);
  return alpha;
}

MultiPoly from_coordinates(const std::vector<Scalar>& alpha, const GroebnerData& gb) {
  if (alpha.size() != gb.N()) throw Error(ErrorKind::arity_mismatch, "coordinate vector has the wrong length");
  MultiPoly p(gb.nvars);
  for (std::size_t k = 0; k < alpha.size(); ++k) p.add_term(gb.standard_monomials[k], alpha[k]);
  return p;
}

ScalarMatrix multiplication_matrix(std::size_t var, const GroebnerData& gb) {
  if (var >= gb.nvars) throw Error(ErrorKind::invalid_argument, "variable index out of range");
  const std::size_t N = gb.N();
  ScalarMatrix m(N, N);
  const Monomial sv = Monomial::variable(gb.nvars, var);
  for (std::size_t k = 0; k < N; ++k) {
    m.set_column(k, coordinates(MultiPoly::term(gb.standard_monomials[k] * sv, 1), gb));
  }
  return m;
}

namespace {

MultiPoly univariate_from_coeffs(const std::vector<Scalar>& coeffs, std::size_t nvars, std::size_t var) {
  MultiPoly q(nvars);
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    q.add_term(Monomial::variable(nvars, var, static_cast<Monomial::exponent_type>(d)), coeffs[d]);
  }
  return q;
}

}  // namespace

MultiPoly univariate_in_ideal(std::size_t var, const GroebnerData& gb) {
  return univariate_from_coeffs(characteristic_polynomial(multiplication_matrix(var, gb)), gb.nvars, var);
}

bool satisfies_transformation_law(const TransformationData& td, const std::vector<MultiPoly>& generators) {
  const std::size_t n = generators.size();
  if (td.q.size() != n || td.A.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (td.A[j].size() != n) return false;
    MultiPoly rhs(n);
    for (std::size_t k = 0; k < n; ++k) rhs += td.A[j][k] * generators[k];
    if (!(rhs == td.q[j])) return false;
  }
  return true;
}

TransformationData transformation_data(const GroebnerData& gb, UnivariateChoice choice) {
  const std::size_t n = gb.nvars;
  TransformationData td;
  for (std::size_t j = 0; j < n; ++j) {
    const ScalarMatrix m = multiplication_matrix(j, gb);
    const auto coeffs = choice == UnivariateChoice::characteristic ? characteristic_polynomial(m) : minimal_polynomial(m);
    MultiPoly q = univariate_from_coeffs(coeffs, n, j);
    NormalForm nf = normal_form(q, gb);
    if (!nf.remainder.is_zero()) {
      throw Error(ErrorKind::invariant_violation, "univariate polynomial does not reduce to zero");
    }
    td.q.push_back(std::move(q));
    td.A.push_back(std::move(nf.cofactors));
  }
  if (!satisfies_transformation_law(td, gb.generators)) {
    throw Error(ErrorKind::invariant_violation, "q = A p does not hold");
  }
  td.detA = determinant(td.A, n);
  return td;
}

}  // namespace gres
