#include "gres/poly.hpp"

#include <algorithm>
#include <string>

#include "gres/error.hpp"

namespace gres {

namespace {

void require_same_arity(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::arity_mismatch, "polynomials live in " + std::to_string(a) + " and " +
                                               std::to_string(b) + " variables");
  }
}

// Powers w^0..w^max cached per coordinate.
std::vector<std::vector<Scalar>> power_table(std::span<const Scalar> w, std::uint32_t max) {
  std::vector<std::vector<Scalar>> table(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    table[j].reserve(max + 1);
    table[j].push_back(1);
    for (std::uint32_t e = 1; e <= max; ++e) table[j].push_back(table[j].back() * w[j]);
  }
  return table;
}

std::uint32_t max_exponent(const MultiPoly& p) {
  std::uint32_t m = 0;
  for (const auto& [mono, c] : p.terms()) {
    for (auto e : mono.exponents()) m = std::max(m, e);
  }
  return m;
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var) {
  return term(Monomial::variable(nvars, var), 1);
}

MultiPoly MultiPoly::term(const Monomial& m, const Scalar& c) {
  MultiPoly p(m.size());
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (m.size() != nvars_) require_same_arity(nvars_, m.size());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

bool MultiPoly::depends_only_on(std::size_t var) const {
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i != var && m[i] != 0) return false;
    }
  }
  return true;
}

std::pair<Monomial, Scalar> MultiPoly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(ErrorKind::invalid_argument, "leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (order.less(best->first, it->first)) best = it;
  }
  return *best;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  require_same_arity(nvars_, point.size());
  auto powers = power_table(point, max_exponent(*this));
  Scalar sum;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (m[j] != 0) t *= powers[j][m[j]];
    }
    sum += t;
  }
  return sum;
}

void MultiPoly::check_arity(const MultiPoly& o) const { require_same_arity(nvars_, o.nvars_); }

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

MultiPoly MultiPoly::shifted(const Monomial& m) const {
  require_same_arity(nvars_, m.size());
  MultiPoly r(nvars_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mono * m, c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

MultiPoly poly_canonical(std::size_t nvars, const std::vector<std::pair<Monomial, Scalar>>& raw) {
  MultiPoly p(nvars);
  for (const auto& [m, c] : raw) {
    if (m.size() != nvars) {
      throw Error(ErrorKind::arity_mismatch, "term with " + std::to_string(m.size()) +
                                                 " exponents in a ring of " + std::to_string(nvars) +
                                                 " variables");
    }
    p.add_term(m, c);
  }
  return p;
}

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly poly_diff(const MultiPoly& p, const Monomial& l) {
  require_same_arity(p.nvars(), l.size());
  MultiPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (!l.precedes(m)) continue;
    Scalar coeff = c;
    for (std::size_t j = 0; j < l.size(); ++j) {
      for (std::uint32_t k = 0; k < l[j]; ++k) coeff *= static_cast<long>(m[j] - k);
    }
    r.add_term(m / l, coeff);
  }
  return r;
}

MultiPoly taylor_shift(const MultiPoly& p, std::span<const Scalar> w) {
  require_same_arity(p.nvars(), w.size());
  MultiPoly cur = p;
  const auto powers = power_table(w, max_exponent(p));
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j].is_zero()) continue;
    MultiPoly next(p.nvars());
    for (const auto& [m, c] : cur.terms()) {
      // (t_j + w_j)^e = sum_k C(e,k) w_j^(e-k) t_j^k
      const auto e = m[j];
      Monomial mk = m;
      for (std::uint32_t k = 0; k <= e; ++k) {
        mk[j] = k;
        next.add_term(mk, c * binomial(e, k) * powers[j][e - k]);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

MultiPoly taylor_coefficients(const MultiPoly& p, std::span<const Scalar> w, const Monomial& bound) {
  require_same_arity(p.nvars(), w.size());
  require_same_arity(p.nvars(), bound.size());
  // One variable at a time: group the terms by their other exponents and
  // peel Taylor coefficients off each univariate slice by repeated
  // synthetic division by (s_j - w_j), keeping orders up to bound_j.
  MultiPoly cur = p;
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::map<Monomial, std::vector<Scalar>> slices;
    for (const auto& [m, c] : cur.terms()) {
      Monomial rest = m;
      rest[j] = 0;
      auto& a = slices[rest];
      if (a.size() <= m[j]) a.resize(m[j] + 1);
      a[m[j]] = c;
    }
    MultiPoly next(p.nvars());
    for (auto& [rest, a] : slices) {
      Monomial mk = rest;
      if (w[j].is_zero()) {
        for (std::uint32_t k = 0; k < a.size() && k <= bound[j]; ++k) {
          mk[j] = k;
          next.add_term(mk, a[k]);
        }
        continue;
      }
      for (std::uint32_t k = 0; k <= bound[j] && !a.empty(); ++k) {
        for (std::size_t i = a.size() - 1; i > 0; --i) a[i - 1] += w[j] * a[i];
        mk[j] = k;
        next.add_term(mk, a.front());
        a.erase(a.begin());
      }
    }
    cur = std::move(next);
  }
  return cur;
}

DivModResult univ_divmod(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  require_same_arity(f.nvars(), g.nvars());
  if (var >= f.nvars()) throw Error(ErrorKind::invalid_argument, "variable index out of range");
  if (g.is_zero()) throw Error(ErrorKind::division_error, "division by the zero polynomial");
  const std::uint32_t dg = g.degree_in(var);
  // Leading coefficient in var must be exactly the constant 1.
  Monomial top = Monomial::variable(g.nvars(), var, dg);
  for (const auto& [m, c] : g.terms()) {
    if (m[var] == dg && (m != top || !c.is_one())) {
      throw Error(ErrorKind::division_error, "divisor is not monic in the division variable");
    }
  }
  DivModResult out{MultiPoly(f.nvars()), f};
  while (!out.remainder.is_zero()) {
    const std::uint32_t dr = out.remainder.degree_in(var);
    if (dr < dg) break;
    MultiPoly step(f.nvars());
    for (const auto& [m, c] : out.remainder.terms()) {
      if (m[var] != dr) continue;
      Monomial shift = m;
      shift[var] = dr - dg;
      step.add_term(shift, c);
    }
    out.quotient += step;
    out.remainder -= step * g;
  }
  return out;
}

MultiPoly series_inverse_truncated(const MultiPoly& u, std::span<const Scalar> w, const Monomial& order) {
  require_same_arity(u.nvars(), w.size());
  require_same_arity(u.nvars(), order.size());
  const MultiPoly local = taylor_coefficients(u, w, order);
  const Scalar u0 = local.coefficient(Monomial(u.nvars()));
  if (u0.is_zero()) throw Error(ErrorKind::non_invertible, "series is not invertible at the node");
  const Scalar inv0 = u0.inverse();

  // Box monomials come out in lexicographic order, so every k - j with
  // j ≺ k, j != 0 is visited before k.
  const auto box = box_monomials(order);
  std::map<Monomial, Scalar> coeffs;
  for (const auto& k : box) {
    if (k.is_one()) {
      coeffs.emplace(k, inv0);
      continue;
    }
    Scalar acc;
    for (const auto& [j, uj] : local.terms()) {
      if (j.is_one() || !j.precedes(k)) continue;
      auto it = coeffs.find(k / j);
      if (it != coeffs.end()) acc += uj * it->second;
    }
    coeffs.emplace(k, -(acc * inv0));
  }
  MultiPoly t(u.nvars());
  for (const auto& [m, c] : coeffs) t.add_term(m, c);
  return t;
}

MultiPoly truncated_mul(const MultiPoly& a, const MultiPoly& b, const Monomial& bound) {
  require_same_arity(a.nvars(), b.nvars());
  MultiPoly r(a.nvars());
  for (const auto& [ma, ca] : a.terms()) {
    if (!ma.precedes(bound)) continue;
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma * mb;
      if (m.precedes(bound)) r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly embed(const MultiPoly& p, std::size_t new_nvars, std::span<const std::size_t> target) {
  require_same_arity(p.nvars(), target.size());
  MultiPoly r(new_nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial nm(new_nvars);
    for (std::size_t i = 0; i < target.size(); ++i) nm[target[i]] += m[i];
    r.add_term(nm, c);
  }
  return r;
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
  require_same_arity(f.nvars(), g.nvars());
  if (g.is_zero()) throw Error(ErrorKind::division_error, "division by the zero polynomial");
  const MonomialOrder order = MonomialOrder::lex();
  const auto [lm, lc] = g.leading_term(order);
  const Scalar lc_inv = lc.inverse();
  MultiPoly q(f.nvars());
  MultiPoly r = f;
  while (!r.is_zero()) {
    const auto [rm, rc] = r.leading_term(order);
    if (!lm.divides(rm)) throw Error(ErrorKind::division_error, "inexact polynomial division");
    MultiPoly t = MultiPoly::term(rm / lm, rc * lc_inv);
    q += t;
    r -= t * g;
  }
  return q;
}

}  // namespace gres
