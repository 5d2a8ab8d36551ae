#pragma once

// Reference computations used to check the library. They only rely on
// scalar arithmetic and dense univariate/linear algebra written here.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gres/gres.hpp"

namespace oracle {

using gres::Monomial;
using gres::MultiPoly;
using gres::Scalar;

/// Dense univariate polynomial, ascending coefficients.
using UPoly = std::vector<Scalar>;

inline UPoly trim(UPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return trim(r);
}

inline UPoly monomial(std::size_t k) {
  UPoly r(k + 1);
  r[k] = 1;
  return r;
}

inline UPoly from_roots(const std::vector<Scalar>& roots, const std::vector<unsigned>& mults) {
  UPoly p{Scalar(1)};
  for (std::size_t l = 0; l < roots.size(); ++l) {
    for (unsigned e = 0; e < mults[l]; ++e) p = mul(p, UPoly{-roots[l], Scalar(1)});
  }
  return p;
}

/// Remainder of f by a monic g.
inline UPoly rem(UPoly f, const UPoly& g) {
  const std::size_t d = g.size() - 1;
  f = trim(f);
  while (f.size() > d) {
    const Scalar lead = f.back();
    const std::size_t shift = f.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) f[shift + i] -= lead * g[i];
    f = trim(f);
  }
  return f;
}

inline Scalar eval(const UPoly& p, const Scalar& x) {
  Scalar v;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

inline UPoly derivative(const UPoly& p) {
  if (p.size() <= 1) return {};
  UPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Scalar(static_cast<long>(i));
  return d;
}

/// Sum of the residues of h(x)/p(x) over all roots: the x^{d-1} coefficient
/// of h mod p.
inline Scalar residue(const UPoly& h, const UPoly& p) {
  const UPoly r = rem(h, p);
  const std::size_t d = p.size() - 1;
  return d >= 1 && r.size() >= d ? r[d - 1] : Scalar(0);
}

/// Coefficients of p(xi + t) in t.
inline UPoly shift(UPoly p, const Scalar& xi) {
  // Repeated synthetic division by (x - xi).
  UPoly out;
  while (!(p = trim(p)).empty()) {
    UPoly q(p.size() - 1);
    Scalar carry;
    for (std::size_t i = p.size(); i-- > 0;) {
      carry = carry * xi + p[i];
      if (i > 0) q[i - 1] = carry;
    }
    out.push_back(carry);
    p = q;
  }
  return out;
}

/// Residue of h/p at the root roots[idx], p = prod (x - roots_l)^{mults_l}.
inline Scalar local_residue(const UPoly& h, const std::vector<Scalar>& roots, const std::vector<unsigned>& mults,
                            std::size_t idx) {
  const unsigned nu = mults[idx];
  std::vector<Scalar> others;
  std::vector<unsigned> other_mults;
  for (std::size_t l = 0; l < roots.size(); ++l) {
    if (l == idx) continue;
    others.push_back(roots[l]);
    other_mults.push_back(mults[l]);
  }
  UPoly r = shift(from_roots(others, other_mults), roots[idx]);
  UPoly hh = shift(h, roots[idx]);
  r.resize(nu);
  hh.resize(nu);
  // 1/r as a power series in t.
  UPoly inv(nu);
  inv[0] = r[0].inverse();
  for (std::size_t k = 1; k < nu; ++k) {
    Scalar acc;
    for (std::size_t i = 1; i <= k; ++i) acc += r[i] * inv[k - i];
    inv[k] = -(acc * inv[0]);
  }
  Scalar out;
  for (std::size_t i = 0; i < nu; ++i) out += hh[i] * inv[nu - 1 - i];
  return out;
}

/// Separated system p_j(s_j) = prod_l (s_j - roots[j][l])^{mults[j][l]}.
struct Separated {
  std::vector<std::vector<Scalar>> roots;
  std::vector<std::vector<unsigned>> mults;

  std::size_t nvars() const { return roots.size(); }
  UPoly factor(std::size_t j) const { return from_roots(roots[j], mults[j]); }
  std::vector<MultiPoly> generators() const {
    const std::size_t n = nvars();
    std::vector<MultiPoly> gens;
    for (std::size_t j = 0; j < n; ++j) {
      const UPoly c = factor(j);
      MultiPoly p(n);
      for (std::size_t e = 0; e < c.size(); ++e) p.add_term(Monomial::variable(n, j, static_cast<std::uint32_t>(e)), c[e]);
      gens.push_back(p);
    }
    return gens;
  }
  std::size_t dimension() const {
    std::size_t N = 1;
    for (std::size_t j = 0; j < nvars(); ++j) N *= factor(j).size() - 1;
    return N;
  }
  /// Every zero as a root index per variable.
  std::vector<std::vector<std::size_t>> zero_indices() const {
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t j = 0; j < nvars(); ++j) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& prefix : out) {
        for (std::size_t l = 0; l < roots[j].size(); ++l) {
          auto v = prefix;
          v.push_back(l);
          next.push_back(v);
        }
      }
      out = next;
    }
    return out;
  }
  gres::Point point(const std::vector<std::size_t>& idx) const {
    gres::Point w;
    for (std::size_t j = 0; j < nvars(); ++j) w.push_back(roots[j][idx[j]]);
    return w;
  }
  unsigned multiplicity(const std::vector<std::size_t>& idx) const {
    unsigned m = 1;
    for (std::size_t j = 0; j < nvars(); ++j) m *= mults[j][idx[j]];
    return m;
  }
};

/// Res[h ds / p] for separated p, term by term as products of univariate residues.
inline Scalar separated_residue(const MultiPoly& h, const Separated& sep) {
  Scalar total;
  for (const auto& [m, c] : h.terms()) {
    Scalar t = c;
    for (std::size_t j = 0; j < sep.nvars() && !t.is_zero(); ++j) t *= residue(monomial(m[j]), sep.factor(j));
    total += t;
  }
  return total;
}

inline Scalar separated_local_residue(const MultiPoly& h, const Separated& sep, const std::vector<std::size_t>& idx) {
  Scalar total;
  for (const auto& [m, c] : h.terms()) {
    Scalar t = c;
    for (std::size_t j = 0; j < sep.nvars() && !t.is_zero(); ++j) {
      t *= local_residue(monomial(m[j]), sep.roots[j], sep.mults[j], idx[j]);
    }
    total += t;
  }
  return total;
}

/// Dense square matrix of scalars, row-major.
using Dense = std::vector<std::vector<Scalar>>;

inline Scalar det(Dense a) {
  const std::size_t n = a.size();
  Scalar d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

inline std::vector<Scalar> solve(Dense a, std::vector<Scalar> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::runtime_error("oracle: singular system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

inline Dense inverse(const Dense& a) {
  const std::size_t n = a.size();
  Dense inv(n, std::vector<Scalar>(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Scalar> e(n);
    e[c] = 1;
    const auto col = solve(a, e);
    for (std::size_t r = 0; r < n; ++r) inv[r][c] = col[r];
  }
  return inv;
}

/// p(L s): variable s_j replaced by sum_k L[j][k] s_k.
inline MultiPoly compose_linear(const MultiPoly& p, const Dense& L) {
  const std::size_t n = p.nvars();
  std::vector<MultiPoly> images;
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly lin(n);
    for (std::size_t k = 0; k < n; ++k) lin.add_term(Monomial::variable(n, k), L[j][k]);
    images.push_back(lin);
  }
  MultiPoly out(n);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(n, c);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::uint32_t e = 0; e < m[j]; ++e) t = t * images[j];
    }
    out += t;
  }
  return out;
}

inline std::vector<Scalar> apply(const Dense& L, const std::vector<Scalar>& v) {
  std::vector<Scalar> r(L.size());
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) r[i] += L[i][k] * v[k];
  }
  return r;
}

/// Hermite interpolant of f on prod (x - roots_l)^{mults_l}: the polynomial
/// of degree < sum mults with the same derivatives up to order mults_l - 1.
inline UPoly hermite(const UPoly& f, const std::vector<Scalar>& roots, const std::vector<unsigned>& mults) {
  std::size_t d = 0;
  for (unsigned m : mults) d += m;
  Dense a;
  std::vector<Scalar> b;
  for (std::size_t l = 0; l < roots.size(); ++l) {
    UPoly fd = f;
    std::vector<UPoly> basis_d(d);
    for (std::size_t k = 0; k < d; ++k) basis_d[k] = monomial(k);
    for (unsigned order = 0; order < mults[l]; ++order) {
      std::vector<Scalar> row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = eval(basis_d[k], roots[l]);
      a.push_back(row);
      b.push_back(eval(fd, roots[l]));
      fd = derivative(fd);
      for (auto& bk : basis_d) bk = derivative(bk);
    }
  }
  return trim(solve(a, b));
}

/// det(x I - M) through values at dim+1 points and Newton interpolation.
inline UPoly charpoly(const Dense& m) {
  const std::size_t n = m.size();
  std::vector<Scalar> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    const Scalar x(static_cast<long>(k));
    Dense a = m;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = -a[i][j];
      a[i][i] += x;
    }
    xs.push_back(x);
    ys.push_back(det(a));
  }
  // Vandermonde solve.
  Dense v(n + 1, std::vector<Scalar>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    Scalar p = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      v[i][j] = p;
      p *= xs[i];
    }
  }
  return solve(v, ys);
}

}  // namespace oracle
