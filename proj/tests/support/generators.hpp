#pragma once

// Seeded random inputs for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "gres/gres.hpp"
#include "support/oracles.hpp"

namespace gen {

using gres::Monomial;
using gres::MultiPoly;
using gres::Scalar;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin(int percent) { return uniform(0, 99) < percent; }

  Scalar small_int(long r) { return Scalar(uniform(-r, r)); }
  Scalar small_rational() { return gres::GaussianRational::fraction(uniform(-4, 4), uniform(1, 3)); }
  Scalar small_gaussian() {
    Scalar v = small_rational();
    if (coin(30)) v += Scalar(uniform(-2, 2)) * Scalar::i();
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

inline Monomial random_monomial(Rng& rng, std::size_t n, unsigned max_degree) {
  Monomial m(n);
  const long total = rng.uniform(0, max_degree);
  for (long k = 0; k < total; ++k) m[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))] += 1;
  return m;
}

inline MultiPoly random_poly(Rng& rng, std::size_t n, unsigned max_degree, int max_terms, bool complex = false) {
  MultiPoly p(n);
  const long terms = rng.uniform(0, max_terms);
  for (long t = 0; t < terms; ++t) {
    p.add_term(random_monomial(rng, n, max_degree), complex ? rng.small_gaussian() : rng.small_int(3));
  }
  return p;
}

/// Separated system with rational roots, deg p_j ≤ max_degree and
/// prod deg p_j ≤ max_N.
inline oracle::Separated random_separated(Rng& rng, std::size_t n, std::size_t max_N, unsigned max_degree = 3,
                                          bool simple = false) {
  oracle::Separated sep;
  std::size_t budget = max_N;
  for (std::size_t j = 0; j < n; ++j) {
    const long d = rng.uniform(1, static_cast<long>(std::min<std::size_t>(max_degree, budget)));
    budget /= static_cast<std::size_t>(d);
    std::vector<Scalar> roots;
    std::vector<unsigned> mults;
    long left = d;
    while (left > 0) {
      const long m = simple ? 1 : rng.uniform(1, left);
      Scalar xi;
      do {
        xi = rng.coin(70) ? Scalar(rng.uniform(-3, 3)) : rng.small_rational();
      } while (std::find(roots.begin(), roots.end(), xi) != roots.end());
      roots.push_back(xi);
      mults.push_back(static_cast<unsigned>(m));
      left -= m;
    }
    sep.roots.push_back(roots);
    sep.mults.push_back(mults);
  }
  return sep;
}

inline oracle::Dense random_invertible(Rng& rng, std::size_t n, long range = 2) {
  while (true) {
    oracle::Dense a(n, std::vector<Scalar>(n));
    for (auto& row : a) {
      for (auto& x : row) x = rng.small_int(range);
    }
    if (!oracle::det(a).is_zero()) return a;
  }
}

/// P_i = sum_j M[i][j] p_j(L s) for a separated p: rational zeros L^{-1} xi
/// and residues known through the separated oracle.
struct Transformed {
  oracle::Separated sep;
  oracle::Dense L, M, L_inv;
  std::vector<MultiPoly> generators;

  std::size_t nvars() const { return sep.nvars(); }

  gres::Point zero(const std::vector<std::size_t>& idx) const { return oracle::apply(L_inv, sep.point(idx)); }

  /// Res[h ds / P] = Res[h(L^{-1} u) du / p(u)] / (det M det L).
  Scalar residue(const MultiPoly& h) const {
    return oracle::separated_residue(oracle::compose_linear(h, L_inv), sep) / (oracle::det(M) * oracle::det(L));
  }
  Scalar local_residue(const MultiPoly& h, const std::vector<std::size_t>& idx) const {
    return oracle::separated_local_residue(oracle::compose_linear(h, L_inv), sep, idx) /
           (oracle::det(M) * oracle::det(L));
  }
};

inline Transformed transform(Rng& rng, oracle::Separated sep, bool mix = true) {
  const std::size_t n = sep.nvars();
  Transformed t;
  t.sep = std::move(sep);
  t.L = random_invertible(rng, n);
  t.L_inv = oracle::inverse(t.L);
  if (mix) {
    t.M = random_invertible(rng, n);
  } else {
    t.M.assign(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) t.M[i][i] = 1;
  }
  std::vector<MultiPoly> composed;
  for (const auto& p : t.sep.generators()) composed.push_back(oracle::compose_linear(p, t.L));
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly g(n);
    for (std::size_t j = 0; j < n; ++j) g += composed[j] * t.M[i][j];
    t.generators.push_back(g);
  }
  return t;
}

}  // namespace gen
