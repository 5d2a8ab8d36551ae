#include "gres/matrix.hpp"

#include <utility>

#include "gres/error.hpp"

namespace gres {

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Scalar> ScalarMatrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void ScalarMatrix::set_column(std::size_t c, const std::vector<Scalar>& values) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values.at(r);
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool ScalarMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (!((*this)(r, c) == (*this)(c, r))) return false;
    }
  }
  return true;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::arity_mismatch, "matrix shapes do not match");
  ScalarMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
      }
    }
  }
  return r;
}

std::vector<Scalar> operator*(const ScalarMatrix& a, const std::vector<Scalar>& v) {
  if (a.cols_ != v.size()) throw Error(ErrorKind::arity_mismatch, "matrix/vector shapes do not match");
  std::vector<Scalar> r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    }
  }
  return r;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::arity_mismatch, "matrix shapes do not match");
  }
  ScalarMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::arity_mismatch, "vector lengths differ");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Scalar determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::arity_mismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  ScalarMatrix a = m;
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Scalar f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, const std::vector<Scalar>& rhs) {
  if (m.rows() != m.cols() || m.rows() != rhs.size()) {
    throw Error(ErrorKind::arity_mismatch, "linear system shapes do not match");
  }
  const std::size_t n = m.rows();
  ScalarMatrix a = m;
  std::vector<Scalar> b = rhs;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      std::swap(b[pivot], b[col]);
    }
    const Scalar inv = a(col, col).inverse();
    for (std::size_t c = col; c < n; ++c) a(col, c) *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Scalar f = a(r, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::vector<Scalar> characteristic_polynomial(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::arity_mismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  ScalarMatrix h = m;
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t sub = col + 1;
    std::size_t pivot = sub;
    while (pivot < n && h(pivot, col).is_zero()) ++pivot;
    if (pivot == n) continue;
    if (pivot != sub) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(pivot, c), h(sub, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, pivot), h(r, sub));
    }
    const Scalar inv = h(sub, col).inverse();
    for (std::size_t r = sub + 1; r < n; ++r) {
      if (h(r, col).is_zero()) continue;
      const Scalar u = h(r, col) * inv;
      for (std::size_t c = 0; c < n; ++c) h(r, c) -= u * h(sub, c);
      for (std::size_t rr = 0; rr < n; ++rr) h(rr, sub) += u * h(rr, r);
    }
  }
  // p_k = char poly of the leading k x k block.
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Scalar> pk(k + 1);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      pk[d + 1] += p[k - 1][d];
      pk[d] -= h(k - 1, k - 1) * p[k - 1][d];
    }
    Scalar t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (t.is_zero()) break;
      const Scalar f = t * h(k - i - 1, k - 1);
      if (f.is_zero()) continue;
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d) pk[d] -= f * p[k - i - 1][d];
    }
    p[k] = std::move(pk);
  }
  return p[n];
}

std::vector<Scalar> minimal_polynomial(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::arity_mismatch, "minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t len = n * n;
  auto flatten = [&](const ScalarMatrix& a) {
    std::vector<Scalar> v(len);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) v[r * n + c] = a(r, c);
    }
    return v;
  };
  // Incremental echelon basis of span{I, M, M^2, ...}; each stored row keeps
  // its expression in terms of the powers.
  struct Row {
    std::vector<Scalar> vec;
    std::vector<Scalar> combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  ScalarMatrix power = ScalarMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Row cur{flatten(power), std::vector<Scalar>(k + 1), 0};
    cur.combo[k] = 1;
    for (const auto& row : rows) {
      const Scalar f = cur.vec[row.pivot];
      if (f.is_zero()) continue;
      for (std::size_t i = 0; i < len; ++i) cur.vec[i] -= f * row.vec[i];
      for (std::size_t i = 0; i < row.combo.size(); ++i) cur.combo[i] -= f * row.combo[i];
    }
    std::size_t pivot = 0;
    while (pivot < len && cur.vec[pivot].is_zero()) ++pivot;
    if (pivot == len) return cur.combo;  // monic: coefficient of M^k is 1
    const Scalar inv = cur.vec[pivot].inverse();
    for (auto& x : cur.vec) x *= inv;
    for (auto& x : cur.combo) x *= inv;
    cur.pivot = pivot;
    rows.push_back(std::move(cur));
    power = power * m;
  }
  throw Error(ErrorKind::invariant_violation, "no linear dependence among matrix powers");
}

namespace {

MultiPoly det_cofactor(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row,
                       std::size_t nvars) {
  const std::size_t n = m.size();
  if (row == n) return MultiPoly::constant(nvars, 1);
  MultiPoly acc(nvars);
  bool negate = false;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!m[row][c].is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      MultiPoly minor = det_cofactor(m, cols, row + 1, nvars);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      MultiPoly term = m[row][c] * minor;
      if (negate) acc -= term; else acc += term;
    }
    negate = !negate;
  }
  return acc;
}

MultiPoly det_bareiss(PolyMatrix a, std::size_t nvars) {
  const std::size_t n = a.size();
  MultiPoly prev = MultiPoly::constant(nvars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return MultiPoly(nvars);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_divide(num, prev);
      }
      a[i][k] = MultiPoly(nvars);
    }
    prev = a[k][k];
  }
  MultiPoly d = a[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m, std::size_t nvars, DetMethod method) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::arity_mismatch, "determinant of a non-square matrix");
  }
  if (n == 0) return MultiPoly::constant(nvars, 1);
  if (method == DetMethod::automatic) method = n <= 4 ? DetMethod::cofactor : DetMethod::bareiss;
  if (method == DetMethod::cofactor) {
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return det_cofactor(m, cols, 0, nvars);
  }
  return det_bareiss(m, nvars);
}

}  // namespace gres
