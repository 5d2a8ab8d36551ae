#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gres/poly.hpp"
#include "gres/scalar.hpp"

namespace gres {

/// Dense row-major matrix over Q(i).
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Scalar>& values);

  ScalarMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend std::vector<Scalar> operator*(const ScalarMatrix& a, const std::vector<Scalar>& v);
  friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Determinant by exact Gaussian elimination.
Scalar determinant(const ScalarMatrix& m);

/// Solves m x = rhs; returns nullopt when m is singular.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& m, const std::vector<Scalar>& rhs);

/// Coefficients c_0..c_n (ascending, c_n = 1) of det(x I - m), via reduction
/// to Hessenberg form.
std::vector<Scalar> characteristic_polynomial(const ScalarMatrix& m);

/// Ascending coefficients of the monic minimal polynomial of m.
std::vector<Scalar> minimal_polynomial(const ScalarMatrix& m);

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

/// Square matrix with polynomial entries.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

enum class DetMethod { automatic, cofactor, bareiss };

/// Exact determinant of a square polynomial matrix. Automatic selection uses
/// cofactor expansion up to 4x4 and fraction-free Bareiss elimination above.
MultiPoly determinant(const PolyMatrix& m, std::size_t nvars, DetMethod method = DetMethod::automatic);

}  // namespace gres
