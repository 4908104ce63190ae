#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "seifert/error.hpp"
#include "seifert/rational.hpp"

namespace seifert {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      fail(ErrorCode::InvalidData, "matrix entry count does not match dimensions");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> entries() const { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::InvalidData, "matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
    if (a.cols_ != v.size()) fail(ErrorCode::InvalidData, "matrix-vector dimension mismatch");
    std::vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = std::vector<Rational>;

/// Smith normal form: left * m * right == diag(diagonal), padded with zeros
/// to the shape of m. `diagonal` has min(rows, cols) non-negative entries,
/// each dividing the next (trailing zeros allowed).
struct SmithForm {
  std::vector<Integer> diagonal;
  IntMatrix left;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Solves m * x = rhs exactly. Throws SingularMatrix when det(m) = 0.
RatVector solve_exact(const RatMatrix& m, std::span<const Rational> rhs);

Rational determinant(const RatMatrix& m);

/// Leading principal minors of a square matrix, computed by elimination
/// without row exchanges. Stops after the first vanishing minor.
std::vector<Rational> leading_principal_minors(const RatMatrix& m);

/// True iff every leading principal minor Δ_k has sign (-1)^k.
bool is_negative_definite(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

// -- integer helpers ---------------------------------------------------------

/// Inverse of a modulo m in [0, m). Throws NonCoprimeModuli if gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

/// Unique x in [0, prod m_i) with x = r_i (mod m_i) for all i.
/// Throws NonCoprimeModuli when the moduli are not pairwise coprime.
Integer crt_solve(std::span<const std::pair<Integer, Integer>> residues);

}  // namespace seifert
