#pragma once

// Dense exact vectors and matrices over a RingDesc.
//
// Tensor products use the left-factor-slowest convention: the basis vector
// e_i (x) f_j of V (x) W sits at index i * dim(W) + j.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hqft/foundations.hpp"

namespace hqft {

class Vector {
 public:
  Vector() = default;
  Vector(const RingDesc& ring, std::size_t size);
  Vector(const RingDesc& ring, std::vector<Scalar> entries);

  static Vector zero(const RingDesc& ring, std::size_t size) { return Vector(ring, size); }
  static Vector basis(const RingDesc& ring, std::size_t size, std::size_t index);

  const RingDesc& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  bool is_zero() const;

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(const Scalar& c);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }

  friend bool operator==(const Vector&, const Vector&) = default;

  std::string to_string() const;

 private:
  RingDesc ring_;
  std::vector<Scalar> entries_;
};

/// Kronecker product of coordinate vectors, left factor slowest.
Vector vec_tensor(const Vector& a, const Vector& b);
Scalar dot(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(const RingDesc& ring, std::size_t rows, std::size_t cols);
  /// Row-major entries; throws InputError unless entries.size() == rows * cols.
  Matrix(const RingDesc& ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(const RingDesc& ring, std::size_t n);
  static Matrix column(const Vector& v);
  static Matrix row(const Vector& v);
  /// Convenience for tests and fixtures: rows of small integers.
  static Matrix from_ints(const RingDesc& ring, const std::vector<std::vector<long>>& rows);

  const RingDesc& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  Vector col(std::size_t c) const;
  Vector row_vector(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Matrix-vector product; throws InputError on shape mismatch.
  Vector apply(const Vector& v) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& c, Matrix m) { return m *= c; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  RingDesc ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);
std::ostream& operator<<(std::ostream& os, const Vector& v);

Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// Kronecker product, left factor slowest.
Matrix mat_tensor(const Matrix& a, const Matrix& b);

/// Sum of the diagonal; throws InputError when not square.
Scalar mat_trace(const Matrix& a);

/// Coefficients (1, c_{n-1}, ..., c_0) of det(x I - A), computed without
/// division (Berkowitz), so valid over every commutative ring.
std::vector<Scalar> char_poly(const Matrix& a);
Scalar determinant(const Matrix& a);
Matrix adjugate(const Matrix& a);

/// Throws Degenerate when det(a) is not a unit.
Matrix mat_inverse(const Matrix& a);

/// X with A X = B. Throws Degenerate when det(A) is not a unit.
Matrix solve_right(const Matrix& a, const Matrix& b);

}  // namespace hqft
