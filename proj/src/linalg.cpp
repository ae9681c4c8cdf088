#include "hqft/linalg.hpp"

#include <ostream>
#include <sstream>

namespace hqft {

namespace {

void require_ring(const RingDesc& a, const RingDesc& b) {
  if (!(a == b)) throw InputError("ring mismatch: " + a.to_string() + " vs " + b.to_string());
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

// ---------------------------------------------------------------------------
// Vector

Vector::Vector(const RingDesc& ring, std::size_t size)
    : ring_(ring), entries_(size, ring.zero()) {}

Vector::Vector(const RingDesc& ring, std::vector<Scalar> entries)
    : ring_(ring), entries_(std::move(entries)) {
  for (const auto& e : entries_) require_ring(ring_, e.ring());
}

Vector Vector::basis(const RingDesc& ring, std::size_t size, std::size_t index) {
  Vector v(ring, size);
  v[index] = ring.one();
  return v;
}

bool Vector::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& rhs) {
  if (size() != rhs.size()) throw InputError("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  if (size() != rhs.size()) throw InputError("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ']';
}

Vector vec_tensor(const Vector& a, const Vector& b) {
  require_ring(a.ring(), b.ring());
  Vector out(a.ring(), a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

Scalar dot(const Vector& a, const Vector& b) {
  require_ring(a.ring(), b.ring());
  if (a.size() != b.size()) throw InputError("vector length mismatch in dot product");
  Scalar acc = a.ring().zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(const RingDesc& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, ring.zero()) {}

Matrix::Matrix(const RingDesc& ring, std::size_t rows, std::size_t cols,
               std::vector<Scalar> entries)
    : ring_(ring), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw InputError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                     std::to_string(entries_.size()) + " entries");
  }
  for (const auto& e : entries_) require_ring(ring_, e.ring());
}

Matrix Matrix::identity(const RingDesc& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix Matrix::column(const Vector& v) {
  return Matrix(v.ring(), v.size(), 1, std::vector<Scalar>(v.entries().begin(), v.entries().end()));
}

Matrix Matrix::row(const Vector& v) {
  return Matrix(v.ring(), 1, v.size(), std::vector<Scalar>(v.entries().begin(), v.entries().end()));
}

Matrix Matrix::from_ints(const RingDesc& ring, const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.front().size() : 0;
  Matrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ring.from_int(rows[i][j]);
  }
  return m;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(ring_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row_vector(std::size_t r) const {
  Vector v(ring_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& e = (*this)(r, c);
      if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

Vector Matrix::apply(const Vector& v) const {
  require_ring(ring_, v.ring());
  if (v.size() != cols_) {
    throw InputError("cannot apply " + shape(*this) + " matrix to vector of length " +
                     std::to_string(v.size()));
  }
  Vector out(ring_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& e = (*this)(r, c);
      if (!e.is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix shape mismatch in +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix shape mismatch in -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_ring(a.ring(), b.ring());
  if (a.cols() != b.rows()) {
    throw InputError("cannot multiply " + shape(a) + " by " + shape(b));
  }
  Matrix out(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix mat_tensor(const Matrix& a, const Matrix& b) {
  require_ring(a.ring(), b.ring());
  Matrix out(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

Scalar mat_trace(const Matrix& a) {
  if (!a.is_square()) throw InputError("trace of non-square " + shape(a) + " matrix");
  Scalar acc = a.ring().zero();
  for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

std::vector<Scalar> char_poly(const Matrix& a) {
  if (!a.is_square()) throw InputError("characteristic polynomial of non-square matrix");
  const RingDesc& ring = a.ring();
  const std::size_t n = a.rows();
  std::vector<Scalar> p{ring.one()};
  // Grow from the trailing 1x1 block up to the whole matrix; each step
  // multiplies by the Toeplitz matrix built from the new first row/column.
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t m = n - k;
    std::vector<Scalar> t(m + 1, ring.zero());
    t[0] = ring.one();
    t[1] = -a(k, k);
    Vector w(ring, m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) w[i] = a(k + 1 + i, k);
    for (std::size_t j = 2; j <= m; ++j) {
      Scalar rw = ring.zero();
      for (std::size_t i = 0; i + 1 < m; ++i) rw += a(k, k + 1 + i) * w[i];
      t[j] = -rw;
      Vector next(ring, m - 1);
      for (std::size_t r = 0; r + 1 < m; ++r) {
        for (std::size_t c = 0; c + 1 < m; ++c) next[r] += a(k + 1 + r, k + 1 + c) * w[c];
      }
      w = std::move(next);
    }
    std::vector<Scalar> q(m + 1, ring.zero());
    for (std::size_t i = 0; i <= m; ++i) {
      for (std::size_t j = 0; j < m && j <= i; ++j) q[i] += t[i - j] * p[j];
    }
    p = std::move(q);
  }
  return p;
}

Scalar determinant(const Matrix& a) {
  std::vector<Scalar> p = char_poly(a);
  Scalar c0 = p.back();
  return (a.rows() % 2 == 0) ? c0 : -c0;
}

Matrix adjugate(const Matrix& a) {
  std::vector<Scalar> p = char_poly(a);
  const std::size_t n = a.rows();
  const RingDesc& ring = a.ring();
  if (n == 0) return Matrix(ring, 0, 0);
  // Cayley-Hamilton: adj(A) = (-1)^{n-1} (A^{n-1} + c_{n-1} A^{n-2} + ... + c_1 I).
  Matrix b = Matrix::identity(ring, n);
  for (std::size_t j = 1; j < n; ++j) b = mat_mul(a, b) + p[j] * Matrix::identity(ring, n);
  if (n % 2 == 0) b *= -ring.one();
  return b;
}

Matrix mat_inverse(const Matrix& a) {
  if (!a.is_square()) throw InputError("inverse of non-square " + shape(a) + " matrix");
  Scalar det = determinant(a);
  if (!is_unit(det)) {
    throw Degenerate("determinant " + det.to_string() + " is not a unit of " +
                     a.ring().to_string());
  }
  return scalar_inv(det) * adjugate(a);
}

Matrix solve_right(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InputError("solve_right: row count mismatch");
  return mat_mul(mat_inverse(a), b);
}

}  // namespace hqft
