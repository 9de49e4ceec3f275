#pragma once

#include "graphzeta/polynomial.hpp"
#include "graphzeta/rational.hpp"
#include "graphzeta/rational_function.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graphzeta {

/// Dense row-major matrix over a scalar ring S (exact types only; S needs
/// +, -, *, structural equality and value-initialization to zero).
template <class S>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, S()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik == S()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const S& s, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = s * m.e_[i];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  S trace() const {
    require_square();
    S t{};
    for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_)
      throw std::invalid_argument("Matrix: block out of range");
    Matrix r(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) r(i, j) = (*this)(row0 + i, col0 + j);
    return r;
  }

  void set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
    if (row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_)
      throw std::invalid_argument("Matrix: block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(row0 + i, col0 + j) = b(i, j);
  }

  /// Entrywise image under f (e.g. promoting counts into a field).
  template <class T, class Fn>
  Matrix<T> map(Fn f) const {
    Matrix<T> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  void require_square() const {
    if (!is_square()) throw std::invalid_argument("Matrix: square matrix required");
  }

private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shapes differ");
  }

  std::size_t rows_, cols_;
  std::vector<S> e_;
};

template <class S>
Matrix<S> matrix_pow(Matrix<S> base, unsigned e) {
  base.require_square();
  Matrix<S> r = Matrix<S>::identity(base.rows());
  for (; e; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

/// Exact determinant by Gaussian elimination over a field, using the first
/// nonzero entry of each column as pivot (no magnitude comparisons, so any
/// exact field works).
template <FieldScalar K>
K det_over_field(Matrix<K> m) {
  m.require_square();
  const std::size_t n = m.rows();
  K det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == K(0)) ++pivot;
    if (pivot == n) return K(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det = det * m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == K(0)) continue;
      K f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
    }
  }
  return det;
}

/// Fraction-free determinant (Bareiss).  Works over any integral domain that
/// provides exact_div (integers, polynomials); every intermediate division is
/// exact, so no fractions appear.
template <class D>
D det_bareiss(Matrix<D> m) {
  m.require_square();
  const std::size_t n = m.rows();
  if (n == 0) return D(1);
  D prev(1);
  bool negate = false;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == D()) ++pivot;
    if (pivot == n) return D();
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      negate = !negate;
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        D cross = m(i, j) * m(col, col) - m(i, col) * m(col, j);
        m(i, j) = exact_div(cross, prev);
      }
      m(i, col) = D();
    }
    prev = m(col, col);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Gauss-Jordan inverse; nullopt when singular.
template <FieldScalar K>
std::optional<Matrix<K>> matrix_inverse(Matrix<K> m) {
  m.require_square();
  const std::size_t n = m.rows();
  Matrix<K> inv = Matrix<K>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == K(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    K d = K(1) / m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) = d * m(col, j);
      inv(col, j) = d * inv(col, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col) == K(0)) continue;
      K f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - f * m(col, j);
        inv(i, j) = inv(i, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Which diagonal block of [[A,B],[C,D]] the Schur complement is taken with
/// respect to.
enum class SchurBlock { A, D };

/// Schur complement of the split×split upper-left block A (M/A = D - C A^-1 B)
/// or of the lower-right block D (M/D = A - B D^-1 C).  Throws
/// std::domain_error when the selected block is singular.
template <FieldScalar K>
Matrix<K> schur_complement(const Matrix<K>& m, std::size_t split, SchurBlock which) {
  m.require_square();
  if (split > m.rows()) throw std::invalid_argument("schur_complement: split exceeds size");
  const std::size_t rest = m.rows() - split;
  Matrix<K> a = m.block(0, 0, split, split);
  Matrix<K> b = m.block(0, split, split, rest);
  Matrix<K> c = m.block(split, 0, rest, split);
  Matrix<K> d = m.block(split, split, rest, rest);
  if (which == SchurBlock::A) {
    auto ainv = matrix_inverse(a);
    if (!ainv) throw std::domain_error("schur_complement: block A is singular");
    return d - c * *ainv * b;
  }
  auto dinv = matrix_inverse(d);
  if (!dinv) throw std::domain_error("schur_complement: block D is singular");
  return a - b * *dinv * c;
}

/// True when all rows of m are equal (each column is constant).
template <class S>
bool is_column_constant(const Matrix<S>& m) {
  for (std::size_t i = 1; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == m(0, j))) return false;
  return true;
}

/// Common row sum of a column-constant matrix; throws std::domain_error on
/// matrices whose columns are not constant.
template <class S>
S row_sum(const Matrix<S>& m) {
  if (!is_column_constant(m)) throw std::domain_error("row_sum: matrix is not column-constant");
  S s{};
  for (std::size_t j = 0; j < m.cols(); ++j) s = s + m(0, j);
  return s;
}

/// Closed-form inverse of I + t·M for a column-constant square M with row sum
/// r:  (I + tM)^-1 = (1 + r·t)^-1 · (I - t(M - r·I)), returned over K(t).
template <FieldScalar K>
Matrix<RatFunc<K>> column_constant_inverse(const Matrix<K>& m) {
  m.require_square();
  K r = row_sum(m);
  UniPoly<K> den(std::vector<K>{K(1), r});
  Matrix<RatFunc<K>> inv(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) {
      K lin = (i == j ? r : K(0)) - m(i, j);
      UniPoly<K> num(std::vector<K>{i == j ? K(1) : K(0), lin});
      inv(i, j) = RatFunc<K>(std::move(num), den);
    }
  return inv;
}

/// Newton interpolation through (xs[i], ys[i]); the xs must be distinct.
/// Exact over any field of characteristic zero.
template <FieldScalar K>
UniPoly<K> interpolate_poly(const std::vector<K>& xs, const std::vector<K>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("interpolate_poly: need equally many points and values");
  const std::size_t n = xs.size();
  std::vector<K> coef = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n; i-- > j;)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  UniPoly<K> p;
  for (std::size_t i = n; i-- > 0;) {
    UniPoly<K> factor(std::vector<K>{-xs[i], K(1)});
    p = p * factor + UniPoly<K>(coef[i]);
  }
  return p;
}

namespace detail {

/// Determinant of a rational matrix by clearing denominators row by row and
/// running integer Bareiss; much faster than field elimination when entries
/// are small fractions.
inline Rational det_rational_cleared(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  Matrix<BigInt> z(n, n);
  Rational scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, m(i, j).den());
    for (std::size_t j = 0; j < n; ++j) z(i, j) = m(i, j).num() * (l / m(i, j).den());
    scale = scale * Rational(1, l);
  }
  return scale * Rational(det_bareiss(std::move(z)));
}

} // namespace detail

/// det(I - t·M) as a polynomial in t of degree <= n, computed exactly by
/// evaluating at n+1 integer points and interpolating.  Over Q each point
/// determinant goes through the denominator-clearing Bareiss path.
template <FieldScalar K>
UniPoly<K> det_identity_minus_t(const Matrix<K>& m) {
  m.require_square();
  const std::size_t n = m.rows();
  if (n == 0) return UniPoly<K>(K(1));
  std::vector<K> xs, ys;
  xs.reserve(n + 1);
  ys.reserve(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    K x(static_cast<long long>(p));
    Matrix<K> a = Matrix<K>::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = a(i, j) - x * m(i, j);
    xs.push_back(x);
    if constexpr (std::is_same_v<K, Rational>)
      ys.push_back(detail::det_rational_cleared(a));
    else
      ys.push_back(det_over_field(std::move(a)));
  }
  return interpolate_poly(xs, ys);
}

} // namespace graphzeta
