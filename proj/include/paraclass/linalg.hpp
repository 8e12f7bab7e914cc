#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "paraclass/scalar.hpp"

namespace paraclass {

template <class K>
using Vector = std::vector<K>;

// Small dense matrix over an exact or floating field.  Row-major; the
// action convention is (M x)_r = sum_c M(r,c) x_c throughout.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& aik = (*this)(i, k);
        if (is_zero_entry(aik)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }
  Matrix scaled(const K& s) const {
    Matrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  K trace() const {
    K t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  K max_abs() const {
    K m(0);
    for (const auto& v : a_)
      if (abs_val(v) > m) m = abs_val(v);
    return m;
  }

  bool is_zero_matrix(const K& tol = K(0)) const {
    for (const auto& v : a_)
      if (!is_zero(v, tol)) return false;
    return true;
  }

  // Gauss-Jordan inverse.  Exact fields pivot on the first nonzero entry,
  // floating fields on the entry of largest magnitude.
  Matrix inverse(const K& tol = K(0)) const {
    if (rows_ != cols_) throw DimensionError("inverse of non-square matrix");
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = pivot_row(a, col, col, tol);
      if (piv == n) throw DegeneracyError("singular matrix");
      a.swap_rows(col, piv);
      inv.swap_rows(col, piv);
      K d = a(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) /= d;
        inv(col, j) /= d;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col) continue;
        K f = a(r, col);
        if (is_zero(f, K(0))) continue;
        for (std::size_t j = 0; j < n; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

 private:
  static bool is_zero_entry(const K& v) { return is_zero(v, K(0)); }

  static std::size_t pivot_row(const Matrix& a, std::size_t col,
                               std::size_t from, const K& tol) {
    if constexpr (FieldInfo<K>::exact) {
      for (std::size_t r = from; r < a.rows(); ++r)
        if (!is_zero(a(r, col), K(0))) return r;
      return a.rows();
    } else {
      std::size_t best = a.rows();
      K best_mag(0);
      for (std::size_t r = from; r < a.rows(); ++r) {
        K m = abs_val(a(r, col));
        if (m > best_mag) {
          best_mag = m;
          best = r;
        }
      }
      if (best != a.rows() && is_zero(best_mag, tol)) return a.rows();
      return best;
    }
  }

  template <class K2>
  friend std::size_t rank(Matrix<K2> a, const K2& tol);
  template <class K2>
  friend std::vector<Vector<K2>> null_space(const Matrix<K2>& m, const K2& tol);

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

template <class K>
Vector<K> mul(const Matrix<K>& m, const Vector<K>& v) {
  Vector<K> r(m.rows(), K(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

// Covector (row) times matrix.
template <class K>
Vector<K> mul(const Vector<K>& v, const Matrix<K>& m) {
  Vector<K> r(m.cols(), K(0));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) r[j] += v[i] * m(i, j);
  return r;
}

template <class K>
K dot(const Vector<K>& a, const Vector<K>& b) {
  K s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class K>
Matrix<K> outer(const Vector<K>& a, const Vector<K>& b) {
  Matrix<K> m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
  return m;
}

template <class K>
std::size_t rank(Matrix<K> a, const K& tol = K(0)) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = Matrix<K>::pivot_row(a, col, r, tol);
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    K d = a(r, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(r, j) /= d;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      K f = a(i, col);
      if (is_zero(f, K(0))) continue;
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

// Basis of the kernel of m, one vector per free column of the RREF.
template <class K>
std::vector<Vector<K>> null_space(const Matrix<K>& m, const K& tol = K(0)) {
  Matrix<K> a = m;
  const std::size_t nc = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < nc && r < a.rows(); ++col) {
    std::size_t piv = Matrix<K>::pivot_row(a, col, r, tol);
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    K d = a(r, col);
    for (std::size_t j = col; j < nc; ++j) a(r, j) /= d;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      K f = a(i, col);
      if (is_zero(f, K(0))) continue;
      for (std::size_t j = col; j < nc; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(nc, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Vector<K>> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    Vector<K> v(nc, K(0));
    v[free] = K(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
};

// Sign counts of a symmetric matrix via congruence reduction to diagonal
// form (Sylvester's law).
template <class K>
Signature signature(Matrix<K> a, const K& tol = K(0)) {
  const std::size_t n = a.rows();
  Signature sig;
  auto add_row_col = [&](std::size_t k, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
    for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(a(k, k), tol)) {
      std::size_t j = k + 1;
      for (; j < n; ++j)
        if (!is_zero(a(k, j), tol)) break;
      if (j == n) {
        ++sig.zero;
        continue;
      }
      // a(k,k) becomes a(j,j) + 2 a(k,j); if a(j,j) != 0 we could have
      // pivoted there instead, so prefer a diagonal swap first.
      if (!is_zero(a(j, j), tol)) {
        a.swap_rows(k, j);
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
      } else {
        add_row_col(k, j);
      }
    }
    K d = a(k, k);
    if (is_zero(d, tol)) {
      ++sig.zero;
      continue;
    }
    if (d > K(0))
      ++sig.positive;
    else
      ++sig.negative;
    for (std::size_t r = k + 1; r < n; ++r) {
      K f = a(r, k) / d;
      if (is_zero(f, K(0))) continue;
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = 0; c < n; ++c) a(c, r) -= f * a(c, k);
    }
  }
  return sig;
}

}  // namespace paraclass
