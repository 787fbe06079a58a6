#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "spincover/errors.hpp"
#include "spincover/qsqrt2.hpp"
#include "spincover/qzeta8.hpp"

namespace spincover {

// Dense square matrix over an exact field scalar (QSqrt2, QZeta8 or Rat).
template <class K>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, K(0)) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  int dim() const { return n_; }
  K& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const K& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (n_ != o.n_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const K& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < n_; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r(n_);
    for (size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] + o.e_[t];
    return r;
  }

  Matrix operator-() const {
    Matrix r(n_);
    for (size_t t = 0; t < e_.size(); ++t) r.e_[t] = -e_[t];
    return r;
  }

  Matrix scaled(const K& s) const {
    Matrix r(n_);
    for (size_t t = 0; t < e_.size(); ++t) r.e_[t] = e_[t] * s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const Matrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t t = 0; t < e_.size(); ++t) {
      if (e_[t] != o.e_[t]) return e_[t] < o.e_[t];
    }
    return false;
  }

  bool is_identity() const { return *this == identity(n_); }

  bool is_orthogonal() const { return (*this) * transpose() == identity(n_); }

  K det() const {
    // Gaussian elimination over the field.
    Matrix m = *this;
    K d(1);
    for (int c = 0; c < n_; ++c) {
      int p = -1;
      for (int r = c; r < n_; ++r)
        if (!m.at(r, c).is_zero()) { p = r; break; }
      if (p < 0) return K(0);
      if (p != c) {
        for (int j = 0; j < n_; ++j) std::swap(m.at(p, j), m.at(c, j));
        d = -d;
      }
      d = d * m.at(c, c);
      K inv = K(1) / m.at(c, c);
      for (int r = c + 1; r < n_; ++r) {
        if (m.at(r, c).is_zero()) continue;
        K f = m.at(r, c) * inv;
        for (int j = c; j < n_; ++j) m.at(r, j) = m.at(r, j) - f * m.at(c, j);
      }
    }
    return d;
  }

  // Inverse via Gauss-Jordan; throws NotInvertible on singular input.
  Matrix inverse() const {
    Matrix m = *this;
    Matrix r = identity(n_);
    for (int c = 0; c < n_; ++c) {
      int p = -1;
      for (int row = c; row < n_; ++row)
        if (!m.at(row, c).is_zero()) { p = row; break; }
      if (p < 0) throw Error(ErrorCode::NotInvertible, "singular matrix");
      if (p != c)
        for (int j = 0; j < n_; ++j) {
          std::swap(m.at(p, j), m.at(c, j));
          std::swap(r.at(p, j), r.at(c, j));
        }
      K inv = K(1) / m.at(c, c);
      for (int j = 0; j < n_; ++j) {
        m.at(c, j) = m.at(c, j) * inv;
        r.at(c, j) = r.at(c, j) * inv;
      }
      for (int row = 0; row < n_; ++row) {
        if (row == c || m.at(row, c).is_zero()) continue;
        K f = m.at(row, c);
        for (int j = 0; j < n_; ++j) {
          m.at(row, j) = m.at(row, j) - f * m.at(c, j);
          r.at(row, j) = r.at(row, j) - f * r.at(c, j);
        }
      }
    }
    return r;
  }

  std::string str() const {
    std::string out = "[";
    for (int i = 0; i < n_; ++i) {
      out += i ? ",[" : "[";
      for (int j = 0; j < n_; ++j) {
        if (j) out += ", ";
        out += at(i, j).str();
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  int n_ = 0;
  std::vector<K> e_;
};

using ExactMatrix = Matrix<QSqrt2>;
using ZetaMatrix = Matrix<QZeta8>;

}  // namespace spincover
