#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qtrop/error.hpp"
#include "qtrop/rational.hpp"

namespace qtrop {

/**
 * Prime field F_P with P a (small) prime. Elements are stored canonically in
 * [0, P). P <= ~3e9 keeps products inside long long.
 */
template <long long P>
struct Fp {
  long long v = 0;

  constexpr Fp() = default;
  constexpr Fp(long long x) : v(((x % P) + P) % P) {}

  static constexpr long long characteristic() { return P; }

  friend constexpr Fp operator+(Fp a, Fp b) { return Fp(a.v + b.v); }
  friend constexpr Fp operator-(Fp a, Fp b) { return Fp(a.v - b.v); }
  friend constexpr Fp operator-(Fp a) { return Fp(-a.v); }
  friend constexpr Fp operator*(Fp a, Fp b) { return Fp(a.v * b.v); }
  friend constexpr bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend constexpr bool operator!=(Fp a, Fp b) { return a.v != b.v; }

  Fp inverse() const {
    require(v != 0, ErrorCode::DimensionMismatch, "Fp: inverse of zero");
    // Extended Euclid.
    long long a = v, b = P, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      a -= q * b;
      std::swap(a, b);
      x0 -= q * x1;
      std::swap(x0, x1);
    }
    return Fp(x0);
  }

  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
};

using F5 = Fp<5>;
using F7 = Fp<7>;

/**
 * Dense row-major matrix over an exact field K (Rat or Fp<P>).
 * Deliberately minimal: just what exact rank/kernel/solve computations need.
 */
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_,
            ErrorCode::DimensionMismatch, "matrix +: shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_,
            ErrorCode::DimensionMismatch, "matrix -: shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }

  friend Matrix operator*(const K& c, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x *= c;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch,
            "matrix *: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik == K(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r(i, j) += aik * b(k, j);
      }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == K(0))) return false;
    return true;
  }

  /** Copies `b` into this matrix with top-left corner at (r0, c0). */
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_,
            ErrorCode::DimensionMismatch, "set_block: out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j)
        (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorCode::DimensionMismatch,
            "block: out of range");
    Matrix r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  /** [A | B] side by side. */
  static Matrix hstack(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_, ErrorCode::DimensionMismatch,
            "hstack: row counts differ");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    r.set_block(0, 0, a);
    r.set_block(0, a.cols_, b);
    return r;
  }

  /** A on top of B. */
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.cols_, ErrorCode::DimensionMismatch,
            "vstack: column counts differ");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    r.set_block(0, 0, a);
    r.set_block(a.rows_, 0, b);
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

using QMat = Matrix<Rat>;

/** Row-reduced echelon form together with the pivot column indices. */
template <class K>
struct Rref {
  Matrix<K> mat;
  std::vector<std::size_t> pivots;
};

template <class K>
Rref<K> rref(Matrix<K> m) {
  Rref<K> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == K(0)) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    K inv = K(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == K(0)) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.mat = std::move(m);
  return out;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).pivots.size();
}

/** Basis of the right kernel {x : Ax = 0}, returned as matrix columns. */
template <class K>
Matrix<K> nullspace(const Matrix<K>& a) {
  Rref<K> r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<K> basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(fc, k) = K(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      basis(r.pivots[i], k) = -r.mat(i, fc);
  }
  return basis;
}

/**
 * Solves A X = B exactly. Returns one particular solution, or nullopt when
 * the system is inconsistent.
 */
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
  require(a.rows() == b.rows(), ErrorCode::DimensionMismatch,
          "solve: row counts differ");
  Rref<K> r = rref(Matrix<K>::hstack(a, b));
  Matrix<K> x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= a.cols()) return std::nullopt;  // pivot in the B part
    for (std::size_t j = 0; j < b.cols(); ++j)
      x(r.pivots[i], j) = r.mat(i, a.cols() + j);
  }
  return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a) {
  require(a.rows() == a.cols(), ErrorCode::DimensionMismatch,
          "inverse: matrix not square");
  Rref<K> r = rref(Matrix<K>::hstack(a, Matrix<K>::identity(a.rows())));
  if (r.pivots.size() < a.rows() ||
      (!r.pivots.empty() && r.pivots.back() >= a.cols()))
    return std::nullopt;
  return r.mat.block(0, a.cols(), a.rows(), a.rows());
}

template <class K>
K det(Matrix<K> m) {
  require(m.rows() == m.cols(), ErrorCode::DimensionMismatch,
          "det: matrix not square");
  K d(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t piv = c;
    while (piv < m.rows() && m(piv, c) == K(0)) ++piv;
    if (piv == m.rows()) return K(0);
    if (piv != c) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    K inv = K(1) / m(c, c);
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (m(i, c) == K(0)) continue;
      K f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

/** Column span test: does b lie in the column space of A? */
template <class K>
bool in_column_space(const Matrix<K>& a, const Matrix<K>& b) {
  return solve(a, b).has_value();
}

// ---------------------------------------------------------------------------
// Conversions between integer data and field matrices.

template <class K>
Matrix<K> from_integers(const IMat& m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  Matrix<K> r(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(m[i].size() == cols, ErrorCode::DimensionMismatch,
            "from_integers: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = K(m[i][j]);
  }
  return r;
}

/** Reduces a rational matrix mod P; fails when a denominator vanishes. */
template <long long P>
Matrix<Fp<P>> reduce_mod(const Matrix<Rat>& m) {
  Matrix<Fp<P>> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& q = m(i, j);
      BigInt num = boost::multiprecision::numerator(q);
      BigInt den = boost::multiprecision::denominator(q);
      long long np = static_cast<long long>(num % P);
      long long dp = static_cast<long long>(den % P);
      require(dp % P != 0, ErrorCode::FieldMismatch,
              "reduce_mod: denominator divisible by p");
      r(i, j) = Fp<P>(np) / Fp<P>(dp);
    }
  return r;
}

/** Exact integer matrix (n x n) determinant via rationals. */
inline Rat idet(const IMat& m) { return det(from_integers<Rat>(m)); }

inline IMat imat_identity(std::size_t n, Int scale_by = 1) {
  IMat m(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = scale_by;
  return m;
}

/** h * M for a row vector h and integer matrix M. */
inline IVec row_times_imat(const IVec& h, const IMat& m) {
  require(h.size() == m.size(), ErrorCode::DimensionMismatch,
          "row_times_imat: shape mismatch");
  std::size_t n = m.empty() ? 0 : m[0].size();
  IVec r(n, 0);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) r[j] += h[i] * m[i][j];
  return r;
}

}  // namespace qtrop
