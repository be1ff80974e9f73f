#pragma once

#include <cstddef>
#include <vector>

#include "tracealg/errors.hpp"
#include "tracealg/ratfunc.hpp"

namespace tracealg {

/// Dense matrix over an exact coefficient type (Rational, RatFunc, MultiPoly).
template <typename T>
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols, T fill = T())
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  ExactMatrix transpose() const {
    ExactMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  T trace() const {
    if (rows_ != cols_) throw SizeMismatch("trace of non-square matrix");
    T t = T(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  ExactMatrix operator-() const {
    ExactMatrix m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
  }
  ExactMatrix operator+(const ExactMatrix& o) const {
    check_same_shape(o);
    ExactMatrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
  }
  ExactMatrix operator-(const ExactMatrix& o) const {
    check_same_shape(o);
    ExactMatrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
  }
  ExactMatrix operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw SizeMismatch("matrix product shape");
    ExactMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const T& b = o(k, j);
          if (!b.is_zero()) m(i, j) += a * b;
        }
      }
    return m;
  }
  ExactMatrix scaled(const T& c) const {
    ExactMatrix m = *this;
    for (auto& x : m.e_) x *= c;
    return m;
  }

  ExactMatrix& operator+=(const ExactMatrix& o) { return *this = *this + o; }
  ExactMatrix& operator-=(const ExactMatrix& o) { return *this = *this - o; }

  template <typename F>
  auto map(F&& fn) const -> ExactMatrix<decltype(fn(std::declval<const T&>()))> {
    ExactMatrix<decltype(fn(std::declval<const T&>()))> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = fn((*this)(i, j));
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> e_;

  void check_same_shape(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix shapes differ");
  }
};

/// Rank by Gaussian elimination over the entry field (exact, destructive copy).
template <typename T>
std::size_t exact_rank(ExactMatrix<T> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != row)
      for (std::size_t j = col; j < cols; ++j) std::swap(m(piv, j), m(row, j));
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m(i, col).is_zero()) continue;
      T factor = m(i, col) / m(row, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= factor * m(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Result of an exact symmetric LDL^t factorization attempt.
/// success: M = P·L·diag(d)·L^t·P^t with all d ≥ 0 checkable by the caller;
/// perm[k] = original index placed at position k (row i of P^t·M·P is row
/// perm[i] of M). When !success, witness satisfies witness^t·M·witness =
/// witness_value < 0 in the original coordinates.
struct LdltResult {
  bool success = false;
  std::vector<Rational> d;
  ExactMatrix<Rational> L;
  std::vector<std::size_t> perm;
  std::vector<Rational> witness;
  Rational witness_value;
};

/// LDL^t with symmetric pivoting (largest |diagonal| first, ties to the
/// lowest index). Never fails on symmetric input: indefinite matrices yield
/// a negativity witness instead of a factorization.
LdltResult exact_ldlt(const ExactMatrix<Rational>& m);

/// Entry (i,k) = ∂fs[i]/∂vars[k].
ExactMatrix<RatFunc> jacobian(const std::vector<RatFunc>& fs, const std::vector<VarId>& vars);

}  // namespace tracealg
