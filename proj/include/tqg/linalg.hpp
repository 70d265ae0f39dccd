/**
 * @file linalg.hpp
 * @brief Exact linear algebra: sparse vectors, incremental reduced row echelon form,
 * kernels, and small dense matrices. Works for any exact field type T with
 * is_zero(T) and the usual operators.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tqg/rational.hpp"

namespace tqg {

namespace detail {
// Unqualified call so scalar types declared after this header are found by ADL.
template <class T>
bool scalar_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

template <class T>
using SparseVec = std::vector<std::pair<int, T>>;

template <class T>
SparseVec<T> to_sparse(const std::vector<T>& v) {
  SparseVec<T> out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

template <class T>
std::vector<T> to_dense(const SparseVec<T>& v, int n) {
  std::vector<T> out(n, T(0));
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

/// y += a * x.
template <class T>
void axpy(SparseVec<T>& y, const T& a, const SparseVec<T>& x) {
  if (is_zero(a) || x.empty()) return;
  SparseVec<T> out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      T v = y[i].second + a * x[j].second;
      if (!is_zero(v)) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

template <class T>
void scale(SparseVec<T>& v, const T& a) {
  if (is_zero(a)) {
    v.clear();
    return;
  }
  for (auto& e : v) e.second = e.second * a;
}

template <class T>
T sparse_get(const SparseVec<T>& v, int i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const std::pair<int, T>& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return T(0);
}

/// A subspace of F^n kept in reduced row echelon form.
template <class T>
class Echelon {
 public:
  explicit Echelon(int n = 0) : n_(n), row_of_col_(n, -1) {}

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVec<T>>& rows() const { return rows_; }
  int pivot(int r) const { return pivots_[r]; }
  bool is_pivot(int col) const { return row_of_col_[col] >= 0; }

  std::vector<int> non_pivots() const {
    std::vector<int> out;
    for (int c = 0; c < n_; ++c)
      if (row_of_col_[c] < 0) out.push_back(c);
    return out;
  }

  /// Remainder of v modulo the subspace.
  SparseVec<T> reduce(const SparseVec<T>& v) const {
    bool touches = false;
    for (const auto& e : v)
      if (row_of_col_[e.first] >= 0) {
        touches = true;
        break;
      }
    if (!touches) return v;
    std::vector<T> acc(n_, T(0));
    std::vector<char> used(n_, 0);
    for (const auto& [c, x] : v) {
      acc[c] = x;
      used[c] = 1;
    }
    for (const auto& [c, x] : v) {
      int r = row_of_col_[c];
      if (r < 0) continue;
      T coef = x;
      for (const auto& [j, y] : rows_[r]) {
        acc[j] -= coef * y;
        used[j] = 1;
      }
    }
    SparseVec<T> out;
    for (int j = 0; j < n_; ++j)
      if (used[j] && !is_zero(acc[j])) out.emplace_back(j, std::move(acc[j]));
    return out;
  }

  bool contains(const SparseVec<T>& v) const { return reduce(v).empty(); }

  /// Coordinates of v in the basis rows(), or nullopt if v is outside the subspace.
  std::optional<std::vector<T>> coords(const SparseVec<T>& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<T> out(rows_.size(), T(0));
    for (const auto& [c, x] : v) {
      int r = row_of_col_[c];
      if (r >= 0) out[r] = x;
    }
    return out;
  }

  /// Adds v; returns false when v already lies in the subspace.
  bool insert(const SparseVec<T>& v) {
    SparseVec<T> w = reduce(v);
    if (w.empty()) return false;
    int piv = w.front().first;
    T inv = T(1) / w.front().second;
    scale(w, inv);
    for (auto& row : rows_) {
      T c = sparse_get(row, piv);
      if (!is_zero(c)) axpy(row, T(T(0) - c), w);
    }
    row_of_col_[piv] = static_cast<int>(rows_.size());
    pivots_.push_back(piv);
    rows_.push_back(std::move(w));
    return true;
  }

 private:
  int n_;
  std::vector<SparseVec<T>> rows_;
  std::vector<int> pivots_;
  std::vector<int> row_of_col_;
};

/// Basis of {x : row . x = 0 for every row}, one vector per free column.
template <class T>
std::vector<SparseVec<T>> nullspace(const std::vector<SparseVec<T>>& rows, int ncols) {
  Echelon<T> ech(ncols);
  for (const auto& r : rows) ech.insert(r);
  std::vector<int> free = ech.non_pivots();
  std::vector<int> slot(ncols, -1);
  for (int i = 0; i < static_cast<int>(free.size()); ++i) slot[free[i]] = i;
  std::vector<SparseVec<T>> basis(free.size());
  for (int i = 0; i < static_cast<int>(free.size()); ++i) basis[i].emplace_back(free[i], T(1));
  for (int r = 0; r < ech.dim(); ++r) {
    int piv = ech.pivot(r);
    for (const auto& [j, y] : ech.rows()[r]) {
      if (j == piv) continue;
      basis[slot[j]].emplace_back(piv, T(0) - y);
    }
  }
  for (auto& v : basis) std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return basis;
}

template <class T>
int rank_of(const std::vector<SparseVec<T>>& rows, int ncols) {
  Echelon<T> ech(ncols);
  for (const auto& r : rows) ech.insert(r);
  return ech.dim();
}

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!detail::scalar_is_zero(x)) return false;
    return true;
  }

  SparseVec<T> row_sparse(int i) const {
    SparseVec<T> out;
    for (int j = 0; j < c_; ++j)
      if (!detail::scalar_is_zero((*this)(i, j))) out.emplace_back(j, (*this)(i, j));
    return out;
  }
  SparseVec<T> col_sparse(int j) const {
    SparseVec<T> out;
    for (int i = 0; i < r_; ++i)
      if (!detail::scalar_is_zero((*this)(i, j))) out.emplace_back(i, (*this)(i, j));
    return out;
  }
  void set_col(int j, const SparseVec<T>& v) {
    for (int i = 0; i < r_; ++i) (*this)(i, j) = T(0);
    for (const auto& [i, x] : v) (*this)(i, j) = x;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(r_, T(0));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (!detail::scalar_is_zero((*this)(i, j)) && !detail::scalar_is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x = x * s;
    return *this;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(Matrix x, const T& s) { return x *= s; }
  friend Matrix operator*(const T& s, Matrix x) { return x *= s; }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw ParameterError("matrix product: shape mismatch");
    Matrix out(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        const T& a = x(i, k);
        if (detail::scalar_is_zero(a)) continue;
        for (int j = 0; j < y.c_; ++j) {
          const T& b = y(k, j);
          if (!detail::scalar_is_zero(b)) out(i, j) += a * b;
        }
      }
    return out;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  int rank() const {
    std::vector<SparseVec<T>> rs;
    for (int i = 0; i < r_; ++i) rs.push_back(row_sparse(i));
    return rank_of(rs, c_);
  }

  /// Basis of the right kernel {x : M x = 0}.
  std::vector<std::vector<T>> kernel() const {
    std::vector<SparseVec<T>> rs;
    for (int i = 0; i < r_; ++i) rs.push_back(row_sparse(i));
    std::vector<std::vector<T>> out;
    for (const auto& v : nullspace(rs, c_)) out.push_back(to_dense(v, c_));
    return out;
  }

  /// Inverse of a square matrix; throws if singular.
  Matrix inverse() const {
    if (r_ != c_) throw ParameterError("inverse of a non-square matrix");
    int n = r_;
    Echelon<T> ech(2 * n);
    for (int i = 0; i < n; ++i) {
      SparseVec<T> row = row_sparse(i);
      row.emplace_back(n + i, T(1));
      ech.insert(row);
    }
    Matrix inv(n, n);
    for (int r = 0; r < ech.dim(); ++r) {
      int piv = ech.pivot(r);
      if (piv >= n) throw DivisionByZero("singular matrix");
      for (const auto& [j, y] : ech.rows()[r])
        if (j >= n) inv(piv, j - n) = y;
    }
    return inv;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < r_; ++i) {
      s += i ? ", [" : "[";
      for (int j = 0; j < c_; ++j) s += (j ? ", " : "") + to_str_((*this)(i, j));
      s += "]";
    }
    return s + "]";
  }

 private:
  static std::string to_str_(const T& x) {
    if constexpr (std::is_same_v<T, Rational>) return x.get_str();
    else return x.str();
  }
  void check_same_(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw ParameterError("matrix sum: shape mismatch");
  }

  int r_ = 0;
  int c_ = 0;
  std::vector<T> a_;
};

/// Matrix whose columns are the given vectors.
template <class T>
Matrix<T> from_columns(const std::vector<std::vector<T>>& cols, int nrows) {
  Matrix<T> m(nrows, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (int i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace tqg
