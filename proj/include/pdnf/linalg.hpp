#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pdnf/scalar.hpp"

namespace pdnf {

template <class K>
using Matrix = std::vector<std::vector<K>>;

/// Reduced row echelon form over a field, in place. Returns the pivot
/// columns in increasing order.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const K inv = K(1) / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      const K f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

template <class K>
std::size_t rank(Matrix<K> a) {
  return rref(a).size();
}

/// Basis of {x : A x = 0}, one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
template <class K>
Matrix<K> nullspace(Matrix<K> a, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<K> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<K> x(cols, K(0));
    x[f] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Incrementally maintained echelon basis, for greedy selection of
/// linearly independent vectors.
template <class K>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Adds v if it is independent of the vectors already held; returns
  /// whether it was added.
  bool insert(std::vector<K> v) {
    if (v.size() != dim_) throw std::invalid_argument("echelon basis: wrong vector length");
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && is_zero(v[p])) ++p;
    if (p == dim_) return false;
    const K inv = K(1) / v[p];
    for (auto& x : v) x *= inv;
    rows_.emplace_back(p, std::move(v));
    return true;
  }

  bool contains(std::vector<K> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::vector<K>& v) const {
    for (const auto& [p, row] : rows_) {
      if (is_zero(v[p])) continue;
      const K f = v[p];
      for (std::size_t k = 0; k < dim_; ++k) v[k] -= f * row[k];
    }
  }

  std::size_t dim_;
  std::vector<std::pair<std::size_t, std::vector<K>>> rows_;
};

/// Determinant of a square rational matrix by elimination.
inline Rational determinant(Matrix<Rational> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a[i][c])) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Integer generalized cross product of n-1 integer rows of length n:
/// v_i = (-1)^i det(rows without column i). v spans the rational kernel
/// when the rows have full rank.
inline std::vector<Integer> integer_cross(const std::vector<std::vector<long>>& rows, std::size_t n) {
  if (rows.size() + 1 != n) throw std::invalid_argument("integer_cross: expected n-1 rows");
  std::vector<Integer> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<Rational> minor;
    for (const auto& row : rows) {
      std::vector<Rational> r;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) r.emplace_back(row[j]);
      minor.push_back(std::move(r));
    }
    const Rational d = determinant(std::move(minor));
    v[i] = (i % 2 == 0) ? d.get_num() : Integer(-d.get_num());
  }
  return v;
}

}  // namespace pdnf
