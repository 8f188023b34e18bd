#ifndef QUIVERCOUNT_MATRIX_HPP
#define QUIVERCOUNT_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quivercount/field.hpp"

namespace quivercount {

/// Dense row-major matrix over an exact field element type.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  E& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const E& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  const std::vector<E>& data() const { return data_; }
  std::vector<E>& data() { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

template <ExactField F>
using MatrixOver = Matrix<typename F::Element>;

template <ExactField F>
MatrixOver<F> zeros(const F& k, std::size_t rows, std::size_t cols) {
  return MatrixOver<F>(rows, cols, k.zero());
}

template <ExactField F>
MatrixOver<F> identity(const F& k, std::size_t n) {
  auto m = zeros(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

template <ExactField F>
MatrixOver<F> multiply(const F& k, const MatrixOver<F>& a, const MatrixOver<F>& b) {
  assert(a.cols() == b.rows());
  auto c = zeros(k, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (k.is_zero(a(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = k.add(c(i, j), k.mul(a(i, l), b(l, j)));
    }
  }
  return c;
}

template <ExactField F>
MatrixOver<F> add(const F& k, const MatrixOver<F>& a, const MatrixOver<F>& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  auto c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = k.add(a.data()[i], b.data()[i]);
  return c;
}

template <ExactField F>
MatrixOver<F> subtract(const F& k, const MatrixOver<F>& a, const MatrixOver<F>& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  auto c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = k.sub(a.data()[i], b.data()[i]);
  return c;
}

template <ExactField F>
MatrixOver<F> scale(const F& k, const typename F::Element& s, const MatrixOver<F>& a) {
  auto c = a;
  for (auto& x : c.data()) x = k.mul(s, x);
  return c;
}

template <ExactField F>
bool is_zero_matrix(const F& k, const MatrixOver<F>& a) {
  for (const auto& x : a.data()) {
    if (!k.is_zero(x)) return false;
  }
  return true;
}

template <class E>
struct RowEchelon {
  Matrix<E> reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <ExactField F>
RowEchelon<typename F::Element> row_reduce(const F& k, MatrixOver<F> m) {
  RowEchelon<typename F::Element> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && k.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const auto inv = k.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = k.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || k.is_zero(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = k.sub(m(i, j), k.mul(factor, m(row, j)));
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <ExactField F>
std::size_t rank(const F& k, const MatrixOver<F>& m) {
  return row_reduce(k, m).pivot_columns.size();
}

/// Basis of {x : m x = 0}; one vector per free column, with a 1 in that column.
template <ExactField F>
std::vector<std::vector<typename F::Element>> nullspace(const F& k, const MatrixOver<F>& m) {
  const auto ech = row_reduce(k, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(m.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) {
      v[ech.pivot_columns[r]] = k.neg(ech.reduced(r, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ExactField F>
std::optional<MatrixOver<F>> inverse(const F& k, const MatrixOver<F>& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  auto aug = zeros(k, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = k.one();
  }
  auto ech = row_reduce(k, std::move(aug));
  if (ech.pivot_columns.size() < n || (n > 0 && ech.pivot_columns[n - 1] != n - 1)) return std::nullopt;
  auto inv = zeros(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  }
  return inv;
}

template <ExactField F>
bool is_invertible(const F& k, const MatrixOver<F>& m) {
  return m.rows() == m.cols() && rank(k, m) == m.rows();
}

/// Column-stacks a list of column vectors into a matrix with `rows` rows.
template <ExactField F>
MatrixOver<F> from_columns(const F& k, std::size_t rows,
                           const std::vector<std::vector<typename F::Element>>& cols) {
  auto m = zeros(k, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

/// Basis (as columns) of the column space of m.
template <ExactField F>
std::vector<std::vector<typename F::Element>> column_space(const F& k, const MatrixOver<F>& m) {
  const auto ech = row_reduce(k, m);
  std::vector<std::vector<typename F::Element>> out;
  for (auto c : ech.pivot_columns) {
    std::vector<typename F::Element> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace quivercount

#endif  // QUIVERCOUNT_MATRIX_HPP
