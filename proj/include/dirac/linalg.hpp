#pragma once

#include "dirac/exact_scalar.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dirac {

using Matrix = Eigen::Matrix<ExactScalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<ExactScalar, Eigen::Dynamic, 1>;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <typename A, typename B>
bool exactly_equal(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      if (!(x(i, j) == y(i, j))) return false;
  return true;
}

/// Reduced row echelon form with the pivot columns, by exact Gauss-Jordan
/// elimination. The pivot in each column is the first nonzero entry.
struct RowEchelon {
  Matrix rref;
  std::vector<Eigen::Index> pivots;
};

template <typename Derived>
RowEchelon row_reduce(const Eigen::MatrixBase<Derived>& m) {
  RowEchelon out{m, {}};
  Matrix& r = out.rref;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Eigen::Index p = row;
    while (p < r.rows() && r(p, col).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != row) r.row(p).swap(r.row(row));
    ExactScalar inv = r(row, col).inverse();
    for (Eigen::Index j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      ExactScalar f = r(i, col);
      for (Eigen::Index j = col; j < r.cols(); ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(row_reduce(m).pivots.size());
}

/// Basis of {v : m v = 0}, one vector per free column, each with a 1 in its
/// free coordinate. Empty iff m is injective.
template <typename Derived>
std::vector<Vector> nullspace(const Eigen::MatrixBase<Derived>& m) {
  RowEchelon re = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : re.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector> basis;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v = Vector::Zero(m.cols());
    v(free) = 1;
    for (std::size_t k = 0; k < re.pivots.size(); ++k) {
      v(re.pivots[k]) = -re.rref(static_cast<Eigen::Index>(k), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Stacks vectors as columns.
inline Matrix columns(const std::vector<Vector>& vs, Eigen::Index rows) {
  Matrix m(rows, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = vs[k];
  return m;
}

template <typename Derived>
Matrix inverse(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix::Identity(n, n);
  RowEchelon re = row_reduce(aug);
  if (static_cast<Eigen::Index>(re.pivots.size()) < n || re.pivots[n - 1] >= n) {
    throw std::domain_error("matrix is singular");
  }
  return re.rref.rightCols(n);
}

/// Coordinates c with basis * c = v, or nullopt when v is outside the column span.
/// Columns of basis must be linearly independent.
template <typename B, typename V>
std::optional<Vector> solve_coordinates(const Eigen::MatrixBase<B>& basis, const Eigen::MatrixBase<V>& v) {
  const Eigen::Index k = basis.cols();
  Matrix aug(basis.rows(), k + 1);
  aug.leftCols(k) = basis;
  aug.col(k) = v;
  RowEchelon re = row_reduce(aug);
  if (static_cast<Eigen::Index>(re.pivots.size()) > k || (!re.pivots.empty() && re.pivots.back() == k)) {
    return std::nullopt;
  }
  if (static_cast<Eigen::Index>(re.pivots.size()) != k) {
    throw std::invalid_argument("basis columns are linearly dependent");
  }
  return Vector(re.rref.col(k).head(k));
}

template <typename A, typename B>
Matrix kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  Matrix out = Matrix::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  return out;
}

/// Product that skips zero entries; the matrices met here are mostly zero.
template <typename A, typename B>
Matrix product(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("product of incompatible matrices");
  std::vector<std::vector<Eigen::Index>> nz(static_cast<std::size_t>(a.cols()));
  for (Eigen::Index k = 0; k < a.cols(); ++k)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!a(i, k).is_zero()) nz[static_cast<std::size_t>(k)].push_back(i);
  Matrix out = Matrix::Zero(a.rows(), b.cols());
  for (Eigen::Index j = 0; j < b.cols(); ++j)
    for (Eigen::Index k = 0; k < b.rows(); ++k) {
      if (b(k, j).is_zero()) continue;
      const ExactScalar bkj = b(k, j);
      for (Eigen::Index i : nz[static_cast<std::size_t>(k)]) out(i, j) += a(i, k) * bkj;
    }
  return out;
}

template <typename A, typename B>
Matrix commutator(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return product(a, b) - product(b, a);
}

/// True iff m equals lambda times the identity, exactly.
template <typename Derived>
bool solve_scalar_action(const Eigen::MatrixBase<Derived>& m, const ExactScalar& lambda) {
  if (m.rows() != m.cols()) throw std::invalid_argument("scalar action needs a square matrix");
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const ExactScalar expect = i == j ? lambda : ExactScalar();
      if (!(m(i, j) == expect)) return false;
    }
  return true;
}

/// The scalar s with m = s * Id, if any.
template <typename Derived>
std::optional<ExactScalar> scalar_value(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  ExactScalar s = m(0, 0);
  if (!solve_scalar_action(m, s)) return std::nullopt;
  return s;
}

/// Permutation P with P (x (x) y) = y (x) x for x of size n, y of size k.
inline Matrix swap_tensor_factors(Eigen::Index n, Eigen::Index k) {
  Matrix p = Matrix::Zero(n * k, n * k);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < k; ++b) p(b * n + a, a * k + b) = 1;
  return p;
}

inline Matrix scaled_identity(Eigen::Index n, const ExactScalar& s) {
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

/// Entry-wise rendering, rows separated by "; ".
template <typename Derived>
std::string render(const Eigen::MatrixBase<Derived>& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m(i, j).to_string();
    }
  }
  return s + "]";
}

}  // namespace dirac
