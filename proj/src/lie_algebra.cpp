#include "dirac/lie_algebra.hpp"

#include <stdexcept>

namespace dirac {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<Vector> brackets, Matrix form)
    : labels_(std::move(labels)), brackets_(std::move(brackets)), form_(std::move(form)) {
  const Eigen::Index n = dim();
  if (static_cast<Eigen::Index>(brackets_.size()) != n * n) {
    throw std::invalid_argument("structure constants must have dim^2 entries");
  }
  if (form_.rows() != n || form_.cols() != n) throw std::invalid_argument("form has the wrong size");
  for (const auto& v : brackets_) {
    if (v.size() != n) throw std::invalid_argument("bracket coordinates have the wrong length");
  }
  if (!exactly_equal(form_, Matrix(form_.transpose()))) throw std::invalid_argument("form is not symmetric");

  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!exactly_equal(bracket_of_basis(i, j), Vector(-bracket_of_basis(j, i)))) {
        throw std::invalid_argument("bracket is not antisymmetric on " + labels_[i] + ", " + labels_[j]);
      }
    }

  std::vector<Matrix> ads;
  for (Eigen::Index i = 0; i < n; ++i) ads.push_back(ad(basis_vector(i)));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      // Jacobi in the form ad([x_i,x_j]) = [ad x_i, ad x_j]
      if (!exactly_equal(ad(bracket_of_basis(i, j)), commutator(ads[i], ads[j]))) {
        throw std::invalid_argument("Jacobi identity fails on " + labels_[i] + ", " + labels_[j]);
      }
    }
  for (Eigen::Index i = 0; i < n; ++i) {
    // <[x,y],z> + <y,[x,z]> = 0 for all y, z
    Matrix inv = ads[i].transpose() * form_ + form_ * ads[i];
    if (!is_zero(inv)) throw std::invalid_argument("form is not invariant under ad " + labels_[i]);
  }
}

LieAlgebra LieAlgebra::from_matrices(std::vector<std::string> labels, const std::vector<Matrix>& mats) {
  const Eigen::Index n = static_cast<Eigen::Index>(mats.size());
  if (static_cast<Eigen::Index>(labels.size()) != n) throw std::invalid_argument("label count mismatch");
  if (n == 0) return LieAlgebra(std::move(labels), {}, Matrix(0, 0));
  const Eigen::Index r = mats[0].rows(), c = mats[0].cols();
  Matrix flat(r * c, n);
  for (Eigen::Index k = 0; k < n; ++k) flat.col(k) = mats[k].reshaped();
  if (rank(flat) != n) throw std::invalid_argument("matrices are linearly dependent");

  std::vector<Vector> brackets;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Matrix br = commutator(mats[i], mats[j]);
      auto coords = solve_coordinates(flat, Vector(br.reshaped()));
      if (!coords) throw std::invalid_argument("matrices do not span a Lie algebra");
      brackets.push_back(*coords);
    }
  Matrix form(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) form(i, j) = (mats[i] * mats[j]).trace();
  return LieAlgebra(std::move(labels), std::move(brackets), std::move(form));
}

Eigen::Index LieAlgebra::index_of(const std::string& label) const {
  for (Eigen::Index i = 0; i < dim(); ++i)
    if (labels_[i] == label) return i;
  throw std::out_of_range("no basis element named " + label);
}

Vector LieAlgebra::basis_vector(Eigen::Index i) const {
  Vector v = Vector::Zero(dim());
  v(i) = 1;
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out = Vector::Zero(dim());
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < dim(); ++j) {
      if (y(j).is_zero()) continue;
      out += (x(i) * y(j)) * bracket_of_basis(i, j);
    }
  }
  return out;
}

ExactScalar LieAlgebra::pair(const Vector& x, const Vector& y) const { return (x.transpose() * form_ * y)(0, 0); }

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(dim(), dim());
  for (Eigen::Index j = 0; j < dim(); ++j) m.col(j) = bracket(x, basis_vector(j));
  return m;
}

bool LieAlgebra::same_brackets(const LieAlgebra& other) const {
  if (other.dim() != dim()) return false;
  for (std::size_t k = 0; k < brackets_.size(); ++k)
    if (!exactly_equal(brackets_[k], other.brackets_[k])) return false;
  return true;
}

std::vector<Matrix> sl2_matrices() {
  const ExactScalar i = ExactScalar::i();
  const ExactScalar half = ExactScalar::rational(1, 2);
  Matrix h(2, 2), e(2, 2), f(2, 2);
  h << ExactScalar(0), -i, i, ExactScalar(0);
  e << half, half * i, half * i, -half;
  f << half, -half * i, -half * i, -half;
  return {h, e, f};
}

LieAlgebra sl2() { return LieAlgebra::from_matrices({"h", "e", "f"}, sl2_matrices()); }

LieAlgebra so2() { return LieAlgebra::from_matrices({"h"}, {sl2_matrices()[0]}); }

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::string& suffix_a,
                      const std::string& suffix_b) {
  const Eigen::Index na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + suffix_a);
  for (const auto& l : b.labels()) labels.push_back(l + suffix_b);
  std::vector<Vector> brackets(static_cast<std::size_t>(n * n), Vector::Zero(n));
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j) brackets[i * n + j].head(na) = a.bracket_of_basis(i, j);
  for (Eigen::Index i = 0; i < nb; ++i)
    for (Eigen::Index j = 0; j < nb; ++j) brackets[(na + i) * n + na + j].tail(nb) = b.bracket_of_basis(i, j);
  Matrix form = Matrix::Zero(n, n);
  form.topLeftCorner(na, na) = a.form();
  form.bottomRightCorner(nb, nb) = b.form();
  return LieAlgebra(std::move(labels), std::move(brackets), std::move(form));
}

bool is_subalgebra(const LieAlgebra& g, const std::vector<Vector>& basis) {
  Matrix span = columns(basis, g.dim());
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (!solve_coordinates(span, g.bracket(x, y))) return false;
  return true;
}

LieAlgebra subalgebra(const LieAlgebra& g, const std::vector<Vector>& basis, std::vector<std::string> labels) {
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  Matrix span = columns(basis, g.dim());
  if (rank(span) != n) throw std::invalid_argument("subalgebra basis is linearly dependent");
  std::vector<Vector> brackets;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      auto c = solve_coordinates(span, g.bracket(x, y));
      if (!c) throw std::invalid_argument("span is not closed under the bracket");
      brackets.push_back(*c);
    }
  Matrix form(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) form(i, j) = g.pair(basis[i], basis[j]);
  return LieAlgebra(std::move(labels), std::move(brackets), std::move(form));
}

}  // namespace dirac
