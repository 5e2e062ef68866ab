#pragma once

#include "dirac/linalg.hpp"

#include <string>
#include <vector>

namespace dirac {

/// Finite-dimensional complex Lie algebra given by structure constants in a
/// fixed basis, together with an invariant symmetric bilinear form.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// brackets[i * dim + j] holds the coordinates of [x_i, x_j]. Throws
  /// std::invalid_argument unless the bracket is antisymmetric, satisfies the
  /// Jacobi identity, and the form is symmetric and ad-invariant.
  LieAlgebra(std::vector<std::string> labels, std::vector<Vector> brackets, Matrix form);

  /// Matrix Lie algebra spanned by mats with the trace form tr(XY).
  static LieAlgebra from_matrices(std::vector<std::string> labels, const std::vector<Matrix>& mats);

  Eigen::Index dim() const { return static_cast<Eigen::Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& form() const { return form_; }
  Eigen::Index index_of(const std::string& label) const;

  Vector basis_vector(Eigen::Index i) const;
  Vector basis_vector(const std::string& label) const { return basis_vector(index_of(label)); }
  const Vector& bracket_of_basis(Eigen::Index i, Eigen::Index j) const { return brackets_[i * dim() + j]; }

  Vector bracket(const Vector& x, const Vector& y) const;
  ExactScalar pair(const Vector& x, const Vector& y) const;
  /// Matrix of ad(x) in the stored basis.
  Matrix ad(const Vector& x) const;

  /// Same structure constants (forms may differ).
  bool same_brackets(const LieAlgebra& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Vector> brackets_;
  Matrix form_;
};

/// sl(2) in the basis h, e, f with [h,e]=2e, [h,f]=-2f, [e,f]=h, realized by
/// h = [[0,-i],[i,0]], e = 1/2 [[1,i],[i,-1]], f = 1/2 [[1,-i],[-i,-1]] and
/// the trace form.
LieAlgebra sl2();
/// The 2x2 matrices h, e, f above, in that order.
std::vector<Matrix> sl2_matrices();
/// so(2) as the span of h inside sl2(), trace form.
LieAlgebra so2();

/// a x b with the orthogonal sum of the forms. Labels are suffixed.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, const std::string& suffix_a = "1",
                      const std::string& suffix_b = "2");

/// Structure constants of the span of the given vectors, which must be
/// linearly independent and closed under the bracket.
LieAlgebra subalgebra(const LieAlgebra& g, const std::vector<Vector>& basis, std::vector<std::string> labels);

/// Checks that the span of basis is closed under the bracket.
bool is_subalgebra(const LieAlgebra& g, const std::vector<Vector>& basis);

}  // namespace dirac
