#pragma once

#include "dirac/lie_algebra.hpp"
#include "dirac/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dirac {

enum class ModuleKind { finite, lowest_weight_truncated, highest_weight_truncated };

/// Module over a Lie algebra given by one exact matrix per basis element,
/// on a basis of weight vectors for a chosen weight generator.
///
/// Truncated kinds model infinite-dimensional modules on v_0..v_N; the
/// relations are only required on v_0..v_{N-1} (the certified levels).
class WeightModule {
 public:
  /// Throws std::invalid_argument if a relation fails on the certified part,
  /// if the weight generator is not diagonal with the given integer weights,
  /// or if sizes disagree.
  WeightModule(LieAlgebra algebra, std::vector<Matrix> action, std::vector<int> weights,
               std::vector<std::string> labels, ModuleKind kind = ModuleKind::finite,
               std::optional<int> truncation = std::nullopt, std::string weight_generator = "h");

  const LieAlgebra& algebra() const { return algebra_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(weights_.size()); }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<std::string>& labels() const { return labels_; }
  ModuleKind kind() const { return kind_; }
  std::optional<int> truncation() const { return truncation_; }
  const std::string& weight_generator() const { return weight_generator_; }
  /// Number of basis vectors on which the relations are certified.
  Eigen::Index certified_dim() const;

  const Matrix& action(Eigen::Index i) const { return action_[static_cast<std::size_t>(i)]; }
  const Matrix& action(const std::string& label) const { return action(algebra_.index_of(label)); }
  /// Action of sum x_i x_i.
  Matrix act(const Vector& x) const;

 private:
  LieAlgebra algebra_;
  std::vector<Matrix> action_;
  std::vector<int> weights_;
  std::vector<std::string> labels_;
  ModuleKind kind_;
  std::optional<int> truncation_;
  std::string weight_generator_;
};

/// Irreducible sl(2)-module of highest weight n: v_j of weight n - 2j,
/// f v_j = v_{j+1}, e v_j = j (n - j + 1) v_{j-1}.
WeightModule sl2_irrep(int n);

/// v_0..v_N of weights mu + 2j with e v_j = v_{j+1} (e v_N = 0) and
/// f v_j = -j (mu + j - 1) v_{j-1}.
WeightModule lowest_weight_module(int mu, int n_levels = 40);

/// v_0..v_N of weights mu - 2j with f v_j = v_{j+1} (f v_N = 0) and
/// e v_j = j (mu - j + 1) v_{j-1}.
WeightModule highest_weight_module(int mu, int n_levels = 40);

/// X acts by pi_1(X) (x) 1 + 1 (x) pi_2(X); weights add.
WeightModule tensor_action(const WeightModule& m1, const WeightModule& m2);

/// X acts by -pi(X)^T; weights negate.
WeightModule dual(const WeightModule& m);

/// Restriction to the subalgebra spanned by sub_basis (coordinates in the
/// algebra of m), with the given structure; the weight generator of sub
/// must be among the restricted elements.
WeightModule restrict_module(const WeightModule& m, const LieAlgebra& sub, const std::vector<Vector>& sub_basis);

/// The same matrices viewed over another algebra with identical structure
/// constants (e.g. the diagonal copy of sl(2)).
WeightModule rebind(const WeightModule& m, const LieAlgebra& algebra, std::string weight_generator);

/// Trivial one-dimensional module.
WeightModule trivial_module(const LieAlgebra& algebra, std::string weight_generator = "h");

/// Weights present in m (sorted descending, without multiplicity).
std::vector<int> weight_set(const WeightModule& m);

}  // namespace dirac
