#include "dirac/weight_module.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace dirac {

WeightModule::WeightModule(LieAlgebra algebra, std::vector<Matrix> matrices, std::vector<int> weights,
                           std::vector<std::string> labels, ModuleKind kind, std::optional<int> truncation,
                           std::string weight_generator)
    : algebra_(std::move(algebra)),
      action_(std::move(matrices)),
      weights_(std::move(weights)),
      labels_(std::move(labels)),
      kind_(kind),
      truncation_(truncation),
      weight_generator_(std::move(weight_generator)) {
  const Eigen::Index n = dim();
  if (static_cast<Eigen::Index>(action_.size()) != algebra_.dim()) {
    throw std::invalid_argument("one action matrix per basis element required");
  }
  if (static_cast<Eigen::Index>(labels_.size()) != n) throw std::invalid_argument("one label per basis vector");
  for (const auto& m : action_)
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("action matrix has the wrong size");
  if (kind_ == ModuleKind::finite) {
    if (truncation_) throw std::invalid_argument("finite modules carry no truncation level");
  } else if (!truncation_ || *truncation_ + 1 != n) {
    throw std::invalid_argument("truncated module needs N with N + 1 basis vectors");
  }

  const Matrix& hw = action(weight_generator_);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      ExactScalar expect = i == j ? ExactScalar(weights_[static_cast<std::size_t>(i)]) : ExactScalar();
      if (!(hw(i, j) == expect)) throw std::invalid_argument("weight generator is not diagonal with the given weights");
    }

  const Eigen::Index cert = certified_dim();
  for (Eigen::Index i = 0; i < algebra_.dim(); ++i)
    for (Eigen::Index j = i + 1; j < algebra_.dim(); ++j) {
      Matrix lhs = commutator(action_[i], action_[j]);
      Matrix rhs = act(algebra_.bracket_of_basis(i, j));
      if (!exactly_equal(lhs.leftCols(cert), rhs.leftCols(cert))) {
        throw std::invalid_argument("module relation fails for [" + algebra_.labels()[i] + ", " +
                                    algebra_.labels()[j] + "]");
      }
    }
}

Eigen::Index WeightModule::certified_dim() const { return truncation_ ? *truncation_ : dim(); }

Matrix WeightModule::act(const Vector& x) const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!x(i).is_zero()) m += x(i) * action_[static_cast<std::size_t>(i)];
  return m;
}

namespace {

std::vector<std::string> v_labels(int count) {
  std::vector<std::string> out;
  for (int j = 0; j < count; ++j) out.push_back("v" + std::to_string(j));
  return out;
}

WeightModule ladder_module(int levels, const std::function<int(int)>& weight, ModuleKind kind,
                           std::optional<int> truncation, const std::function<void(Matrix&, Matrix&)>& fill) {
  LieAlgebra g = sl2();
  Matrix h = Matrix::Zero(levels, levels), e = Matrix::Zero(levels, levels), f = Matrix::Zero(levels, levels);
  std::vector<int> weights;
  for (int j = 0; j < levels; ++j) {
    weights.push_back(weight(j));
    h(j, j) = weight(j);
  }
  fill(e, f);
  return WeightModule(std::move(g), {h, e, f}, std::move(weights), v_labels(levels), kind, truncation);
}

}  // namespace

WeightModule sl2_irrep(int n) {
  if (n < 0) throw std::invalid_argument("highest weight must be nonnegative");
  return ladder_module(
      n + 1, [n](int j) { return n - 2 * j; }, ModuleKind::finite, std::nullopt, [n](Matrix& e, Matrix& f) {
        for (int j = 0; j <= n; ++j) {
          if (j < n) f(j + 1, j) = 1;
          if (j > 0) e(j - 1, j) = j * (n - j + 1);
        }
      });
}

WeightModule lowest_weight_module(int mu, int n_levels) {
  if (n_levels < 2) throw std::invalid_argument("truncation level must be at least 2");
  return ladder_module(
      n_levels + 1, [mu](int j) { return mu + 2 * j; }, ModuleKind::lowest_weight_truncated, n_levels,
      [mu, n_levels](Matrix& e, Matrix& f) {
        for (int j = 0; j <= n_levels; ++j) {
          if (j < n_levels) e(j + 1, j) = 1;
          if (j > 0) f(j - 1, j) = -j * (mu + j - 1);
        }
      });
}

WeightModule highest_weight_module(int mu, int n_levels) {
  if (n_levels < 2) throw std::invalid_argument("truncation level must be at least 2");
  return ladder_module(
      n_levels + 1, [mu](int j) { return mu - 2 * j; }, ModuleKind::highest_weight_truncated, n_levels,
      [mu, n_levels](Matrix& e, Matrix& f) {
        for (int j = 0; j <= n_levels; ++j) {
          if (j < n_levels) f(j + 1, j) = 1;
          if (j > 0) e(j - 1, j) = j * (mu - j + 1);
        }
      });
}

WeightModule tensor_action(const WeightModule& m1, const WeightModule& m2) {
  if (!m1.algebra().same_brackets(m2.algebra()) || m1.weight_generator() != m2.weight_generator()) {
    throw std::invalid_argument("tensor product of modules over different algebras");
  }
  if (m1.truncation() || m2.truncation()) throw std::invalid_argument("tensor products need finite modules");
  const Matrix i1 = Matrix::Identity(m1.dim(), m1.dim()), i2 = Matrix::Identity(m2.dim(), m2.dim());
  std::vector<Matrix> action;
  for (Eigen::Index k = 0; k < m1.algebra().dim(); ++k) action.push_back(kron(m1.action(k), i2) + kron(i1, m2.action(k)));
  std::vector<int> weights;
  std::vector<std::string> labels;
  for (Eigen::Index a = 0; a < m1.dim(); ++a)
    for (Eigen::Index b = 0; b < m2.dim(); ++b) {
      weights.push_back(m1.weights()[static_cast<std::size_t>(a)] + m2.weights()[static_cast<std::size_t>(b)]);
      labels.push_back(m1.labels()[static_cast<std::size_t>(a)] + "(x)" + m2.labels()[static_cast<std::size_t>(b)]);
    }
  return WeightModule(m1.algebra(), std::move(action), std::move(weights), std::move(labels), ModuleKind::finite,
                      std::nullopt, m1.weight_generator());
}

WeightModule dual(const WeightModule& m) {
  if (m.truncation()) throw std::invalid_argument("duals are taken of finite modules only");
  std::vector<Matrix> action;
  for (Eigen::Index k = 0; k < m.algebra().dim(); ++k) action.push_back(-m.action(k).transpose());
  std::vector<int> weights;
  std::vector<std::string> labels;
  for (Eigen::Index a = 0; a < m.dim(); ++a) {
    weights.push_back(-m.weights()[static_cast<std::size_t>(a)]);
    labels.push_back(m.labels()[static_cast<std::size_t>(a)] + "*");
  }
  return WeightModule(m.algebra(), std::move(action), std::move(weights), std::move(labels), ModuleKind::finite,
                      std::nullopt, m.weight_generator());
}

WeightModule restrict_module(const WeightModule& m, const LieAlgebra& sub, const std::vector<Vector>& sub_basis) {
  if (static_cast<Eigen::Index>(sub_basis.size()) != sub.dim()) throw std::invalid_argument("basis size mismatch");
  std::vector<Matrix> action;
  for (const auto& x : sub_basis) action.push_back(m.act(x));
  return WeightModule(sub, std::move(action), m.weights(), m.labels(), m.kind(), m.truncation(), m.weight_generator());
}

WeightModule rebind(const WeightModule& m, const LieAlgebra& algebra, std::string weight_generator) {
  if (!algebra.same_brackets(m.algebra())) throw std::invalid_argument("rebinding to an algebra with other brackets");
  std::vector<Matrix> action;
  for (Eigen::Index k = 0; k < algebra.dim(); ++k) action.push_back(m.action(k));
  return WeightModule(algebra, std::move(action), m.weights(), m.labels(), m.kind(), m.truncation(),
                      std::move(weight_generator));
}

WeightModule trivial_module(const LieAlgebra& algebra, std::string weight_generator) {
  std::vector<Matrix> action(static_cast<std::size_t>(algebra.dim()), Matrix::Zero(1, 1));
  return WeightModule(algebra, std::move(action), {0}, {"v0"}, ModuleKind::finite, std::nullopt,
                      std::move(weight_generator));
}

std::vector<int> weight_set(const WeightModule& m) {
  std::set<int, std::greater<>> s(m.weights().begin(), m.weights().end());
  return {s.begin(), s.end()};
}

}  // namespace dirac
