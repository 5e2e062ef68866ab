#pragma once

#include "dirac/clifford.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dirac {

/// Splitting of the complexified quadratic space into dually paired
/// isotropic halves, plus the leftover odd vector in odd dimension.
/// Vectors are coordinate columns in the basis of the space.
struct Polarization {
  std::vector<Vector> plus;
  std::vector<Vector> minus;
  std::optional<Vector> odd;
  int zeta = 1;
  std::vector<std::string> plus_labels;

  /// Throws std::invalid_argument unless plus/minus are isotropic with
  /// <plus_i, minus_j> = delta_ij, the odd vector is orthogonal to both with
  /// <odd, odd> = +-1, and the odd vector is present iff dim is odd.
  void validate(const QuadraticSpace& q) const;
};

/// Pairs consecutive basis vectors (after the first one when dim is odd,
/// which becomes the odd vector). Same-sign pairs a, b give
/// u = (e_a + i e_b)/r2, v = s (e_a - i e_b)/r2; opposite signs give
/// u = (e_a + e_b)/r2, v = s_a (e_a - e_b)/r2.
Polarization standard_polarization(const QuadraticSpace& q, int zeta = 1);

/// Exterior algebra on the plus vectors with the Clifford action: plus
/// vectors wedge, minus vectors contract, the odd vector acts by
/// zeta*s/r2 on even and -zeta*s/r2 on odd degree (s = 1 or i by its sign).
class SpinModule {
 public:
  SpinModule(SpacePtr space, Polarization pol);
  explicit SpinModule(SpacePtr space, int zeta = 1) : SpinModule(space, standard_polarization(*space, zeta)) {}

  const SpacePtr& space() const { return space_; }
  const Polarization& polarization() const { return pol_; }
  /// 2^(number of plus vectors); basis index is the bitmask of the subset.
  Eigen::Index dim() const { return Eigen::Index(1) << pol_.plus.size(); }
  std::string basis_label(Eigen::Index k) const;
  int degree(Eigen::Index k) const;

  /// Action of basis vector i of the space.
  const Matrix& generator(int i) const { return generators_[static_cast<std::size_t>(i)]; }
  Matrix gamma(const CliffordElement& x) const;
  Matrix gamma_vector(const Vector& coords) const;
  /// Wedge by plus vector k and contraction by minus vector k.
  Matrix wedge(int k) const;
  Matrix contract(int k) const;
  /// (-1)^degree on the basis.
  Matrix parity_operator() const;

 private:
  SpacePtr space_;
  Polarization pol_;
  std::vector<Matrix> generators_;
};

/// S_A (x) S_B for a split of a joint space into the index sets a_indices and
/// b_indices, with the graded action and the multiplication map to S_joint.
class SpinSplit {
 public:
  /// Requires A even-dimensional and the polarizations of A and B to sit inside
  /// that of the joint module. Throws std::invalid_argument otherwise.
  SpinSplit(const SpinModule& a, const SpinModule& b, const SpinModule& joint, std::vector<int> a_indices,
            std::vector<int> b_indices);

  const SpinModule& a() const { return a_; }
  const SpinModule& b() const { return b_; }
  const SpinModule& joint() const { return joint_; }
  CliffordElement embed_a(const CliffordElement& c) const;
  CliffordElement embed_b(const CliffordElement& d) const;

  /// (c (x) d)(s (x) t) = (-1)^{deg d deg s} cs (x) dt, extended by parity of d.
  Matrix graded_tensor_action(const CliffordElement& c, const CliffordElement& d) const;
  /// Matrix of s (x) t -> s ^ t in the joint exterior algebra.
  const Matrix& mult_iso() const { return mult_iso_; }

 private:
  SpinModule a_, b_, joint_;
  std::vector<int> a_indices_, b_indices_;
  Matrix mult_iso_;
};

}  // namespace dirac
