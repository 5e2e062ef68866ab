#pragma once

#include "dirac/clifford.hpp"
#include "dirac/lie_algebra.hpp"
#include "dirac/linalg.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dirac {

/// Eigenvalue nu of (X, Y) -> <sigma X, Y> against <X, Y> on l, with a basis
/// of the eigenspace l(nu) (coordinates in g).
struct NuSpace {
  ExactScalar nu;
  std::vector<Vector> basis;
};

/// Lie-algebra data of a transitive triple (G, H, L): g with its invariant
/// form, the commuting involutions sigma and theta, bases of h and l, and the
/// chosen frames of l cap h, q_l' = {Z_j} and l cap s = {T_k}.
struct TripleData {
  LieAlgebra g;
  Matrix sigma;
  Matrix theta;
  std::vector<Vector> h_basis;
  std::vector<Vector> l_basis;
  std::vector<std::string> h_labels;
  std::vector<std::string> l_labels;
  std::vector<Vector> lh_basis;
  std::vector<std::string> lh_labels;
  Frame ql_prime;
  Frame ls;
};

/// Structural check outcome: name and whether it held, with a short reason.
struct StructureCheck {
  std::string name;
  bool ok;
  std::string details;
};

/// A triple with all derived objects. Construction throws
/// std::invalid_argument when one of the defining conditions fails.
class TransitiveTriple {
 public:
  explicit TransitiveTriple(TripleData data);

  const TripleData& data() const { return data_; }
  const LieAlgebra& g() const { return data_.g; }
  const std::vector<NuSpace>& nu_spaces() const { return nu_spaces_; }

  /// nu of a vector lying in a single eigenspace; throws otherwise.
  ExactScalar nu_of(const Vector& x) const;
  /// d_nu = ((1 - nu) / 2)^(-1/2); throws for nu = 1 or outside the field.
  ExactScalar d_nu(const ExactScalar& nu) const;
  /// rho^{+-}(X) = d_nu (X +- sigma X) / 2 for X in l(nu), nu != 1.
  Vector rho(int sign, const Vector& x) const;

  /// q_l = q_l' + (l cap s), ordered Z_1.., T_1..
  const Frame& ql() const { return ql_; }
  const Frame& ql_prime() const { return data_.ql_prime; }
  const Frame& ls() const { return data_.ls; }
  /// rho^-(q_l frame), an orthonormal frame of q.
  const Frame& q() const { return q_; }
  /// rho^+(T_k), an orthonormal frame of h cap s.
  const Frame& hs() const { return hs_; }
  /// Bases of h cap k (= l cap h here) and l cap k.
  const std::vector<Vector>& hk_basis() const { return hk_basis_; }
  const std::vector<Vector>& lk_basis() const { return lk_basis_; }
  const std::vector<Vector>& lh_basis() const { return data_.lh_basis; }
  /// Lie algebra structure of h in the stored basis.
  const LieAlgebra& h_algebra() const { return h_algebra_; }
  /// Coordinates of a vector of h in h_basis; throws if not in h.
  Vector h_coordinates(const Vector& x) const;

  /// Every defining condition, for reporting.
  const std::vector<StructureCheck>& structure_checks() const { return checks_; }

 private:
  TripleData data_;
  std::vector<NuSpace> nu_spaces_;
  Frame ql_, q_, hs_;
  std::vector<Vector> hk_basis_, lk_basis_;
  LieAlgebra h_algebra_;
  std::vector<StructureCheck> checks_;
};

/// Eigen-decomposition of the sigma-pairing on span(l_basis). Eigenvalues are
/// found exactly (rational and quadratic roots); others raise
/// std::domain_error("eigenvalue outside the scalar field").
std::vector<NuSpace> nu_decompose(const LieAlgebra& g, const Matrix& sigma, const std::vector<Vector>& l_basis);

/// g = sl(2) x sl(2) with the swap sigma, H the diagonal, L = sl(2) x so(2),
/// Z = (ht, -ht)/r2, T1 = (et, 0), T2 = (ft, 0), W = (ht, ht)/r2.
TripleData sl2_triple_data();
TransitiveTriple build_sl2_triple();

/// Vectors ht = (i/r2) h, et = (e + f)/r2, ft = (i/r2)(e - f) of sl(2).
Vector sl2_h_tilde();
Vector sl2_e_tilde();
Vector sl2_f_tilde();

/// Plain key-value description (see data/sl2_triple.txt).
TripleData parse_triple(std::istream& in);
TripleData load_triple(const std::string& path);
void write_triple(std::ostream& out, const TripleData& t);

/// <[rho+(T_k), rho-(Z_r)], rho-(T_i)> = <[T_k, Z_r], T_i> for all k, r, i.
struct IdentityCheck {
  std::string label;
  ExactScalar lhs;
  ExactScalar rhs;
  bool ok() const { return lhs == rhs; }
};
std::vector<IdentityCheck> rho_bracket_identity(const TransitiveTriple& t);

/// omega(rho+ X, rho- Y, rho- Z) = 1/4 d d' d'' (1 + nu - nu' - nu'') omega(X, Y, Z)
/// over all ordered triples of the q_l frame, omega(X,Y,Z) = <[X,Y],Z>.
std::vector<IdentityCheck> omega_identity(const TransitiveTriple& t);

}  // namespace dirac
