#pragma once

#include "dirac/clifford.hpp"
#include "dirac/spin_module.hpp"
#include "dirac/transitive_triple.hpp"
#include "dirac/weight_module.hpp"

#include <map>
#include <string>
#include <vector>

namespace dirac {

/// Sum over first-order enveloping symbols x_i (vectors of a fixed symbol
/// basis, or the unit) of x_i (x) M_i with M_i an endomorphism of S (x) E.
class FormalDiracElement {
 public:
  static constexpr int unit = -1;

  FormalDiracElement(std::vector<Vector> symbols, std::vector<std::string> symbol_labels, Eigen::Index endo_dim);

  const std::vector<Vector>& symbols() const { return symbols_; }
  const std::vector<std::string>& symbol_labels() const { return labels_; }
  Eigen::Index endo_dim() const { return endo_dim_; }
  /// Nonzero entries only, keyed by symbol index (unit = -1).
  const std::map<int, Matrix>& terms() const { return terms_; }
  Matrix term(int symbol) const;
  std::string label(int symbol) const { return symbol == unit ? "1" : labels_[static_cast<std::size_t>(symbol)]; }

  void add(int symbol, const Matrix& m);

  FormalDiracElement& operator+=(const FormalDiracElement& o);
  FormalDiracElement& operator-=(const FormalDiracElement& o);
  friend FormalDiracElement operator+(FormalDiracElement x, const FormalDiracElement& y) { return x += y; }
  friend FormalDiracElement operator-(FormalDiracElement x, const FormalDiracElement& y) { return x -= y; }
  friend FormalDiracElement operator*(const ExactScalar& s, FormalDiracElement x);
  friend bool operator==(const FormalDiracElement& x, const FormalDiracElement& y);

  /// Labels of symbols whose matrices differ (empty when equal).
  std::vector<std::string> mismatched_symbols(const FormalDiracElement& o) const;

 private:
  void require_compatible(const FormalDiracElement& o) const;

  std::vector<Vector> symbols_;
  std::vector<std::string> labels_;
  Eigen::Index endo_dim_;
  std::map<int, Matrix> terms_;
};

/// D = sum_j <X_j, X_j> pi(X_j) (x) gamma(X_j) over an orthonormal frame of the
/// complement, on V (x) S. gamma(X_j) is taken through the frame of S.
Matrix algebraic_dirac(const LieAlgebra& g, const Frame& basis, const WeightModule& v, const SpinModule& s,
                       const Frame& spin_frame);

/// D = sum_j pi(X_j) (x) gamma(X^j) for a basis X_j of the complement with
/// dual basis X^j (<X_j, X^k> = delta_jk).
Matrix algebraic_dirac_dual_bases(const LieAlgebra& g, const std::vector<Vector>& basis,
                                  const std::vector<Vector>& dual_basis, const WeightModule& v, const SpinModule& s,
                                  const Frame& spin_frame);

/// Everything the embedding computation needs for one triple and one E.
class DiracSetup {
 public:
  /// e is a module of h, given over an algebra with the structure constants
  /// of h in the stored h basis.
  DiracSetup(const TransitiveTriple& t, const WeightModule& e);

  const TransitiveTriple& triple() const { return t_; }
  const WeightModule& e() const { return e_; }
  const SpinModule& spin_ql() const { return spin_ql_; }
  const SpinModule& spin_ls() const { return spin_ls_; }
  const SpinModule& spin_qlprime() const { return spin_qlp_; }
  const SpinSplit& split() const { return split_; }
  Eigen::Index endo_dim() const { return spin_ql_.dim() * e_.dim(); }

  /// gamma on S_{q_l} of a q_l frame element, tensored with the identity of E.
  Matrix gamma_ql(const CliffordElement& x) const;
  /// beta(Y) for Y in h: action on E.
  Matrix beta(const Vector& y) const;
  /// dtau(Y) = gamma(alpha_h(Y)) (x) 1 + 1 (x) beta(Y), alpha_h(Y) computed in
  /// C(q) and carried to C(q_l) along rho^-.
  Matrix dtau(const Vector& y) const;

  FormalDiracElement empty_over_g() const;
  FormalDiracElement empty_over_l() const;

 private:
  const TransitiveTriple& t_;
  WeightModule e_;
  SpinModule spin_ql_, spin_ls_, spin_qlp_;
  SpinSplit split_;
};

/// D_{G/H}(E) = sum_i e_i rho^-(v_i) (x) gamma_q(rho^-(v_i)) (x) 1 over the q_l
/// frame, with S_q identified with S_{q_l} along rho^-.
FormalDiracElement geometric_dirac_element(const DiracSetup& s);

/// Moves every symbol into l: X = X_l + X_h with X_l in q_l and X_h in h, and
/// X_h (x) T becomes 1 (x) (-T dtau(X_h)).
FormalDiracElement transfer(const DiracSetup& s, const FormalDiracElement& d);

/// Constituents of the right-hand side, all over the q_l frame symbols.
struct RhsParts {
  FormalDiracElement d_z;      // -sum Z_j (x) gamma(Z_j) (x) 1
  FormalDiracElement d_t;      // sum T_k (x) gamma(T_k) (x) 1
  FormalDiracElement cubic;    // 1 (x) gamma(c_{l, l cap h}) (x) 1
  FormalDiracElement d_h;      // 1 (x) D_{h, h cap k}(E) on S (x) E
  FormalDiracElement d_l_lh;   // d_z + d_t - cubic
};
RhsParts rhs_parts(const DiracSetup& s);

/// Right-hand side: form 1 is
///   r2 D_{L/L cap H} + (1 - r2) D_Z + (r2 + kappa) gamma(c) + D_h,
/// form 2 is r2 D_T + D_Z + kappa gamma(c) + D_h; kappa = -2 is the identity.
FormalDiracElement assemble_rhs(const DiracSetup& s, int form, const ExactScalar& kappa = ExactScalar(-2));

/// D_{h, h cap k}(E) on E (x) S_{h cap s} as an h-module computation.
Matrix dirac_h(const DiracSetup& s);

struct TheoremCheck {
  int form;
  bool pass;
  std::vector<std::string> mismatched;
};

/// Compares transfer(D_{G/H}(E)) with both right-hand sides.
std::vector<TheoremCheck> verify_embedding(const DiracSetup& s, const ExactScalar& kappa = ExactScalar(-2));

/// E over the diagonal subalgebra h of the sl(2) triple, from an sl(2)-module.
WeightModule diagonal_module(const TransitiveTriple& t, const WeightModule& e);

}  // namespace dirac
