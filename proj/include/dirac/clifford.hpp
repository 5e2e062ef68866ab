#pragma once

#include "dirac/lie_algebra.hpp"
#include "dirac/linalg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dirac {

/// Vector space with a diagonal form <e_i, e_j> = delta_ij * signs[i].
/// The label order fixes the normal form of Clifford monomials.
struct QuadraticSpace {
  std::vector<std::string> labels;
  std::vector<int> signs;

  QuadraticSpace() = default;
  QuadraticSpace(std::vector<std::string> labels, std::vector<int> signs);

  int dim() const { return static_cast<int>(labels.size()); }
  ExactScalar pair(const Vector& x, const Vector& y) const;

  friend bool operator==(const QuadraticSpace&, const QuadraticSpace&) = default;
};

using SpacePtr = std::shared_ptr<const QuadraticSpace>;
SpacePtr make_space(std::vector<std::string> labels, std::vector<int> signs);

/// Monomial e_{i1} ... e_{ik}, i1 < ... < ik, encoded as a bitmask.
using Blade = std::uint32_t;

/// Orders blades by degree, then lexicographically on the index tuple.
struct BladeOrder {
  bool operator()(Blade x, Blade y) const;
};

/// Element of C(q) with the relation XY + YX = <X, Y>, stored in normal form.
class CliffordElement {
 public:
  using Terms = std::map<Blade, ExactScalar, BladeOrder>;

  explicit CliffordElement(SpacePtr space);
  CliffordElement(SpacePtr space, const ExactScalar& unit_coefficient);

  static CliffordElement generator(SpacePtr space, int i);
  static CliffordElement monomial(SpacePtr space, Blade b, const ExactScalar& coef = 1);
  /// Sum of v_i e_i.
  static CliffordElement from_vector(SpacePtr space, const Vector& v);

  const SpacePtr& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ExactScalar coefficient(Blade b) const;

  /// Parts of even and odd degree.
  CliffordElement even_part() const;
  CliffordElement odd_part() const;
  /// 0 or 1 for homogeneous elements, nullopt for mixed parity, 0 for zero.
  std::optional<int> parity() const;

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement& operator*=(const ExactScalar& s);
  friend CliffordElement operator+(CliffordElement x, const CliffordElement& y) { return x += y; }
  friend CliffordElement operator-(CliffordElement x, const CliffordElement& y) { return x -= y; }
  friend CliffordElement operator*(const ExactScalar& s, CliffordElement x) { return x *= s; }
  friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y);
  CliffordElement operator-() const { return ExactScalar(-1) * *this; }
  friend bool operator==(const CliffordElement& x, const CliffordElement& y);

  /// Signed sum of label products, e.g. "-1*Z*T1*T2"; coefficients are
  /// rendered as "p", "p/q" or the canonical scalar form in parentheses.
  std::string to_string() const;

 private:
  void add_term(Blade b, const ExactScalar& c);
  void require_same_space(const CliffordElement& o) const;

  SpacePtr space_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const CliffordElement& x);

/// Sign and scalar of e_x e_y = coef * e_{x xor y}.
ExactScalar blade_product_coefficient(const QuadraticSpace& q, Blade x, Blade y);

CliffordElement clifford_commutator(const CliffordElement& x, const CliffordElement& y);

/// j(X ^ Y) = (XY - YX) / 2.
CliffordElement chevalley_j(const CliffordElement& x, const CliffordElement& y);

/// Copy of x over another space of the same dimension, index by index.
CliffordElement reinterpret(const CliffordElement& x, SpacePtr target);

/// Image of x under the algebra map sending generator i to generator index_map[i] of target.
CliffordElement embed(const CliffordElement& x, SpacePtr target, const std::vector<int>& index_map);

/// Orthonormal (up to sign) vectors of a Lie algebra spanning a subspace; the
/// signs are recorded in the attached quadratic space.
struct Frame {
  SpacePtr space;
  std::vector<Vector> vectors;

  /// Validates <v_i, v_j> = delta_ij * signs[i] under the form of g.
  Frame(const LieAlgebra& g, SpacePtr space, std::vector<Vector> vectors);

  int dim() const { return space->dim(); }
  /// Coordinates c with v = sum c_i v_i, or nullopt if v is outside the span.
  std::optional<Vector> coordinates(const LieAlgebra& g, const Vector& v) const;
  /// Degree-one Clifford element of a vector in the span; throws if outside.
  CliffordElement clifford_vector(const LieAlgebra& g, const Vector& v) const;
};

/// alpha(X) = -sum_{i<j} e_i e_j <[X, v_i], v_j> e_i e_j (e_i the signs).
/// Throws std::invalid_argument if ad(X) does not preserve the span of the frame.
CliffordElement alpha(const LieAlgebra& g, const Frame& complement, const Vector& x);

/// c = sum_{i<j<k} e_i e_j e_k <[v_i, v_j], v_k> e_i e_j e_k.
CliffordElement cubic_element(const LieAlgebra& g, const Frame& complement);

}  // namespace dirac
