#include "dirac/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace dirac {

QuadraticSpace::QuadraticSpace(std::vector<std::string> l, std::vector<int> s)
    : labels(std::move(l)), signs(std::move(s)) {
  if (labels.size() != signs.size()) throw std::invalid_argument("one sign per basis label required");
  if (labels.size() > 31) throw std::invalid_argument("quadratic space too large");
  for (int e : signs)
    if (e != 1 && e != -1) throw std::invalid_argument("signs must be +1 or -1");
}

ExactScalar QuadraticSpace::pair(const Vector& x, const Vector& y) const {
  ExactScalar s;
  for (int i = 0; i < dim(); ++i) s += ExactScalar(signs[i]) * x(i) * y(i);
  return s;
}

SpacePtr make_space(std::vector<std::string> labels, std::vector<int> signs) {
  return std::make_shared<const QuadraticSpace>(std::move(labels), std::move(signs));
}

bool BladeOrder::operator()(Blade x, Blade y) const {
  int px = std::popcount(x), py = std::popcount(y);
  if (px != py) return px < py;
  if (x == y) return false;
  Blade diff = x ^ y;
  Blade low = diff & (~diff + 1);
  return (x & low) != 0;
}

ExactScalar blade_product_coefficient(const QuadraticSpace& q, Blade x, Blade y) {
  // moving each generator of y left past the larger generators of x
  int swaps = 0;
  for (Blade rest = y; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    Blade above = j + 1 >= 32 ? 0 : (x >> (j + 1));
    swaps += std::popcount(above);
  }
  long num = swaps % 2 ? -1 : 1;
  long den = 1;
  for (Blade common = x & y; common; common &= common - 1) {
    num *= q.signs[std::countr_zero(common)];
    den *= 2;
  }
  return ExactScalar::rational(num, den);
}

CliffordElement::CliffordElement(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw std::invalid_argument("Clifford element without a space");
}

CliffordElement::CliffordElement(SpacePtr space, const ExactScalar& unit_coefficient)
    : CliffordElement(std::move(space)) {
  add_term(0, unit_coefficient);
}

CliffordElement CliffordElement::generator(SpacePtr space, int i) {
  if (i < 0 || i >= space->dim()) throw std::out_of_range("generator index out of range");
  return monomial(std::move(space), Blade(1) << i);
}

CliffordElement CliffordElement::monomial(SpacePtr space, Blade b, const ExactScalar& coef) {
  if (b >> space->dim()) throw std::out_of_range("blade outside the space");
  CliffordElement x(std::move(space));
  x.add_term(b, coef);
  return x;
}

CliffordElement CliffordElement::from_vector(SpacePtr space, const Vector& v) {
  if (v.size() != space->dim()) throw std::invalid_argument("vector length does not match the space");
  CliffordElement x(std::move(space));
  for (int i = 0; i < v.size(); ++i) x.add_term(Blade(1) << i, v(i));
  return x;
}

ExactScalar CliffordElement::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? ExactScalar() : it->second;
}

CliffordElement CliffordElement::even_part() const {
  CliffordElement x(space_);
  for (const auto& [b, c] : terms_)
    if (std::popcount(b) % 2 == 0) x.terms_.emplace(b, c);
  return x;
}

CliffordElement CliffordElement::odd_part() const {
  CliffordElement x(space_);
  for (const auto& [b, c] : terms_)
    if (std::popcount(b) % 2 == 1) x.terms_.emplace(b, c);
  return x;
}

std::optional<int> CliffordElement::parity() const {
  bool even = false, odd = false;
  for (const auto& [b, c] : terms_) (std::popcount(b) % 2 ? odd : even) = true;
  if (even && odd) return std::nullopt;
  return odd ? 1 : 0;
}

void CliffordElement::add_term(Blade b, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void CliffordElement::require_same_space(const CliffordElement& o) const {
  if (space_ != o.space_ && !(*space_ == *o.space_)) {
    throw std::invalid_argument("incompatible Clifford algebras");
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  require_same_space(o);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  require_same_space(o);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const ExactScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
  x.require_same_space(y);
  CliffordElement out(x.space_);
  for (const auto& [bx, cx] : x.terms_)
    for (const auto& [by, cy] : y.terms_) {
      out.add_term(bx ^ by, blade_product_coefficient(*x.space_, bx, by) * cx * cy);
    }
  return out;
}

bool operator==(const CliffordElement& x, const CliffordElement& y) {
  if (!(*x.space_ == *y.space_)) return false;
  return x.terms_ == y.terms_;
}

namespace {

std::string render_coefficient(const ExactScalar& c) {
  if (c.is_rational()) return to_string(c.a());
  return "(" + c.to_string() + ")";
}

}  // namespace

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [b, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += render_coefficient(c);
    for (Blade rest = b; rest; rest &= rest - 1) s += "*" + space_->labels[std::countr_zero(rest)];
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const CliffordElement& x) { return os << x.to_string(); }

CliffordElement clifford_commutator(const CliffordElement& x, const CliffordElement& y) { return x * y - y * x; }

CliffordElement chevalley_j(const CliffordElement& x, const CliffordElement& y) {
  return ExactScalar::rational(1, 2) * clifford_commutator(x, y);
}

CliffordElement reinterpret(const CliffordElement& x, SpacePtr target) {
  if (target->dim() != x.space()->dim()) throw std::invalid_argument("reinterpretation needs equal dimensions");
  CliffordElement out(std::move(target));
  for (const auto& [b, c] : x.terms()) out += CliffordElement::monomial(out.space(), b, c);
  return out;
}

CliffordElement embed(const CliffordElement& x, SpacePtr target, const std::vector<int>& index_map) {
  if (static_cast<int>(index_map.size()) != x.space()->dim()) throw std::invalid_argument("index map size mismatch");
  for (std::size_t i = 0; i < index_map.size(); ++i) {
    if (index_map[i] < 0 || index_map[i] >= target->dim() ||
        target->signs[index_map[i]] != x.space()->signs[i]) {
      throw std::invalid_argument("index map is not an isometric embedding");
    }
  }
  CliffordElement out(target);
  for (const auto& [b, c] : x.terms()) {
    CliffordElement term(target, c);
    for (Blade rest = b; rest; rest &= rest - 1) {
      term = term * CliffordElement::generator(target, index_map[std::countr_zero(rest)]);
    }
    out += term;
  }
  return out;
}

Frame::Frame(const LieAlgebra& g, SpacePtr s, std::vector<Vector> v) : space(std::move(s)), vectors(std::move(v)) {
  if (static_cast<int>(vectors.size()) != space->dim()) throw std::invalid_argument("frame size mismatch");
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      ExactScalar expect = i == j ? ExactScalar(space->signs[i]) : ExactScalar();
      if (!(g.pair(vectors[i], vectors[j]) == expect)) {
        throw std::invalid_argument("frame vectors " + space->labels[i] + ", " + space->labels[j] +
                                    " are not orthonormal with the stated signs");
      }
    }
}

std::optional<Vector> Frame::coordinates(const LieAlgebra& g, const Vector& v) const {
  Vector c(dim());
  Vector back = Vector::Zero(g.dim());
  for (int i = 0; i < dim(); ++i) {
    c(i) = ExactScalar(space->signs[i]) * g.pair(v, vectors[i]);
    back += c(i) * vectors[i];
  }
  if (!exactly_equal(back, v)) return std::nullopt;
  return c;
}

CliffordElement Frame::clifford_vector(const LieAlgebra& g, const Vector& v) const {
  auto c = coordinates(g, v);
  if (!c) throw std::invalid_argument("vector is not in the span of the frame");
  return CliffordElement::from_vector(space, *c);
}

CliffordElement alpha(const LieAlgebra& g, const Frame& q, const Vector& x) {
  const int n = q.dim();
  std::vector<Vector> images;
  for (int i = 0; i < n; ++i) {
    Vector br = g.bracket(x, q.vectors[i]);
    if (!q.coordinates(g, br)) {
      throw std::invalid_argument("complement is not ad-stable: [X, " + q.space->labels[i] + "] leaves it");
    }
    images.push_back(std::move(br));
  }
  CliffordElement out(q.space);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ExactScalar c = g.pair(images[i], q.vectors[j]);
      if (c.is_zero()) continue;
      c *= ExactScalar(-q.space->signs[i] * q.space->signs[j]);
      out += CliffordElement::monomial(q.space, (Blade(1) << i) | (Blade(1) << j), c);
    }
  return out;
}

CliffordElement cubic_element(const LieAlgebra& g, const Frame& q) {
  const int n = q.dim();
  CliffordElement out(q.space);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector br = g.bracket(q.vectors[i], q.vectors[j]);
      for (int k = j + 1; k < n; ++k) {
        ExactScalar c = g.pair(br, q.vectors[k]);
        if (c.is_zero()) continue;
        c *= ExactScalar(q.space->signs[i] * q.space->signs[j] * q.space->signs[k]);
        out += CliffordElement::monomial(q.space, (Blade(1) << i) | (Blade(1) << j) | (Blade(1) << k), c);
      }
    }
  return out;
}

}  // namespace dirac
