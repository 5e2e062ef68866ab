#include "dirac/spin_module.hpp"

#include <bit>
#include <stdexcept>

namespace dirac {

namespace {

Vector unit(int n, int i) {
  Vector v = Vector::Zero(n);
  v(i) = 1;
  return v;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) return is_zero(v);
  return solve_coordinates(columns(basis, v.size()), v).has_value();
}

}  // namespace

void Polarization::validate(const QuadraticSpace& q) const {
  const int n = q.dim();
  const std::size_t k = plus.size();
  if (minus.size() != k) throw std::invalid_argument("plus and minus halves differ in size");
  if (2 * static_cast<int>(k) + (odd ? 1 : 0) != n) throw std::invalid_argument("polarization does not match dimension");
  if (odd.has_value() != (n % 2 == 1)) throw std::invalid_argument("odd vector present iff dimension is odd");
  if (zeta != 1 && zeta != -1) throw std::invalid_argument("zeta must be +1 or -1");
  if (!plus_labels.empty() && plus_labels.size() != k) throw std::invalid_argument("one label per plus vector");
  auto check_size = [n](const Vector& v) {
    if (v.size() != n) throw std::invalid_argument("polarization vector of wrong length");
  };
  for (std::size_t i = 0; i < k; ++i) {
    check_size(plus[i]);
    check_size(minus[i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (!q.pair(plus[i], plus[j]).is_zero() || !q.pair(minus[i], minus[j]).is_zero()) {
        throw std::invalid_argument("polarization halves are not isotropic");
      }
      if (!(q.pair(plus[i], minus[j]) == ExactScalar(i == j ? 1 : 0))) {
        throw std::invalid_argument("plus and minus vectors are not dually paired");
      }
    }
  }
  if (odd) {
    check_size(*odd);
    ExactScalar nz = q.pair(*odd, *odd);
    if (!(nz == ExactScalar(1)) && !(nz == ExactScalar(-1))) throw std::invalid_argument("odd vector must have norm +-1");
    for (std::size_t i = 0; i < k; ++i) {
      if (!q.pair(*odd, plus[i]).is_zero() || !q.pair(*odd, minus[i]).is_zero()) {
        throw std::invalid_argument("odd vector is not orthogonal to the polarization");
      }
    }
  }
}

Polarization standard_polarization(const QuadraticSpace& q, int zeta) {
  const int n = q.dim();
  const ExactScalar inv_r2 = ExactScalar::sqrt2().inverse();
  const ExactScalar i = ExactScalar::i();
  Polarization p;
  p.zeta = zeta;
  int start = 0;
  if (n % 2 == 1) {
    p.odd = unit(n, 0);
    start = 1;
  }
  for (int a = start; a + 1 < n; a += 2) {
    const int b = a + 1;
    const ExactScalar sa(q.signs[a]);
    Vector u, v;
    if (q.signs[a] == q.signs[b]) {
      u = (unit(n, a) + i * unit(n, b)) * inv_r2;
      v = sa * (unit(n, a) - i * unit(n, b)) * inv_r2;
    } else {
      u = (unit(n, a) + unit(n, b)) * inv_r2;
      v = sa * (unit(n, a) - unit(n, b)) * inv_r2;
    }
    p.plus.push_back(u);
    p.minus.push_back(v);
    p.plus_labels.push_back(p.plus.size() == 1 && n < 4 ? "u" : "u" + std::to_string(p.plus.size()));
  }
  return p;
}

SpinModule::SpinModule(SpacePtr space, Polarization pol) : space_(std::move(space)), pol_(std::move(pol)) {
  pol_.validate(*space_);
  if (pol_.plus_labels.empty())
    for (std::size_t k = 0; k < pol_.plus.size(); ++k) pol_.plus_labels.push_back("u" + std::to_string(k + 1));

  const int n = space_->dim();
  const int k = static_cast<int>(pol_.plus.size());
  Matrix odd_action = Matrix::Zero(dim(), dim());
  if (pol_.odd) {
    const bool positive = space_->pair(*pol_.odd, *pol_.odd) == ExactScalar(1);
    ExactScalar s = (positive ? ExactScalar(1) : ExactScalar::i()) * ExactScalar(pol_.zeta) / ExactScalar::sqrt2();
    for (Eigen::Index b = 0; b < dim(); ++b) odd_action(b, b) = degree(b) % 2 ? -s : s;
  }
  for (int g = 0; g < n; ++g) {
    Vector e = unit(n, g);
    Matrix m = Matrix::Zero(dim(), dim());
    Vector back = Vector::Zero(n);
    for (int j = 0; j < k; ++j) {
      ExactScalar cp = space_->pair(e, pol_.minus[j]);
      ExactScalar cm = space_->pair(e, pol_.plus[j]);
      if (!cp.is_zero()) m += cp * wedge(j);
      if (!cm.is_zero()) m += cm * contract(j);
      back += cp * pol_.plus[j] + cm * pol_.minus[j];
    }
    if (pol_.odd) {
      ExactScalar co = space_->pair(e, *pol_.odd) / space_->pair(*pol_.odd, *pol_.odd);
      if (!co.is_zero()) m += co * odd_action;
      back += co * *pol_.odd;
    }
    if (!exactly_equal(back, e)) throw std::invalid_argument("polarization does not span the space");
    generators_.push_back(std::move(m));
  }
}

std::string SpinModule::basis_label(Eigen::Index b) const {
  if (b == 0) return "1";
  std::string s;
  for (auto rest = static_cast<std::uint64_t>(b); rest; rest &= rest - 1) {
    if (!s.empty()) s += "^";
    s += pol_.plus_labels[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return s;
}

int SpinModule::degree(Eigen::Index b) const { return std::popcount(static_cast<std::uint64_t>(b)); }

Matrix SpinModule::wedge(int k) const {
  Matrix m = Matrix::Zero(dim(), dim());
  const Eigen::Index bit = Eigen::Index(1) << k;
  for (Eigen::Index s = 0; s < dim(); ++s) {
    if (s & bit) continue;
    int below = std::popcount(static_cast<std::uint64_t>(s & (bit - 1)));
    m(s | bit, s) = below % 2 ? -1 : 1;
  }
  return m;
}

Matrix SpinModule::contract(int k) const {
  Matrix m = Matrix::Zero(dim(), dim());
  const Eigen::Index bit = Eigen::Index(1) << k;
  for (Eigen::Index s = 0; s < dim(); ++s) {
    if (!(s & bit)) continue;
    int below = std::popcount(static_cast<std::uint64_t>(s & (bit - 1)));
    m(s & ~bit, s) = below % 2 ? -1 : 1;
  }
  return m;
}

Matrix SpinModule::parity_operator() const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (Eigen::Index b = 0; b < dim(); ++b) m(b, b) = degree(b) % 2 ? -1 : 1;
  return m;
}

Matrix SpinModule::gamma(const CliffordElement& x) const {
  if (!(*x.space() == *space_)) throw std::invalid_argument("Clifford element over a different space");
  Matrix out = Matrix::Zero(dim(), dim());
  for (const auto& [blade, c] : x.terms()) {
    Matrix term = scaled_identity(dim(), c);
    for (Blade rest = blade; rest; rest &= rest - 1) term = term * generators_[std::countr_zero(rest)];
    out += term;
  }
  return out;
}

Matrix SpinModule::gamma_vector(const Vector& coords) const {
  return gamma(CliffordElement::from_vector(space_, coords));
}

namespace {

Vector embed_coords(const Vector& v, const std::vector<int>& idx, int n) {
  Vector out = Vector::Zero(n);
  for (std::size_t i = 0; i < idx.size(); ++i) out(idx[i]) = v(static_cast<Eigen::Index>(i));
  return out;
}

}  // namespace

SpinSplit::SpinSplit(const SpinModule& a, const SpinModule& b, const SpinModule& joint, std::vector<int> a_indices,
                     std::vector<int> b_indices)
    : a_(a), b_(b), joint_(joint), a_indices_(std::move(a_indices)), b_indices_(std::move(b_indices)) {
  const int n = joint_.space()->dim();
  if (a_.space()->dim() % 2 != 0) {
    throw std::invalid_argument("first tensor factor must be even-dimensional for the spin decomposition");
  }
  if (static_cast<int>(a_indices_.size()) != a_.space()->dim() ||
      static_cast<int>(b_indices_.size()) != b_.space()->dim() ||
      static_cast<int>(a_indices_.size() + b_indices_.size()) != n) {
    throw std::invalid_argument("index sets do not split the joint space");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto* idx : {&a_indices_, &b_indices_})
    for (int i : *idx) {
      if (i < 0 || i >= n || seen[static_cast<std::size_t>(i)]) throw std::invalid_argument("index sets overlap");
      seen[static_cast<std::size_t>(i)] = true;
    }
  // fails loudly on a sign mismatch
  embed_a(CliffordElement(a_.space()));
  embed_b(CliffordElement(b_.space()));
  for (std::size_t i = 0; i < a_indices_.size(); ++i)
    if (a_.space()->signs[i] != joint_.space()->signs[a_indices_[i]]) throw std::invalid_argument("sign mismatch");
  for (std::size_t i = 0; i < b_indices_.size(); ++i)
    if (b_.space()->signs[i] != joint_.space()->signs[b_indices_[i]]) throw std::invalid_argument("sign mismatch");

  const auto& pj = joint_.polarization();
  auto check_half = [&](const SpinModule& m, const std::vector<int>& idx) {
    for (const auto& v : m.polarization().plus)
      if (!in_span(pj.plus, embed_coords(v, idx, n))) throw std::invalid_argument("factor polarization not compatible");
    for (const auto& v : m.polarization().minus)
      if (!in_span(pj.minus, embed_coords(v, idx, n))) throw std::invalid_argument("factor polarization not compatible");
  };
  check_half(a_, a_indices_);
  check_half(b_, b_indices_);
  if (b_.polarization().odd) {
    if (!pj.odd || !exactly_equal(embed_coords(*b_.polarization().odd, b_indices_, n), *pj.odd) ||
        b_.polarization().zeta != pj.zeta) {
      throw std::invalid_argument("odd vector of the second factor must match the joint one");
    }
  }

  mult_iso_ = Matrix::Zero(joint_.dim(), a_.dim() * b_.dim());
  Vector one = Vector::Zero(joint_.dim());
  one(0) = 1;
  for (Eigen::Index s = 0; s < a_.dim(); ++s)
    for (Eigen::Index t = 0; t < b_.dim(); ++t) {
      Matrix op = Matrix::Identity(joint_.dim(), joint_.dim());
      for (auto rest = static_cast<std::uint64_t>(s); rest; rest &= rest - 1) {
        int k = std::countr_zero(rest);
        op = op * joint_.gamma_vector(embed_coords(a_.polarization().plus[static_cast<std::size_t>(k)], a_indices_, n));
      }
      for (auto rest = static_cast<std::uint64_t>(t); rest; rest &= rest - 1) {
        int k = std::countr_zero(rest);
        op = op * joint_.gamma_vector(embed_coords(b_.polarization().plus[static_cast<std::size_t>(k)], b_indices_, n));
      }
      mult_iso_.col(s * b_.dim() + t) = op * one;
    }
  if (rank(mult_iso_) != joint_.dim()) throw std::invalid_argument("multiplication map is not bijective");
}

CliffordElement SpinSplit::embed_a(const CliffordElement& c) const { return embed(c, joint_.space(), a_indices_); }
CliffordElement SpinSplit::embed_b(const CliffordElement& d) const { return embed(d, joint_.space(), b_indices_); }

Matrix SpinSplit::graded_tensor_action(const CliffordElement& c, const CliffordElement& d) const {
  const Matrix gc = a_.gamma(c);
  const Matrix par = a_.parity_operator();
  return kron(gc, b_.gamma(d.even_part())) + kron(Matrix(gc * par), b_.gamma(d.odd_part()));
}

}  // namespace dirac
