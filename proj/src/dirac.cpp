#include "dirac/dirac.hpp"

#include <stdexcept>

namespace dirac {

FormalDiracElement::FormalDiracElement(std::vector<Vector> symbols, std::vector<std::string> symbol_labels,
                                       Eigen::Index endo_dim)
    : symbols_(std::move(symbols)), labels_(std::move(symbol_labels)), endo_dim_(endo_dim) {
  if (symbols_.size() != labels_.size()) throw std::invalid_argument("one label per symbol required");
}

Matrix FormalDiracElement::term(int symbol) const {
  auto it = terms_.find(symbol);
  return it == terms_.end() ? Matrix(Matrix::Zero(endo_dim_, endo_dim_)) : it->second;
}

void FormalDiracElement::add(int symbol, const Matrix& m) {
  if (symbol < unit || symbol >= static_cast<int>(symbols_.size())) throw std::out_of_range("symbol index");
  if (m.rows() != endo_dim_ || m.cols() != endo_dim_) throw std::invalid_argument("endomorphism of wrong size");
  auto it = terms_.find(symbol);
  if (it == terms_.end()) {
    if (!is_zero(m)) terms_.emplace(symbol, m);
    return;
  }
  it->second += m;
  if (is_zero(it->second)) terms_.erase(it);
}

void FormalDiracElement::require_compatible(const FormalDiracElement& o) const {
  bool same = endo_dim_ == o.endo_dim_ && symbols_.size() == o.symbols_.size();
  for (std::size_t i = 0; same && i < symbols_.size(); ++i) same = exactly_equal(symbols_[i], o.symbols_[i]);
  if (!same) throw std::invalid_argument("formal elements over different symbol bases");
}

FormalDiracElement& FormalDiracElement::operator+=(const FormalDiracElement& o) {
  require_compatible(o);
  for (const auto& [k, m] : o.terms_) add(k, m);
  return *this;
}

FormalDiracElement& FormalDiracElement::operator-=(const FormalDiracElement& o) {
  require_compatible(o);
  for (const auto& [k, m] : o.terms_) add(k, -m);
  return *this;
}

FormalDiracElement operator*(const ExactScalar& s, FormalDiracElement x) {
  if (s.is_zero()) {
    x.terms_.clear();
    return x;
  }
  for (auto& [k, m] : x.terms_) m *= s;
  return x;
}

bool operator==(const FormalDiracElement& x, const FormalDiracElement& y) {
  if (x.endo_dim_ != y.endo_dim_ || x.symbols_.size() != y.symbols_.size()) return false;
  for (std::size_t i = 0; i < x.symbols_.size(); ++i)
    if (!exactly_equal(x.symbols_[i], y.symbols_[i])) return false;
  if (x.terms_.size() != y.terms_.size()) return false;
  for (const auto& [k, m] : x.terms_) {
    auto it = y.terms_.find(k);
    if (it == y.terms_.end() || !exactly_equal(m, it->second)) return false;
  }
  return true;
}

std::vector<std::string> FormalDiracElement::mismatched_symbols(const FormalDiracElement& o) const {
  require_compatible(o);
  std::vector<std::string> out;
  for (int k = unit; k < static_cast<int>(symbols_.size()); ++k)
    if (!exactly_equal(term(k), o.term(k))) out.push_back(label(k));
  return out;
}

Matrix algebraic_dirac(const LieAlgebra& g, const Frame& basis, const WeightModule& v, const SpinModule& s,
                       const Frame& spin_frame) {
  if (v.algebra().dim() != g.dim()) throw std::invalid_argument("module over a different algebra");
  Matrix d = Matrix::Zero(v.dim() * s.dim(), v.dim() * s.dim());
  for (int j = 0; j < basis.dim(); ++j) {
    const Vector& x = basis.vectors[static_cast<std::size_t>(j)];
    Matrix gx = s.gamma(spin_frame.clifford_vector(g, x));
    d += ExactScalar(basis.space->signs[static_cast<std::size_t>(j)]) * kron(v.act(x), gx);
  }
  return d;
}

Matrix algebraic_dirac_dual_bases(const LieAlgebra& g, const std::vector<Vector>& basis,
                                  const std::vector<Vector>& dual_basis, const WeightModule& v, const SpinModule& s,
                                  const Frame& spin_frame) {
  if (basis.size() != dual_basis.size()) throw std::invalid_argument("basis and dual basis differ in size");
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!(g.pair(basis[j], dual_basis[k]) == ExactScalar(j == k ? 1 : 0)))
        throw std::invalid_argument("bases are not dual");
  Matrix d = Matrix::Zero(v.dim() * s.dim(), v.dim() * s.dim());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    d += kron(v.act(basis[j]), s.gamma(spin_frame.clifford_vector(g, dual_basis[j])));
  }
  return d;
}

namespace {

std::vector<int> range(int from, int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) out.push_back(from + i);
  return out;
}

}  // namespace

DiracSetup::DiracSetup(const TransitiveTriple& t, const WeightModule& e)
    : t_(t),
      e_(e),
      spin_ql_(t.ql().space),
      spin_ls_(t.ls().space),
      spin_qlp_(t.ql_prime().space),
      split_(spin_ls_, spin_qlp_, spin_ql_, range(t.ql_prime().dim(), t.ls().dim()), range(0, t.ql_prime().dim())) {
  if (!e_.algebra().same_brackets(t.h_algebra())) throw std::invalid_argument("E is not a module of h");
  if (e_.truncation()) throw std::invalid_argument("E must be finite-dimensional");
}

Matrix DiracSetup::gamma_ql(const CliffordElement& x) const {
  return kron(spin_ql_.gamma(x), Matrix(Matrix::Identity(e_.dim(), e_.dim())));
}

Matrix DiracSetup::beta(const Vector& y) const { return e_.act(t_.h_coordinates(y)); }

Matrix DiracSetup::dtau(const Vector& y) const {
  CliffordElement a = reinterpret(alpha(t_.g(), t_.q(), y), t_.ql().space);
  return gamma_ql(a) + kron(Matrix(Matrix::Identity(spin_ql_.dim(), spin_ql_.dim())), beta(y));
}

FormalDiracElement DiracSetup::empty_over_g() const {
  std::vector<std::string> labels;
  for (const auto& l : t_.q().space->labels) labels.push_back("rho-(" + l + ")");
  return FormalDiracElement(t_.q().vectors, std::move(labels), endo_dim());
}

FormalDiracElement DiracSetup::empty_over_l() const {
  return FormalDiracElement(t_.ql().vectors, t_.ql().space->labels, endo_dim());
}

FormalDiracElement geometric_dirac_element(const DiracSetup& s) {
  const Frame& ql = s.triple().ql();
  FormalDiracElement d = s.empty_over_g();
  for (int i = 0; i < ql.dim(); ++i) {
    Matrix m = s.gamma_ql(CliffordElement::generator(ql.space, i));
    d.add(i, ExactScalar(ql.space->signs[static_cast<std::size_t>(i)]) * m);
  }
  return d;
}

FormalDiracElement transfer(const DiracSetup& s, const FormalDiracElement& d) {
  const TransitiveTriple& t = s.triple();
  const Eigen::Index n = t.g().dim();
  const int nl = t.ql().dim();
  std::vector<Vector> split_basis = t.ql().vectors;
  const auto& hb = t.data().h_basis;
  split_basis.insert(split_basis.end(), hb.begin(), hb.end());
  const Matrix split = columns(split_basis, n);

  FormalDiracElement out = s.empty_over_l();
  if (d.endo_dim() != out.endo_dim()) throw std::invalid_argument("element acts on a different space");
  for (const auto& [k, m] : d.terms()) {
    if (k == FormalDiracElement::unit) {
      out.add(FormalDiracElement::unit, m);
      continue;
    }
    auto coords = solve_coordinates(split, d.symbols()[static_cast<std::size_t>(k)]);
    if (!coords) throw std::logic_error("symbol " + d.label(k) + " does not decompose along h + q_l");
    Vector yh = Vector::Zero(n);
    for (int j = 0; j < nl; ++j)
      if (!(*coords)(j).is_zero()) out.add(j, (*coords)(j) * m);
    for (std::size_t j = 0; j < hb.size(); ++j) yh += (*coords)(nl + static_cast<Eigen::Index>(j)) * hb[j];
    if (!is_zero(yh)) out.add(FormalDiracElement::unit, -product(m, s.dtau(yh)));
  }
  return out;
}

Matrix dirac_h(const DiracSetup& s) {
  const TransitiveTriple& t = s.triple();
  const LieAlgebra& h = t.h_algebra();
  std::vector<Vector> coords;
  for (const auto& v : t.hs().vectors) coords.push_back(t.h_coordinates(v));
  Frame hs(h, t.hs().space, coords);
  SpinModule spin_hs(t.hs().space, s.spin_ls().polarization());
  return algebraic_dirac(h, hs, s.e(), spin_hs, hs);
}

RhsParts rhs_parts(const DiracSetup& s) {
  const TransitiveTriple& t = s.triple();
  const Frame& ql = t.ql();
  const int nz = t.ql_prime().dim();
  RhsParts p{s.empty_over_l(), s.empty_over_l(), s.empty_over_l(), s.empty_over_l(), s.empty_over_l()};
  for (int i = 0; i < ql.dim(); ++i) {
    Matrix m = ExactScalar(ql.space->signs[static_cast<std::size_t>(i)]) *
               s.gamma_ql(CliffordElement::generator(ql.space, i));
    (i < nz ? p.d_z : p.d_t).add(i, m);
  }
  p.cubic.add(FormalDiracElement::unit, s.gamma_ql(cubic_element(t.g(), ql)));

  // E (x) S_{h cap s} -> S_{l cap s} (x) E -> S_{l cap s} (x) S_{q_l'} (x) E -> S_{q_l} (x) E
  const Eigen::Index a = s.spin_ls().dim(), b = s.spin_qlprime().dim(), e = s.e().dim();
  Matrix swap = swap_tensor_factors(e, a);
  Matrix dh = product(product(swap, dirac_h(s)), Matrix(swap.transpose()));
  Matrix q = kron(Matrix(Matrix::Identity(a, a)), swap_tensor_factors(b, e));
  Matrix lifted = product(product(Matrix(q.transpose()), kron(dh, Matrix(Matrix::Identity(b, b)))), q);
  Matrix iso = kron(s.split().mult_iso(), Matrix(Matrix::Identity(e, e)));
  p.d_h.add(FormalDiracElement::unit, product(product(iso, lifted), inverse(iso)));

  p.d_l_lh = p.d_z + p.d_t - p.cubic;
  return p;
}

FormalDiracElement assemble_rhs(const DiracSetup& s, int form, const ExactScalar& kappa) {
  const RhsParts p = rhs_parts(s);
  const ExactScalar r2 = ExactScalar::sqrt2();
  if (form == 1) {
    return r2 * p.d_l_lh + (ExactScalar(1) - r2) * p.d_z + (r2 + kappa) * p.cubic + p.d_h;
  }
  if (form == 2) return r2 * p.d_t + p.d_z + kappa * p.cubic + p.d_h;
  throw std::invalid_argument("form must be 1 or 2");
}

std::vector<TheoremCheck> verify_embedding(const DiracSetup& s, const ExactScalar& kappa) {
  const FormalDiracElement lhs = transfer(s, geometric_dirac_element(s));
  std::vector<TheoremCheck> out;
  for (int form : {1, 2}) {
    auto diff = lhs.mismatched_symbols(assemble_rhs(s, form, kappa));
    out.push_back({form, diff.empty(), diff});
  }
  return out;
}

WeightModule diagonal_module(const TransitiveTriple& t, const WeightModule& e) {
  return rebind(e, t.h_algebra(), t.h_algebra().labels().front());
}

}  // namespace dirac
