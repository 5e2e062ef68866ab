#include "dirac/sl2_spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace dirac {

PeterWeylBlock make_block(int a, int b, std::string spin_ls) {
  if (spin_ls != "1" && spin_ls != "u") throw std::invalid_argument("spin part must be 1 or u");
  return {{-a, -b}, {a, b}, std::move(spin_ls), -a - b};
}

std::string to_string(const LRepLabel& r) {
  std::string g;
  switch (r.kind) {
    case GPrimeKind::ds_plus:
      g = "DS+(" + std::to_string(*r.n) + ")";
      break;
    case GPrimeKind::ds_minus:
      g = "DS-(" + std::to_string(*r.n) + ")";
      break;
    case GPrimeKind::limit_ds_minus:
      g = "LDS-";
      break;
    case GPrimeKind::trivial:
      g = "Trivial";
      break;
  }
  return "(" + g + ", C_" + std::to_string(r.kprime) + ")";
}

Sl2Pair::Sl2Pair()
    : g_(sl2()),
      s_frame_(g_, make_space({"et", "ft"}, {1, 1}), {sl2_e_tilde(), sl2_f_tilde()}),
      spin_(s_frame_.space, [this] {
        Polarization p;
        p.plus = {*s_frame_.coordinates(g_, g_.basis_vector("e"))};
        p.minus = {*s_frame_.coordinates(g_, g_.basis_vector("f"))};
        p.plus_labels = {"e"};
        return p;
      }()) {
  Matrix ah = spin_.gamma(alpha(g_, s_frame_, g_.basis_vector("h")));
  for (Eigen::Index k = 0; k < ah.rows(); ++k) {
    for (Eigen::Index j = 0; j < ah.cols(); ++j)
      if (j != k && !ah(k, j).is_zero()) throw std::logic_error("alpha(h) is not diagonal on the spin basis");
    const ExactScalar& w = ah(k, k);
    if (!w.is_rational() || w.a().get_den() != 1) throw std::logic_error("non-integral spin weight");
    spin_weights_.push_back(static_cast<int>(w.a().get_num().get_si()));
  }
}

Matrix Sl2Pair::dirac(const WeightModule& m) const { return algebraic_dirac(g_, s_frame_, m, spin_, s_frame_); }

std::vector<Matrix> dirac_presentations(const Sl2Pair& p, const WeightModule& m) {
  const LieAlgebra& g = p.g();
  const Vector e = g.basis_vector("e"), f = g.basis_vector("f");
  const Vector& et = p.s_frame().vectors[0];
  const Vector& ft = p.s_frame().vectors[1];
  const ExactScalar c = ExactScalar::rational(3, 5), s = ExactScalar::rational(4, 5);
  Frame rotated(g, make_space({"r1", "r2"}, {1, 1}), {Vector(c * et + s * ft), Vector(-s * et + c * ft)});
  return {algebraic_dirac_dual_bases(g, {e, f}, {f, e}, m, p.spin(), p.s_frame()), p.dirac(m),
          algebraic_dirac(g, rotated, m, p.spin(), p.s_frame())};
}

namespace {

ExactScalar character_of(const TransitiveTriple& t, const Vector& x, const CharacterLabel& c) {
  const LieAlgebra& g = t.g();
  const Eigen::Index h1 = g.index_of("h1"), h2 = g.index_of("h2");
  for (Eigen::Index i = 0; i < g.dim(); ++i)
    if (i != h1 && i != h2 && !x(i).is_zero()) throw std::invalid_argument("element is not in the torus");
  return x(h1) * ExactScalar(c.a) + x(h2) * ExactScalar(c.b);
}

}  // namespace

ExactScalar z_character(const TransitiveTriple& t, const CharacterLabel& c) {
  return character_of(t, t.ql_prime().vectors.front(), c);
}

ExactScalar w_character(const TransitiveTriple& t, const CharacterLabel& c) {
  return character_of(t, t.lh_basis().front(), c);
}

ExactScalar block_eigenvalue(const TransitiveTriple& t, const PeterWeylBlock& blk, const WeightModule& e) {
  const auto& ws = e.weights();
  if (std::find(ws.begin(), ws.end(), blk.e_weight) == ws.end() || blk.e_weight != -blk.right.a - blk.right.b) {
    throw std::invalid_argument("block is not admissible: " + std::to_string(blk.e_weight) + " is not a weight of E");
  }
  SpinModule s(t.ql_prime().space);
  const ExactScalar z_spin = s.generator(0)(0, 0);
  const ExactScalar sign(t.ql_prime().space->signs.front());
  return sign * z_character(t, blk.right) * z_spin;
}

ExactScalar cubic_scalar(const TransitiveTriple& t) {
  const SpacePtr& q = t.ql().space;
  CliffordElement x(q, ExactScalar(2));
  for (int i = 0; i < q->dim(); ++i) x = x * CliffordElement::generator(q, i);
  auto s = scalar_value(SpinModule(q).gamma(x));
  if (!s) throw std::logic_error("gamma(2 Z T1 T2) is not a scalar");
  return *s;
}

Corollary62Result corollary62_check(const TransitiveTriple& t, const WeightModule& e) {
  Corollary62Result r;
  const ExactScalar cubic = cubic_scalar(t);
  r.even_weights = std::all_of(e.weights().begin(), e.weights().end(), [](int w) { return w % 2 == 0; });
  r.all_cancel = true;
  for (int w : weight_set(e)) {
    if (w % 2 != 0) continue;
    const int a = (-w - 2) / 2, b = (-w + 2) / 2;
    for (const char* spin : {"1", "u"}) {
      PeterWeylBlock blk = make_block(a, b, spin);
      r.all_cancel = r.all_cancel && (block_eigenvalue(t, blk, e) + cubic).is_zero();
      r.blocks.push_back(blk);
    }
  }
  return r;
}

KernelResult ds_dirac_kernel(const Sl2Pair& p, const WeightModule& m, bool strict) {
  const Eigen::Index ns = p.spin().dim();
  const Matrix d = p.dirac(m);
  KernelResult out;
  for (const Vector& v : nullspace(d)) {
    KernelVector kv;
    kv.coefficients = v;
    bool first = true, artifact = false;
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      if (v(k).is_zero()) continue;
      const Eigen::Index i = k / ns, s = k % ns;
      const int w = m.weights()[static_cast<std::size_t>(i)] + p.spin_weights()[static_cast<std::size_t>(s)];
      if (first) kv.total_weight = w;
      if (!first && w != kv.total_weight) throw std::logic_error("kernel vector mixes weights");
      first = false;
      kv.support.emplace_back(i, s);
      if (i >= m.certified_dim()) artifact = true;
    }
    if (artifact) {
      if (strict) {
        throw std::runtime_error("truncation artifact: kernel vector of weight " + std::to_string(kv.total_weight) +
                                 " touches level " + std::to_string(m.certified_dim()));
      }
      out.truncation_artifacts.push_back(std::move(kv));
    } else {
      out.certified.push_back(std::move(kv));
    }
  }
  return out;
}

std::vector<std::pair<int, std::string>> kernel_dh(const Sl2Pair& p, const WeightModule& e) {
  KernelResult k = ds_dirac_kernel(p, e, true);
  std::vector<std::pair<int, std::string>> out;
  for (const auto& kv : k.certified) {
    if (kv.support.size() != 1) throw std::logic_error("kernel vector is not a pure tensor");
    auto [i, s] = kv.support.front();
    out.emplace_back(e.weights()[static_cast<std::size_t>(i)], p.spin().basis_label(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<PeterWeylBlock, PeterWeylBlock> corollary63_subspace(int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  return {make_block(-m - 1, -m + 1, "u"), make_block(m - 1, m + 1, "1")};
}

Corollary63Result corollary63_check(const TransitiveTriple& t, const Sl2Pair& p, int m) {
  Corollary63Result r{corollary63_subspace(m), false, false};
  const WeightModule e = sl2_irrep(2 * m);
  const ExactScalar cubic = cubic_scalar(t);
  const auto& [b1, b2] = r.blocks;
  r.middle_vanishes = b1.right.a - b1.right.b == -2 && b2.right.a - b2.right.b == -2 &&
                      (block_eigenvalue(t, b1, e) + cubic).is_zero() && (block_eigenvalue(t, b2, e) + cubic).is_zero();
  const auto kernel = kernel_dh(p, e);
  auto has = [&kernel](int w, const std::string& s) {
    return std::find(kernel.begin(), kernel.end(), std::make_pair(w, s)) != kernel.end();
  };
  // spin u of S_{l cap s} is matched with e of S_{s'}
  r.kernel_pairs = b1.spin_ls == "u" && has(b1.e_weight, "e") && b2.spin_ls == "1" && has(b2.e_weight, "1");
  return r;
}

namespace {

bool has_kernel_weight(const KernelResult& k, int target, Eigen::Index spin_index) {
  for (const auto& kv : k.certified) {
    if (kv.total_weight != target) continue;
    if (std::all_of(kv.support.begin(), kv.support.end(), [spin_index](const auto& s) { return s.second == spin_index; }))
      return true;
  }
  return false;
}

Eigen::Index spin_index(const Sl2Pair& p, const std::string& label) {
  for (Eigen::Index k = 0; k < p.spin().dim(); ++k)
    if (p.spin().basis_label(k) == label) return k;
  throw std::logic_error("no spin basis vector " + label);
}

}  // namespace

const KernelResult& KernelCache::highest(int nu, int truncation) {
  auto key = std::make_tuple(1, nu, truncation);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, ds_dirac_kernel(p_, highest_weight_module(nu, truncation))).first;
  return it->second;
}

const KernelResult& KernelCache::lowest(int mu, int truncation) {
  auto key = std::make_tuple(-1, mu, truncation);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    // the truncated model of lowest weight 0 is reducible; its irreducible
    // quotient is the trivial module
    WeightModule m = mu == 0 ? sl2_irrep(0) : lowest_weight_module(mu, truncation);
    it = cache_.emplace(key, ds_dirac_kernel(p_, m)).first;
  }
  return it->second;
}

std::vector<int> highest_weight_scan(const Sl2Pair& p, int target, int lo, int hi, int truncation, KernelCache* cache) {
  KernelCache local(p);
  KernelCache& c = cache ? *cache : local;
  std::vector<int> out;
  const Eigen::Index e_index = spin_index(p, "e");
  for (int nu = lo; nu <= hi; ++nu)
    if (has_kernel_weight(c.highest(nu, truncation), target, e_index)) out.push_back(nu);
  return out;
}

std::vector<int> lowest_weight_scan(const Sl2Pair& p, int target, int lo, int hi, int truncation, KernelCache* cache) {
  KernelCache local(p);
  KernelCache& c = cache ? *cache : local;
  std::vector<int> out;
  const Eigen::Index one_index = spin_index(p, "1");
  for (int mu = lo; mu <= hi; ++mu)
    if (has_kernel_weight(c.lowest(mu, truncation), target, one_index)) out.push_back(mu);
  return out;
}

std::vector<TableRow> theorem64_table(const Sl2Pair& p, int m, int truncation, KernelCache* cache) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  const auto [b1, b2] = corollary63_subspace(m);
  std::vector<TableRow> rows;

  TableRow r1;
  r1.target_weight = -b1.left.a;
  r1.spin_part = "e";
  auto hw = highest_weight_scan(p, r1.target_weight, std::min(-12, -m - 4), -1, truncation, cache);
  if (hw.empty()) throw std::logic_error("no highest weight module has the required kernel");
  for (int nu : hw) r1.matches.push_back("highest weight " + std::to_string(nu));
  r1.label = {GPrimeKind::ds_plus, -hw.front(), b1.left.b};
  rows.push_back(r1);

  TableRow r2;
  r2.target_weight = -b2.left.a;
  r2.spin_part = "1";
  auto lw = lowest_weight_scan(p, r2.target_weight, 0, std::max(12, m + 4), truncation, cache);
  if (lw.empty()) throw std::logic_error("no lowest weight module has the required kernel");
  for (int mu : lw) r2.matches.push_back(mu == 0 ? "trivial" : "lowest weight " + std::to_string(mu));
  const int mu = lw.front();
  if (mu >= 2) {
    r2.label = {GPrimeKind::ds_minus, -mu, b2.left.b};
  } else if (mu == 1) {
    r2.label = {GPrimeKind::limit_ds_minus, std::nullopt, b2.left.b};
  } else {
    r2.label = {GPrimeKind::trivial, std::nullopt, b2.left.b};
  }
  rows.push_back(r2);
  return rows;
}

}  // namespace dirac
