// Acceptance run: one line per criterion, exit status 1 if any fails.
#include "dirac/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace dirac;

namespace {

const ExactScalar r2 = ExactScalar::sqrt2();

struct Outcome {
  bool ok = true;
  std::string details;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 for no runtime limit
  std::function<Outcome()> run;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::vector<SpacePtr> all_spaces(const TransitiveTriple& t) {
  std::vector<SpacePtr> out;
  for (int n = 1; n <= 6; ++n)
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<std::string> labels;
      std::vector<int> signs;
      for (int i = 0; i < n; ++i) {
        labels.push_back("x" + std::to_string(i));
        signs.push_back(mask >> i & 1 ? -1 : 1);
      }
      out.push_back(make_space(labels, signs));
    }
  for (const Frame* f : {&t.q(), &t.ql(), &t.ls(), &t.ql_prime(), &t.hs()}) out.push_back(f->space);
  return out;
}

Outcome clifford_axioms(const TransitiveTriple& t) {
  int spaces = 0, assoc = 0;
  for (const auto& q : all_spaces(t)) {
    ++spaces;
    const int n = q->dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto a = CliffordElement::generator(q, i), b = CliffordElement::generator(q, j);
        ExactScalar expect = i == j ? ExactScalar(q->signs[static_cast<std::size_t>(i)]) : ExactScalar();
        if (!(a * b + b * a == CliffordElement(q, expect)))
          return fail("anticommutator fails on a space of dimension " + std::to_string(n));
      }
    if (n > 4) continue;
    ++assoc;
    const Blade top = Blade(1) << n;
    for (Blade x = 0; x < top; ++x)
      for (Blade y = 0; y < top; ++y)
        for (Blade z = 0; z < top; ++z) {
          auto a = CliffordElement::monomial(q, x), b = CliffordElement::monomial(q, y),
               c = CliffordElement::monomial(q, z);
          if (!((a * b) * c == a * (b * c)))
            return fail("associativity fails on a space of dimension " + std::to_string(n));
        }
  }
  return {true, std::to_string(spaces) + " spaces, associativity on " + std::to_string(assoc)};
}

struct PairSpec {
  std::string name;
  const std::vector<Vector>* sub;
  const Frame* complement;
};

std::vector<PairSpec> pairs(const TransitiveTriple& t) {
  return {{"(g,h)", &t.data().h_basis, &t.q()},
          {"(l,l cap h)", &t.lh_basis(), &t.ql()},
          {"(l,l cap k)", &t.lk_basis(), &t.ls()},
          {"(l cap k,l cap h)", &t.lh_basis(), &t.ql_prime()},
          {"(h,h cap k)", &t.hk_basis(), &t.hs()}};
}

Outcome alpha_bracket(const TransitiveTriple& t) {
  const LieAlgebra& g = t.g();
  int n = 0;
  for (const auto& p : pairs(t)) {
    const Frame& f = *p.complement;
    for (const auto& x : *p.sub) {
      CliffordElement ax = alpha(g, f, x);
      for (int j = 0; j < f.dim(); ++j) {
        const Vector& y = f.vectors[static_cast<std::size_t>(j)];
        ++n;
        if (!(clifford_commutator(ax, CliffordElement::generator(f.space, j)) ==
              f.clifford_vector(g, g.bracket(x, y))))
          return fail("bracket fails for " + p.name);
      }
    }
  }
  return {true, std::to_string(n) + " basis pairs over 5 pairs"};
}

Outcome alpha_morphism(const TransitiveTriple& t) {
  const LieAlgebra& g = t.g();
  const auto& lh = t.lh_basis();
  for (const auto& [basis, frame] : {std::pair{&lh, &t.ql()}, std::pair{&lh, &t.q()}})
    for (const auto& x : *basis)
      for (const auto& y : *basis)
        if (!(alpha(g, *frame, g.bracket(x, y)) == clifford_commutator(alpha(g, *frame, x), alpha(g, *frame, y))))
          return fail("alpha is not a Lie morphism");
  for (const auto& w : lh)
    if (!(reinterpret(alpha(g, t.ql(), w), t.q().space) == alpha(g, t.q(), w)))
      return fail("rho- does not carry alpha of l cap h to alpha of h");
  return {true, std::to_string(lh.size()) + " basis elements of l cap h"};
}

Outcome spin_split(const TransitiveTriple& t) {
  SpinModule a(t.ls().space), b(t.ql_prime().space), joint(t.ql().space);
  SpinSplit split(a, b, joint, {1, 2}, {0});
  if (rank(split.mult_iso()) != joint.dim() || a.dim() * b.dim() != joint.dim())
    return fail("S_{l cap s} (x) S_{q_l'} is not isomorphic to S_{q_l}");
  int n = 0;
  for (Blade x = 0; x < (Blade(1) << a.space()->dim()); ++x)
    for (Blade y = 0; y < (Blade(1) << b.space()->dim()); ++y) {
      auto c = CliffordElement::monomial(a.space(), x);
      auto d = CliffordElement::monomial(b.space(), y);
      ++n;
      if (!exactly_equal(Matrix(split.mult_iso() * split.graded_tensor_action(c, d)),
                         Matrix(joint.gamma(split.embed_a(c) * split.embed_b(d)) * split.mult_iso())))
        return fail("intertwining fails");
    }
  return {true, std::to_string(n) + " monomial pairs, dimensions " + std::to_string(a.dim()) + " x " +
                    std::to_string(b.dim())};
}

Outcome omega(const TransitiveTriple& t) {
  const LieAlgebra& g = t.g();
  const auto& v = t.ql().vectors;
  int n = 0;
  for (const auto& x : v)
    for (const auto& y : v)
      for (const auto& z : v) {
        const ExactScalar nx = t.nu_of(x), ny = t.nu_of(y), nz = t.nu_of(z);
        ExactScalar lhs = g.pair(g.bracket(t.rho(1, x), t.rho(-1, y)), t.rho(-1, z));
        ExactScalar coef = ExactScalar::rational(1, 4) * t.d_nu(nx) * t.d_nu(ny) * t.d_nu(nz) *
                           (ExactScalar(1) + nx - ny - nz);
        ++n;
        if (!(lhs == coef * g.pair(g.bracket(x, y), z))) return fail("omega identity fails");
      }
  for (const auto& c : rho_bracket_identity(t))
    if (!c.ok()) return fail("rho bracket identity fails at " + c.label);
  return {n == 27, std::to_string(n) + " ordered triples"};
}

Outcome embedding(const TransitiveTriple& t) {
  for (int m = 0; m <= 5; ++m) {
    DiracSetup s(t, diagonal_module(t, sl2_irrep(2 * m)));
    for (const auto& c : verify_embedding(s))
      if (!c.pass) return fail("form " + std::to_string(c.form) + " fails for m = " + std::to_string(m));
    for (const auto& c : verify_embedding(s, ExactScalar(-1)))
      if (c.pass) return fail("perturbed cubic coefficient passes for m = " + std::to_string(m));
  }
  return {true, "both forms for m = 0..5, perturbed control rejected"};
}

Outcome cubic(const TransitiveTriple& t) {
  SpinModule s(t.ql().space);
  auto direct = scalar_value(Matrix(ExactScalar(2) * Matrix(s.generator(0) * s.generator(1) * s.generator(2))));
  if (!direct) return fail("gamma(2 Z T1 T2) is not scalar");
  if (!(*direct == r2 / ExactScalar(2)) || !(cubic_scalar(t) == *direct))
    return fail("gamma(2 Z T1 T2) = " + direct->to_string());
  return {true, "gamma(2 Z T1 T2) = " + direct->to_string() + " * Id"};
}

Outcome eigenvalues(const TransitiveTriple& t) {
  WeightModule even = sl2_irrep(20), odd = sl2_irrep(19);
  int n = 0;
  for (int a = -10; a <= 10; ++a)
    for (int b = -10; b <= 10; ++b)
      for (const char* spin : {"1", "u"}) {
        const WeightModule& e = (a + b) % 2 == 0 ? even : odd;
        ++n;
        if (!(block_eigenvalue(t, make_block(a, b, spin), e) == ExactScalar(a - b) / (ExactScalar(2) * r2)))
          return fail("block (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      }
  return {true, std::to_string(n) + " blocks"};
}

Outcome cancellation(const TransitiveTriple& t) {
  const ExactScalar c = cubic_scalar(t);
  for (int n = 0; n <= 6; ++n) {
    WeightModule e = sl2_irrep(n);
    auto r = corollary62_check(t, e);
    for (const auto& b : r.blocks)
      if (b.right.a - b.right.b != -2 || !(block_eigenvalue(t, b, e) + c).is_zero())
        return fail("no cancellation for highest weight " + std::to_string(n));
    if (r.blocks.empty() == (n % 2 == 0)) return fail("block family wrong for highest weight " + std::to_string(n));
  }
  return {true, "highest weights 0..6"};
}

Outcome kernel_h(const Sl2Pair& p) {
  for (int m = 0; m <= 5; ++m) {
    WeightModule e = sl2_irrep(2 * m);
    std::vector<std::pair<int, std::string>> expect{{-2 * m, "1"}, {2 * m, "e"}};
    if (kernel_dh(p, e) != expect) return fail("kernel differs for m = " + std::to_string(m));
    if (nullspace(p.dirac(e)).size() != 2) return fail("kernel dimension differs for m = " + std::to_string(m));
  }
  return {true, "{(2m, e), (-2m, 1)} for m = 0..5"};
}

bool pure(const KernelVector& v, Eigen::Index spin) {
  return std::all_of(v.support.begin(), v.support.end(), [&](const auto& s) { return s.second == spin; });
}

struct DsFindings {
  std::vector<int> unique_nu;  // per m
};

Outcome ds_kernels(const Sl2Pair& p, KernelCache& cache, DsFindings& out) {
  const int n = 40;
  std::string extra;
  for (int m = 0; m <= 5; ++m) {
    const KernelResult& h = cache.highest(-m - 2, n);
    if (h.certified.size() != 1 || h.certified[0].total_weight != -m - 1 || !pure(h.certified[0], 1))
      return fail("highest weight " + std::to_string(-m - 2));
    KernelResult l = ds_dirac_kernel(p, lowest_weight_module(m, n));
    bool hit = false;
    for (const auto& v : l.certified) {
      if (!pure(v, 0)) return fail("lowest weight " + std::to_string(m) + " has an e-part kernel");
      if (v.total_weight == m - 1) hit = true;
      else extra += " " + std::to_string(v.total_weight) + " at lowest weight " + std::to_string(m);
    }
    if (!hit) return fail("lowest weight " + std::to_string(m));
    auto scan = highest_weight_scan(p, -m - 1, -12, -1, n, &cache);
    if (scan.size() != 1 || scan[0] != -m - 2) return fail("uniqueness scan for m = " + std::to_string(m));
    out.unique_nu.push_back(scan[0]);
  }
  return {true, "m = 0..5 at N = 40" + (extra.empty() ? std::string() : ", additional kernel weight" + extra)};
}

Outcome table(const Sl2Pair& p, KernelCache& cache, const DsFindings& ds) {
  if (ds.unique_nu.size() != 6) return fail("kernel scans unavailable");
  auto cases = [](int m) -> std::vector<LRepLabel> {
    if (m == 0) return {{GPrimeKind::ds_plus, 2, -1}, {GPrimeKind::trivial, std::nullopt, -1}};
    if (m == 1) return {{GPrimeKind::ds_plus, 3, 0}, {GPrimeKind::limit_ds_minus, std::nullopt, -2}};
    return {{GPrimeKind::ds_plus, m + 2, m - 1}, {GPrimeKind::ds_minus, -m, -m - 1}};
  };
  for (int m = 0; m <= 5; ++m) {
    auto rows = theorem64_table(p, m, 40, &cache);
    auto expect = cases(m);
    if (rows.size() != 2 || !(rows[0].label == expect[0]) || !(rows[1].label == expect[1]))
      return fail("rows differ for m = " + std::to_string(m));
    for (const auto& r : rows)
      if (r.matches.size() != 1) return fail("label not backed by a unique scan hit for m = " + std::to_string(m));
    if (rows[0].label.n != -ds.unique_nu[static_cast<std::size_t>(m)])
      return fail("DS+ label disagrees with the uniqueness scan for m = " + std::to_string(m));
  }
  return {true, "m = 0..5"};
}

Outcome basis_independence(const Sl2Pair& p) {
  for (int m = 0; m <= 5; ++m) {
    auto d = dirac_presentations(p, sl2_irrep(2 * m));
    if (d.size() != 3 || !exactly_equal(d[0], d[1]) || !exactly_equal(d[0], d[2]))
      return fail("presentations differ for m = " + std::to_string(m));
  }
  return {true, "{h,e,f}, {et,ft} and rotated frame agree for m = 0..5"};
}

}  // namespace

int main() {
  TransitiveTriple t = build_sl2_triple();
  Sl2Pair p;
  KernelCache cache(p);
  DsFindings ds;

  std::vector<Criterion> criteria{
      {1, "Clifford axioms", 1.0, [&] { return clifford_axioms(t); }},
      {2, "alpha bracket", 1.0, [&] { return alpha_bracket(t); }},
      {3, "alpha morphism and rho- compatibility", 0, [&] { return alpha_morphism(t); }},
      {4, "spin decomposition and intertwining", 0, [&] { return spin_split(t); }},
      {5, "omega identity", 0, [&] { return omega(t); }},
      {6, "Dirac operator restricted to L, both forms", 10.0, [&] { return embedding(t); }},
      {7, "cubic scalar", 0, [&] { return cubic(t); }},
      {8, "block eigenvalues", 0, [&] { return eigenvalues(t); }},
      {9, "cubic cancellation on a - b = -2 blocks", 0, [&] { return cancellation(t); }},
      {10, "kernel of D_h", 0, [&] { return kernel_h(p); }},
      {11, "discrete series kernels", 5.0, [&] { return ds_kernels(p, cache, ds); }},
      {12, "kernel representations of L", 0, [&] { return table(p, cache, ds); }},
      {13, "basis independence", 0, [&] { return basis_independence(p); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && s >= c.limit_s) {
      o.ok = false;
      o.details += ", over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    }
    all = all && o.ok;
    std::printf("%-4s %2d  %-45s %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), o.details.c_str(), s);
  }
  return all ? 0 : 1;
}
