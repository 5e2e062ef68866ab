#include "dirac/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace dirac {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "fail";
}

void Report::add(std::string suite, std::string check, bool ok, std::string details, std::string anchor) {
  if (!ok && details.empty()) details = "check failed";
  checks_.push_back({std::move(suite), std::move(check), ok ? Status::pass : Status::fail, std::move(details),
                     std::move(anchor)});
}

void Report::skip(std::string suite, std::string check, std::string details, std::string anchor) {
  checks_.push_back({std::move(suite), std::move(check), Status::skipped, std::move(details), std::move(anchor)});
}

void Report::merge(const Report& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }

std::vector<CheckResult> Report::sorted() const {
  std::vector<CheckResult> out = checks_;
  std::stable_sort(out.begin(), out.end(), [](const CheckResult& x, const CheckResult& y) {
    return std::tie(x.suite, x.check) < std::tie(y.suite, y.check);
  });
  return out;
}

bool Report::ok() const {
  return std::none_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.status == Status::fail; });
}

namespace {

nlohmann::ordered_json row_json(const LRepLabel& l) {
  static const char* names[] = {"DS+", "DS-", "LDS-", "Trivial"};
  nlohmann::ordered_json row = nlohmann::ordered_json::array();
  row.push_back(names[static_cast<int>(l.kind)]);
  if (l.n) {
    row.push_back(*l.n);
  } else {
    row.push_back(nullptr);
  }
  row.push_back("C");
  row.push_back(l.kprime);
  return row;
}

}  // namespace

std::string render_json(const Report& r, const std::vector<TableRow>* rows) {
  nlohmann::ordered_json out;
  out["version"] = 1;
  out["suites"] = nlohmann::ordered_json::array();
  for (const auto& c : r.sorted()) {
    auto& suites = out["suites"];
    if (suites.empty() || suites.back()["name"] != c.suite) {
      suites.push_back({{"name", c.suite}, {"checks", nlohmann::ordered_json::array()}});
    }
    suites.back()["checks"].push_back({{"suite", c.suite},
                                       {"check", c.check},
                                       {"status", to_string(c.status)},
                                       {"details", c.details},
                                       {"paper_anchor", c.paper_anchor}});
  }
  if (rows) {
    out["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : *rows) out["rows"].push_back(row_json(row.label));
  }
  return out.dump(2) + "\n";
}

std::string render_text(const Report& r, const std::vector<TableRow>* rows) {
  std::string out;
  for (const auto& c : r.sorted()) {
    out += c.suite + "/" + c.check + ": " + to_string(c.status) + " — " + c.details + "\n";
  }
  if (rows) {
    for (const auto& row : *rows) out += "row: " + to_string(row.label) + "\n";
  }
  return out;
}

namespace {

std::vector<SpacePtr> test_spaces() {
  std::vector<SpacePtr> out;
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::string> labels;
    std::vector<int> signs;
    for (int i = 0; i < n; ++i) {
      labels.push_back("e" + std::to_string(i + 1));
      signs.push_back(i % 3 == 1 ? -1 : 1);
    }
    out.push_back(make_space(labels, signs));
    if (n > 1) out.push_back(make_space(labels, std::vector<int>(static_cast<std::size_t>(n), -1)));
  }
  return out;
}

std::string space_name(const QuadraticSpace& q) {
  std::string s = "dim" + std::to_string(q.dim()) + "(";
  for (int e : q.signs) s += e > 0 ? '+' : '-';
  return s + ")";
}

bool anticommutators_hold(const SpacePtr& q) {
  for (int i = 0; i < q->dim(); ++i)
    for (int j = 0; j < q->dim(); ++j) {
      auto gi = CliffordElement::generator(q, i), gj = CliffordElement::generator(q, j);
      ExactScalar expect = i == j ? ExactScalar(q->signs[static_cast<std::size_t>(i)]) : ExactScalar();
      if (!(gi * gj + gj * gi == CliffordElement(q, expect))) return false;
    }
  return true;
}

bool associative(const SpacePtr& q) {
  const Blade n = Blade(1) << q->dim();
  for (Blade x = 0; x < n; ++x)
    for (Blade y = 0; y < n; ++y)
      for (Blade z = 0; z < n; ++z) {
        auto a = CliffordElement::monomial(q, x), b = CliffordElement::monomial(q, y),
             c = CliffordElement::monomial(q, z);
        if (!((a * b) * c == a * (b * c))) return false;
      }
  return true;
}

struct NamedPair {
  std::string name;
  std::vector<Vector> sub_basis;
  const Frame* complement;
};

std::vector<NamedPair> pairs_of(const TransitiveTriple& t) {
  return {{"(g,h)", t.data().h_basis, &t.q()},
          {"(h,h cap k)", t.hk_basis(), &t.hs()},
          {"(l,l cap h)", t.lh_basis(), &t.ql()},
          {"(l,l cap k)", t.lk_basis(), &t.ls()},
          {"(l cap k,l cap h)", t.lh_basis(), &t.ql_prime()}};
}

std::string bracket_failure(const LieAlgebra& g, const NamedPair& p) {
  const Frame& f = *p.complement;
  for (std::size_t a = 0; a < p.sub_basis.size(); ++a) {
    CliffordElement ax = alpha(g, f, p.sub_basis[a]);
    for (int j = 0; j < f.dim(); ++j) {
      const Vector& y = f.vectors[static_cast<std::size_t>(j)];
      CliffordElement lhs = clifford_commutator(ax, CliffordElement::generator(f.space, j));
      CliffordElement rhs = f.clifford_vector(g, g.bracket(p.sub_basis[a], y));
      if (!(lhs == rhs)) {
        return "basis element " + std::to_string(a) + " against " + f.space->labels[static_cast<std::size_t>(j)] +
               ": " + lhs.to_string() + " vs " + rhs.to_string();
      }
    }
  }
  return {};
}

std::string morphism_failure(const LieAlgebra& g, const std::vector<Vector>& basis, const Frame& f) {
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      CliffordElement lhs = alpha(g, f, g.bracket(basis[a], basis[b]));
      CliffordElement rhs = clifford_commutator(alpha(g, f, basis[a]), alpha(g, f, basis[b]));
      if (!(lhs == rhs)) return "pair (" + std::to_string(a) + ", " + std::to_string(b) + "): " + lhs.to_string() +
                                " vs " + rhs.to_string();
    }
  return {};
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

Report clifford_suite(const TransitiveTriple& t) {
  const std::string suite = "clifford";
  Report r;
  auto spaces = test_spaces();
  for (const Frame* f : {&t.q(), &t.ql(), &t.ls(), &t.ql_prime(), &t.hs()}) spaces.push_back(f->space);
  int count = 0;
  std::string bad;
  for (const auto& q : spaces) {
    ++count;
    if (!anticommutators_hold(q) && bad.empty()) bad = space_name(*q);
  }
  r.add(suite, "anticommutator", bad.empty(),
        bad.empty() ? std::to_string(count) + " spaces of dimension 1 to 6" : "relation fails on " + bad,
        "Clifford relation XY + YX = <X, Y>");
  bad.clear();
  count = 0;
  for (const auto& q : spaces) {
    if (q->dim() > 4) continue;
    ++count;
    if (!associative(q) && bad.empty()) bad = space_name(*q);
  }
  r.add(suite, "associativity", bad.empty(),
        bad.empty() ? "all monomial triples in " + std::to_string(count) + " spaces of dimension <= 4"
                    : "fails on " + bad,
        "Clifford algebra is associative");
  for (const auto& p : pairs_of(t)) {
    std::string fail = bracket_failure(t.g(), p);
    r.add(suite, "alpha-bracket " + p.name, fail.empty(),
          fail.empty() ? std::to_string(p.sub_basis.size()) + " x " + std::to_string(p.complement->dim()) +
                             " basis pairs"
                       : fail,
          "[alpha(X), Y] = [X, Y] in C(q)");
  }
  return r;
}

Report spin_suite(const TransitiveTriple& t) {
  const std::string suite = "spin";
  Report r;
  for (const auto& [name, f] : std::vector<std::pair<std::string, const Frame*>>{
           {"q", &t.q()}, {"q_l", &t.ql()}, {"l cap s", &t.ls()}, {"q_l'", &t.ql_prime()}, {"h cap s", &t.hs()}}) {
    SpinModule s(f->space);
    std::string bad;
    for (int i = 0; i < f->dim() && bad.empty(); ++i)
      for (int j = 0; j < f->dim() && bad.empty(); ++j) {
        Matrix lhs = product(s.generator(i), s.generator(j)) + product(s.generator(j), s.generator(i));
        ExactScalar expect = i == j ? ExactScalar(f->space->signs[static_cast<std::size_t>(i)]) : ExactScalar();
        if (!solve_scalar_action(lhs, expect))
          bad = f->space->labels[static_cast<std::size_t>(i)] + ", " + f->space->labels[static_cast<std::size_t>(j)];
      }
    const Blade n = Blade(1) << f->dim();
    for (Blade x = 0; x < n && bad.empty(); ++x)
      for (Blade y = 0; y < n && bad.empty(); ++y) {
        auto a = CliffordElement::monomial(f->space, x), b = CliffordElement::monomial(f->space, y);
        if (!exactly_equal(s.gamma(a * b), product(s.gamma(a), s.gamma(b)))) bad = "gamma is not multiplicative";
      }
    r.add(suite, "gamma " + name, bad.empty(),
          bad.empty() ? "dimension " + std::to_string(s.dim()) + ", relations and products exact" : bad,
          "spin module as a C(q)-module");
  }

  SpinModule a(t.ls().space), b(t.ql_prime().space), joint(t.ql().space);
  std::vector<int> a_idx, b_idx;
  for (int k = 0; k < t.ls().dim(); ++k) a_idx.push_back(t.ql_prime().dim() + k);
  for (int k = 0; k < t.ql_prime().dim(); ++k) b_idx.push_back(k);
  SpinSplit split(a, b, joint, a_idx, b_idx);
  const Matrix& iso = split.mult_iso();
  r.add(suite, "split-isomorphism", rank(iso) == joint.dim(),
        "S_{l cap s} (x) S_{q_l'} -> S_{q_l} of rank " + std::to_string(rank(iso)) + " of " +
            std::to_string(joint.dim()),
        "S_{q_l} = S_{l cap s} (x) S_{q_l'}");
  std::string bad;
  int count = 0;
  for (Blade x = 0; x < (Blade(1) << a.space()->dim()); ++x)
    for (Blade y = 0; y < (Blade(1) << b.space()->dim()); ++y) {
      auto c = CliffordElement::monomial(a.space(), x);
      auto d = CliffordElement::monomial(b.space(), y);
      Matrix lhs = product(iso, split.graded_tensor_action(c, d));
      Matrix rhs = product(joint.gamma(split.embed_a(c) * split.embed_b(d)), iso);
      ++count;
      if (!exactly_equal(lhs, rhs) && bad.empty()) bad = c.to_string() + " (x) " + d.to_string();
    }
  r.add(suite, "split-intertwining", bad.empty(),
        bad.empty() ? std::to_string(count) + " monomial pairs c (x) d" : "fails for " + bad,
        "graded tensor product C(a) (x) C(b) = C(a + b) on spin modules");
  return r;
}

Report triple_suite(const TransitiveTriple& t) {
  const std::string suite = "triple";
  Report r;
  for (const auto& c : t.structure_checks()) r.add(suite, "structure " + c.name, c.ok, c.details, "transitive triple");
  std::string nus;
  for (const auto& s : t.nu_spaces())
    nus += (nus.empty() ? "" : ", ") + std::string("nu=") + s.nu.to_string() + ": " + std::to_string(s.basis.size());
  r.add(suite, "nu-spaces", !t.nu_spaces().empty(), nus, "eigenspaces l(nu) of the sigma pairing");

  const LieAlgebra& g = t.g();
  for (const auto& [name, basis, f] : std::vector<std::tuple<std::string, std::vector<Vector>, const Frame*>>{
           {"h", t.data().h_basis, &t.q()}, {"l cap h", t.lh_basis(), &t.ql()}, {"l cap k", t.lk_basis(), &t.ls()}}) {
    std::string fail = morphism_failure(g, basis, *f);
    r.add(suite, "alpha-morphism " + name, fail.empty(), fail.empty() ? "all basis pairs" : fail,
          "alpha is a Lie algebra morphism");
  }

  std::string fail;
  for (std::size_t k = 0; k < t.lh_basis().size(); ++k) {
    CliffordElement lhs = reinterpret(alpha(g, t.ql(), t.lh_basis()[k]), t.q().space);
    CliffordElement rhs = alpha(g, t.q(), t.lh_basis()[k]);
    if (!(lhs == rhs) && fail.empty())
      fail = t.data().lh_labels[k] + ": " + lhs.to_string() + " vs " + rhs.to_string();
  }
  r.add(suite, "rho-alpha", fail.empty(),
        fail.empty() ? "rho-(alpha_{l cap h}(W)) = alpha_h(W) = " +
                           alpha(g, t.q(), t.lh_basis().front()).to_string()
                     : fail,
        "rho- carries alpha_{l cap h} to alpha_h");

  for (const auto& [name, checks] : std::vector<std::pair<std::string, std::vector<IdentityCheck>>>{
           {"rho-bracket", rho_bracket_identity(t)}, {"omega", omega_identity(t)}}) {
    std::size_t good = 0;
    std::string bad;
    for (const auto& c : checks) {
      if (c.ok()) {
        ++good;
      } else if (bad.empty()) {
        bad = c.label + ": " + c.lhs.to_string() + " vs " + c.rhs.to_string();
      }
    }
    r.add(suite, name, bad.empty() && !checks.empty(),
          bad.empty() ? std::to_string(good) + "/" + std::to_string(checks.size()) + " exact" : bad,
          name == "omega" ? "omega(rho+ X, rho- Y, rho- Z) rescaling" : "brackets of rho+ and rho- images");
  }
  return r;
}

namespace {

void require_even(int weight) {
  if (weight < 0 || weight % 2 != 0) throw std::invalid_argument("weight must be a nonnegative even integer");
}

}  // namespace

Report embedding_suite(const TransitiveTriple& t, int weight) {
  require_even(weight);
  const std::string suite = "theorem51";
  Report r;
  DiracSetup s(t, diagonal_module(t, sl2_irrep(weight)));
  const std::string e = "E of highest weight " + std::to_string(weight);
  for (const auto& c : verify_embedding(s)) {
    r.add(suite, "form" + std::to_string(c.form), c.pass,
          c.pass ? "symbol-wise equal for " + e : "mismatched symbols: " + join(c.mismatched),
          "Dirac operator of G/H restricted to L");
  }
  const auto perturbed = verify_embedding(s, ExactScalar(-1));
  bool all_fail = std::none_of(perturbed.begin(), perturbed.end(), [](const TheoremCheck& c) { return c.pass; });
  std::string details = "cubic coefficient -1 in place of -2: mismatched ";
  for (const auto& c : perturbed) details += "form" + std::to_string(c.form) + " [" + join(c.mismatched) + "] ";
  details.pop_back();
  r.add(suite, "negative-control", all_fail, details, "Dirac operator of G/H restricted to L");
  return r;
}

Report spectral_suite(const TransitiveTriple& t, const Sl2Pair& p, int weight, int truncation,
                      KernelCache* shared) {
  if (weight < 0) throw std::invalid_argument("weight must be nonnegative");
  const std::string suite = "spectral";
  Report r;
  const WeightModule e = sl2_irrep(weight);
  const ExactScalar cubic = cubic_scalar(t);
  const ExactScalar half_r2 = ExactScalar::sqrt2() / ExactScalar(2);
  r.add(suite, "cubic-scalar", cubic == half_r2, "gamma(2 Z T1 T2) = " + cubic.to_string() + " * Id",
        "cubic element acts by 1/r2");

  int count = 0;
  std::string bad;
  for (int a = -10; a <= 10; ++a)
    for (int b = -10; b <= 10; ++b) {
      PeterWeylBlock blk = make_block(a, b, "1");
      if (std::find(e.weights().begin(), e.weights().end(), blk.e_weight) == e.weights().end()) continue;
      ++count;
      ExactScalar expect = ExactScalar(a - b) * ExactScalar::sqrt2() / ExactScalar(4);
      ExactScalar got = block_eigenvalue(t, blk, e);
      if (!(got == expect) && bad.empty())
        bad = "(" + std::to_string(a) + "," + std::to_string(b) + "): " + got.to_string();
    }
  r.add(suite, "block-eigenvalues", bad.empty(),
        bad.empty() ? std::to_string(count) + " admissible blocks with |a|,|b| <= 10 give (a-b)/(2 r2)" : bad,
        "eigenvalues k/(2 r2) on the torus blocks");

  auto c62 = corollary62_check(t, e);
  r.add(suite, "k=-2-blocks", c62.consistent(),
        std::to_string(c62.blocks.size()) + " blocks, " + (c62.all_cancel ? "all cancel" : "not all cancel") +
            ", even weights: " + (c62.even_weights ? "yes" : "no"),
        "k = -2 blocks cancel the cubic term");

  const std::string anchor_kernel = "kernel of the Dirac operator of h";
  const std::string anchor_ds = "discrete series kernels";
  if (weight % 2 != 0) {
    for (const char* name : {"kernel-blocks", "kernel-dh", "basis-independence", "ds-kernel highest",
                             "ds-kernel lowest", "ds-kernel uniqueness"})
      r.skip(suite, name, "odd highest weight " + std::to_string(weight) + ": no k=-2 blocks", anchor_kernel);
    return r;
  }
  const int m = weight / 2;
  auto c63 = corollary63_check(t, p, m);
  r.add(suite, "kernel-blocks", c63.middle_vanishes && c63.kernel_pairs,
        std::string("middle term ") + (c63.middle_vanishes ? "vanishes" : "does not vanish") + ", spin pairing " +
            (c63.kernel_pairs ? "matches" : "does not match"),
        "kernel blocks u (x) E_{2m} and 1 (x) E_{-2m}");

  auto kernel = kernel_dh(p, e);
  std::vector<std::pair<int, std::string>> expect{{-weight, "1"}, {weight, "e"}};
  std::sort(expect.begin(), expect.end());
  std::string ks;
  for (const auto& [w, s] : kernel) ks += (ks.empty() ? "" : ", ") + std::string("(") + std::to_string(w) + ", " + s + ")";
  r.add(suite, "kernel-dh", kernel == expect, "kernel {" + ks + "}", anchor_kernel);

  auto pres = dirac_presentations(p, e);
  bool same = exactly_equal(pres[0], pres[1]) && exactly_equal(pres[1], pres[2]);
  r.add(suite, "basis-independence", same,
        same ? "dual bases (e,f), frame (et,ft) and the (3/5,4/5) rotation agree" : "presentations differ",
        anchor_kernel);

  KernelCache local(p);
  KernelCache& cache = shared ? *shared : local;
  auto describe = [](const KernelResult& k) {
    std::string s;
    for (const auto& v : k.certified) s += (s.empty() ? "" : ", ") + std::to_string(v.total_weight);
    return "certified weights {" + s + "}, " + std::to_string(k.truncation_artifacts.size()) + " artifacts";
  };
  const Eigen::Index e_idx = 1, one_idx = 0;
  auto hits = [](const KernelResult& k, int target, Eigen::Index spin) {
    return std::any_of(k.certified.begin(), k.certified.end(), [&](const KernelVector& v) {
      return v.total_weight == target &&
             std::all_of(v.support.begin(), v.support.end(), [&](const auto& s) { return s.second == spin; });
    });
  };
  const KernelResult& hk = cache.highest(-m - 2, truncation);
  r.add(suite, "ds-kernel highest", hits(hk, -m - 1, e_idx),
        "highest weight " + std::to_string(-m - 2) + ": " + describe(hk) + ", target " + std::to_string(-m - 1),
        anchor_ds);
  const KernelResult lk = ds_dirac_kernel(p, lowest_weight_module(m, truncation));
  r.add(suite, "ds-kernel lowest", hits(lk, m - 1, one_idx),
        "lowest weight " + std::to_string(m) + ": " + describe(lk) + ", target " + std::to_string(m - 1), anchor_ds);
  auto scan = highest_weight_scan(p, -m - 1, -12, -1, truncation, &cache);
  std::string ss;
  for (int nu : scan) ss += (ss.empty() ? "" : ", ") + std::to_string(nu);
  r.add(suite, "ds-kernel uniqueness", scan == std::vector<int>{-m - 2},
        "highest weights in [-12, -1] hitting " + std::to_string(-m - 1) + ": {" + ss + "}", anchor_ds);
  return r;
}

std::vector<LRepLabel> expected_table64(int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  if (m == 0) return {{GPrimeKind::ds_plus, 2, -1}, {GPrimeKind::trivial, std::nullopt, -1}};
  if (m == 1) return {{GPrimeKind::ds_plus, 3, 0}, {GPrimeKind::limit_ds_minus, std::nullopt, -2}};
  return {{GPrimeKind::ds_plus, m + 2, m - 1}, {GPrimeKind::ds_minus, -m, -m - 1}};
}

Table64 table64(const Sl2Pair& p, int weight, int truncation, KernelCache* cache) {
  require_even(weight);
  const int m = weight / 2;
  Table64 out;
  out.rows = theorem64_table(p, m, truncation, cache);
  const auto expect = expected_table64(m);
  for (std::size_t k = 0; k < out.rows.size(); ++k) {
    const TableRow& row = out.rows[k];
    bool ok = k < expect.size() && row.label == expect[k] && row.matches.size() == 1;
    out.report.add("table64", "row-" + row.spin_part, ok,
                   to_string(row.label) + " from " + join(row.matches) + " (kernel weight " +
                       std::to_string(row.target_weight) + " on " + row.spin_part + ")",
                   "representations of L in the kernel");
  }
  return out;
}

}  // namespace dirac
