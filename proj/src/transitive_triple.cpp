#include "dirac/transitive_triple.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dirac {

namespace {

using Poly = std::vector<ExactScalar>;  // coefficients, constant term first

Poly char_poly(const Matrix& a) {
  // Faddeev-LeVerrier
  const Eigen::Index n = a.rows();
  Poly c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + scaled_identity(n, c[static_cast<std::size_t>(n - k + 1)]);
    c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / ExactScalar(static_cast<long>(k));
  }
  return c;
}

ExactScalar eval(const Poly& p, const ExactScalar& x) {
  ExactScalar v;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

Poly deflate(const Poly& p, const ExactScalar& root) {
  // synthetic division by (t - root)
  Poly q(p.size() - 1);
  ExactScalar carry;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    carry = p[k + 1] + carry * root;
    q[k] = carry;
  }
  return q;
}

std::vector<mpz_class> small_divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> out;
  if (v == 0 || v > 1000000) return out;
  for (mpz_class d = 1; d <= v; ++d)
    if (v % d == 0) out.push_back(d);
  return out;
}

std::vector<ExactScalar> candidate_roots(const Poly& p) {
  std::vector<ExactScalar> out = {ExactScalar(0), ExactScalar(1), ExactScalar(-1), ExactScalar::rational(1, 2),
                                  ExactScalar::rational(-1, 2)};
  bool rational = std::all_of(p.begin(), p.end(), [](const ExactScalar& c) { return c.is_rational(); });
  if (!rational) return out;
  mpz_class lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.a().get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p) {
    Rational scaled = c.a() * Rational(lcm);
    ints.push_back(scaled.get_num());
  }
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low >= ints.size()) return out;
  for (const auto& num : small_divisors(ints[low]))
    for (const auto& den : small_divisors(ints.back())) {
      Rational r(num, den);
      r.canonicalize();
      out.emplace_back(r);
      out.emplace_back(Rational(-r));
    }
  return out;
}

std::vector<ExactScalar> exact_roots(Poly p) {
  std::vector<ExactScalar> roots;
  auto candidates = candidate_roots(p);
  bool found = true;
  while (p.size() > 3 && found) {
    found = false;
    for (const auto& r : candidates) {
      if (eval(p, r).is_zero()) {
        roots.push_back(r);
        p = deflate(p, r);
        found = true;
        break;
      }
    }
  }
  if (p.size() == 3) {
    const ExactScalar a = p[2], b = p[1], c = p[0];
    auto disc = exact_sqrt(b * b - ExactScalar(4) * a * c);
    if (!disc) throw std::domain_error("eigenvalue outside the scalar field");
    roots.push_back((-b + *disc) / (ExactScalar(2) * a));
    roots.push_back((-b - *disc) / (ExactScalar(2) * a));
  } else if (p.size() == 2) {
    roots.push_back(-p[0] / p[1]);
  } else if (p.size() > 3) {
    throw std::domain_error("eigenvalue outside the scalar field");
  }
  return roots;
}

bool real_greater(const ExactScalar& x, const ExactScalar& y) { return (x - y).real_sign() > 0; }

std::vector<Vector> intersect(const std::vector<Vector>& a, const std::vector<Vector>& b, Eigen::Index n) {
  const Eigen::Index na = static_cast<Eigen::Index>(a.size()), nb = static_cast<Eigen::Index>(b.size());
  if (na == 0 || nb == 0) return {};
  Matrix m(n, na + nb);
  m.leftCols(na) = columns(a, n);
  m.rightCols(nb) = -columns(b, n);
  std::vector<Vector> out;
  Matrix am = columns(a, n);
  for (const auto& c : nullspace(m)) {
    Vector v = am * c.head(na);
    if (!is_zero(v)) out.push_back(v);
  }
  return out;
}

std::vector<Vector> eigenspace(const Matrix& m, int value) {
  return nullspace(Matrix(m - scaled_identity(m.rows(), ExactScalar(value))));
}

Frame make_ql(const TripleData& d) {
  std::vector<std::string> labels = d.ql_prime.space->labels;
  std::vector<int> signs = d.ql_prime.space->signs;
  std::vector<Vector> vectors = d.ql_prime.vectors;
  for (int i = 0; i < d.ls.dim(); ++i) {
    labels.push_back(d.ls.space->labels[i]);
    signs.push_back(d.ls.space->signs[i]);
    vectors.push_back(d.ls.vectors[i]);
  }
  return Frame(d.g, make_space(labels, signs), vectors);
}

std::string bool_details(bool ok, const std::string& what) { return ok ? what : "violated: " + what; }

}  // namespace

std::vector<NuSpace> nu_decompose(const LieAlgebra& g, const Matrix& sigma, const std::vector<Vector>& l_basis) {
  const Eigen::Index n = static_cast<Eigen::Index>(l_basis.size());
  Matrix gram(n, n), b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      gram(i, j) = g.pair(l_basis[i], l_basis[j]);
      b(i, j) = g.pair(Vector(sigma * l_basis[i]), l_basis[j]);
    }
  Matrix a = inverse(gram) * b;
  std::vector<ExactScalar> roots = exact_roots(char_poly(a));
  std::vector<ExactScalar> distinct;
  for (const auto& r : roots) {
    if (!r.is_real()) throw std::domain_error("non-real eigenvalue of the sigma pairing");
    if (std::none_of(distinct.begin(), distinct.end(), [&](const ExactScalar& x) { return x == r; }))
      distinct.push_back(r);
  }
  std::sort(distinct.begin(), distinct.end(), real_greater);
  Matrix lb = columns(l_basis, g.dim());
  std::vector<NuSpace> out;
  Eigen::Index total = 0;
  for (const auto& nu : distinct) {
    if (real_greater(nu, ExactScalar(1)) || real_greater(ExactScalar(-1), nu)) {
      throw std::domain_error("eigenvalue " + nu.to_string() + " outside [-1, 1]");
    }
    NuSpace s{nu, {}};
    for (const auto& c : nullspace(Matrix(a - scaled_identity(n, nu)))) s.basis.push_back(lb * c);
    total += static_cast<Eigen::Index>(s.basis.size());
    out.push_back(std::move(s));
  }
  if (total != n) throw std::domain_error("sigma pairing is not diagonalizable on l");
  return out;
}

TransitiveTriple::TransitiveTriple(TripleData data)
    : data_(std::move(data)),
      ql_(make_ql(data_)),
      q_(ql_),
      hs_(data_.ls) {
  const LieAlgebra& g = data_.g;
  const Eigen::Index n = g.dim();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix& s = data_.sigma;
  const Matrix& t = data_.theta;
  if (s.rows() != n || s.cols() != n || t.rows() != n || t.cols() != n) {
    throw std::invalid_argument("involutions must be dim x dim");
  }
  auto require = [this](const std::string& name, bool ok, const std::string& what) {
    checks_.push_back({name, ok, bool_details(ok, what)});
    if (!ok) throw std::invalid_argument("triple condition failed: " + name + " (" + what + ")");
  };

  require("sigma_involution", exactly_equal(Matrix(s * s), id), "sigma^2 = 1");
  require("theta_involution", exactly_equal(Matrix(t * t), id), "theta^2 = 1");
  require("involutions_commute", exactly_equal(Matrix(s * t), Matrix(t * s)), "sigma theta = theta sigma");
  auto is_automorphism = [&g, n](const Matrix& m) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        Vector lhs = m * g.bracket_of_basis(i, j);
        Vector rhs = g.bracket(m.col(i), m.col(j));
        if (!exactly_equal(lhs, rhs)) return false;
      }
    return exactly_equal(Matrix(m.transpose() * g.form() * m), g.form());
  };
  require("sigma_automorphism", is_automorphism(s), "sigma preserves bracket and form");
  require("theta_automorphism", is_automorphism(t), "theta preserves bracket and form");

  const auto h_space = eigenspace(s, 1);
  const auto q_space = eigenspace(s, -1);
  const auto k_space = eigenspace(t, 1);
  const auto s_space = eigenspace(t, -1);
  bool h_fixed = std::all_of(data_.h_basis.begin(), data_.h_basis.end(),
                             [&](const Vector& x) { return exactly_equal(Vector(s * x), x); });
  Matrix hb = columns(data_.h_basis, n);
  require("h_is_fixed_space",
          h_fixed && rank(hb) == static_cast<Eigen::Index>(h_space.size()) &&
              static_cast<Eigen::Index>(data_.h_basis.size()) == rank(hb),
          "h_basis spans the +1 eigenspace of sigma");
  bool q_perp = true;
  for (const auto& x : data_.h_basis)
    for (const auto& y : q_space) q_perp = q_perp && g.pair(x, y).is_zero();
  require("q_orthogonal_to_h", q_perp, "<h, q> = 0");

  auto bracket_inside = [&g, n](const std::vector<Vector>& a, const std::vector<Vector>& b,
                                const std::vector<Vector>& target) {
    Matrix tm = columns(target, n);
    for (const auto& x : a)
      for (const auto& y : b) {
        Vector br = g.bracket(x, y);
        if (target.empty() ? !is_zero(br) : !solve_coordinates(tm, br)) return false;
      }
    return true;
  };
  require("cartan_k_s", bracket_inside(k_space, s_space, s_space), "[k, s] in s");
  require("cartan_s_s", bracket_inside(s_space, s_space, k_space), "[s, s] in k");
  require("symmetric_h_q", bracket_inside(h_space, q_space, q_space), "[h, q] in q");
  require("symmetric_q_q", bracket_inside(q_space, q_space, h_space), "[q, q] in h");

  require("l_subalgebra", is_subalgebra(g, data_.l_basis), "l closed under the bracket");
  std::vector<Vector> both = data_.h_basis;
  both.insert(both.end(), data_.l_basis.begin(), data_.l_basis.end());
  require("g_equals_h_plus_l", rank(columns(both, n)) == n, "g = h + l");

  const auto lh = intersect(data_.h_basis, data_.l_basis, n);
  bool lh_ok = static_cast<Eigen::Index>(data_.lh_basis.size()) == static_cast<Eigen::Index>(lh.size()) &&
               (lh.empty() || rank(columns(data_.lh_basis, n)) == static_cast<Eigen::Index>(lh.size()));
  for (const auto& x : data_.lh_basis) {
    lh_ok = lh_ok && exactly_equal(Vector(s * x), x) &&
            solve_coordinates(columns(data_.l_basis, n), x).has_value();
  }
  require("lh_basis", lh_ok, "lh_basis is a basis of l cap h");

  nu_spaces_ = nu_decompose(g, s, data_.l_basis);
  bool orth = true;
  for (std::size_t a = 0; a < nu_spaces_.size(); ++a)
    for (std::size_t b = a + 1; b < nu_spaces_.size(); ++b)
      for (const auto& x : nu_spaces_[a].basis)
        for (const auto& y : nu_spaces_[b].basis) orth = orth && g.pair(x, y).is_zero();
  require("nu_spaces_orthogonal", orth, "<l(nu), l(nu')> = 0 for nu != nu'");
  bool l1 = false;
  for (const auto& sp : nu_spaces_)
    if (sp.nu == ExactScalar(1)) l1 = static_cast<std::size_t>(sp.basis.size()) == lh.size();
  require("l_one_is_lh", lh.empty() || l1, "l(1) = l cap h");

  bool frames_in_l = true;
  for (const auto& x : ql_.vectors) frames_in_l = frames_in_l && solve_coordinates(columns(data_.l_basis, n), x);
  require("frames_in_l", frames_in_l, "Z_j and T_k lie in l");
  bool perp_lh = true;
  for (const auto& x : ql_.vectors)
    for (const auto& y : data_.lh_basis) perp_lh = perp_lh && g.pair(x, y).is_zero();
  require("ql_orthogonal_to_lh", perp_lh, "q_l is orthogonal to l cap h");
  require("ql_dimension", static_cast<Eigen::Index>(ql_.dim() + data_.lh_basis.size()) ==
                              static_cast<Eigen::Index>(data_.l_basis.size()),
          "l = (l cap h) + q_l");

  bool basis_eq = true;
  for (const auto& x : ql_.vectors) basis_eq = basis_eq && is_zero(g.bracket(x, Vector(s * x)));
  require("commuting_basis", basis_eq, "[Z_j, sigma Z_j] = 0 and [T_k, sigma T_k] = 0");

  bool lambda = std::all_of(data_.ql_prime.vectors.begin(), data_.ql_prime.vectors.end(),
                            [this](const Vector& x) { return nu_of(x) == ExactScalar(-1); });
  bool mu = std::all_of(data_.ls.vectors.begin(), data_.ls.vectors.end(),
                        [this](const Vector& x) { return nu_of(x) == ExactScalar(0); });
  bool zk = std::all_of(data_.ql_prime.vectors.begin(), data_.ql_prime.vectors.end(),
                        [&](const Vector& x) { return exactly_equal(Vector(t * x), x); });
  bool ts = std::all_of(data_.ls.vectors.begin(), data_.ls.vectors.end(),
                        [&](const Vector& x) { return exactly_equal(Vector(t * x), Vector(-x)); });
  require("type_s_lambda", lambda, "nu = -1 on every Z_j");
  require("type_s_mu", mu, "nu = 0 on every T_k");
  require("ql_prime_in_k", zk, "Z_j in l cap k");
  require("ls_in_s", ts, "T_k in l cap s");
  require("d_values", d_nu(ExactScalar(-1)) == ExactScalar(1) && d_nu(ExactScalar(0)) == ExactScalar::sqrt2(),
          "d_lambda = 1, d_mu = r2");

  std::vector<Vector> qv, hv;
  for (const auto& x : ql_.vectors) qv.push_back(rho(-1, x));
  q_ = Frame(g, make_space(ql_.space->labels, ql_.space->signs), qv);
  std::vector<std::string> hs_labels;
  for (int k = 0; k < data_.ls.dim(); ++k) {
    hv.push_back(rho(1, data_.ls.vectors[k]));
    hs_labels.push_back("p" + data_.ls.space->labels[k]);
  }
  hs_ = Frame(g, make_space(hs_labels, data_.ls.space->signs), hv);
  bool in_q = true;
  for (const auto& x : qv) in_q = in_q && exactly_equal(Vector(s * x), Vector(-x));
  require("rho_minus_into_q", in_q, "rho-(q_l) in q");
  bool in_h = true;
  for (const auto& x : hv) in_h = in_h && exactly_equal(Vector(s * x), x);
  require("rho_plus_into_h", in_h, "rho+(l cap s) in h");

  hk_basis_ = intersect(data_.h_basis, k_space, n);
  lk_basis_ = intersect(data_.l_basis, k_space, n);
  h_algebra_ = subalgebra(g, data_.h_basis, data_.h_labels);
}

Vector TransitiveTriple::h_coordinates(const Vector& x) const {
  auto c = solve_coordinates(columns(data_.h_basis, g().dim()), x);
  if (!c) throw std::invalid_argument("vector does not lie in h");
  return *c;
}

ExactScalar TransitiveTriple::nu_of(const Vector& x) const {
  const LieAlgebra& g = data_.g;
  if (is_zero(x)) throw std::invalid_argument("zero vector has no nu");
  for (const auto& sp : nu_spaces_) {
    if (sp.basis.empty()) continue;
    if (solve_coordinates(columns(sp.basis, g.dim()), x)) return sp.nu;
  }
  throw std::invalid_argument("vector is not in a single nu-eigenspace of l");
}

ExactScalar TransitiveTriple::d_nu(const ExactScalar& nu) const {
  if (nu == ExactScalar(1)) throw std::domain_error("d_nu is undefined for nu = 1");
  auto d = exact_sqrt(ExactScalar(2) / (ExactScalar(1) - nu));
  if (!d) throw std::domain_error("d_nu outside the scalar field");
  return *d;
}

Vector TransitiveTriple::rho(int sign, const Vector& x) const {
  if (sign != 1 && sign != -1) throw std::invalid_argument("rho sign must be +1 or -1");
  const ExactScalar d = d_nu(nu_of(x));
  Vector sx = data_.sigma * x;
  return (d / 2) * (sign > 0 ? Vector(x + sx) : Vector(x - sx));
}

Vector sl2_h_tilde() {
  Vector v = Vector::Zero(3);
  v(0) = ExactScalar::i() / ExactScalar::sqrt2();
  return v;
}

Vector sl2_e_tilde() {
  Vector v = Vector::Zero(3);
  v(1) = v(2) = ExactScalar::sqrt2().inverse();
  return v;
}

Vector sl2_f_tilde() {
  Vector v = Vector::Zero(3);
  v(1) = ExactScalar::i() / ExactScalar::sqrt2();
  v(2) = -v(1);
  return v;
}

TripleData sl2_triple_data() {
  LieAlgebra g = direct_sum(sl2(), sl2(), "1", "2");
  Matrix sigma = Matrix::Zero(6, 6), theta = Matrix::Zero(6, 6);
  for (int i = 0; i < 3; ++i) {
    sigma(i, i + 3) = 1;
    sigma(i + 3, i) = 1;
    theta(i, i) = theta(i + 3, i + 3) = i == 0 ? 1 : -1;
  }
  auto pair = [](const Vector& a, const Vector& b) {
    Vector v(6);
    v << a, b;
    return v;
  };
  const Vector zero = Vector::Zero(3);
  const Vector hv = sl2().basis_vector(0), ev = sl2().basis_vector(1), fv = sl2().basis_vector(2);
  const ExactScalar inv_r2 = ExactScalar::sqrt2().inverse();

  std::vector<Vector> h_basis = {pair(hv, hv), pair(ev, ev), pair(fv, fv)};
  std::vector<Vector> l_basis = {pair(hv, zero), pair(ev, zero), pair(fv, zero), pair(zero, hv)};
  Vector ht = sl2_h_tilde();
  Vector w = inv_r2 * pair(ht, ht);
  Vector z = inv_r2 * pair(ht, Vector(-ht));
  Frame qlp(g, make_space({"Z"}, {-1}), {z});
  Frame ls(g, make_space({"T1", "T2"}, {1, 1}), {pair(sl2_e_tilde(), zero), pair(sl2_f_tilde(), zero)});
  return TripleData{std::move(g),
                    std::move(sigma),
                    std::move(theta),
                    std::move(h_basis),
                    std::move(l_basis),
                    {"Dh", "De", "Df"},
                    {"h1", "e1", "f1", "h2"},
                    {w},
                    {"W"},
                    std::move(qlp),
                    std::move(ls)};
}

TransitiveTriple build_sl2_triple() { return TransitiveTriple(sl2_triple_data()); }

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<ExactScalar> parse_list(const std::string& s) {
  std::vector<ExactScalar> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(trim(item)));
  return out;
}

Vector to_vector(const std::vector<ExactScalar>& xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

Matrix to_matrix(const std::vector<ExactScalar>& xs, Eigen::Index n, const std::string& what) {
  if (static_cast<Eigen::Index>(xs.size()) != n * n) throw std::invalid_argument(what + " needs dim^2 entries");
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = xs[static_cast<std::size_t>(i * n + j)];
  return m;
}

std::string join_row(const Vector& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v(i).to_string();
  }
  return s;
}

}  // namespace

TripleData parse_triple(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<ExactScalar> form_entries, sigma_entries, theta_entries;
  std::vector<std::tuple<std::string, std::string, std::vector<ExactScalar>>> brackets;
  struct Named {
    std::string label;
    int sign;
    std::vector<ExactScalar> coords;
  };
  std::map<std::string, std::vector<Named>> vectors;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected '='");
    std::stringstream key(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    std::vector<std::string> words;
    for (std::string w; key >> w;) words.push_back(w);
    if (words.empty()) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing key");
    const std::string& k = words[0];
    try {
      if (k == "labels" && words.size() == 1) {
        std::stringstream ss(value);
        for (std::string item; std::getline(ss, item, ',');) labels.push_back(trim(item));
      } else if (k == "form" && words.size() == 1) {
        form_entries = parse_list(value);
      } else if (k == "sigma" && words.size() == 1) {
        sigma_entries = parse_list(value);
      } else if (k == "theta" && words.size() == 1) {
        theta_entries = parse_list(value);
      } else if (k == "bracket" && words.size() == 3) {
        brackets.emplace_back(words[1], words[2], parse_list(value));
      } else if ((k == "h" || k == "l" || k == "lh") && words.size() == 2) {
        vectors[k].push_back({words[1], 1, parse_list(value)});
      } else if ((k == "qlprime" || k == "ls") && words.size() == 3) {
        vectors[k].push_back({words[1], std::stoi(words[2]), parse_list(value)});
      } else {
        throw std::invalid_argument("unknown key");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }

  const Eigen::Index n = static_cast<Eigen::Index>(labels.size());
  if (n == 0) throw std::invalid_argument("triple description without labels");
  auto index = [&labels](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw std::invalid_argument("unknown basis label " + l);
    return static_cast<Eigen::Index>(it - labels.begin());
  };
  std::vector<Vector> br(static_cast<std::size_t>(n * n), Vector::Zero(n));
  for (const auto& [x, y, coords] : brackets) {
    Vector v = to_vector(coords);
    if (v.size() != n) throw std::invalid_argument("bracket coordinates of wrong length");
    br[static_cast<std::size_t>(index(x) * n + index(y))] = v;
    br[static_cast<std::size_t>(index(y) * n + index(x))] = -v;
  }
  LieAlgebra g(labels, std::move(br), to_matrix(form_entries, n, "form"));

  auto collect = [&](const std::string& key, std::vector<Vector>& vs, std::vector<std::string>& ls,
                     std::vector<int>* signs) {
    for (const auto& nv : vectors[key]) {
      Vector v = to_vector(nv.coords);
      if (v.size() != n) throw std::invalid_argument(key + " vector " + nv.label + " has wrong length");
      vs.push_back(v);
      ls.push_back(nv.label);
      if (signs) signs->push_back(nv.sign);
    }
  };
  std::vector<Vector> hb, lb, lhb, zb, tb;
  std::vector<std::string> hl, ll, lhl, zl, tl;
  std::vector<int> zs, ts;
  collect("h", hb, hl, nullptr);
  collect("l", lb, ll, nullptr);
  collect("lh", lhb, lhl, nullptr);
  collect("qlprime", zb, zl, &zs);
  collect("ls", tb, tl, &ts);
  Frame qlp(g, make_space(zl, zs), zb);
  Frame ls(g, make_space(tl, ts), tb);
  return TripleData{g,
                    to_matrix(sigma_entries, n, "sigma"),
                    to_matrix(theta_entries, n, "theta"),
                    std::move(hb),
                    std::move(lb),
                    std::move(hl),
                    std::move(ll),
                    std::move(lhb),
                    std::move(lhl),
                    std::move(qlp),
                    std::move(ls)};
}

TripleData load_triple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_triple(in);
}

void write_triple(std::ostream& out, const TripleData& t) {
  const LieAlgebra& g = t.g;
  const Eigen::Index n = g.dim();
  out << "labels = ";
  for (Eigen::Index i = 0; i < n; ++i) out << (i ? ", " : "") << g.labels()[i];
  out << "\nform = " << join_row(g.form().reshaped<Eigen::RowMajor>()) << "\n";
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Vector& v = g.bracket_of_basis(i, j);
      if (!is_zero(v)) out << "bracket " << g.labels()[i] << " " << g.labels()[j] << " = " << join_row(v) << "\n";
    }
  out << "sigma = " << join_row(t.sigma.reshaped<Eigen::RowMajor>()) << "\n";
  out << "theta = " << join_row(t.theta.reshaped<Eigen::RowMajor>()) << "\n";
  for (std::size_t k = 0; k < t.h_basis.size(); ++k) out << "h " << t.h_labels[k] << " = " << join_row(t.h_basis[k]) << "\n";
  for (std::size_t k = 0; k < t.l_basis.size(); ++k) out << "l " << t.l_labels[k] << " = " << join_row(t.l_basis[k]) << "\n";
  for (std::size_t k = 0; k < t.lh_basis.size(); ++k)
    out << "lh " << t.lh_labels[k] << " = " << join_row(t.lh_basis[k]) << "\n";
  for (int k = 0; k < t.ql_prime.dim(); ++k)
    out << "qlprime " << t.ql_prime.space->labels[k] << " " << t.ql_prime.space->signs[k] << " = "
        << join_row(t.ql_prime.vectors[k]) << "\n";
  for (int k = 0; k < t.ls.dim(); ++k)
    out << "ls " << t.ls.space->labels[k] << " " << t.ls.space->signs[k] << " = " << join_row(t.ls.vectors[k])
        << "\n";
}

std::vector<IdentityCheck> rho_bracket_identity(const TransitiveTriple& t) {
  const LieAlgebra& g = t.g();
  std::vector<IdentityCheck> out;
  const Frame& zs = t.ql_prime();
  const Frame& ts = t.ls();
  for (int k = 0; k < ts.dim(); ++k)
    for (int r = 0; r < zs.dim(); ++r)
      for (int i = 0; i < ts.dim(); ++i) {
        const Vector &tk = ts.vectors[k], &zr = zs.vectors[r], &ti = ts.vectors[i];
        ExactScalar lhs = g.pair(g.bracket(t.rho(1, tk), t.rho(-1, zr)), t.rho(-1, ti));
        ExactScalar rhs = g.pair(g.bracket(tk, zr), ti);
        out.push_back({ts.space->labels[k] + "," + zs.space->labels[r] + "," + ts.space->labels[i], lhs, rhs});
      }
  return out;
}

std::vector<IdentityCheck> omega_identity(const TransitiveTriple& t) {
  const LieAlgebra& g = t.g();
  const Frame& q = t.ql();
  std::vector<IdentityCheck> out;
  auto omega = [&g](const Vector& x, const Vector& y, const Vector& z) { return g.pair(g.bracket(x, y), z); };
  for (int a = 0; a < q.dim(); ++a)
    for (int b = 0; b < q.dim(); ++b)
      for (int c = 0; c < q.dim(); ++c) {
        const Vector &x = q.vectors[a], &y = q.vectors[b], &z = q.vectors[c];
        ExactScalar nx = t.nu_of(x), ny = t.nu_of(y), nz = t.nu_of(z);
        ExactScalar lhs = omega(t.rho(1, x), t.rho(-1, y), t.rho(-1, z));
        ExactScalar rhs = ExactScalar::rational(1, 4) * t.d_nu(nx) * t.d_nu(ny) * t.d_nu(nz) *
                          (ExactScalar(1) + nx - ny - nz) * omega(x, y, z);
        out.push_back({q.space->labels[a] + "," + q.space->labels[b] + "," + q.space->labels[c], lhs, rhs});
      }
  return out;
}

}  // namespace dirac
