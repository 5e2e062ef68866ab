#include <doctest.h>

#include "dirac/spin_module.hpp"
#include "dirac/transitive_triple.hpp"

#include <random>

using namespace dirac;

namespace {

const ExactScalar r2 = ExactScalar::sqrt2();
const ExactScalar I = ExactScalar::i();

SpacePtr space_with(const std::vector<int>& signs) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < signs.size(); ++i) labels.push_back("e" + std::to_string(i));
  return make_space(labels, signs);
}

std::vector<std::vector<int>> sign_patterns() {
  return {{1},        {-1},          {1, 1},          {1, -1},          {-1, -1},          {1, -1, 1},
          {-1, 1, 1}, {1, 1, 1, 1},  {1, -1, -1, 1},  {-1, 1, 1, -1, 1}, {1, 1, -1, -1, 1, -1}};
}

}  // namespace

TEST_CASE("gamma satisfies the Clifford relation for every standard polarization") {
  for (const auto& signs : sign_patterns()) {
    for (int zeta : {1, -1}) {
      SpinModule s(space_with(signs), zeta);
      const int n = static_cast<int>(signs.size());
      CHECK(s.dim() == (Eigen::Index(1) << (n / 2)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Matrix ac = s.generator(i) * s.generator(j) + s.generator(j) * s.generator(i);
          CHECK(solve_scalar_action(ac, i == j ? ExactScalar(signs[static_cast<std::size_t>(i)]) : ExactScalar()));
        }
    }
  }
}

TEST_CASE("gamma is multiplicative on random elements") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-3, 3);
  for (const auto& signs : sign_patterns()) {
    SpacePtr q = space_with(signs);
    if (q->dim() > 4) continue;
    SpinModule s(q);
    auto rand_elem = [&] {
      CliffordElement x(q);
      for (Blade b = 0; b < (Blade(1) << q->dim()); ++b)
        x += CliffordElement::monomial(q, b, ExactScalar(make_rational(num(rng), 1), 0, make_rational(num(rng), 1), 0));
      return x;
    };
    for (int k = 0; k < 4; ++k) {
      auto x = rand_elem(), y = rand_elem();
      CHECK(exactly_equal(s.gamma(x * y), Matrix(s.gamma(x) * s.gamma(y))));
    }
  }
}

TEST_CASE("one-dimensional spaces act by the odd-vector scalar") {
  CHECK(SpinModule(space_with({1})).generator(0)(0, 0) == r2 / ExactScalar(2));
  CHECK(SpinModule(space_with({1}), -1).generator(0)(0, 0) == -r2 / ExactScalar(2));
  CHECK(SpinModule(space_with({-1})).generator(0)(0, 0) == I * r2 / ExactScalar(2));
}

TEST_CASE("wedge and contraction are dually paired") {
  SpinModule s(space_with({1, -1, 1, 1}));
  REQUIRE(s.dim() == 4);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) {
      Matrix ac = s.contract(k) * s.wedge(j) + s.wedge(j) * s.contract(k);
      CHECK(solve_scalar_action(ac, j == k ? ExactScalar(1) : ExactScalar()));
      CHECK(is_zero(Matrix(s.wedge(j) * s.wedge(k) + s.wedge(k) * s.wedge(j))));
    }
  CHECK(s.basis_label(0) == "1");
  CHECK(s.basis_label(3) == "u1^u2");
  CHECK(s.degree(3) == 2);
  Matrix par = s.parity_operator();
  for (int i = 0; i < 4; ++i) CHECK(is_zero(Matrix(par * s.generator(i) + s.generator(i) * par)));
}

TEST_CASE("polarizations are validated") {
  SpacePtr q = space_with({1, 1});
  Polarization p = standard_polarization(*q);
  CHECK_NOTHROW(p.validate(*q));
  Polarization bad = p;
  bad.minus[0] = bad.plus[0];
  CHECK_THROWS_AS(bad.validate(*q), std::invalid_argument);
  Polarization scaled = p;
  scaled.minus[0] = ExactScalar(2) * scaled.minus[0];
  CHECK_THROWS_AS(scaled.validate(*q), std::invalid_argument);
  Polarization extra = p;
  Vector odd(2);
  odd << ExactScalar(1), ExactScalar(0);
  extra.odd = odd;
  CHECK_THROWS_AS(extra.validate(*q), std::invalid_argument);
}

TEST_CASE("spin split of the triple intertwines the graded action") {
  TransitiveTriple t = build_sl2_triple();
  SpinModule a(t.ls().space), b(t.ql_prime().space), joint(t.ql().space);
  SpinSplit split(a, b, joint, {1, 2}, {0});
  for (Blade x = 0; x < 4; ++x)
    for (Blade y = 0; y < 2; ++y) {
      auto c = CliffordElement::monomial(a.space(), x);
      auto d = CliffordElement::monomial(b.space(), y);
      Matrix lhs = split.mult_iso() * split.graded_tensor_action(c, d);
      Matrix rhs = joint.gamma(split.embed_a(c) * split.embed_b(d)) * split.mult_iso();
      CHECK(exactly_equal(lhs, rhs));
    }
  CHECK(rank(split.mult_iso()) == 2);
}

TEST_CASE("graded action carries the Koszul sign") {
  // gamma(T1) = (wedge + contract)/r2 on {1, u}; Z acts by i/r2 on S_{q_l'}.
  // (T1 (x) Z)(u (x) 1) = -(1/r2)(i/r2) 1 (x) 1 = -(i/2) 1 (x) 1.
  TransitiveTriple t = build_sl2_triple();
  SpinModule a(t.ls().space), b(t.ql_prime().space), joint(t.ql().space);
  SpinSplit split(a, b, joint, {1, 2}, {0});
  Matrix m = split.graded_tensor_action(CliffordElement::generator(a.space(), 0),
                                        CliffordElement::generator(b.space(), 0));
  CHECK(m(0, 1) == -I / ExactScalar(2));
  CHECK(m(1, 0) == I / ExactScalar(2));
  CHECK(m(0, 0).is_zero());
  CHECK(m(1, 1).is_zero());
}

TEST_CASE("spin split needs an even first factor") {
  TransitiveTriple t = build_sl2_triple();
  SpinModule a(t.ls().space), b(t.ql_prime().space), joint(t.ql().space);
  CHECK_THROWS_WITH_AS(SpinSplit(b, a, joint, {0}, {1, 2}),
                       "first tensor factor must be even-dimensional for the spin decomposition",
                       std::invalid_argument);
  CHECK_THROWS_AS(SpinSplit(a, b, joint, {0, 1}, {0}), std::invalid_argument);
}
