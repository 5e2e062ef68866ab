#include <doctest.h>

#include "dirac/clifford.hpp"
#include "dirac/transitive_triple.hpp"

#include <random>

using namespace dirac;

namespace {

// Independent oracle: reduce a word in the generators by adjacent swaps
// (e_j e_i = -e_i e_j for i != j) and e_i e_i = eps_i / 2.
std::pair<ExactScalar, Blade> reduce_word(const QuadraticSpace& q, std::vector<int> w) {
  ExactScalar c(1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) {
        std::swap(w[k], w[k + 1]);
        c = -c;
        changed = true;
      } else if (w[k] == w[k + 1]) {
        c *= ExactScalar::rational(q.signs[static_cast<std::size_t>(w[k])], 2);
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  Blade b = 0;
  for (int i : w) b |= Blade(1) << i;
  return {c, b};
}

std::vector<int> word_of(Blade b) {
  std::vector<int> w;
  for (int i = 0; i < 32; ++i)
    if (b >> i & 1) w.push_back(i);
  return w;
}

CliffordElement random_element(const SpacePtr& q, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  CliffordElement x(q);
  for (Blade b = 0; b < (Blade(1) << q->dim()); ++b)
    x += CliffordElement::monomial(q, b, ExactScalar(make_rational(num(rng), 1), make_rational(num(rng), 2), 0, 0));
  return x;
}

SpacePtr mixed_space(int n) {
  std::vector<std::string> labels;
  std::vector<int> signs;
  for (int i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i));
    signs.push_back(i % 2 ? -1 : 1);
  }
  return make_space(labels, signs);
}

}  // namespace

TEST_CASE("blade products agree with word rewriting") {
  for (int n = 1; n <= 5; ++n) {
    SpacePtr q = mixed_space(n);
    for (Blade x = 0; x < (Blade(1) << n); ++x)
      for (Blade y = 0; y < (Blade(1) << n); ++y) {
        auto w = word_of(x);
        auto wy = word_of(y);
        w.insert(w.end(), wy.begin(), wy.end());
        auto [c, b] = reduce_word(*q, w);
        CHECK(b == (x ^ y));
        CHECK(blade_product_coefficient(*q, x, y) == c);
        CliffordElement p = CliffordElement::monomial(q, x) * CliffordElement::monomial(q, y);
        CHECK(p == CliffordElement::monomial(q, b, c));
      }
  }
}

TEST_CASE("generators satisfy XY + YX = <X, Y>") {
  for (int n = 1; n <= 6; ++n) {
    SpacePtr q = mixed_space(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto a = CliffordElement::generator(q, i), b = CliffordElement::generator(q, j);
        ExactScalar expect = i == j ? ExactScalar(q->signs[static_cast<std::size_t>(i)]) : ExactScalar();
        CHECK(a * b + b * a == CliffordElement(q, expect));
      }
  }
}

TEST_CASE("vectors square to half their norm") {
  SpacePtr q = mixed_space(3);
  Vector v(3);
  v << ExactScalar(2), ExactScalar::sqrt2(), ExactScalar::rational(1, 3);
  CliffordElement x = CliffordElement::from_vector(q, v);
  CHECK(x * x == CliffordElement(q, q->pair(v, v) / ExactScalar(2)));
}

TEST_CASE("random elements associate and distribute") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 4; ++n) {
    SpacePtr q = mixed_space(n);
    for (int k = 0; k < 5; ++k) {
      auto a = random_element(q, rng), b = random_element(q, rng), c = random_element(q, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("normal form order and rendering") {
  SpacePtr q = make_space({"Z", "T1", "T2"}, {-1, 1, 1});
  CHECK(BladeOrder{}(0b100, 0b011));
  CHECK(BladeOrder{}(0b001, 0b010));
  CHECK(BladeOrder{}(0b011, 0b101));
  CliffordElement c = -CliffordElement::monomial(q, 0b111);
  CHECK(c.to_string() == "-1*Z*T1*T2");
  CliffordElement x = CliffordElement::generator(q, 2) * CliffordElement::generator(q, 1);
  CHECK(x.to_string() == "-1*T1*T2");
  CHECK(CliffordElement(q).to_string() == "0");
  CHECK(c.parity() == 1);
  CHECK((c + CliffordElement(q, 1)).parity() == std::nullopt);
  CHECK((c + CliffordElement(q, 1)).even_part() == CliffordElement(q, 1));
}

TEST_CASE("elements of different algebras do not mix") {
  auto a = CliffordElement::generator(mixed_space(2), 0);
  auto b = CliffordElement::generator(mixed_space(3), 0);
  CHECK_THROWS_WITH_AS(a * b, "incompatible Clifford algebras", std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(CliffordElement::generator(mixed_space(2), 2), std::out_of_range);
  CHECK_THROWS_AS(make_space({"a"}, {2}), std::invalid_argument);
}

TEST_CASE("chevalley map and embeddings") {
  SpacePtr q = mixed_space(3);
  auto e0 = CliffordElement::generator(q, 0), e1 = CliffordElement::generator(q, 1);
  CHECK(chevalley_j(e0, e1) == e0 * e1);
  CHECK(chevalley_j(e0, e0) == CliffordElement(q));

  SpacePtr big = make_space({"a", "b", "c", "d"}, {1, 1, -1, 1});
  CliffordElement x = e0 * e1 + ExactScalar(3) * CliffordElement::generator(q, 2);
  CliffordElement y = embed(x, big, {0, 2, 1});
  CHECK(y == CliffordElement::generator(big, 0) * CliffordElement::generator(big, 2) +
                 ExactScalar(3) * CliffordElement::generator(big, 1));
  CHECK_THROWS_AS(embed(x, big, {0, 1, 2}), std::invalid_argument);
  CHECK(reinterpret(x, mixed_space(3)) == x);
}

TEST_CASE("frames validate orthonormality and give coordinates") {
  LieAlgebra g = sl2();
  SpacePtr s = make_space({"et", "ft"}, {1, 1});
  Frame f(g, s, {sl2_e_tilde(), sl2_f_tilde()});
  auto c = f.coordinates(g, g.basis_vector("e"));
  REQUIRE(c);
  Vector back = (*c)(0) * sl2_e_tilde() + (*c)(1) * sl2_f_tilde();
  CHECK(exactly_equal(back, g.basis_vector("e")));
  CHECK_FALSE(f.coordinates(g, g.basis_vector("h")));
  CHECK_THROWS_AS(f.clifford_vector(g, g.basis_vector("h")), std::invalid_argument);
  CHECK_THROWS_AS(Frame(g, s, {g.basis_vector("e"), g.basis_vector("f")}), std::invalid_argument);
}

TEST_CASE("alpha realizes the adjoint action on sl2") {
  LieAlgebra g = sl2();
  Frame f(g, make_space({"et", "ft"}, {1, 1}), {sl2_e_tilde(), sl2_f_tilde()});
  Vector h = g.basis_vector("h");
  CliffordElement a = alpha(g, f, h);
  for (int j = 0; j < 2; ++j) {
    CliffordElement lhs = clifford_commutator(a, CliffordElement::generator(f.space, j));
    CHECK(lhs == f.clifford_vector(g, g.bracket(h, f.vectors[static_cast<std::size_t>(j)])));
  }
  // two-dimensional frame with positive signs: alpha(h) = -<[h, et], ft> et ft
  ExactScalar coef = -g.pair(g.bracket(h, sl2_e_tilde()), sl2_f_tilde());
  CHECK(a == CliffordElement::monomial(f.space, 0b11, coef));
  CHECK_THROWS_AS(alpha(g, f, g.basis_vector("e")), std::invalid_argument);
}

TEST_CASE("cubic element of the triple complement q_l") {
  TransitiveTriple t = build_sl2_triple();
  const Frame& ql = t.ql();
  const auto& v = ql.vectors;
  ExactScalar eps(1);
  for (int e : ql.space->signs) eps *= ExactScalar(e);
  ExactScalar coef = eps * t.g().pair(t.g().bracket(v[0], v[1]), v[2]);
  CliffordElement c = cubic_element(t.g(), ql);
  CHECK(c == CliffordElement::monomial(ql.space, 0b111, coef));
  CHECK(c.to_string() == "-1*Z*T1*T2");
  // symmetric pairs have no cubic term
  LieAlgebra g = sl2();
  Frame s(g, make_space({"et", "ft"}, {1, 1}), {sl2_e_tilde(), sl2_f_tilde()});
  CHECK(cubic_element(g, s).is_zero());
}
