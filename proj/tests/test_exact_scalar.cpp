#include <doctest.h>

#include "dirac/exact_scalar.hpp"
#include "dirac/linalg.hpp"

#include <random>

using namespace dirac;

namespace {

ExactScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
          make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

const ExactScalar r2 = ExactScalar::sqrt2();
const ExactScalar I = ExactScalar::i();

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("products of the standard constants") {
  ExactScalar inv_r2 = r2.inverse();
  CHECK(inv_r2 * inv_r2 == ExactScalar::rational(1, 2));
  CHECK((I * inv_r2) * (I * inv_r2) == ExactScalar::rational(-1, 2));
  // 2 * (i/2) * (i/r2) = i^2 / r2 = -1/r2
  ExactScalar p = ExactScalar(2) * (I / 2) * (I / r2);
  CHECK(p == -inv_r2);
  CHECK(p == ExactScalar(0, make_rational(-1, 2), 0, 0));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20240601);
  for (int n = 0; n < 200; ++n) {
    ExactScalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == ExactScalar(1));
  }
}

TEST_CASE("conjugations") {
  ExactScalar x(1, 2, 3, 4);
  CHECK(x.conj() == ExactScalar(1, 2, -3, -4));
  CHECK(x.sqrt2_conj() == ExactScalar(1, -2, 3, -4));
  CHECK((x * x.conj()).is_real());
  CHECK_THROWS_AS(ExactScalar().inverse(), std::domain_error);
}

TEST_CASE("real sign") {
  CHECK(ExactScalar(3, -2, 0, 0).real_sign() == 1);   // 3 - 2.83
  CHECK(ExactScalar(-3, 2, 0, 0).real_sign() == -1);
  CHECK(ExactScalar(1, -1, 0, 0).real_sign() == -1);
  CHECK(ExactScalar().real_sign() == 0);
  CHECK_THROWS(I.real_sign());
}

TEST_CASE("exact square roots") {
  CHECK(*exact_sqrt(ExactScalar(2)) == r2);
  CHECK(*exact_sqrt(ExactScalar(4)) == ExactScalar(2));
  CHECK(*exact_sqrt(ExactScalar(-1)) == I);
  CHECK(*exact_sqrt(ExactScalar(make_rational(1, 2))) == r2 / 2);
  ExactScalar s(1, 1, 0, 0);  // (1 + r2)^2 = 3 + 2 r2
  CHECK(*exact_sqrt(s * s) == s);
  CHECK_FALSE(exact_sqrt(ExactScalar(3)).has_value());
  CHECK_FALSE(exact_sqrt(I).has_value());
}

TEST_CASE("canonical rendering round trips through the parser") {
  ExactScalar x(make_rational(1, 2), -3, 0, make_rational(-7, 5));
  CHECK(x.to_string() == "1/2 + -3*r2 + i*(0 + -7/5*r2)");
  CHECK(parse_scalar(x.to_string()) == x);
  CHECK(parse_scalar("i/r2") == I / r2);
  CHECK(parse_scalar("-(1 - 2*i)*r2") == ExactScalar(0, -1, 0, 2));
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("2 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
}

TEST_CASE("nullspace of simple matrices") {
  CHECK(nullspace(Matrix(Matrix::Identity(3, 3))).empty());
  CHECK(nullspace(Matrix(Matrix::Zero(2, 2))).size() == 2);

  Matrix m(2, 2);
  m << ExactScalar(1), I, -I, ExactScalar(1);
  // determinant oracle: 1*1 - i*(-i) = 1 + i^2 = 0, so rank 1
  CHECK((m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).is_zero());
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));
  // proportional to (-i, 1)
  CHECK((ns[0](0) * ExactScalar(1) - ns[0](1) * -I).is_zero());
  CHECK(rank(m) == 1);
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int n = 0; n < 30; ++n) {
    Matrix m(4, 5);
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 5; ++j) m(i, j) = coin(rng) == 0 ? ExactScalar() : random_scalar(rng);
    if (n % 3 == 0) m.row(3) = m.row(0) * I + m.row(1);
    auto ns = nullspace(m);
    CHECK(rank(m) + static_cast<Eigen::Index>(ns.size()) == 5);
    for (const auto& v : ns) CHECK(is_zero(m * v));
  }
}

TEST_CASE("inverse and coordinates") {
  Matrix m(2, 2);
  m << ExactScalar(1), r2, I, ExactScalar(3);
  Matrix inv = inverse(m);
  CHECK(exactly_equal(m * inv, Matrix(Matrix::Identity(2, 2))));
  Matrix sing(2, 2);
  sing << ExactScalar(1), ExactScalar(2), ExactScalar(2), ExactScalar(4);
  CHECK_THROWS_AS(inverse(sing), std::domain_error);

  Matrix basis(3, 2);
  basis << ExactScalar(1), ExactScalar(0), ExactScalar(0), ExactScalar(1), ExactScalar(1), ExactScalar(1);
  Vector v(3);
  v << ExactScalar(2), I, 2 + I;
  auto c = solve_coordinates(basis, v);
  REQUIRE(c.has_value());
  CHECK((*c)(0) == ExactScalar(2));
  CHECK((*c)(1) == I);
  v(2) = 0;
  CHECK_FALSE(solve_coordinates(basis, v).has_value());
}

TEST_CASE("scalar action") {
  CHECK(solve_scalar_action(Matrix(Matrix::Identity(3, 3)), ExactScalar(1)));
  CHECK(solve_scalar_action(Matrix(Matrix::Zero(2, 2)), ExactScalar(0)));
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 2;
  CHECK_FALSE(solve_scalar_action(d, ExactScalar(1)));
}

TEST_CASE("kron and factor swap") {
  Matrix a(2, 2), b(2, 2);
  a << ExactScalar(1), ExactScalar(2), ExactScalar(3), ExactScalar(4);
  b << ExactScalar(0), I, ExactScalar(1), ExactScalar(0);
  Matrix p = swap_tensor_factors(2, 2);
  CHECK(exactly_equal(p * kron(a, b) * p.transpose(), kron(b, a)));
  Matrix c(3, 3);
  c.setZero();
  c(0, 2) = 5;
  Matrix q = swap_tensor_factors(2, 3);
  CHECK(exactly_equal(q * kron(a, c) * inverse(q), kron(c, a)));
}
