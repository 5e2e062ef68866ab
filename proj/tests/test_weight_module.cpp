#include <doctest.h>

#include "dirac/weight_module.hpp"

using namespace dirac;

namespace {

// ef + fe + h^2/2: dual bases of the trace form are (h, h/2), (e, f), (f, e)
Matrix casimir(const WeightModule& m) {
  const Matrix& h = m.action("h");
  const Matrix& e = m.action("e");
  const Matrix& f = m.action("f");
  return Matrix(e * f + f * e) + ExactScalar::rational(1, 2) * Matrix(h * h);
}

bool relations_on(const WeightModule& m, Eigen::Index cols) {
  const Matrix& h = m.action("h");
  const Matrix& e = m.action("e");
  const Matrix& f = m.action("f");
  Matrix he = h * e - e * h, hf = h * f - f * h, ef = e * f - f * e;
  return exactly_equal(he.leftCols(cols), Matrix(ExactScalar(2) * e).leftCols(cols)) &&
         exactly_equal(hf.leftCols(cols), Matrix(ExactScalar(-2) * f).leftCols(cols)) &&
         exactly_equal(ef.leftCols(cols), h.leftCols(cols));
}

}  // namespace

TEST_CASE("finite irreducible modules") {
  for (int n = 0; n <= 8; ++n) {
    WeightModule v = sl2_irrep(n);
    CHECK(v.dim() == n + 1);
    CHECK(v.weights().front() == n);
    CHECK(v.weights().back() == -n);
    CHECK(relations_on(v, v.dim()));
    CHECK(solve_scalar_action(casimir(v), ExactScalar::rational(n * (n + 2), 2)));
    CHECK(v.certified_dim() == v.dim());
  }
  CHECK_THROWS_AS(sl2_irrep(-1), std::invalid_argument);
}

TEST_CASE("truncated modules hold the relations below level N only") {
  for (int mu : {-5, -2, 1, 3}) {
    WeightModule hw = highest_weight_module(mu, 12);
    WeightModule lw = lowest_weight_module(-mu, 12);
    for (const WeightModule* m : {&hw, &lw}) {
      CHECK(m->dim() == 13);
      CHECK(m->certified_dim() == 12);
      CHECK(relations_on(*m, 12));
      CHECK_FALSE(relations_on(*m, 13));
    }
    CHECK(hw.weights()[3] == mu - 6);
    CHECK(lw.weights()[3] == -mu + 6);
    // Casimir of a highest weight module of weight mu is mu(mu+2)/2
    Matrix c = casimir(hw);
    for (Eigen::Index j = 0; j < 12; ++j) CHECK(c(j, j) == ExactScalar::rational(mu * (mu + 2), 2));
  }
}

TEST_CASE("construction rejects inconsistent data") {
  WeightModule v = sl2_irrep(3);
  std::vector<Matrix> action{v.action(0), v.action(1), v.action(2)};
  CHECK_NOTHROW(WeightModule(sl2(), action, v.weights(), v.labels()));
  auto broken = action;
  broken[1] = ExactScalar(2) * broken[1];
  CHECK_THROWS_AS(WeightModule(sl2(), broken, v.weights(), v.labels()), std::invalid_argument);
  auto w = v.weights();
  w[0] = 1;
  CHECK_THROWS_AS(WeightModule(sl2(), action, w, v.labels()), std::invalid_argument);
  CHECK_THROWS_AS(WeightModule(sl2(), action, v.weights(), v.labels(), ModuleKind::lowest_weight_truncated, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightModule(sl2(), action, v.weights(), v.labels(), ModuleKind::finite, 3),
                  std::invalid_argument);
}

TEST_CASE("tensor products and duals") {
  WeightModule t = tensor_action(sl2_irrep(1), sl2_irrep(1));
  CHECK(t.weights() == std::vector<int>{2, 0, 0, -2});
  CHECK(weight_set(t) == std::vector<int>{2, 0, -2});
  CHECK(rank(casimir(t)) == 3);

  WeightModule d = dual(sl2_irrep(2));
  CHECK(d.weights() == std::vector<int>{-2, 0, 2});
  CHECK(solve_scalar_action(casimir(d), ExactScalar(4)));
  CHECK_THROWS_AS(tensor_action(sl2_irrep(1), lowest_weight_module(1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(dual(lowest_weight_module(1, 4)), std::invalid_argument);
}

TEST_CASE("restriction, rebinding, trivial module") {
  WeightModule v = sl2_irrep(2);
  WeightModule r = restrict_module(v, so2(), {sl2().basis_vector("h")});
  CHECK(r.dim() == 3);
  CHECK(exactly_equal(r.action(0), v.action("h")));
  LieAlgebra other({"H", "E", "F"}, [] {
    std::vector<Vector> br;
    LieAlgebra g = sl2();
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) br.push_back(g.bracket_of_basis(i, j));
    return br;
  }(), sl2().form());
  WeightModule rb = rebind(v, other, "H");
  CHECK(rb.weight_generator() == "H");
  CHECK(exactly_equal(rb.action("E"), v.action("e")));
  CHECK_THROWS_AS(rebind(v, so2(), "h"), std::invalid_argument);
  WeightModule triv = trivial_module(sl2());
  CHECK(triv.dim() == 1);
  CHECK(is_zero(triv.act(sl2().basis_vector("e"))));
}
