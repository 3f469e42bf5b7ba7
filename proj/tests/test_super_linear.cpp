#include "doctest.h"
#include "shcp/super_linear.hpp"
#include "test_support.hpp"

using namespace shcp;
using testing::Rng;

namespace {
  SuperSpace const v11{1, 1};

  Matrix E(std::size_t i, std::size_t j) {
    return Matrix::unit(2, i - 1, j - 1);
  }

  WeilElement xi(AlgebraPtr const& a, int k) {
    return *a->generator("xi" + std::to_string(k));
  }
}  // namespace

TEST_CASE("koszul signs on the documented pairs") {
  auto a  = build_grassmann(2);
  auto s  = AOperator::tensor(xi(a, 1), v11, E(1, 2));
  auto t  = AOperator::tensor(xi(a, 2), v11, E(2, 1));
  auto x12 = xi(a, 1) * xi(a, 2);
  CHECK(s * t == AOperator::tensor(-x12, v11, E(1, 1)));
  CHECK(t * s == AOperator::tensor(x12, v11, E(2, 2)));
}

TEST_CASE("koszul product matches the sign formula on all basis pairs") {
  auto       a = build_grassmann(2);
  SuperSpace v{1, 2};
  for (std::size_t m = 0; m < a->dim(); ++m) {
    for (std::size_t n = 0; n < a->dim(); ++n) {
      auto mn_oracle = testing::oracle_mul(testing::to_oracle(a->basis(m)), testing::to_oracle(a->basis(n)));
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          for (std::size_t k = 0; k < 3; ++k) {
            for (std::size_t l = 0; l < 3; ++l) {
              Matrix eij = Matrix::unit(3, i, j), ekl = Matrix::unit(3, k, l);
              auto   got = AOperator::tensor(a->basis(m), v, eij) * AOperator::tensor(a->basis(n), v, ekl);
              int    mp  = (v.parity(i) + v.parity(j)) % 2;
              int    sg  = (mp * a->parity(n)) ? -1 : 1;
              AOperator expected(a, v);
              for (auto const& [idx, c] : mn_oracle) {
                for (std::size_t b = 0; b < a->dim(); ++b) {
                  if (testing::label_indices(a->label(b)) == idx) {
                    expected += AOperator::tensor(a->basis(b) * Scalar(Rational(c * sg)), v, eij * ekl);
                  }
                }
              }
              REQUIRE(got == expected);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("exponential of an odd off-diagonal operator") {
  auto a = build_grassmann(2);
  auto z = AOperator::tensor(xi(a, 1), v11, E(1, 2)) + AOperator::tensor(xi(a, 2), v11, E(2, 1));
  auto expected = AOperator::identity(a, v11) + z
                  + AOperator::tensor(xi(a, 1) * xi(a, 2) * Scalar(1, 2), v11, E(2, 2) - E(1, 1));
  CHECK(op_exp(z) == expected);
  CHECK(op_log(op_exp(z)) == z);
  CHECK_THROWS_AS(op_exp(AOperator::identity(a, v11)), Error);
}

TEST_CASE("application to V(A)") {
  auto        a = build_grassmann(2);
  SuperVector e2{a->zero(), a->one()};
  auto        r = op_apply(AOperator::tensor(xi(a, 1), v11, E(1, 2)), e2);
  CHECK(r[0] == xi(a, 1));
  CHECK(r[1].is_zero());
  // an odd matrix passing an odd coefficient picks up a sign
  SuperVector odd_coeff{a->zero(), xi(a, 2)};
  auto        r2 = op_apply(AOperator::tensor(xi(a, 1), v11, E(1, 2)), odd_coeff);
  CHECK(r2[0] == -(xi(a, 1) * xi(a, 2)));
}

TEST_CASE("composition is compatible with application") {
  Rng        rng(21);
  auto       a = build_grassmann(3);
  SuperSpace v{2, 1};
  for (int t = 0; t < 200; ++t) {
    auto        s = testing::random_even_operator(a, v, rng, false);
    auto        u = testing::random_even_operator(a, v, rng, false);
    SuperVector x;
    for (std::size_t i = 0; i < v.dim(); ++i) {
      x.push_back(testing::random_element(a, rng));
    }
    REQUIRE(op_apply(s * u, x) == op_apply(s, op_apply(u, x)));
  }
}

TEST_CASE("exp, log and inverse round trips") {
  Rng  rng(4);
  auto a = adjoin_dual_number(build_grassmann(3)).algebra;
  for (int t = 0; t < 100; ++t) {
    auto z = testing::random_even_operator(a, v11, rng, true);
    REQUIRE(op_log(op_exp(z)) == z);
    auto u = op_exp(z) * AOperator::constant(a, v11, Matrix::diagonal({Scalar(2), Scalar(-1)}));
    REQUIRE(u * op_inverse(u) == AOperator::identity(a, v11));
    REQUIRE(op_exp(z) * op_exp(-z) == AOperator::identity(a, v11));
  }
}
