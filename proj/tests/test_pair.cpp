#include "doctest.h"
#include "shcp/pair.hpp"
#include "test_support.hpp"

using namespace shcp;
using testing::Rng;

namespace {
  bool has(std::vector<Issue> const& issues, std::string const& check) {
    for (auto const& i : issues) {
      if (i.check == check) {
        return true;
      }
    }
    return false;
  }

  Matrix E(std::size_t i, std::size_t j) {
    return Matrix::unit(2, i - 1, j - 1);
  }
}  // namespace

TEST_CASE("fixture pairs validate") {
  CHECK(validate_pair(*testing::gl11_pair()).empty());
  CHECK(validate_pair(*testing::heisenberg_pair()).empty());
}

TEST_CASE("representation defects are reported") {
  auto g   = testing::gl11_algebra();
  auto bad = ShcPair::make("bad", Representation(g, {1, 1}, {E(1, 1), E(2, 2), E(1, 2) + E(2, 1), E(2, 1)}), {});
  auto issues = validate_pair(*bad);
  CHECK(has(issues, "rep-bracket"));
  CHECK_FALSE(has(issues, "rep-parity"));
  auto mixed = ShcPair::make("mixed", Representation(g, {1, 1}, {E(1, 1), E(2, 2), E(1, 2) + E(1, 1), E(2, 1)}), {});
  CHECK(has(validate_pair(*mixed), "rep-parity"));
  auto degenerate = ShcPair::make("kernel", Representation(g, {1, 1}, {E(1, 1), E(1, 1), E(1, 2), E(2, 1)}), {});
  CHECK(has(validate_pair(*degenerate), "rep-injective"));
}

TEST_CASE("K-point defects are reported") {
  Matrix u(2, 2);
  u(0, 0) = 1;
  u(0, 1) = 1;
  u(1, 1) = 1;
  auto p      = ShcPair::make("u", testing::gl11_rep(testing::gl11_algebra()), {{"u", u}});
  auto issues = validate_pair(*p);
  CHECK(has(issues, "kpoint-even"));
  bool witness = false;
  for (auto const& i : issues) {
    witness = witness || (i.check == "kpoint-parity" && i.witness == "Ad(u)X1 = X1 - Yp");
  }
  CHECK(witness);
  auto h = ShcPair::make("h", testing::heisenberg_rep(testing::heisenberg_algebra()), {{"s", testing::diag2(2, 1)}});
  CHECK(has(validate_pair(*h), "kpoint-normalizes"));
  auto z = ShcPair::make("z", testing::gl11_rep(testing::gl11_algebra()), {{"z", testing::diag2(0, 1)}});
  CHECK(has(validate_pair(*z), "kpoint-invertible"));
}

TEST_CASE("adjoint action of K-points") {
  auto p = testing::gl11_pair();
  CHECK(adjoint_action(*p, {{0, 1}}, testing::vec({0, 0, 1, 0})) == testing::vec({0, 0, 2, 0}));
  CHECK(adjoint_action(*p, {{0, 1}}, testing::vec({0, 0, 0, 1})) == scale(testing::vec({0, 0, 0, 1}), Scalar(1, 2)));
  CHECK(adjoint_action(*p, {{0, -1}, {0, 1}}, testing::vec({0, 0, 1, 1})) == testing::vec({0, 0, 1, 1}));

  Rng  rng(7);
  auto a = build_grassmann(3);
  for (int t = 0; t < 100; ++t) {
    KWord w;
    for (int k = rng.uniform(0, 3); k > 0; --k) {
      w.emplace_back(0, rng.coin() ? 1 : -1);
    }
    auto   x = testing::random_point(a, p->lie(), rng, false);
    Matrix k = kword_matrix(*p, w);
    auto   lhs = p->rho().apply(apply_linear(kword_ad(*p, w), x));
    auto   rhs = AOperator::constant(a, p->space(), k) * p->rho().apply(x)
               * AOperator::constant(a, p->space(), *inverse(k));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("pair morphisms") {
  auto src = testing::gl11_pair();
  auto tgt = ShcPair::make("gl(1|1)", testing::gl11_rep(testing::gl11_algebra()),
                           {{"d", testing::diag2(2, 1)}, {"e", testing::diag2(1, 2)}});

  PairMorphism scale{src, tgt, Matrix::diagonal({Scalar(1), Scalar(1), Scalar(2), Scalar(2)}), {{{0, 1}}},
                     Matrix::identity(2)};
  auto issues = validate_pair_morphism(scale);
  REQUIRE(has(issues, "bracket"));
  CHECK(issues[0].witness == "(Yp,Ym): X1 + X2 vs 4*X1 + 4*X2");

  Matrix swap(4, 4);
  swap(0, 1) = swap(1, 0) = swap(2, 3) = swap(3, 2) = 1;
  Matrix dswap(2, 2);
  dswap(0, 1) = dswap(1, 0) = 1;
  PairMorphism sw{src, tgt, swap, {{{1, 1}}}, dswap};
  CHECK(validate_pair_morphism(sw).empty());

  PairMorphism wrong_k{src, tgt, swap, {{{0, 1}}}, dswap};
  CHECK(has(validate_pair_morphism(wrong_k), "equivariance"));
  PairMorphism wrong_d{src, tgt, swap, {{{1, 1}}}, Matrix::identity(2)};
  CHECK(has(validate_pair_morphism(wrong_d), "differential"));
}
