#include "doctest.h"
#include "shcp/representations.hpp"
#include "test_support.hpp"

using namespace shcp;
using testing::Rng;

namespace {
  // gl(1|1) basis: X1 = 0, X2 = 1, Yp = 2, Ym = 3.
  constexpr std::size_t X1 = 0, X2 = 1, Yp = 2, Ym = 3;

  Matrix from_rows(std::vector<std::vector<int>> rows) {
    Matrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  // Evaluates a PBW sum through a representation of g on matrices.
  Matrix evaluate(Representation const& rho, PbwSum const& x) {
    std::size_t n = rho.space().dim();
    Matrix      r(n, n);
    for (auto const& [m, c] : x) {
      Matrix p = Matrix::identity(n);
      for (auto b : m.odd) {
        p = p * rho.image(b);
      }
      for (auto b : m.even) {
        p = p * rho.image(b);
      }
      r += p * c;
    }
    return r;
  }

  WeilElement xi(AlgebraPtr const& a, int k) {
    return *a->generator("xi" + std::to_string(k));
  }
}  // namespace

TEST_CASE("straightening examples") {
  auto g = testing::gl11_algebra();
  PbwMonomial ypym{{Yp, Ym}, {}};
  PbwSum      expect{{ypym, Scalar(-1)}, {PbwMonomial{{}, {X1}}, Scalar(1)}, {PbwMonomial{{}, {X2}}, Scalar(1)}};
  CHECK(pbw_straighten(g, {Ym, Yp}) == expect);
  CHECK(pbw_straighten(g, {Yp, Yp}).empty());
  CHECK(pbw_straighten(g, {X1, Yp}) == PbwSum{{PbwMonomial{{Yp}, {X1}}, Scalar(1)}, {PbwMonomial{{Yp}, {}}, Scalar(1)}});
  CHECK(pbw_to_string(*g, pbw_straighten(g, {Ym, Yp})) == "X1 + X2 - Yp*Ym");
  CHECK(pbw_straighten(g, {}) == PbwSum{{PbwMonomial{}, Scalar(1)}});
  CHECK_THROWS_AS(pbw_straighten(g, {9}), Error);

  auto h = testing::heisenberg_algebra();
  CHECK(pbw_straighten(h, {1, 1}) == PbwSum{{PbwMonomial{{}, {0}}, Scalar(1)}});
}

TEST_CASE("straightening respects representations and associativity") {
  Rng rng(201);
  for (auto rho : {testing::gl11_rep(testing::gl11_algebra()), testing::heisenberg_rep(testing::heisenberg_algebra())}) {
    PbwStraightener pbw(rho.lie());
    int             n = static_cast<int>(rho.lie()->dim());
    auto            random_word = [&] {
      std::vector<std::size_t> w;
      for (int k = rng.uniform(0, 4); k > 0; --k) {
        w.push_back(static_cast<std::size_t>(rng.uniform(0, n - 1)));
      }
      return w;
    };
    for (int t = 0; t < 100; ++t) {
      auto   w = random_word();
      Matrix direct = Matrix::identity(rho.space().dim());
      for (auto b : w) {
        direct = direct * rho.image(b);
      }
      REQUIRE(evaluate(rho, pbw.straighten(w)) == direct);

      auto x = pbw.straighten(random_word());
      auto y = pbw.straighten(random_word());
      auto z = pbw.straighten(random_word());
      REQUIRE(pbw.multiply(pbw.multiply(x, y), z) == pbw.multiply(x, pbw.multiply(y, z)));
    }
  }
}

TEST_CASE("induced module of gl(1|1)") {
  auto p = testing::gl11_pair();
  auto v = build_induced_trivial(*p);
  REQUIRE(v.dim() == 4);
  CHECK(v.module.space == SuperSpace{2, 2});
  CHECK(v.labels == std::vector<std::string>{"1", "Yp*Ym", "Yp", "Ym"});
  CHECK(v.cyclic == 0);
  CHECK(validate_pair_module(*p, v.module).empty());
  // basis order: 1, y+y-, y+, y-
  CHECK(v.module.g_action[Yp] == from_rows({{0, 0, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 0}}));
  CHECK(v.module.g_action[X1] == from_rows({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}));
  CHECK(v.module.g_action[Ym] == from_rows({{0, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}}));
  for (std::size_t b = 0; b < p->g().even_dim(); ++b) {
    for (std::size_t r = 0; r < 4; ++r) {
      CHECK(v.module.g_action[b](r, v.cyclic).is_zero());
    }
  }
  CHECK(v.module.kpoint_action[0] == Matrix::diagonal({1, 1, 2, Scalar(1, 2)}));

  auto same = induce_from_even(*p, trivial_even_module(*p));
  CHECK(same.module.g_action == v.module.g_action);
  CHECK(same.module.kpoint_action == v.module.kpoint_action);
}

TEST_CASE("induced module of the Heisenberg pair") {
  auto p = testing::heisenberg_pair();
  auto v = build_induced_trivial(*p);
  REQUIRE(v.dim() == 2);
  CHECK(validate_pair_module(*p, v.module).empty());
  CHECK(v.module.g_action[1] == from_rows({{0, 0}, {1, 0}}));
  CHECK(v.module.g_action[0].is_zero());
  CHECK(v.module.kpoint_action[0] == Matrix::identity(2));
  CHECK(v.module.kpoint_action[1] == testing::diag2(1, -1));
}

TEST_CASE("induction from a nontrivial even module") {
  auto       p = testing::gl11_pair();
  EvenModule m0{{1, 0}, {Matrix::diagonal({1}), Matrix(1, 1)}, {Matrix::diagonal({2})}};
  CHECK(validate_even_module(*p, m0).empty());
  auto v = induce_from_even(*p, m0);
  REQUIRE(v.dim() == 4);
  // Y- y+ = -y+y- + (X1 + X2) acting on m as 1
  CHECK(v.module.g_action[Ym] == from_rows({{0, 0, 1, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}, {1, 1, 0, 0}}));
  // Y- y+y- = (X1 + X2) y- + ... = y- (x) m
  CHECK(v.module.g_action[Ym](3, 1) == Scalar(1));
  CHECK(v.module.g_action[X1] == Matrix::diagonal({1, 1, 2, 0}));
  CHECK(v.module.kpoint_action[0] == Matrix::diagonal({2, 2, 4, 1}));

  EvenModule bad = m0;
  bad.g0_action[0] = Matrix::diagonal({Scalar(1)});
  bad.kpoint_action[0] = Matrix(1, 1);
  CHECK_THROWS_AS(induce_from_even(*p, bad), Error);
  EvenModule wrong_shape{{1, 0}, {Matrix::diagonal({1})}, {Matrix::diagonal({2})}};
  CHECK(!validate_even_module(*p, wrong_shape).empty());
}

TEST_CASE("faithful even modules induce faithful modules") {
  Rng  rng(202);
  auto p  = testing::gl11_pair();
  auto h  = testing::heisenberg_pair();
  auto vp = induce_from_even(*p, EvenModule{{2, 0}, {Matrix::unit(2, 0, 0), Matrix::unit(2, 1, 1)}, {testing::diag2(2, 1)}});
  auto vh = induce_from_even(*h, EvenModule{{1, 0}, {Matrix::diagonal({1})}, {Matrix::diagonal({2}), Matrix::diagonal({-1})}});
  auto a  = build_grassmann(3);
  for (auto [pair, v] : {std::pair{p, &vp}, std::pair{h, &vh}}) {
    for (int t = 0; t < 100; ++t) {
      auto s1 = testing::random_split(pair, a, rng);
      auto s2 = rng.coin() ? testing::random_split(pair, a, rng) : s1;
      REQUIRE((s1 == s2) == (rp_operator(*v, s1) == rp_operator(*v, s2)));
    }
  }
}

TEST_CASE("the action of G_P on the induced module") {
  Rng  rng(203);
  auto a = build_grassmann(2);
  for (auto p : {testing::gl11_pair(), testing::heisenberg_pair()}) {
    auto v = build_induced_trivial(*p);
    CHECK(rp_operator(v, identity_element(p, a)) == AOperator::identity(a, v.module.space));
    for (int t = 0; t < 60; ++t) {
      auto x = testing::random_split(p, a, rng);
      auto y = testing::random_split(p, a, rng);
      REQUIRE(rp_operator(v, gp_mul(x, y)) == rp_operator(v, x) * rp_operator(v, y));
      auto w = testing::random_word(*p, a, rng, 4);
      AOperator direct = AOperator::identity(a, v.module.space);
      for (auto const& gen : w) {
        direct = direct * module_generator(*p, v.module, a, gen);
      }
      REQUIRE(rp_operator(v, normalize(p, a, w)) == direct);
    }
  }

  auto p = testing::gl11_pair();
  auto v = build_induced_trivial(*p);
  SplitElement s(p, a, {}, GPoint(a, p->lie()), {xi(a, 1), a->zero()});
  auto         out = op_apply(rp_operator(v, s), cyclic_vector(v, a));
  CHECK(out == SuperVector{a->one(), a->zero(), xi(a, 1), a->zero()});
}

TEST_CASE("the cyclic vector separates odd coordinates") {
  Rng  rng(204);
  auto a = build_grassmann(3);
  for (auto p : {testing::gl11_pair(), testing::heisenberg_pair()}) {
    auto v = build_induced_trivial(*p);
    for (int t = 0; t < 50; ++t) {
      auto r   = testing::random_split(p, a, rng);
      // ordered odd products read back exactly; the even factor fixes the cyclic vector
      SplitElement s(p, a, {}, GPoint(a, p->lie()), r.odd_coords());
      SplitElement e(p, a, r.kword(), r.even_log(), std::vector<WeilElement>(p->g().odd_dim(), a->zero()));
      REQUIRE(op_apply(rp_operator(v, e), cyclic_vector(v, a)) == cyclic_vector(v, a));
      auto out = op_apply(rp_operator(v, s), cyclic_vector(v, a));
      CHECK(out[v.cyclic] == a->one());
      for (std::size_t i = 0; i < p->g().odd_dim(); ++i) {
        REQUIRE(out[*v.find({p->g().odd(i)})] == s.odd_coords()[i]);
      }
    }
  }
}

TEST_CASE("module transfer between pairs and groups") {
  Rng rng(205);
  for (auto p : {testing::gl11_pair(), testing::heisenberg_pair()}) {
    auto def = defining_module(*p);
    CHECK(validate_pair_module(*p, def).empty());

    GroupModule lin{p->space(), [p](AlgebraPtr const& a, Generator const& gen) {
                      return word_operator(*p, a, {gen});
                    }};
    auto back = pair_from_group(p, lin);
    CHECK(back.g_action == def.g_action);
    CHECK(back.kpoint_action == def.kpoint_action);

    auto grp = group_from_pair(p, def);
    auto a   = build_grassmann(3);
    for (int t = 0; t < 30; ++t) {
      auto gen = testing::random_generator(*p, a, rng);
      REQUIRE(grp.act(a, gen) == word_operator(*p, a, {gen}));
    }

    auto v  = build_induced_trivial(*p);
    auto rt = pair_from_group(p, group_from_pair(p, v.module));
    CHECK(rt.g_action == v.module.g_action);
    CHECK(rt.kpoint_action == v.module.kpoint_action);

    PairModule triv{{1, 0}, std::vector<Matrix>(p->g().dim(), Matrix(1, 1)),
                    std::vector<Matrix>(p->kpoints().size(), Matrix::identity(1))};
    auto trt = pair_from_group(p, group_from_pair(p, triv));
    CHECK(trt.g_action == triv.g_action);
    CHECK(trt.kpoint_action == triv.kpoint_action);
  }

  auto p   = testing::gl11_pair();
  auto bad = defining_module(*p);
  bad.g_action[Yp] = Matrix::unit(2, 0, 1) + Matrix::unit(2, 1, 0);
  CHECK_THROWS_AS(group_from_pair(p, bad), Error);
  GroupModule odd_only{p->space(), [p](AlgebraPtr const& a, Generator const& gen) {
                         if (std::holds_alternative<GenEvenExp>(gen)) {
                           return AOperator::identity(a, p->space());
                         }
                         return word_operator(*p, a, {gen});
                       }};
  CHECK_THROWS_AS(pair_from_group(p, odd_only), Error);
}
