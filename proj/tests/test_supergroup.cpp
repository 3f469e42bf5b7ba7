#include "doctest.h"
#include "shcp/supergroup.hpp"
#include "test_support.hpp"

using namespace shcp;
using testing::Rng;

namespace {
  WeilElement xi(AlgebraPtr const& a, int k) {
    return *a->generator("xi" + std::to_string(k));
  }

  constexpr std::size_t kYp = 0, kYm = 1;

  GPoint even_point(AlgebraPtr const& a, PairPtr const& p, WeilElement const& c, std::vector<int> v) {
    return GPoint::tensor(c, p->lie(), testing::vec(v));
  }

  bool sound(PairPtr const& p, AlgebraPtr const& a, GroupWord const& w, NormalizeTrace* trace = nullptr) {
    SplitElement s = normalize(p, a, w, trace);
    return linearize(s) == testing::oracle_product(*p, a, w) && s.even_log().odd_component().is_zero();
  }
}  // namespace

TEST_CASE("normal forms of small words") {
  auto p = testing::gl11_pair();
  auto a = build_grassmann(2);
  auto z = a->zero();

  SplitElement s1 = normalize(p, a, {GenOdd{xi(a, 2), kYm}, GenOdd{xi(a, 1), kYp}});
  CHECK(s1.kword().empty());
  CHECK(s1.even_log() == even_point(a, p, xi(a, 1) * xi(a, 2), {1, 1, 0, 0}));
  CHECK(s1.even_operator() == op_exp(p->rho().apply(s1.even_log())));
  CHECK(s1.odd_coords() == std::vector<WeilElement>{xi(a, 1), xi(a, 2)});

  SplitElement s2 = normalize(p, a, {GenOdd{xi(a, 1), kYp}, GenKPoint{{{0, 1}}}});
  CHECK(s2.kmatrix() == testing::diag2(2, 1));
  CHECK(s2.even_log().is_zero());
  CHECK(s2.odd_coords() == std::vector<WeilElement>{xi(a, 1) * Scalar(1, 2), z});

  SplitElement s3 = normalize(p, a, {GenOdd{xi(a, 1), kYp}, GenOdd{xi(a, 2), kYp}});
  CHECK(s3 == SplitElement(p, a, {}, GPoint(a, p->lie()), {xi(a, 1) + xi(a, 2), z}));
  CHECK(s3.even_log().is_zero());

  auto h  = testing::heisenberg_pair();
  auto s4 = normalize(h, a, {GenOdd{xi(a, 1), 0}, GenOdd{xi(a, 2), 0}});
  CHECK(s4.even_log() == GPoint::tensor(-(xi(a, 1) * xi(a, 2)), h->lie(), testing::vec({1, 0})));
  CHECK(s4.odd_coords() == std::vector<WeilElement>{xi(a, 1) + xi(a, 2)});
}

TEST_CASE("inverse, exponential and push forward on documented inputs") {
  auto p = testing::gl11_pair();
  auto a = build_grassmann(2);
  auto z = a->zero();
  SplitElement e(p, a, {}, GPoint(a, p->lie()), {xi(a, 1), z});
  CHECK(gp_inv(e) == SplitElement(p, a, {}, GPoint(a, p->lie()), {-xi(a, 1), z}));

  GPoint zpt = GPoint::tensor(xi(a, 1), p->lie(), testing::vec({0, 0, 1, 0}))
               + GPoint::tensor(xi(a, 2), p->lie(), testing::vec({0, 0, 0, 1}));
  SplitElement ex = gp_exp(p, zpt);
  CHECK(ex.even_log() == even_point(a, p, xi(a, 1) * xi(a, 2) * Scalar(1, 2), {1, 1, 0, 0}));
  CHECK(ex.odd_coords() == std::vector<WeilElement>{xi(a, 1), xi(a, 2)});
  CHECK(gp_log(ex) == zpt);

  SplitElement s1 = normalize(p, a, {GenOdd{xi(a, 2), kYm}, GenOdd{xi(a, 1), kYp}});
  auto         aug = AlgebraMorphism::augmentation(a);
  CHECK(gp_push(aug, s1) == identity_element(p, aug.target()));
  auto q  = quotient_algebra(a, {xi(a, 1), xi(a, 2)}, 2);
  auto pq = gp_push(q.projection, s1);
  CHECK(pq.even_log().is_zero());
  CHECK(pq.odd_coords() == std::vector<WeilElement>{q.projection(xi(a, 1)), q.projection(xi(a, 2))});
}

TEST_CASE("odd subgroup factorization") {
  auto p = testing::gl11_pair();
  auto a = build_grassmann(2);
  auto z = a->zero();
  auto ordered = factor_odd_subgroup(p, a, {GenOdd{xi(a, 1), kYp}, GenOdd{xi(a, 2), kYm}});
  CHECK(ordered.t.is_zero());
  CHECK(ordered.eta == std::vector<WeilElement>{xi(a, 1), xi(a, 2)});

  auto swapped = factor_odd_subgroup(p, a, {GenOdd{xi(a, 2), kYm}, GenOdd{xi(a, 1), kYp}});
  CHECK(swapped.t == even_point(a, p, xi(a, 1) * xi(a, 2), {1, 1, 0, 0}));

  auto comm = factor_odd_subgroup(
      p, a, {GenOdd{xi(a, 1), kYp}, GenOdd{xi(a, 2), kYm}, GenOdd{-xi(a, 1), kYp}, GenOdd{-xi(a, 2), kYm}});
  CHECK(comm.t == even_point(a, p, -(xi(a, 1) * xi(a, 2)), {1, 1, 0, 0}));
  CHECK(comm.eta == std::vector<WeilElement>{z, z});

  CHECK_THROWS_AS(factor_odd_subgroup(p, a, {GenKPoint{{{0, 1}}}}), Error);
  CHECK_THROWS_AS(factor_odd_subgroup(p, a, {GenEvenExp{even_point(a, p, xi(a, 1) * xi(a, 2), {1, 0, 0, 0})}}),
                  Error);
  CHECK(odd_subgroup_defect(normalize(p, a, {GenKPoint{{{0, 1}}}})));
  auto eps = adjoin_dual_number(build_grassmann(0));
  auto se  = normalize(p, eps.algebra, {GenEvenExp{GPoint::tensor(eps.eps, p->lie(), testing::vec({1, 1, 0, 0}))}});
  CHECK(odd_subgroup_defect(se));
}

TEST_CASE("normal form soundness is exhaustive on short words over Lambda_2") {
  auto              p = testing::gl11_pair();
  auto              a = build_grassmann(2);
  std::vector<Generator> pool{
      GenOdd{xi(a, 1), kYp},
      GenOdd{xi(a, 2), kYm},
      GenOdd{xi(a, 2), kYp},
      GenOdd{xi(a, 1) - xi(a, 2), kYm},
      GenKPoint{{{0, 1}}},
      GenKPoint{{{0, -1}}},
      GenEvenExp{even_point(a, p, xi(a, 1) * xi(a, 2), {1, -2, 0, 0})},
      GenOddGeneral{xi(a, 1) + xi(a, 2), GPoint::tensor(a->one(), p->lie(), testing::vec({0, 0, 1, 1}))},
  };
  std::size_t count = 0;
  bool        ok    = sound(p, a, {});
  for (auto const& g1 : pool) {
    ok = ok && sound(p, a, {g1});
    ++count;
    for (auto const& g2 : pool) {
      ok = ok && sound(p, a, {g1, g2});
      ++count;
      for (auto const& g3 : pool) {
        NormalizeTrace trace;
        ok = ok && sound(p, a, {g1, g2, g3}, &trace) && trace.measure_ok;
        ++count;
      }
    }
  }
  CHECK(count == 8 + 64 + 512);
  CHECK(ok);
}

TEST_CASE("normal form soundness on random words over Lambda_3") {
  Rng rng(101);
  for (auto p : {testing::gl11_pair(), testing::heisenberg_pair()}) {
    auto a = build_grassmann(3);
    for (int t = 0; t < 150; ++t) {
      auto           w = testing::random_word(*p, a, rng, 6);
      NormalizeTrace trace;
      REQUIRE(sound(p, a, w, &trace));
      REQUIRE_MESSAGE(trace.measure_ok, trace.detail);
    }
  }
}

TEST_CASE("normal form soundness over nested dual numbers") {
  Rng  rng(102);
  auto p = testing::gl11_pair();
  auto a = adjoin_dual_number(adjoin_dual_number(build_grassmann(2)).algebra).algebra;
  for (int t = 0; t < 50; ++t) {
    REQUIRE(sound(p, a, testing::random_word(*p, a, rng, 5)));
  }
}

TEST_CASE("normal forms are fixed points and distinct data give distinct elements") {
  Rng  rng(103);
  auto p = testing::gl11_pair();
  auto a = build_grassmann(3);
  for (int t = 0; t < 200; ++t) {
    auto s1 = testing::random_split(p, a, rng);
    auto s2 = testing::random_split(p, a, rng);
    REQUIRE(normalize(p, a, s1.to_word()) == s1);
    REQUIRE(normalize(p, a, s1.to_word()).even_log() == s1.even_log());
    bool same_data = s1.kmatrix() == s2.kmatrix() && s1.even_log() == s2.even_log()
                     && s1.odd_coords() == s2.odd_coords();
    REQUIRE(same_data == (linearize(s1) == linearize(s2)));
  }
}

TEST_CASE("group axioms") {
  Rng rng(104);
  for (auto p : {testing::gl11_pair(), testing::heisenberg_pair()}) {
    auto a = build_grassmann(3);
    for (int t = 0; t < 60; ++t) {
      auto x = testing::random_split(p, a, rng);
      auto y = testing::random_split(p, a, rng);
      auto z = testing::random_split(p, a, rng);
      REQUIRE(gp_mul(gp_mul(x, y), z) == gp_mul(x, gp_mul(y, z)));
      REQUIRE(gp_mul(x, identity_element(p, a)) == x);
      REQUIRE(gp_mul(identity_element(p, a), x) == x);
      REQUIRE(gp_mul(x, gp_inv(x)) == identity_element(p, a));
      REQUIRE(gp_mul(gp_inv(x), x) == identity_element(p, a));
      REQUIRE(linearize(gp_mul(x, y)) == linearize(x) * linearize(y));
    }
  }
}

TEST_CASE("exp and log") {
  Rng rng(105);
  for (auto p : {testing::gl11_pair(), testing::heisenberg_pair()}) {
    auto a = adjoin_dual_number(build_grassmann(3)).algebra;
    for (int t = 0; t < 60; ++t) {
      auto z = testing::random_point(a, p->lie(), rng, true);
      auto s = gp_exp(p, z);
      REQUIRE(linearize(s) == op_exp(p->rho().apply(z)));
      REQUIRE(gp_log(s) == z);
      auto u = testing::random_split(p, a, rng);
      if (u.kmatrix() == Matrix::identity(2)) {
        REQUIRE(gp_exp(p, gp_log(u)) == u);
      } else {
        REQUIRE_THROWS_AS(gp_log(u), Error);
      }
    }
  }
}

TEST_CASE("push forward is natural") {
  Rng  rng(106);
  auto p   = testing::gl11_pair();
  auto src = build_grassmann(2);
  auto tgt = build_grassmann(3);
  for (int t = 0; t < 60; ++t) {
    auto phi = AlgebraMorphism::substitution(src, tgt, {testing::random_element(tgt, rng, 1),
                                                        testing::random_element(tgt, rng, 1)});
    auto x   = testing::random_split(p, src, rng);
    auto y   = testing::random_split(p, src, rng);
    REQUIRE(gp_push(phi, gp_mul(x, y)) == gp_mul(gp_push(phi, x), gp_push(phi, y)));
    auto w = testing::random_word(*p, src, rng, 4);
    GroupWord pushed;
    for (auto const& g : w) {
      if (auto const* k = std::get_if<GenKPoint>(&g)) {
        pushed.push_back(*k);
      } else if (auto const* e = std::get_if<GenEvenExp>(&g)) {
        std::vector<WeilElement> c;
        for (auto const& x0 : e->t.coords()) {
          c.push_back(phi(x0));
        }
        pushed.push_back(GenEvenExp{GPoint(tgt, p->lie(), c)});
      } else if (auto const* o = std::get_if<GenOdd>(&g)) {
        pushed.push_back(GenOdd{phi(o->eta), o->index});
      } else {
        auto const&              og = std::get<GenOddGeneral>(g);
        std::vector<WeilElement> c;
        for (auto const& x0 : og.y.coords()) {
          c.push_back(phi(x0));
        }
        pushed.push_back(GenOddGeneral{phi(og.eta), GPoint(tgt, p->lie(), c)});
      }
    }
    REQUIRE(gp_push(phi, normalize(p, src, w)) == normalize(p, tgt, pushed));
  }
}

TEST_CASE("degenerate algebras and pairs") {
  auto p  = testing::gl11_pair();
  auto k0 = build_grassmann(0);
  auto s  = normalize(p, k0, {GenKPoint{{{0, 1}}}, GenKPoint{{{0, -1}}}});
  CHECK(s == identity_element(p, k0));
  CHECK(normalize(p, k0, {GenOdd{k0->zero(), 0}}) == identity_element(p, k0));

  std::map<std::pair<std::size_t, std::size_t>, Vector> none;
  auto even = ShcPair::make("gl(1)", Representation(LieSuperalgebra::make({"X"}, {}, none), {1, 0},
                                                    {Matrix::identity(1)}),
                            {{"two", Matrix::diagonal({Scalar(2)})}});
  CHECK(validate_pair(*even).empty());
  auto a = adjoin_dual_number(build_grassmann(0));
  auto e = normalize(even, a.algebra,
                     {GenKPoint{{{0, 1}}}, GenEvenExp{GPoint::tensor(a.eps, even->lie(), testing::vec({3}))}});
  CHECK(e.odd_coords().empty());
  CHECK(e.even_log() == GPoint::tensor(a.eps, even->lie(), testing::vec({3})));
}

TEST_CASE("invalid generator data") {
  auto p = testing::gl11_pair();
  auto a = build_grassmann(2);
  CHECK_THROWS_AS(normalize(p, a, {GenOdd{a->one(), 0}}), Error);
  CHECK_THROWS_AS(normalize(p, a, {GenOdd{xi(a, 1), 7}}), Error);
  CHECK_THROWS_AS(normalize(p, a, {GenKPoint{{{3, 1}}}}), Error);
  CHECK_THROWS_AS(normalize(p, a, {GenEvenExp{even_point(a, p, a->one(), {1, 0, 0, 0})}}), Error);
  CHECK_THROWS_AS(normalize(p, a, {GenEvenExp{GPoint::tensor(xi(a, 1), p->lie(), testing::vec({0, 0, 1, 0}))}}),
                  Error);
  CHECK_THROWS_AS(normalize(p, a, {GenOddGeneral{xi(a, 1), even_point(a, p, a->one(), {1, 0, 0, 0})}}), Error);
  auto other = build_grassmann(3);
  CHECK_THROWS_AS(normalize(p, a, {GenOdd{xi(other, 1), 0}}), Error);
}
