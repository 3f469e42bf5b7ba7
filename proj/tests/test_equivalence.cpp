#include "doctest.h"
#include "shcp/equivalence.hpp"
#include "test_support.hpp"

using namespace shcp;

namespace {
  std::string failures(CheckReport const& r) {
    std::string out;
    for (auto const& c : r.checks) {
      if (!c.pass) {
        out += c.name + ": " + c.witness + "\n";
      }
    }
    return out;
  }

  PairPtr abelian_pair() {
    std::map<std::pair<std::size_t, std::size_t>, Vector> none;
    auto g = LieSuperalgebra::make({"X"}, {"Y"}, none);
    return ShcPair::make("abelian", Representation(g, {1, 1}, {Matrix::identity(2), Matrix::unit(2, 0, 1)}),
                         {{"c", testing::diag2(3, 3)}});
  }
}  // namespace

TEST_CASE("structure constants are recovered from kernel points") {
  for (auto p : {testing::gl11_pair(), testing::heisenberg_pair(), abelian_pair()}) {
    REQUIRE(validate_pair(*p).empty());
    auto rec = lie_of_psi(p);
    CHECK_MESSAGE(rec.report.pass(), failures(rec.report));
    for (auto const& [ab, v] : rec.brackets) {
      CHECK(v == p->g().bracket_basis(ab.first, ab.second));
    }
    REQUIRE(rec.adjoint.size() == p->kpoints().size());
  }
  auto h = lie_of_psi(testing::heisenberg_pair());
  CHECK(h.brackets.at({1, 1}) == testing::vec({2, 0}));
  CHECK(h.adjoint[1] == Matrix::diagonal({1, -1}));
  for (auto const& [ab, v] : lie_of_psi(abelian_pair()).brackets) {
    CHECK(is_zero(v));
  }
}

TEST_CASE("linearization is a bijection onto its image") {
  for (auto p : {testing::gl11_pair(), testing::heisenberg_pair()}) {
    auto r = omega_iso_check(p, build_grassmann(3), 80, 11);
    CHECK_MESSAGE(r.pass(), failures(r));
    CHECK(r.checks.size() == 3);
    auto r0 = omega_iso_check(p, build_grassmann(0), 20, 12);
    CHECK_MESSAGE(r0.pass(), failures(r0));
  }
}

TEST_CASE("relation audit") {
  for (auto p : {testing::gl11_pair(), testing::heisenberg_pair()}) {
    auto r = relations_check(p, build_grassmann(2), 40, 21);
    CHECK_MESSAGE(r.pass(), failures(r));
    REQUIRE(r.checks.size() == 7);
    CHECK(r.checks[0].name == "relation-a");
    CHECK(r.checks[6].trials == 40);
  }
  auto r = relations_check(testing::gl11_pair(), build_grassmann(3), 40, 22);
  CHECK(r.checks[6].note.find("disagrees in 0 ") == std::string::npos);
}

TEST_CASE("quotient lemmas") {
  auto a = build_grassmann(3);
  for (auto p : {testing::gl11_pair(), testing::heisenberg_pair()}) {
    for (int n : {1, 2}) {
      auto r = quotient_lemma_check(p, a, {}, n, 30, 31);
      CHECK_MESSAGE(r.pass(), failures(r));
    }
  }
  auto xi1 = *a->generator("xi1");
  auto xi2 = *a->generator("xi2");
  auto r   = quotient_lemma_check(testing::gl11_pair(), a, {xi1, xi2}, 1, 20, 32);
  CHECK_MESSAGE(r.pass(), failures(r));
  CHECK_THROWS_AS(quotient_lemma_check(testing::gl11_pair(), a, {a->one()}, 1, 1, 0), Error);
  CHECK_THROWS_AS(quotient_lemma_check(testing::gl11_pair(), a, {}, 0, 1, 0), Error);
}

TEST_CASE("module transfer round trip") {
  for (auto p : {testing::gl11_pair(), testing::heisenberg_pair(), abelian_pair()}) {
    auto r = transfer_check(p);
    CHECK_MESSAGE(r.pass(), failures(r));
  }
}

TEST_CASE("reports are reproducible under a fixed seed") {
  auto p  = testing::gl11_pair();
  auto a  = build_grassmann(2);
  auto r1 = relations_check(p, a, 10, 99);
  auto r2 = relations_check(p, a, 10, 99);
  REQUIRE(r1.checks.size() == r2.checks.size());
  for (std::size_t i = 0; i < r1.checks.size(); ++i) {
    CHECK(r1.checks[i].name == r2.checks[i].name);
    CHECK(r1.checks[i].pass == r2.checks[i].pass);
    CHECK(r1.checks[i].note == r2.checks[i].note);
    CHECK(r1.checks[i].seed == 99);
  }
  Sampler s1(5), s2(5);
  for (int t = 0; t < 20; ++t) {
    CHECK(s1.split(p, a) == s2.split(p, a));
  }
}
