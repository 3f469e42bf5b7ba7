// Acceptance run: one line per criterion, exit status 0 iff all pass.
// Library results are compared against the test-side oracles in
// test_support.hpp wherever an independent computation exists.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "shcp/cli_io.hpp"
#include "test_support.hpp"

using namespace shcp;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok && pass) {
        pass   = false;
        detail = what;
      }
    }
    void require(CheckReport const& r, std::string const& where) {
      for (auto const& c : r.checks) {
        require(c.pass, where + " " + c.name + ": " + c.witness);
      }
    }
  };

  PairPtr fixture(std::string const& name) {
    return load_pair(std::string(SHCP_FIXTURE_DIR) + "/" + name);
  }

  // exp of a nilpotent operator by its power series.
  AOperator series_exp(AOperator const& z) {
    AOperator sum  = AOperator::identity(z.algebra(), z.space());
    AOperator term = sum;
    for (int k = 1; !term.is_zero(); ++k) {
      term = term * z * Scalar(1, k);
      sum += term;
    }
    return sum;
  }

  AOperator point_operator(ShcPair const& p, GPoint const& z) {
    AOperator r(z.algebra(), p.space());
    for (std::size_t b = 0; b < p.g().dim(); ++b) {
      r += AOperator::tensor(z[b], p.space(), p.rho().image(b));
    }
    return r;
  }

  // Data equality of split forms: K-point matrix, exponent and coordinates.
  bool same_data(SplitElement const& x, SplitElement const& y) {
    return x.kmatrix() == y.kmatrix() && x.even_log() == y.even_log() && x.odd_coords() == y.odd_coords();
  }

  GroupWord odd_word(PairPtr const& p, AlgebraPtr const& a, testing::Rng& rng, std::size_t i, std::size_t j) {
    return {GenOdd{testing::random_element(a, rng, 1), i}, GenOdd{testing::random_element(a, rng, 1), j}};
  }

  Outcome relations() {
    Outcome o;
    for (auto const* f : {"gl11.json", "heisenberg.json"}) {
      auto p = fixture(f);
      for (int n : {2, 3}) {
        auto a = WeilAlgebra::grassmann(n);
        o.require(relations_check(p, a, 200, 1000 + n), std::string(f) + "/grassmann:" + std::to_string(n));
        // items (c) and (e) once more through the oracle product
        testing::Rng rng(77 + n);
        auto const&  g = p->g();
        for (int t = 0; t < 200; ++t) {
          std::size_t i   = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(g.odd_dim()) - 1));
          std::size_t j   = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(g.odd_dim()) - 1));
          GroupWord   w   = odd_word(p, a, rng, i, j);
          auto const& e1  = std::get<GenOdd>(w[0]).eta;
          auto const& e2  = std::get<GenOdd>(w[1]).eta;
          Vector      br  = g.bracket(g.basis_vector(g.odd(i)), g.basis_vector(g.odd(j)));
          GPoint      t2  = GPoint::tensor(e2 * e1, p->lie(), i == j ? odd_square(g, g.basis_vector(g.odd(i))) : br);
          GroupWord   rhs = i == j ? GroupWord{GenEvenExp{t2}, GenOdd{e1 + e2, i}}
                                   : GroupWord{GenEvenExp{t2}, w[1], w[0]};
          o.require(testing::oracle_product(*p, a, w) == testing::oracle_product(*p, a, rhs),
                    std::string(f) + ": oracle reordering of " + format_word(*p, w));
        }
      }
    }
    return o;
  }

  Outcome splitting() {
    Outcome o;
    auto    a = WeilAlgebra::grassmann(3);
    for (auto const* f : {"gl11.json", "heisenberg.json"}) {
      auto         p = fixture(f);
      testing::Rng rng(2024);
      for (int t = 0; t < 500; ++t) {
        GroupWord w;
        for (int n = rng.uniform(0, 6); n > 0; --n) {
          w.push_back(testing::random_generator(*p, a, rng));
        }
        auto s = normalize(p, a, w);
        o.require(linearize(s) == testing::oracle_product(*p, a, w), std::string(f) + ": value of " + format_word(*p, w));
        o.require(same_data(normalize(p, a, s.to_word()), s), std::string(f) + ": not a fixed point: " + s.to_string());
      }
      // uniqueness: distinct split data have distinct images
      for (int t = 0; t < 500; ++t) {
        auto x = testing::random_split(p, a, rng);
        auto y = t % 5 == 0 ? SplitElement(p, a, x.kword(), x.even_log(), testing::random_split(p, a, rng).odd_coords())
                            : testing::random_split(p, a, rng);
        bool distinct_data  = !same_data(x, y);
        bool distinct_image = testing::oracle_product(*p, a, x.to_word()) != testing::oracle_product(*p, a, y.to_word());
        o.require(distinct_data == distinct_image, std::string(f) + ": " + x.to_string() + " vs " + y.to_string());
      }
    }
    return o;
  }

  Outcome group_axioms() {
    Outcome o;
    auto    a = WeilAlgebra::grassmann(3);
    for (auto const* f : {"gl11.json", "heisenberg.json"}) {
      auto         p = fixture(f);
      auto         e = identity_element(p, a);
      testing::Rng rng(31);
      for (int t = 0; t < 500; ++t) {
        auto x = testing::random_split(p, a, rng);
        auto y = testing::random_split(p, a, rng);
        auto z = testing::random_split(p, a, rng);
        auto xy = gp_mul(x, y);
        o.require(gp_mul(xy, z) == gp_mul(x, gp_mul(y, z)), std::string(f) + ": associativity");
        o.require(gp_mul(x, e) == x && gp_mul(e, x) == x, std::string(f) + ": identity");
        o.require(gp_mul(x, gp_inv(x)) == e && gp_mul(gp_inv(x), x) == e, std::string(f) + ": inverse");
        o.require(linearize(xy)
                      == testing::oracle_product(*p, a, x.to_word()) * testing::oracle_product(*p, a, y.to_word()),
                  std::string(f) + ": product value");
      }
    }
    return o;
  }

  Outcome exp_log() {
    Outcome o;
    auto    a   = WeilAlgebra::grassmann(3);
    auto    aug = AlgebraMorphism::augmentation(a);
    for (auto const* f : {"gl11.json", "heisenberg.json"}) {
      auto         p = fixture(f);
      testing::Rng rng(4);
      for (int t = 0; t < 200; ++t) {
        GPoint z = testing::random_point(a, p->lie(), rng, true);
        auto   s = gp_exp(p, z);
        o.require(gp_log(s) == z, std::string(f) + ": log(exp(z)) for z = " + z.to_string());
        o.require(linearize(s) == series_exp(point_operator(*p, z)), std::string(f) + ": exp value");

        std::vector<WeilElement> eta;
        for (std::size_t i = 0; i < p->g().odd_dim(); ++i) {
          eta.push_back(testing::random_element(a, rng, 1));
        }
        SplitElement n(p, a, {}, testing::random_point(a, p->lie(), rng, true).even_component(), eta);
        o.require(gp_exp(p, gp_log(n)) == n, std::string(f) + ": exp(log(n)) for " + n.to_string());
      }
      // G(A) = G_0(K) x N_G(A)
      for (int t = 0; t < 200; ++t) {
        auto s    = testing::random_split(p, a, rng);
        auto base = gp_push(aug, s);
        o.require(base.kmatrix() == s.kmatrix() && base.even_log().is_zero(), std::string(f) + ": augmentation");
        for (auto const& c : base.odd_coords()) {
          o.require(c.is_zero(), std::string(f) + ": augmentation of odd coordinates");
        }
        SplitElement k(p, a, s.kword(), GPoint(a, p->lie()), std::vector<WeilElement>(p->g().odd_dim(), a->zero()));
        auto         n = gp_mul(gp_inv(k), s);
        o.require(gp_push(aug, n) == identity_element(p, aug.target()), std::string(f) + ": kernel part");
        o.require(gp_exp(p, gp_log(n)) == n, std::string(f) + ": kernel part is exponential");
        o.require(gp_mul(k, n) == s, std::string(f) + ": reconstruction of " + s.to_string());
      }
    }
    return o;
  }

  Outcome lie_recovery() {
    Outcome o;
    for (auto const* f : {"gl11.json", "heisenberg.json"}) {
      auto p  = fixture(f);
      auto lr = lie_of_psi(p);
      o.require(lr.report, f);
      auto const& g = p->g();
      for (std::size_t x = 0; x < g.dim(); ++x) {
        for (std::size_t y = x; y < g.dim(); ++y) {
          auto it = lr.brackets.find({x, y});
          o.require(it != lr.brackets.end() && it->second == g.bracket_basis(x, y),
                    std::string(f) + ": [" + g.name(x) + "," + g.name(y) + "]");
        }
      }
    }
    auto he = fixture("heisenberg.json");
    o.require(lie_of_psi(he).brackets.at({1, 1}) == testing::vec({2, 0}), "heisenberg: [Y,Y] = 2X");
    return o;
  }

  Outcome omega_iso() {
    Outcome o;
    auto    a = WeilAlgebra::grassmann(3);
    for (auto const* f : {"gl11.json", "heisenberg.json"}) {
      o.require(omega_iso_check(fixture(f), a, 500, 6), f);
    }
    return o;
  }

  Outcome induced() {
    Outcome o;
    auto    a = WeilAlgebra::grassmann(3);
    for (auto const* f : {"gl11.json", "heisenberg.json"}) {
      auto        p = fixture(f);
      auto const& g = p->g();
      auto        v = build_induced_trivial(*p);
      auto const& m = v.module;
      o.require(v.dim() == (std::size_t{1} << g.odd_dim()), std::string(f) + ": dim V");
      for (std::size_t x = 0; x < g.dim(); ++x) {
        for (std::size_t y = 0; y < g.dim(); ++y) {
          Matrix lhs = m.g_action[x] * m.g_action[y];
          Matrix rev = m.g_action[y] * m.g_action[x];
          lhs        = g.parity(x) && g.parity(y) ? lhs + rev : lhs - rev;
          Matrix rhs(v.dim(), v.dim());
          for (std::size_t c = 0; c < g.dim(); ++c) {
            rhs += m.g_action[c] * g.bracket_basis(x, y)[c];
          }
          o.require(lhs == rhs, std::string(f) + ": bracket on " + g.name(x) + ", " + g.name(y));
        }
      }
      testing::Rng rng(8);
      for (int t = 0; t < 50 + static_cast<int>(g.odd_dim()); ++t) {
        Vector y = t < static_cast<int>(g.odd_dim()) ? g.basis_vector(g.odd(static_cast<std::size_t>(t)))
                                                     : testing::random_vector(g.dim(), rng, g.even_dim(), g.dim());
        Matrix ry(v.dim(), v.dim()), rs(v.dim(), v.dim());
        Vector sq = odd_square(g, y);
        for (std::size_t c = 0; c < g.dim(); ++c) {
          ry += m.g_action[c] * y[c];
          rs += m.g_action[c] * sq[c];
        }
        o.require(ry * ry == rs, std::string(f) + ": odd square of " + g.vector_to_string(y));
      }
      for (int t = 0; t < 500; ++t) {
        auto x = testing::random_split(p, a, rng);
        auto y = testing::random_split(p, a, rng);
        o.require(rp_operator(v, gp_mul(x, y)) == rp_operator(v, x) * rp_operator(v, y),
                  std::string(f) + ": r_P on " + x.to_string() + ", " + y.to_string());
      }
    }
    return o;
  }

  Outcome quotients() {
    Outcome o;
    auto    a = WeilAlgebra::grassmann(3);
    for (auto const* f : {"gl11.json", "heisenberg.json"}) {
      auto p = fixture(f);
      for (int n : {1, 2}) {
        o.require(quotient_lemma_check(p, a, {}, n, 100, 50 + n), std::string(f) + " n=" + std::to_string(n));
      }
    }
    return o;
  }

  Outcome transfer() {
    Outcome o;
    for (auto const* f : {"gl11.json", "heisenberg.json"}) {
      auto p = fixture(f);
      o.require(transfer_check(p), f);
      for (PairModule const& m : {defining_module(*p), build_induced_trivial(*p).module}) {
        PairModule back = pair_from_group(p, group_from_pair(p, m));
        o.require(back.space == m.space && back.g_action == m.g_action && back.kpoint_action == m.kpoint_action,
                  std::string(f) + ": module changed by the round trip");
      }
    }
    return o;
  }

}  // namespace

int main() {
  struct Criterion {
    int                      id;
    char const*              title;
    double                   limit;
    std::function<Outcome()> run;
  };
  Criterion const criteria[] = {
      {1, "relation audit, gl(1|1) and heisenberg over grassmann:2/3, 200 instances", 10, relations},
      {2, "global splitting: 500 words of length <= 6 and 500 uniqueness pairs over grassmann:3", 60, splitting},
      {3, "group axioms on 500 triples over grassmann:3", 60, group_axioms},
      {4, "exp/log on 200 samples and Boseck reconstruction over grassmann:3", 30, exp_log},
      {5, "structure constants recovered from kernel points", 10, lie_recovery},
      {6, "omega_A bijective onto the linear realization, 500 samples", 60, omega_iso},
      {7, "induced representation identities, r_P homomorphism on 500 pairs, dim 2^d", 30, induced},
      {8, "quotient lemmas for n = 1, 2 over grassmann:3, 100 trials", 30, quotients},
      {9, "module transfer round trip on the defining module and Lambda(g_1)", 10, transfer},
  };
  bool all = true;
  for (auto const& c : criteria) {
    auto    start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.pass   = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs >= c.limit) {
      o.pass   = false;
      o.detail = "time limit exceeded";
    }
    all = all && o.pass;
    std::printf("criterion %d %s: %s (%.2fs, limit %.0fs)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs,
                c.limit, o.detail.empty() ? "" : "; ", o.detail.c_str());
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
