// Executable checks that G_P recovers its pair (Lie functor on kernel points)
// and that G_P is carried bijectively onto its linear realization, plus the
// relation audit and the quotient lemmas used in the splitting argument.
#ifndef SHCP_EQUIVALENCE_HPP_
#define SHCP_EQUIVALENCE_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pair.hpp"
#include "representations.hpp"
#include "supergroup.hpp"

namespace shcp {

  struct CheckResult {
    std::string   name;
    bool          pass = true;
    std::string   witness;  // first failing instance
    std::size_t   trials = 0;
    std::uint64_t seed   = 0;
    double        seconds = 0;
    std::string   note;
  };

  struct CheckReport {
    std::vector<CheckResult> checks;

    bool pass() const;
    void append(CheckReport const& other);
  };

  // Seeded source of random test data.  Coefficients are integers in -3..3 on
  // a support where every slot is kept with probability 1/2.
  class Sampler {
   public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int    integer(int lo, int hi);
    bool   coin();
    Scalar coefficient();
    // parity -1 samples both parts; nilpotent drops the unit coefficient.
    WeilElement element(AlgebraPtr const& a, int parity, bool nilpotent);
    // K-vector supported on basis indices [from, to).
    Vector vector(std::size_t dim, std::size_t from, std::size_t to);
    // Nilpotent point of A_0 (x) g_0.
    GPoint even_nilpotent(AlgebraPtr const& a, LiePtr const& g);
    // Point of n_g(A): nilpotent even coefficients on g_0, odd ones on g_1.
    GPoint nilpotent_point(AlgebraPtr const& a, LiePtr const& g);
    KWord        kword(ShcPair const& p, int max_len);
    SplitElement split(PairPtr const& p, AlgebraPtr const& a);
    SplitElement even_split(PairPtr const& p, AlgebraPtr const& a);
    Generator    generator(ShcPair const& p, AlgebraPtr const& a);
    GroupWord    word(ShcPair const& p, AlgebraPtr const& a, int max_len);

   private:
    std::uint64_t   bits();
    std::mt19937_64 rng_;
  };

  struct LieRecovery {
    // [e_a, e_b] read off from commutators of kernel points, for a <= b.
    std::map<std::pair<std::size_t, std::size_t>, Vector> brackets;
    // Ad(k) on g read off from conjugating kernel points, per K-point.
    std::vector<Matrix> adjoint;
    CheckReport         report;
  };

  LieRecovery lie_of_psi(PairPtr const& p);
  CheckReport omega_iso_check(PairPtr const& p, AlgebraPtr const& a, std::size_t samples, std::uint64_t seed);
  CheckReport relations_check(PairPtr const& p, AlgebraPtr const& a, std::size_t trials, std::uint64_t seed);
  // gens empty: every trial samples two odd generators of the ideal.
  CheckReport quotient_lemma_check(PairPtr const& p, AlgebraPtr const& a, std::vector<WeilElement> const& gens,
                                   int n, std::size_t trials, std::uint64_t seed);
  // pair -> group -> pair on the defining module, on Lambda(g_1) and on the trivial module.
  CheckReport transfer_check(PairPtr const& p);

}  // namespace shcp

#endif  // SHCP_EQUIVALENCE_HPP_
