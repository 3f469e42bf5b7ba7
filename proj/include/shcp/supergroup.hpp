// The group G_P(A) of a super Harish-Chandra pair, presented by generators
// and relations, with a constructive normal form
//   g+ * prod_i (1 + eta_i Y_i),  g+ = k exp(T),  eta_i odd,
// in the fixed order of the odd basis.
#ifndef SHCP_SUPERGROUP_HPP_
#define SHCP_SUPERGROUP_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lie_super.hpp"
#include "pair.hpp"
#include "super_linear.hpp"
#include "weil.hpp"

namespace shcp {

  struct GenKPoint {
    KWord word;
  };
  // exp(T) with T nilpotent and supported on g_0.
  struct GenEvenExp {
    GPoint t;
  };
  // (1 + eta Y_i), i indexing the odd basis.
  struct GenOdd {
    WeilElement eta;
    std::size_t index;
  };
  // (1 + eta Y) with Y supported on g_1 with even coefficients in A.
  struct GenOddGeneral {
    WeilElement eta;
    GPoint      y;
  };

  using Generator = std::variant<GenKPoint, GenEvenExp, GenOdd, GenOddGeneral>;
  using GroupWord = std::vector<Generator>;

  class SplitElement {
   public:
    SplitElement() = default;
    SplitElement(PairPtr p, AlgebraPtr a, KWord k, GPoint t, std::vector<WeilElement> eta);

    PairPtr const& pair() const noexcept {
      return pair_;
    }
    AlgebraPtr const& algebra() const noexcept {
      return alg_;
    }
    KWord const& kword() const noexcept {
      return k_;
    }
    Matrix const& kmatrix() const noexcept {
      return kmat_;
    }
    // log of the unipotent even factor, supported on g_0.
    GPoint const& even_log() const noexcept {
      return t_;
    }
    std::vector<WeilElement> const& odd_coords() const noexcept {
      return eta_;
    }
    // k exp(rho(T)) in (A (x) End V)_0; determines the even factor.
    AOperator const& even_operator() const noexcept {
      return even_;
    }
    GroupWord   to_word() const;
    std::string to_string() const;

    friend bool operator==(SplitElement const& a, SplitElement const& b) {
      return a.even_ == b.even_ && a.eta_ == b.eta_;
    }
    friend bool operator!=(SplitElement const& a, SplitElement const& b) {
      return !(a == b);
    }

   private:
    PairPtr                  pair_;
    AlgebraPtr               alg_;
    KWord                    k_;
    Matrix                   kmat_;
    GPoint                   t_;
    std::vector<WeilElement> eta_;
    AOperator                even_;
  };

  // Instrumentation of the reordering phase.  Every odd factor carries a
  // generation: input factors are 0, a correction created from a pair gets
  // one more than the larger generation of the pair, factors spawned while
  // moving a correction inherit its generation.  With a the ideal generated
  // by the input's odd coefficients, the least a-degree of the corrections of
  // each generation must strictly increase.
  struct NormalizeTrace {
    struct Correction {
      int generation;
      int degree;
    };
    std::vector<Correction> corrections;
    std::size_t             swaps      = 0;
    std::size_t             merges     = 0;
    bool                    measure_ok = true;
    std::string             detail;
  };

  void         validate_word(ShcPair const& p, AlgebraPtr const& a, GroupWord const& w);
  SplitElement normalize(PairPtr const& p, AlgebraPtr const& a, GroupWord const& w,
                         NormalizeTrace* trace = nullptr);
  SplitElement identity_element(PairPtr const& p, AlgebraPtr const& a);
  SplitElement gp_mul(SplitElement const& x, SplitElement const& y);
  SplitElement gp_inv(SplitElement const& x);
  // exp of a nilpotent point of L_g(A).
  SplitElement gp_exp(PairPtr const& p, GPoint const& z);
  // Inverse of gp_exp; the K-point factor must be trivial.
  GPoint       gp_log(SplitElement const& s);
  SplitElement gp_push(AlgebraMorphism const& phi, SplitElement const& s);

  struct OddSubgroupFactor {
    GPoint                   t;  // in A_1^[2] (x) [g_1, g_1]
    std::vector<WeilElement> eta;
  };
  // Empty if s lies in exp(A_1^[2] (x) [g_1,g_1]) * prod(1 + A_1 Y_i); else a reason.
  std::optional<std::string> odd_subgroup_defect(SplitElement const& s);
  // Factorization of a word made of odd factors and exp(A_1^[2] (x) [g_1,g_1]).
  OddSubgroupFactor factor_odd_subgroup(PairPtr const& p, AlgebraPtr const& a, GroupWord const& w);

  // Product of the images of the generators under the defining representation.
  AOperator word_operator(ShcPair const& p, AlgebraPtr const& a, GroupWord const& w);
  // Image of a split element under the defining representation.
  AOperator linearize(SplitElement const& s);

}  // namespace shcp

#endif  // SHCP_SUPERGROUP_HPP_
