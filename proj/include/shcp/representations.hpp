// Modules over a pair: PBW straightening in U(g) = (odd exterior part) (x)
// U(g_0), the induced module U(g) (x)_{U(g_0)} M_0 ~ Lambda(g_1) (x) M_0, the
// action of G_P(A) on a pair module, and the transfer of module structures
// between pairs and groups.
#ifndef SHCP_REPRESENTATIONS_HPP_
#define SHCP_REPRESENTATIONS_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lie_super.hpp"
#include "pair.hpp"
#include "supergroup.hpp"

namespace shcp {

  // y_{odd[0]} ... y_{odd[r-1]} x_{even[0]} ... x_{even[s-1]}; both lists hold
  // basis indices of g, odd strictly increasing, even non-decreasing.
  struct PbwMonomial {
    std::vector<std::size_t> odd;
    std::vector<std::size_t> even;

    friend auto operator<=>(PbwMonomial const&, PbwMonomial const&) = default;
  };
  using PbwSum = std::map<PbwMonomial, Scalar>;

  class PbwStraightener {
   public:
    explicit PbwStraightener(LiePtr g) : g_(std::move(g)) {}

    LiePtr const& lie() const noexcept {
      return g_;
    }
    // Normal form of the product e_{w[0]} ... e_{w[n-1]}.
    PbwSum straighten(std::vector<std::size_t> const& word) const;
    PbwSum multiply(PbwSum const& x, PbwSum const& y) const;

   private:
    LiePtr                                                g_;
    mutable std::map<std::vector<std::size_t>, PbwSum>    cache_;
  };

  PbwSum      pbw_straighten(LiePtr const& g, std::vector<std::size_t> const& word);
  std::string pbw_to_string(LieSuperalgebra const& g, PbwSum const& x);

  // A module over the pair: matrices for every basis element of g and for
  // every K-point generator.
  struct PairModule {
    SuperSpace          space;
    std::vector<Matrix> g_action;
    std::vector<Matrix> kpoint_action;
  };

  // A module over (G_+, g_0): matrices for the even basis of g and the K-points.
  struct EvenModule {
    SuperSpace          space;
    std::vector<Matrix> g0_action;
    std::vector<Matrix> kpoint_action;
  };

  EvenModule trivial_even_module(ShcPair const& p);
  // The defining representation as a pair module.
  PairModule defining_module(ShcPair const& p);

  std::vector<Issue> validate_even_module(ShcPair const& p, EvenModule const& m);
  std::vector<Issue> validate_pair_module(ShcPair const& p, PairModule const& m);

  struct InducedModule {
    PairModule module;
    // Basis vector n is y_{odd_part[n]} (x) m_{base_index[n]}; even vectors first.
    std::vector<std::vector<std::size_t>> odd_part;
    std::vector<std::size_t>              base_index;
    std::vector<std::string>              labels;
    std::size_t                           cyclic = 0;

    std::size_t dim() const noexcept {
      return odd_part.size();
    }
    // Position of y_S (x) m_j.
    std::optional<std::size_t> find(std::vector<std::size_t> const& odd, std::size_t j = 0) const;
  };

  InducedModule build_induced_trivial(ShcPair const& p);
  InducedModule induce_from_even(ShcPair const& p, EvenModule const& m0);

  Matrix module_kword(PairModule const& m, KWord const& w);
  // Action of one generator of G_P(A) on M(A).
  AOperator module_generator(ShcPair const& p, PairModule const& m, AlgebraPtr const& a, Generator const& g);
  // k exp(T) prod (1 + eta_i Y_i) acting on M(A).
  AOperator module_operator(ShcPair const& p, PairModule const& m, SplitElement const& s);
  AOperator rp_operator(InducedModule const& v, SplitElement const& s);
  // The cyclic vector 1 (x) m_0 as an element of V(A).
  SuperVector cyclic_vector(InducedModule const& v, AlgebraPtr const& a);

  // A G_P-module given by the action of generators at every algebra.
  struct GroupModule {
    SuperSpace                                                       space;
    std::function<AOperator(AlgebraPtr const&, Generator const&)> act;
  };

  GroupModule group_from_pair(PairPtr const& p, PairModule const& m);
  // Restricts to K-points, differentiates even exponentials along a dual
  // number and odd factors along a fresh Grassmann generator.  Throws if the
  // result is not a pair module or does not reproduce the group action on a
  // set of probe generators.
  PairModule pair_from_group(PairPtr const& p, GroupModule const& m);

}  // namespace shcp

#endif  // SHCP_REPRESENTATIONS_HPP_
