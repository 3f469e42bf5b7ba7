// Super Harish-Chandra pairs (G+, g) where G+ is generated by finitely many
// invertible even matrices ("K-points") normalizing a faithful image of g.
#ifndef SHCP_PAIR_HPP_
#define SHCP_PAIR_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lie_super.hpp"
#include "matrix.hpp"

namespace shcp {

  struct KPoint {
    std::string           name;
    Matrix                matrix;
    std::optional<Matrix> inverse;
    // Ad(k) on g in the basis of g, when k normalizes rho(g).
    std::optional<Matrix> ad;
  };

  // Word in K-point generators: (generator index, +1 or -1).
  using KWord = std::vector<std::pair<std::size_t, int>>;

  class ShcPair;
  using PairPtr = std::shared_ptr<ShcPair const>;

  class ShcPair {
   public:
    static PairPtr make(std::string name, Representation rho,
                        std::vector<std::pair<std::string, Matrix>> kpoints, bool gaussian = false);

    std::string const& name() const noexcept {
      return name_;
    }
    LiePtr const& lie() const noexcept {
      return rho_.lie();
    }
    LieSuperalgebra const& g() const noexcept {
      return *rho_.lie();
    }
    Representation const& rho() const noexcept {
      return rho_;
    }
    SuperSpace const& space() const noexcept {
      return rho_.space();
    }
    std::vector<KPoint> const& kpoints() const noexcept {
      return kpoints_;
    }
    std::optional<std::size_t> kpoint_index(std::string const& name) const;
    // True if the ground field is Q(i).
    bool gaussian() const noexcept {
      return gaussian_;
    }

   private:
    ShcPair() = default;

    std::string         name_;
    Representation      rho_;
    std::vector<KPoint> kpoints_;
    bool                gaussian_ = false;
  };

  std::vector<Issue> validate_pair(ShcPair const& p);

  Matrix      kword_matrix(ShcPair const& p, KWord const& w);
  KWord       kword_inverse(KWord const& w);
  std::string kword_to_string(ShcPair const& p, KWord const& w);
  // Ad(k) as a matrix on g.
  Matrix kword_ad(ShcPair const& p, KWord const& w);
  // Ad(m) on g for an arbitrary even matrix normalizing rho(g).
  Matrix matrix_ad(ShcPair const& p, Matrix const& m);

  Vector adjoint_action(ShcPair const& p, KWord const& k, Vector const& z);
  // Applies a K-linear map of g coordinatewise to a point.
  GPoint apply_linear(Matrix const& m, GPoint const& x);

  struct PairMorphism {
    PairPtr source;
    PairPtr target;
    Matrix  omega;              // target dim x source dim
    std::vector<KWord> omega_plus;  // one target word per source K-point
    Matrix  d_omega;            // target even dim x source even dim
  };

  std::vector<Issue> validate_pair_morphism(PairMorphism const& m);

}  // namespace shcp

#endif  // SHCP_PAIR_HPP_
