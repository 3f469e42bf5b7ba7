// Finite-dimensional Lie superalgebras given by structure constants over a
// homogeneous basis (even elements first), their A-points A (x) g, and the
// sign-rule bracket [a (x) X, b (x) X'] = (-1)^{|X||b|} ab (x) [X, X'].
#ifndef SHCP_LIE_SUPER_HPP_
#define SHCP_LIE_SUPER_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "super_linear.hpp"
#include "weil.hpp"

namespace shcp {

  class LieSuperalgebra;
  using LiePtr = std::shared_ptr<LieSuperalgebra const>;

  class LieSuperalgebra {
   public:
    // brackets[(a, b)] = coordinates of [e_a, e_b].  Entries not given are
    // filled from the swapped entry by super antisymmetry, else zero.
    static LiePtr make(std::vector<std::string> even_names,
                       std::vector<std::string> odd_names,
                       std::map<std::pair<std::size_t, std::size_t>, Vector> const& brackets);

    std::size_t dim() const noexcept {
      return names_.size();
    }
    std::size_t even_dim() const noexcept {
      return n_even_;
    }
    std::size_t odd_dim() const noexcept {
      return dim() - n_even_;
    }
    int parity(std::size_t b) const noexcept {
      return b < n_even_ ? 0 : 1;
    }
    // Index of the i-th odd basis element.
    std::size_t odd(std::size_t i) const noexcept {
      return n_even_ + i;
    }
    std::string const& name(std::size_t b) const {
      return names_[b];
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::optional<std::size_t> index_of(std::string const& name) const;

    Vector const& bracket_basis(std::size_t a, std::size_t b) const {
      return table_[a * dim() + b];
    }
    // Bilinear extension to K-vectors.
    Vector bracket(Vector const& x, Vector const& y) const;
    Vector basis_vector(std::size_t b) const;
    // 0 or 1 for homogeneous vectors (zero is even), -1 if mixed.
    int         vector_parity(Vector const& x) const;
    std::string vector_to_string(Vector const& x) const;

   private:
    LieSuperalgebra() = default;

    std::vector<std::string> names_;
    std::size_t              n_even_ = 0;
    std::vector<Vector>      table_;
  };

  struct Issue {
    std::string check;
    std::string witness;
  };

  // Parity additivity, super antisymmetry, super Jacobi.
  std::vector<Issue> validate_superalgebra(LieSuperalgebra const& g);
  // Y^<2> = [Y, Y]/2 for Y in g_1.
  Vector odd_square(LieSuperalgebra const& g, Vector const& y);

  // Element of A (x) g, stored by coordinates in A.
  class GPoint {
   public:
    GPoint() = default;
    GPoint(AlgebraPtr a, LiePtr g);
    GPoint(AlgebraPtr a, LiePtr g, std::vector<WeilElement> coords);
    // x (x) v for a K-vector v.
    static GPoint tensor(WeilElement const& x, LiePtr const& g, Vector const& v);

    AlgebraPtr const& algebra() const noexcept {
      return alg_;
    }
    LiePtr const& lie() const noexcept {
      return g_;
    }
    std::vector<WeilElement> const& coords() const noexcept {
      return coords_;
    }
    WeilElement const& operator[](std::size_t b) const {
      return coords_[b];
    }
    bool is_zero() const;
    // Member of L_g(A) = (A (x) g)_0.
    bool is_even() const;
    // Every coordinate lies in the nilradical.
    bool is_nilpotent() const;
    // Components along even and odd basis elements.
    GPoint      even_component() const;
    GPoint      odd_component() const;
    std::string to_string() const;

    GPoint& operator+=(GPoint const& o);
    GPoint& operator-=(GPoint const& o);
    GPoint& operator*=(Scalar const& c);
    GPoint  operator-() const;
    // Left multiplication by an even element of A.
    GPoint scaled(WeilElement const& a) const;

    friend GPoint operator+(GPoint a, GPoint const& b) {
      return a += b;
    }
    friend GPoint operator-(GPoint a, GPoint const& b) {
      return a -= b;
    }
    friend GPoint operator*(GPoint a, Scalar const& c) {
      return a *= c;
    }
    friend bool operator==(GPoint const& a, GPoint const& b) {
      return a.g_ == b.g_ && a.coords_ == b.coords_;
    }
    friend bool operator!=(GPoint const& a, GPoint const& b) {
      return !(a == b);
    }

   private:
    AlgebraPtr               alg_;
    LiePtr                   g_;
    std::vector<WeilElement> coords_;
  };

  GPoint point_bracket(GPoint const& x, GPoint const& y);
  // exp(ad T)(y) for nilpotent T in L_g(A)_0-part.
  GPoint exp_ad(GPoint const& t, GPoint const& y);

  struct BoseckSplit {
    Vector base;       // augmentation image in g_0
    GPoint nilpotent;  // in n_g(A)
  };
  BoseckSplit boseck_split_point(GPoint const& x);
  // Largest d with x in a^d (x) g, where a is generated by gens.
  int filtration_degree(GPoint const& x, std::vector<WeilElement> const& gens);

  // A faithful representation g -> gl(V) with a left inverse used to pull
  // operators back to A (x) g.
  class Representation {
   public:
    Representation() = default;
    Representation(LiePtr g, SuperSpace v, std::vector<Matrix> images);

    LiePtr const& lie() const noexcept {
      return g_;
    }
    SuperSpace const& space() const noexcept {
      return v_;
    }
    Matrix const& image(std::size_t b) const {
      return images_[b];
    }
    std::vector<Matrix> const& images() const noexcept {
      return images_;
    }
    bool is_injective() const noexcept {
      return injective_;
    }
    Matrix of(Vector const& x) const;
    // Preimage of a matrix, if it lies in rho(g).
    std::optional<Vector> preimage(Matrix const& m) const;
    AOperator             apply(GPoint const& x) const;
    // Preimage of an operator in A (x) rho(g); throws otherwise.
    GPoint pullback(AOperator const& op) const;

   private:
    LiePtr              g_;
    SuperSpace          v_;
    std::vector<Matrix> images_;
    bool                injective_ = false;
    Matrix              columns_;  // vec(rho(e_b)) as columns
    Matrix              left_inverse_;
  };

  // log(exp(x) exp(y)) for nilpotent x, y, computed through rho.
  GPoint bch_log(Representation const& rho, GPoint const& x, GPoint const& y);

}  // namespace shcp

#endif  // SHCP_LIE_SUPER_HPP_
