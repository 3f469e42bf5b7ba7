// Weil superalgebras: finite-dimensional supercommutative algebras A = K + N
// with N nilpotent.  Every algebra is stored as a multiplication table over a
// homogeneous basis whose element 0 is the unit; Grassmann algebras, dual
// number extensions and quotients all share this one representation.
#ifndef SHCP_WEIL_HPP_
#define SHCP_WEIL_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace shcp {

  class WeilAlgebra;
  class WeilElement;
  using AlgebraPtr = std::shared_ptr<WeilAlgebra const>;

  using Term   = std::pair<std::uint32_t, Scalar>;
  using Sparse = std::vector<Term>;

  class WeilAlgebra {
   public:
    // Lambda_n, basis = subsets of {1..n} ordered by size then lexicographically.
    static AlgebraPtr grassmann(int n);
    // Parses "grassmann:<n>" and "dual:" prefixes.
    static AlgebraPtr from_descriptor(std::string_view d);

    std::size_t dim() const noexcept {
      return labels_.size();
    }
    int parity(std::size_t b) const {
      return parity_[b];
    }
    std::string const& label(std::size_t b) const {
      return labels_[b];
    }
    std::string const& descriptor() const noexcept {
      return descriptor_;
    }
    // Smallest N with N^N = 0 for the nilradical N.
    int nilpotency_index() const noexcept {
      return nil_index_;
    }
    std::size_t odd_dim() const;
    std::size_t even_dim() const {
      return dim() - odd_dim();
    }

    // b1 * b2 as a sparse combination of basis elements.
    Sparse const& product(std::size_t b1, std::size_t b2) const {
      return table_[b1 * dim() + b2];
    }
    // For tables whose products are all 0 or +-basis.  sign == 0 means zero.
    bool is_monomial() const noexcept {
      return monomial_;
    }
    std::int8_t mono_sign(std::size_t b1, std::size_t b2) const {
      return mono_sign_[b1 * dim() + b2];
    }
    std::uint32_t mono_index(std::size_t b1, std::size_t b2) const {
      return mono_index_[b1 * dim() + b2];
    }

    std::vector<std::string> const& generator_names() const noexcept {
      return gen_names_;
    }
    // "xi3", "eps", "eps2", ...
    std::optional<WeilElement> generator(std::string_view name) const;

    WeilElement one() const;
    WeilElement zero() const;
    WeilElement basis(std::size_t b) const;

    // Shared pointer to this algebra; algebras are always held by AlgebraPtr.
    AlgebraPtr ptr() const {
      return self_.lock();
    }

   private:
    friend struct AlgebraBuilder;
    WeilAlgebra() = default;
    void finalize();

    std::string              descriptor_;
    std::vector<std::string> labels_;
    std::vector<int>         parity_;
    std::vector<Sparse>      table_;
    bool                     monomial_ = false;
    std::vector<std::int8_t> mono_sign_;
    std::vector<std::uint32_t> mono_index_;
    int                        nil_index_ = 1;
    std::vector<std::string>   gen_names_;
    std::vector<Sparse>        gen_values_;
    std::weak_ptr<WeilAlgebra const> self_;
  };

  class WeilElement {
   public:
    WeilElement() = default;
    explicit WeilElement(AlgebraPtr a) : alg_(std::move(a)) {}
    WeilElement(AlgebraPtr a, Sparse terms);
    WeilElement(AlgebraPtr a, Scalar c);

    AlgebraPtr const& algebra() const noexcept {
      return alg_;
    }
    Sparse const& terms() const noexcept {
      return terms_;
    }
    bool is_zero() const noexcept {
      return terms_.empty();
    }
    Scalar coeff(std::size_t b) const;
    // Image under the augmentation A -> K.
    Scalar augment() const {
      return coeff(0);
    }
    bool is_nilpotent() const {
      return augment().is_zero();
    }
    bool is_even() const;
    bool is_odd() const;
    WeilElement even_part() const;
    WeilElement odd_part() const;
    Vector      dense() const;
    std::string to_string() const;

    WeilElement  operator-() const;
    WeilElement& operator+=(WeilElement const& o);
    WeilElement& operator-=(WeilElement const& o);
    WeilElement& operator*=(Scalar const& c);

    friend WeilElement operator+(WeilElement a, WeilElement const& b) {
      return a += b;
    }
    friend WeilElement operator-(WeilElement a, WeilElement const& b) {
      return a -= b;
    }
    friend WeilElement operator*(WeilElement a, Scalar const& c) {
      return a *= c;
    }
    friend WeilElement operator*(Scalar const& c, WeilElement a) {
      return a *= c;
    }
    friend WeilElement operator*(WeilElement const& a, WeilElement const& b);
    friend bool        operator==(WeilElement const& a, WeilElement const& b);
    friend bool        operator!=(WeilElement const& a, WeilElement const& b) {
      return !(a == b);
    }

   private:
    AlgebraPtr alg_;
    Sparse     terms_;
  };

  WeilElement w_mul(WeilElement const& a, WeilElement const& b);
  WeilElement from_dense(AlgebraPtr const& a, Vector const& v);

  // Parity-preserving unital algebra map, stored by images of basis elements.
  class AlgebraMorphism {
   public:
    AlgebraMorphism() = default;
    AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<WeilElement> images);

    static AlgebraMorphism identity(AlgebraPtr const& a);
    static AlgebraMorphism augmentation(AlgebraPtr const& a);
    // Lambda_m -> B, xi_k -> images[k-1]; images must be odd.
    static AlgebraMorphism substitution(AlgebraPtr const& grassmann_source,
                                        AlgebraPtr const& target,
                                        std::vector<WeilElement> const& images);

    AlgebraPtr const& source() const noexcept {
      return source_;
    }
    AlgebraPtr const& target() const noexcept {
      return target_;
    }
    WeilElement operator()(WeilElement const& x) const;
    AlgebraMorphism then(AlgebraMorphism const& next) const;
    // Empty if unital, parity preserving and multiplicative; else a reason.
    std::optional<std::string> defect() const;

   private:
    AlgebraPtr               source_;
    AlgebraPtr               target_;
    std::vector<WeilElement> images_;
  };

  struct DualExtension {
    AlgebraPtr      algebra;  // A[eps]
    WeilElement     eps;
    AlgebraMorphism include;  // i_A : A -> A[eps]
    AlgebraMorphism drop;     // p_A : A[eps] -> A, eps -> 0
  };

  DualExtension adjoin_dual_number(AlgebraPtr const& a);
  AlgebraPtr    build_grassmann(int n);

  // Echelon basis (pivot on the largest basis index) of the n-th power of the
  // ideal generated by gens.
  std::vector<WeilElement> ideal_power_basis(AlgebraPtr const& a,
                                             std::vector<WeilElement> const& gens,
                                             int n);

  struct Quotient {
    AlgebraPtr      algebra;
    AlgebraMorphism projection;
  };

  Quotient quotient_algebra(AlgebraPtr const& a, std::vector<WeilElement> const& gens, int n);

  // True if the two lists span the same subspace.
  bool same_span(std::vector<WeilElement> const& x, std::vector<WeilElement> const& y);

  // Filtration by the powers of an ideal; degree(x) is the largest d with x in
  // a^d, capped at the first power that vanishes.
  class IdealFiltration {
   public:
    IdealFiltration(AlgebraPtr a, std::vector<WeilElement> const& gens);
    int  degree(WeilElement const& x) const;
    bool contains(WeilElement const& x, int d) const;
    int  bound() const noexcept {
      return static_cast<int>(powers_.size());
    }

   private:
    AlgebraPtr                            alg_;
    std::vector<std::vector<WeilElement>> powers_;  // powers_[d] spans a^d
  };

  // Generators of the nilradical: the non-unit basis elements.
  std::vector<WeilElement> nilradical_generators(AlgebraPtr const& a);

}  // namespace shcp

#endif  // SHCP_WEIL_HPP_
