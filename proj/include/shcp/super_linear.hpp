// Super vector spaces K^{p|q} (even basis vectors first), their matrices and
// the even part of A (x) End(V) with the Koszul sign rule
//   (a (x) M)(b (x) N) = (-1)^{|M||b|} ab (x) MN.
#ifndef SHCP_SUPER_LINEAR_HPP_
#define SHCP_SUPER_LINEAR_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "weil.hpp"

namespace shcp {

  struct SuperSpace {
    std::size_t even = 0;
    std::size_t odd  = 0;

    std::size_t dim() const noexcept {
      return even + odd;
    }
    int parity(std::size_t i) const noexcept {
      return i < even ? 0 : 1;
    }
    friend bool operator==(SuperSpace const&, SuperSpace const&) = default;
  };

  // 0 or 1 for homogeneous matrices (the zero matrix is even), -1 if mixed.
  int    matrix_parity(SuperSpace const& v, Matrix const& m);
  Matrix even_block(SuperSpace const& v, Matrix const& m);
  Matrix odd_block(SuperSpace const& v, Matrix const& m);
  // Super commutator MN - (-1)^{|M||N|} NM of homogeneous matrices.
  Matrix super_commutator(SuperSpace const& v, Matrix const& m, Matrix const& n);

  // Elements of V(A) = A (x) V written as sum_i coords[i] (x) e_i.
  using SuperVector = std::vector<WeilElement>;

  class AOperator {
   public:
    using Entry = std::pair<std::uint32_t, Matrix>;

    AOperator() = default;
    AOperator(AlgebraPtr a, SuperSpace v) : alg_(std::move(a)), space_(v) {}

    static AOperator identity(AlgebraPtr const& a, SuperSpace const& v);
    // 1 (x) m
    static AOperator constant(AlgebraPtr const& a, SuperSpace const& v, Matrix const& m);
    // x (x) m
    static AOperator tensor(WeilElement const& x, SuperSpace const& v, Matrix const& m);

    AlgebraPtr const& algebra() const noexcept {
      return alg_;
    }
    SuperSpace const& space() const noexcept {
      return space_;
    }
    std::vector<Entry> const& terms() const noexcept {
      return terms_;
    }
    bool   is_zero() const noexcept {
      return terms_.empty();
    }
    Matrix coeff(std::size_t b) const;
    // Image under the augmentation of A.
    Matrix augment() const {
      return coeff(0);
    }
    // True if every term pairs basis parity with matrix parity.
    bool        is_even() const;
    std::string to_string() const;

    AOperator& operator+=(AOperator const& o);
    AOperator& operator-=(AOperator const& o);
    AOperator& operator*=(Scalar const& c);
    AOperator  operator-() const;

    friend AOperator operator+(AOperator a, AOperator const& b) {
      return a += b;
    }
    friend AOperator operator-(AOperator a, AOperator const& b) {
      return a -= b;
    }
    friend AOperator operator*(AOperator a, Scalar const& c) {
      return a *= c;
    }
    friend AOperator operator*(AOperator const& s, AOperator const& t);
    friend bool      operator==(AOperator const& a, AOperator const& b);
    friend bool      operator!=(AOperator const& a, AOperator const& b) {
      return !(a == b);
    }

   private:
    void add_term(std::uint32_t b, Matrix m);

    AlgebraPtr         alg_;
    SuperSpace         space_;
    std::vector<Entry> terms_;  // sorted by basis index, no zero matrices
  };

  AOperator koszul_compose(AOperator const& s, AOperator const& t);
  // exp of an operator with nilpotent augmentation.
  AOperator op_exp(AOperator const& z);
  // log of an operator whose augmentation is the identity.
  AOperator op_log(AOperator const& u);
  // Inverse of an operator whose augmentation is invertible.
  AOperator op_inverse(AOperator const& u);
  SuperVector op_apply(AOperator const& s, SuperVector const& v);

}  // namespace shcp

#endif  // SHCP_SUPER_LINEAR_HPP_
