// Dense matrices over exact scalars and the small amount of linear algebra
// the rest of the library needs.
#ifndef SHCP_MATRIX_HPP_
#define SHCP_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace shcp {

  using Vector = std::vector<Scalar>;

  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    // Single matrix unit E_{ij} (zero based).
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
    static Matrix diagonal(std::vector<Scalar> const& d);

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    Scalar& operator()(std::size_t i, std::size_t j) {
      return data_[i * cols_ + j];
    }
    Scalar const& operator()(std::size_t i, std::size_t j) const {
      return data_[i * cols_ + j];
    }

    bool is_zero() const;
    bool is_square() const noexcept {
      return rows_ == cols_;
    }

    Matrix transpose() const;
    Matrix conj_transpose() const;
    Vector apply(Vector const& v) const;
    // Row-major flattening.
    Vector flatten() const {
      return data_;
    }
    std::string to_string() const;

    Matrix& operator+=(Matrix const& o);
    Matrix& operator-=(Matrix const& o);
    Matrix& operator*=(Scalar const& c);
    Matrix  operator-() const;

    friend Matrix operator+(Matrix a, Matrix const& b) {
      return a += b;
    }
    friend Matrix operator-(Matrix a, Matrix const& b) {
      return a -= b;
    }
    friend Matrix operator*(Matrix a, Scalar const& c) {
      return a *= c;
    }
    friend Matrix operator*(Scalar const& c, Matrix a) {
      return a *= c;
    }
    friend Matrix operator*(Matrix const& a, Matrix const& b);
    friend bool   operator==(Matrix const& a, Matrix const& b) {
      return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(Matrix const& a, Matrix const& b) {
      return !(a == b);
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector      data_;
  };

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref(Matrix& m);
  std::size_t              rank(Matrix m);
  std::optional<Matrix>    inverse(Matrix const& m);
  // Some x with m x = b, if one exists.
  std::optional<Vector> solve(Matrix const& m, Vector const& b);

  bool   is_zero(Vector const& v);
  Vector add(Vector a, Vector const& b);
  Vector scale(Vector a, Scalar const& c);

}  // namespace shcp

#endif  // SHCP_MATRIX_HPP_
