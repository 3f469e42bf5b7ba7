#include "shcp/matrix.hpp"

#include <sstream>

namespace shcp {

  Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
  }

  Matrix Matrix::diagonal(std::vector<Scalar> const& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      m(i, i) = d[i];
    }
    return m;
  }

  bool Matrix::is_zero() const {
    for (auto const& x : data_) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  Matrix Matrix::conj_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        t(j, i) = (*this)(i, j).conj();
      }
    }
    return t;
  }

  Vector Matrix::apply(Vector const& v) const {
    if (v.size() != cols_) {
      throw Error("matrix/vector size mismatch");
    }
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!v[j].is_zero() && !(*this)(i, j).is_zero()) {
          r[i] += (*this)(i, j) * v[j];
        }
      }
    }
    return r;
  }

  std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) {
        os << (j ? ", " : "") << (*this)(i, j);
      }
      os << "]";
    }
    os << "]";
    return os.str();
  }

  Matrix& Matrix::operator+=(Matrix const& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error("matrix size mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!o.data_[k].is_zero()) {
        data_[k] += o.data_[k];
      }
    }
    return *this;
  }

  Matrix& Matrix::operator-=(Matrix const& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error("matrix size mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!o.data_[k].is_zero()) {
        data_[k] -= o.data_[k];
      }
    }
    return *this;
  }

  Matrix& Matrix::operator*=(Scalar const& c) {
    if (c.is_one()) {
      return *this;
    }
    for (auto& x : data_) {
      if (!x.is_zero()) {
        x *= c;
      }
    }
    return *this;
  }

  Matrix Matrix::operator-() const {
    Matrix r(*this);
    for (auto& x : r.data_) {
      if (!x.is_zero()) {
        x = -x;
      }
    }
    return r;
  }

  Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols_ != b.rows_) {
      throw Error("matrix size mismatch in product");
    }
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Scalar const& x = a(i, k);
        if (x.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) {
          Scalar const& y = b(k, j);
          if (!y.is_zero()) {
            r(i, j) += x * y;
          }
        }
      }
    }
    return r;
  }

  std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t              row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      std::size_t p = row;
      while (p < m.rows() && m(p, col).is_zero()) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      if (p != row) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          std::swap(m(p, j), m(row, j));
        }
      }
      Scalar inv = m(row, col).inverse();
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(row, j) *= inv;
      }
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == row || m(r, col).is_zero()) {
          continue;
        }
        Scalar f = m(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) {
          if (!m(row, j).is_zero()) {
            m(r, j) -= f * m(row, j);
          }
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank(Matrix m) {
    return rref(m).size();
  }

  std::optional<Matrix> inverse(Matrix const& m) {
    if (!m.is_square()) {
      return std::nullopt;
    }
    std::size_t n = m.rows();
    Matrix      aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) = m(i, j);
      }
      aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) {
      return std::nullopt;
    }
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        r(i, j) = aug(i, n + j);
      }
    }
    return r;
  }

  std::optional<Vector> solve(Matrix const& m, Vector const& b) {
    if (b.size() != m.rows()) {
      throw Error("solve: size mismatch");
    }
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        aug(i, j) = m(i, j);
      }
      aug(i, m.cols()) = b[i];
    }
    auto   piv = rref(aug);
    Vector x(m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] == m.cols()) {
        return std::nullopt;
      }
      x[piv[r]] = aug(r, m.cols());
    }
    return x;
  }

  bool is_zero(Vector const& v) {
    for (auto const& x : v) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  Vector add(Vector a, Vector const& b) {
    if (a.size() != b.size()) {
      throw Error("vector size mismatch");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] += b[i];
    }
    return a;
  }

  Vector scale(Vector a, Scalar const& c) {
    for (auto& x : a) {
      x *= c;
    }
    return a;
  }

}  // namespace shcp
