#include "shcp/super_linear.hpp"

#include <algorithm>
#include <sstream>

namespace shcp {

  namespace {
    void check_square(SuperSpace const& v, Matrix const& m) {
      if (m.rows() != v.dim() || m.cols() != v.dim()) {
        throw Error("matrix does not match the super space dimension");
      }
    }

    // Even block minus odd block: the matrix seen past an odd coefficient.
    Matrix twisted(SuperSpace const& v, Matrix m) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (v.parity(i) != v.parity(j) && !m(i, j).is_zero()) {
            m(i, j) = -m(i, j);
          }
        }
      }
      return m;
    }

    void same_shape(AOperator const& a, AOperator const& b) {
      if (a.algebra() != b.algebra() || !(a.space() == b.space())) {
        throw Error("operators over different algebras or spaces");
      }
    }
  }  // namespace

  int matrix_parity(SuperSpace const& v, Matrix const& m) {
    check_square(v, m);
    bool even = false, odd = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m(i, j).is_zero()) {
          (v.parity(i) == v.parity(j) ? even : odd) = true;
        }
      }
    }
    if (even && odd) {
      return -1;
    }
    return odd ? 1 : 0;
  }

  Matrix even_block(SuperSpace const& v, Matrix const& m) {
    check_square(v, m);
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (v.parity(i) == v.parity(j)) {
          r(i, j) = m(i, j);
        }
      }
    }
    return r;
  }

  Matrix odd_block(SuperSpace const& v, Matrix const& m) {
    return m - even_block(v, m);
  }

  Matrix super_commutator(SuperSpace const& v, Matrix const& m, Matrix const& n) {
    int pm = matrix_parity(v, m), pn = matrix_parity(v, n);
    if (pm < 0 || pn < 0) {
      throw Error("super commutator of inhomogeneous matrices");
    }
    Matrix mn = m * n, nm = n * m;
    return (pm && pn) ? mn + nm : mn - nm;
  }

  AOperator AOperator::identity(AlgebraPtr const& a, SuperSpace const& v) {
    return constant(a, v, Matrix::identity(v.dim()));
  }

  AOperator AOperator::constant(AlgebraPtr const& a, SuperSpace const& v, Matrix const& m) {
    check_square(v, m);
    AOperator r(a, v);
    r.add_term(0, m);
    return r;
  }

  AOperator AOperator::tensor(WeilElement const& x, SuperSpace const& v, Matrix const& m) {
    check_square(v, m);
    AOperator r(x.algebra(), v);
    for (auto const& [b, c] : x.terms()) {
      r.add_term(b, m * c);
    }
    return r;
  }

  void AOperator::add_term(std::uint32_t b, Matrix m) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b, [](Entry const& e, std::uint32_t x) {
      return e.first < x;
    });
    if (it != terms_.end() && it->first == b) {
      it->second += m;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    } else if (!m.is_zero()) {
      terms_.insert(it, Entry(b, std::move(m)));
    }
  }

  Matrix AOperator::coeff(std::size_t b) const {
    for (auto const& [k, m] : terms_) {
      if (k == b) {
        return m;
      }
    }
    return Matrix(space_.dim(), space_.dim());
  }

  bool AOperator::is_even() const {
    for (auto const& [b, m] : terms_) {
      if (matrix_parity(space_, m) != alg_->parity(b)) {
        return false;
      }
    }
    return true;
  }

  std::string AOperator::to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& [b, m] : terms_) {
      os << (first ? "" : " + ") << alg_->label(b) << "*" << m.to_string();
      first = false;
    }
    return os.str();
  }

  AOperator& AOperator::operator+=(AOperator const& o) {
    same_shape(*this, o);
    for (auto const& [b, m] : o.terms_) {
      add_term(b, m);
    }
    return *this;
  }

  AOperator& AOperator::operator-=(AOperator const& o) {
    same_shape(*this, o);
    for (auto const& [b, m] : o.terms_) {
      add_term(b, -m);
    }
    return *this;
  }

  AOperator& AOperator::operator*=(Scalar const& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) {
      t.second *= c;
    }
    return *this;
  }

  AOperator AOperator::operator-() const {
    AOperator r(*this);
    for (auto& t : r.terms_) {
      t.second = -t.second;
    }
    return r;
  }

  AOperator operator*(AOperator const& s, AOperator const& t) {
    same_shape(s, t);
    auto const&         alg = *s.alg_;
    std::size_t         n   = s.space_.dim();
    std::vector<Matrix> acc(alg.dim());
    std::vector<bool>   hit(alg.dim(), false);
    for (auto const& [m, mm] : s.terms_) {
      Matrix tw = twisted(s.space_, mm);
      for (auto const& [k, nn] : t.terms_) {
        Matrix prod = (alg.parity(k) ? tw : mm) * nn;
        if (prod.is_zero()) {
          continue;
        }
        auto accumulate = [&](std::uint32_t idx, Scalar const& c) {
          if (!hit[idx]) {
            acc[idx] = Matrix(n, n);
            hit[idx] = true;
          }
          if (c.is_one()) {
            acc[idx] += prod;
          } else if ((-c).is_one()) {
            acc[idx] -= prod;
          } else {
            acc[idx] += prod * c;
          }
        };
        if (alg.is_monomial()) {
          auto sg = alg.mono_sign(m, k);
          if (sg != 0) {
            accumulate(alg.mono_index(m, k), Scalar(sg));
          }
        } else {
          for (auto const& [idx, c] : alg.product(m, k)) {
            accumulate(idx, c);
          }
        }
      }
    }
    AOperator r(s.alg_, s.space_);
    for (std::uint32_t b = 0; b < alg.dim(); ++b) {
      if (hit[b] && !acc[b].is_zero()) {
        r.terms_.emplace_back(b, std::move(acc[b]));
      }
    }
    return r;
  }

  AOperator koszul_compose(AOperator const& s, AOperator const& t) {
    return s * t;
  }

  bool operator==(AOperator const& a, AOperator const& b) {
    return a.alg_ == b.alg_ && a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  AOperator op_exp(AOperator const& z) {
    if (!z.augment().is_zero()) {
      throw Error("op_exp: augmentation is not nilpotent");
    }
    AOperator result = AOperator::identity(z.algebra(), z.space());
    AOperator power  = result;
    for (int k = 1; k <= z.algebra()->nilpotency_index(); ++k) {
      power = power * z * Scalar(1, k);
      if (power.is_zero()) {
        break;
      }
      result += power;
    }
    return result;
  }

  AOperator op_log(AOperator const& u) {
    AOperator n = u - AOperator::identity(u.algebra(), u.space());
    if (!n.augment().is_zero()) {
      throw Error("op_log: augmentation is not the identity");
    }
    AOperator result(u.algebra(), u.space());
    AOperator power = AOperator::identity(u.algebra(), u.space());
    for (int k = 1; k <= u.algebra()->nilpotency_index(); ++k) {
      power = power * n;
      if (power.is_zero()) {
        break;
      }
      result += power * Scalar(k % 2 ? 1 : -1, k);
    }
    return result;
  }

  AOperator op_inverse(AOperator const& u) {
    auto inv0 = inverse(u.augment());
    if (!inv0) {
      throw Error("op_inverse: augmentation is not invertible");
    }
    AOperator c      = AOperator::constant(u.algebra(), u.space(), *inv0);
    AOperator n      = AOperator::identity(u.algebra(), u.space()) - c * u;
    AOperator result = AOperator::identity(u.algebra(), u.space());
    AOperator power  = result;
    for (int k = 1; k <= u.algebra()->nilpotency_index(); ++k) {
      power = power * n;
      if (power.is_zero()) {
        break;
      }
      result += power;
    }
    return result * c;
  }

  SuperVector op_apply(AOperator const& s, SuperVector const& v) {
    std::size_t n = s.space().dim();
    if (v.size() != n) {
      throw Error("op_apply: vector has the wrong dimension");
    }
    SuperVector twisted_v, out;
    for (auto const& a : v) {
      if (a.algebra() != s.algebra()) {
        throw Error("op_apply: vector over a different algebra");
      }
      twisted_v.push_back(a.even_part() - a.odd_part());
      out.push_back(s.algebra()->zero());
    }
    for (auto const& [b, m] : s.terms()) {
      WeilElement basis = s.algebra()->basis(b);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (m(i, j).is_zero()) {
            continue;
          }
          WeilElement const& a = s.space().parity(i) == s.space().parity(j) ? v[j] : twisted_v[j];
          out[i] += (basis * a) * m(i, j);
        }
      }
    }
    return out;
  }

}  // namespace shcp
