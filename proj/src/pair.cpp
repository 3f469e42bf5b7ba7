#include "shcp/pair.hpp"

#include <set>

namespace shcp {

  namespace {
    bool has_imaginary(Matrix const& m) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (!m(i, j).is_real()) {
            return true;
          }
        }
      }
      return false;
    }

    Matrix ad_of(Representation const& rho, Matrix const& k, Matrix const& kinv, bool& ok) {
      auto const& g = *rho.lie();
      Matrix      ad(g.dim(), g.dim());
      ok = true;
      for (std::size_t b = 0; b < g.dim(); ++b) {
        auto c = rho.preimage(k * rho.image(b) * kinv);
        if (!c) {
          ok = false;
          return ad;
        }
        for (std::size_t r = 0; r < g.dim(); ++r) {
          ad(r, b) = (*c)[r];
        }
      }
      return ad;
    }

    Vector column(Matrix const& m, std::size_t j) {
      Vector v(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i) {
        v[i] = m(i, j);
      }
      return v;
    }
  }  // namespace

  PairPtr ShcPair::make(std::string name, Representation rho,
                        std::vector<std::pair<std::string, Matrix>> kpoints, bool gaussian) {
    auto p       = std::shared_ptr<ShcPair>(new ShcPair());
    p->name_     = std::move(name);
    p->rho_      = std::move(rho);
    p->gaussian_ = gaussian;
    std::set<std::string> seen;
    for (auto& [n, m] : kpoints) {
      if (!seen.insert(n).second) {
        throw Error("duplicate K-point name '" + n + "'");
      }
      if (m.rows() != p->space().dim() || m.cols() != p->space().dim()) {
        throw Error("K-point '" + n + "' has the wrong size");
      }
      KPoint k{n, m, inverse(m), std::nullopt};
      if (k.inverse && p->rho_.is_injective()) {
        bool   ok;
        Matrix ad = ad_of(p->rho_, m, *k.inverse, ok);
        if (ok) {
          k.ad = ad;
        }
      }
      p->kpoints_.push_back(std::move(k));
    }
    return p;
  }

  std::optional<std::size_t> ShcPair::kpoint_index(std::string const& name) const {
    for (std::size_t k = 0; k < kpoints_.size(); ++k) {
      if (kpoints_[k].name == name) {
        return k;
      }
    }
    return std::nullopt;
  }

  std::vector<Issue> validate_pair(ShcPair const& p) {
    std::vector<Issue> issues = validate_superalgebra(p.g());
    auto const&        g      = p.g();
    auto const&        rho    = p.rho();
    SuperSpace const&  v      = p.space();
    if (!p.gaussian()) {
      for (std::size_t b = 0; b < g.dim(); ++b) {
        if (has_imaginary(rho.image(b))) {
          issues.push_back({"field", "rho(" + g.name(b) + ") has non-real entries over Q"});
        }
      }
      for (auto const& k : p.kpoints()) {
        if (has_imaginary(k.matrix)) {
          issues.push_back({"field", "K-point " + k.name + " has non-real entries over Q"});
        }
      }
    }
    bool parity_ok = true;
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (matrix_parity(v, rho.image(b)) != g.parity(b)) {
        issues.push_back({"rep-parity", "rho(" + g.name(b) + ") = " + rho.image(b).to_string()});
        parity_ok = false;
      }
    }
    if (parity_ok) {
      for (std::size_t a = 0; a < g.dim(); ++a) {
        for (std::size_t b = a; b < g.dim(); ++b) {
          Matrix lhs = super_commutator(v, rho.image(a), rho.image(b));
          if (lhs != rho.of(g.bracket_basis(a, b))) {
            issues.push_back({"rep-bracket", "[" + g.name(a) + "," + g.name(b) + "]"});
          }
        }
      }
    }
    if (!rho.is_injective()) {
      issues.push_back({"rep-injective", "rho has a kernel"});
      return issues;
    }
    for (auto const& k : p.kpoints()) {
      if (matrix_parity(v, k.matrix) != 0) {
        issues.push_back({"kpoint-even", k.name + " = " + k.matrix.to_string()});
      }
      if (!k.inverse) {
        issues.push_back({"kpoint-invertible", k.name});
        continue;
      }
      if (!k.ad) {
        for (std::size_t b = 0; b < g.dim(); ++b) {
          Matrix c = k.matrix * rho.image(b) * *k.inverse;
          if (!rho.preimage(c)) {
            issues.push_back({"kpoint-normalizes", "k " + k.name + " maps rho(" + g.name(b) + ") to " + c.to_string()});
            break;
          }
        }
        continue;
      }
      for (std::size_t b = 0; b < g.dim(); ++b) {
        Vector img = column(*k.ad, b);
        if (g.vector_parity(img) != g.parity(b) && !is_zero(img)) {
          issues.push_back({"kpoint-parity", "Ad(" + k.name + ")" + g.name(b) + " = " + g.vector_to_string(img)});
        }
      }
      for (std::size_t a = 0; a < g.dim(); ++a) {
        for (std::size_t b = 0; b < g.dim(); ++b) {
          Vector lhs = k.ad->apply(g.bracket_basis(a, b));
          Vector rhs = g.bracket(column(*k.ad, a), column(*k.ad, b));
          if (lhs != rhs) {
            issues.push_back({"kpoint-automorphism", "Ad(" + k.name + ") on [" + g.name(a) + "," + g.name(b) + "]"});
          }
        }
      }
    }
    // Ad(exp(eps X)) Z = Z + eps [X, Z] over K[eps]
    auto ext = adjoin_dual_number(build_grassmann(0));
    for (std::size_t x = 0; x < g.even_dim(); ++x) {
      AOperator e    = op_exp(AOperator::tensor(ext.eps, v, rho.image(x)));
      AOperator einv = op_inverse(e);
      for (std::size_t z = 0; z < g.dim(); ++z) {
        AOperator conj = e * AOperator::constant(ext.algebra, v, rho.image(z)) * einv;
        GPoint    got  = rho.pullback(conj);
        GPoint    want = GPoint::tensor(ext.algebra->one(), p.lie(), g.basis_vector(z))
                      + GPoint::tensor(ext.eps, p.lie(), g.bracket_basis(x, z));
        if (got != want) {
          issues.push_back({"differential", "Ad(exp(eps " + g.name(x) + "))" + g.name(z)});
        }
      }
    }
    return issues;
  }

  Matrix kword_matrix(ShcPair const& p, KWord const& w) {
    Matrix m = Matrix::identity(p.space().dim());
    for (auto const& [k, e] : w) {
      auto const& kp = p.kpoints().at(k);
      if (e > 0) {
        m = m * kp.matrix;
      } else {
        if (!kp.inverse) {
          throw Error("K-point " + kp.name + " is not invertible");
        }
        m = m * *kp.inverse;
      }
    }
    return m;
  }

  KWord kword_inverse(KWord const& w) {
    KWord r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      r.emplace_back(it->first, -it->second);
    }
    return r;
  }

  std::string kword_to_string(ShcPair const& p, KWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (auto const& [k, e] : w) {
      s += (s.empty() ? "" : "*") + p.kpoints().at(k).name + (e < 0 ? "^-1" : "");
    }
    return s;
  }

  Matrix kword_ad(ShcPair const& p, KWord const& w) {
    Matrix m = Matrix::identity(p.g().dim());
    for (auto const& [k, e] : w) {
      auto const& kp = p.kpoints().at(k);
      if (!kp.ad) {
        throw Error("K-point " + kp.name + " does not normalize rho(g)");
      }
      m = m * (e > 0 ? *kp.ad : *inverse(*kp.ad));
    }
    return m;
  }

  Matrix matrix_ad(ShcPair const& p, Matrix const& m) {
    auto inv = inverse(m);
    if (!inv) {
      throw Error("matrix_ad: matrix is not invertible");
    }
    bool   ok;
    Matrix ad = ad_of(p.rho(), m, *inv, ok);
    if (!ok) {
      throw Error("matrix_ad: matrix does not normalize rho(g)");
    }
    return ad;
  }

  Vector adjoint_action(ShcPair const& p, KWord const& k, Vector const& z) {
    return kword_ad(p, k).apply(z);
  }

  GPoint apply_linear(Matrix const& m, GPoint const& x) {
    auto const& g = *x.lie();
    if (m.rows() != g.dim() || m.cols() != g.dim()) {
      throw Error("apply_linear: size mismatch");
    }
    std::vector<WeilElement> out(g.dim(), x.algebra()->zero());
    for (std::size_t r = 0; r < g.dim(); ++r) {
      for (std::size_t b = 0; b < g.dim(); ++b) {
        if (!m(r, b).is_zero() && !x[b].is_zero()) {
          out[r] += x[b] * m(r, b);
        }
      }
    }
    return GPoint(x.algebra(), x.lie(), std::move(out));
  }

  std::vector<Issue> validate_pair_morphism(PairMorphism const& m) {
    std::vector<Issue> issues;
    auto const&        gs = m.source->g();
    auto const&        gt = m.target->g();
    if (m.omega.rows() != gt.dim() || m.omega.cols() != gs.dim()) {
      return {{"shape", "omega must be target dim x source dim"}};
    }
    if (m.omega_plus.size() != m.source->kpoints().size()) {
      return {{"shape", "one target word per source K-point required"}};
    }
    if (m.d_omega.rows() != gt.even_dim() || m.d_omega.cols() != gs.even_dim()) {
      return {{"shape", "d_omega must be target even dim x source even dim"}};
    }
    for (std::size_t b = 0; b < gs.dim(); ++b) {
      Vector img = column(m.omega, b);
      if (!is_zero(img) && gt.vector_parity(img) != gs.parity(b)) {
        issues.push_back({"parity", "omega(" + gs.name(b) + ") = " + gt.vector_to_string(img)});
      }
    }
    for (std::size_t a = 0; a < gs.dim(); ++a) {
      for (std::size_t b = a; b < gs.dim(); ++b) {
        Vector lhs = m.omega.apply(gs.bracket_basis(a, b));
        Vector rhs = gt.bracket(column(m.omega, a), column(m.omega, b));
        if (lhs != rhs) {
          issues.push_back({"bracket", "(" + gs.name(a) + "," + gs.name(b) + "): " + gt.vector_to_string(lhs)
                                           + " vs " + gt.vector_to_string(rhs)});
        }
      }
    }
    for (std::size_t b = 0; b < gs.even_dim(); ++b) {
      for (std::size_t r = 0; r < gt.dim(); ++r) {
        Scalar want = r < gt.even_dim() ? m.d_omega(r, b) : Scalar(0);
        if (m.omega(r, b) != want) {
          issues.push_back({"differential", "omega and d_omega differ on " + gs.name(b)});
          break;
        }
      }
    }
    for (std::size_t k = 0; k < m.source->kpoints().size(); ++k) {
      Matrix lhs = m.omega * kword_ad(*m.source, {{k, 1}});
      Matrix rhs = kword_ad(*m.target, m.omega_plus[k]) * m.omega;
      if (lhs != rhs) {
        issues.push_back({"equivariance", "K-point " + m.source->kpoints()[k].name});
      }
    }
    return issues;
  }

}  // namespace shcp
