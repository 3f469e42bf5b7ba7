#include "shcp/representations.hpp"

#include <algorithm>
#include <sstream>

namespace shcp {

  namespace {
    // Position of a letter in the normal order: odd letters first.
    std::pair<int, std::size_t> key(LieSuperalgebra const& g, std::size_t b) {
      return {g.parity(b) ? 0 : 1, b};
    }

    void accumulate(PbwSum& into, PbwSum const& x, Scalar const& c) {
      for (auto const& [m, v] : x) {
        Scalar& slot = into[m];
        slot += v * c;
        if (slot.is_zero()) {
          into.erase(m);
        }
      }
    }

    Vector column(Matrix const& m, std::size_t j) {
      Vector v(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i) {
        v[i] = m(i, j);
      }
      return v;
    }

    bool square_of(Matrix const& m, std::size_t n) {
      return m.rows() == n && m.cols() == n;
    }

    AOperator apply_images(AlgebraPtr const& a, SuperSpace const& v, std::vector<Matrix> const& images,
                           GPoint const& x) {
      AOperator r(a, v);
      for (std::size_t b = 0; b < images.size(); ++b) {
        if (!x[b].is_zero()) {
          r += AOperator::tensor(x[b], v, images[b]);
        }
      }
      return r;
    }
  }  // namespace

  PbwSum PbwStraightener::straighten(std::vector<std::size_t> const& word) const {
    auto const& g = *g_;
    for (auto b : word) {
      if (b >= g.dim()) {
        throw Error("pbw_straighten: unknown basis index " + std::to_string(b));
      }
    }
    if (auto it = cache_.find(word); it != cache_.end()) {
      return it->second;
    }
    PbwSum result;
    std::size_t p = 0;
    for (; p + 1 < word.size(); ++p) {
      auto kx = key(g, word[p]);
      auto ky = key(g, word[p + 1]);
      if (kx > ky || (kx == ky && g.parity(word[p]))) {
        break;
      }
    }
    if (p + 1 >= word.size()) {
      PbwMonomial m;
      for (auto b : word) {
        (g.parity(b) ? m.odd : m.even).push_back(b);
      }
      result[m] = Scalar(1);
    } else {
      std::size_t x = word[p];
      std::size_t y = word[p + 1];
      auto replace = [&](Vector const& v, Scalar const& factor) {
        for (std::size_t c = 0; c < g.dim(); ++c) {
          if (v[c].is_zero()) {
            continue;
          }
          std::vector<std::size_t> w(word.begin(), word.begin() + p);
          w.push_back(c);
          w.insert(w.end(), word.begin() + p + 2, word.end());
          accumulate(result, straighten(w), v[c] * factor);
        }
      };
      if (x == y) {
        // z z = z^<2> for odd z
        replace(g.bracket_basis(x, x), Scalar(1, 2));
      } else {
        std::vector<std::size_t> w = word;
        std::swap(w[p], w[p + 1]);
        accumulate(result, straighten(w), Scalar(g.parity(x) && g.parity(y) ? -1 : 1));
        replace(g.bracket_basis(x, y), Scalar(1));
      }
    }
    cache_.emplace(word, result);
    return result;
  }

  PbwSum PbwStraightener::multiply(PbwSum const& x, PbwSum const& y) const {
    PbwSum r;
    for (auto const& [mx, cx] : x) {
      for (auto const& [my, cy] : y) {
        std::vector<std::size_t> w = mx.odd;
        w.insert(w.end(), mx.even.begin(), mx.even.end());
        w.insert(w.end(), my.odd.begin(), my.odd.end());
        w.insert(w.end(), my.even.begin(), my.even.end());
        accumulate(r, straighten(w), cx * cy);
      }
    }
    return r;
  }

  PbwSum pbw_straighten(LiePtr const& g, std::vector<std::size_t> const& word) {
    return PbwStraightener(g).straighten(word);
  }

  std::string pbw_to_string(LieSuperalgebra const& g, PbwSum const& x) {
    if (x.empty()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& [m, c] : x) {
      std::string mono;
      for (auto b : m.odd) {
        mono += (mono.empty() ? "" : "*") + g.name(b);
      }
      for (auto b : m.even) {
        mono += (mono.empty() ? "" : "*") + g.name(b);
      }
      std::string cs = c.to_string();
      bool        neg = cs[0] == '-' && c.is_real();
      if (neg) {
        cs = cs.substr(1);
      }
      if (!c.is_real()) {
        cs = "(" + cs + ")";
      }
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (mono.empty()) {
        os << cs;
      } else if (cs == "1") {
        os << mono;
      } else {
        os << cs << "*" << mono;
      }
      first = false;
    }
    return os.str();
  }

  EvenModule trivial_even_module(ShcPair const& p) {
    EvenModule m;
    m.space = {1, 0};
    m.g0_action.assign(p.g().even_dim(), Matrix(1, 1));
    m.kpoint_action.assign(p.kpoints().size(), Matrix::identity(1));
    return m;
  }

  PairModule defining_module(ShcPair const& p) {
    PairModule m;
    m.space    = p.space();
    m.g_action = p.rho().images();
    for (auto const& k : p.kpoints()) {
      m.kpoint_action.push_back(k.matrix);
    }
    return m;
  }

  namespace {
    void check_kpoints(ShcPair const& p, SuperSpace const& v, std::vector<Matrix> const& ks,
                       std::vector<Matrix> const& g_action, std::size_t n_checked, std::vector<Issue>& issues) {
      auto const& g = p.g();
      for (std::size_t k = 0; k < ks.size(); ++k) {
        auto const& name = p.kpoints()[k].name;
        if (matrix_parity(v, ks[k]) != 0) {
          issues.push_back({"kpoint-even", name});
          continue;
        }
        auto inv = inverse(ks[k]);
        if (!inv) {
          issues.push_back({"kpoint-invertible", name});
          continue;
        }
        if (!p.kpoints()[k].ad) {
          issues.push_back({"kpoint-ad", name});
          continue;
        }
        Matrix const& ad = *p.kpoints()[k].ad;
        for (std::size_t b = 0; b < n_checked; ++b) {
          Matrix lhs = ks[k] * g_action[b] * *inv;
          Matrix rhs(v.dim(), v.dim());
          for (std::size_t c = 0; c < n_checked; ++c) {
            if (!ad(c, b).is_zero()) {
              rhs += g_action[c] * ad(c, b);
            }
          }
          if (lhs != rhs) {
            issues.push_back({"kpoint-compat", name + " on " + g.name(b)});
          }
        }
      }
    }

    void check_brackets(LieSuperalgebra const& g, SuperSpace const& v, std::vector<Matrix> const& act,
                        std::size_t n, std::vector<Issue>& issues) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!act[a].is_zero() && matrix_parity(v, act[a]) != g.parity(a)) {
          issues.push_back({"parity", g.name(a)});
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
          Matrix lhs = super_commutator(v, act[a], act[b]);
          Matrix rhs(v.dim(), v.dim());
          Vector const& br = g.bracket_basis(a, b);
          for (std::size_t c = 0; c < n; ++c) {
            if (!br[c].is_zero()) {
              rhs += act[c] * br[c];
            }
          }
          if (lhs != rhs) {
            issues.push_back({"bracket", "[" + g.name(a) + "," + g.name(b) + "]"});
          }
        }
      }
    }
  }  // namespace

  std::vector<Issue> validate_even_module(ShcPair const& p, EvenModule const& m) {
    std::vector<Issue> issues;
    auto const&        g = p.g();
    std::size_t        n = m.space.dim();
    if (m.g0_action.size() != g.even_dim() || m.kpoint_action.size() != p.kpoints().size()) {
      issues.push_back({"shape", "expected " + std::to_string(g.even_dim()) + " g_0 matrices and "
                                     + std::to_string(p.kpoints().size()) + " K-point matrices"});
      return issues;
    }
    for (auto const& x : m.g0_action) {
      if (!square_of(x, n)) {
        issues.push_back({"shape", "matrix size differs from module dimension"});
        return issues;
      }
    }
    for (auto const& x : m.kpoint_action) {
      if (!square_of(x, n)) {
        issues.push_back({"shape", "matrix size differs from module dimension"});
        return issues;
      }
    }
    check_brackets(g, m.space, m.g0_action, g.even_dim(), issues);
    check_kpoints(p, m.space, m.kpoint_action, m.g0_action, g.even_dim(), issues);
    return issues;
  }

  std::vector<Issue> validate_pair_module(ShcPair const& p, PairModule const& m) {
    std::vector<Issue> issues;
    auto const&        g = p.g();
    std::size_t        n = m.space.dim();
    if (m.g_action.size() != g.dim() || m.kpoint_action.size() != p.kpoints().size()) {
      issues.push_back({"shape", "expected " + std::to_string(g.dim()) + " g matrices and "
                                     + std::to_string(p.kpoints().size()) + " K-point matrices"});
      return issues;
    }
    for (auto const& x : m.g_action) {
      if (!square_of(x, n)) {
        issues.push_back({"shape", "matrix size differs from module dimension"});
        return issues;
      }
    }
    for (auto const& x : m.kpoint_action) {
      if (!square_of(x, n)) {
        issues.push_back({"shape", "matrix size differs from module dimension"});
        return issues;
      }
    }
    check_brackets(g, m.space, m.g_action, g.dim(), issues);
    check_kpoints(p, m.space, m.kpoint_action, m.g_action, g.dim(), issues);
    return issues;
  }

  std::optional<std::size_t> InducedModule::find(std::vector<std::size_t> const& odd, std::size_t j) const {
    for (std::size_t n = 0; n < odd_part.size(); ++n) {
      if (odd_part[n] == odd && base_index[n] == j) {
        return n;
      }
    }
    return std::nullopt;
  }

  namespace {
    class Inducer {
     public:
      Inducer(ShcPair const& p, EvenModule const& m0) : p_(p), m0_(m0), pbw_(p.lie()) {
        auto const& g = p.g();
        // subsets of the odd basis by size, then lexicographically
        std::vector<std::vector<std::size_t>> subsets{{}};
        for (std::size_t r = 1; r <= g.odd_dim(); ++r) {
          std::vector<std::size_t> pick(r);
          for (std::size_t i = 0; i < r; ++i) {
            pick[i] = i;
          }
          while (true) {
            std::vector<std::size_t> s;
            for (auto i : pick) {
              s.push_back(g.odd(i));
            }
            subsets.push_back(s);
            std::size_t i = r;
            while (i > 0 && pick[i - 1] == g.odd_dim() - r + i - 1) {
              --i;
            }
            if (i == 0) {
              break;
            }
            ++pick[i - 1];
            for (std::size_t j = i; j < r; ++j) {
              pick[j] = pick[j - 1] + 1;
            }
          }
        }
        for (int parity = 0; parity < 2; ++parity) {
          for (auto const& s : subsets) {
            for (std::size_t j = 0; j < m0.space.dim(); ++j) {
              if (static_cast<int>((s.size() + m0.space.parity(j)) % 2) != parity) {
                continue;
              }
              out_.odd_part.push_back(s);
              out_.base_index.push_back(j);
              std::string label;
              for (auto b : s) {
                label += (label.empty() ? "" : "*") + g.name(b);
              }
              if (label.empty()) {
                label = "1";
              }
              if (m0.space.dim() > 1) {
                label += "(x)m" + std::to_string(j + 1);
              }
              out_.labels.push_back(label);
              (parity ? out_.module.space.odd : out_.module.space.even)++;
            }
          }
        }
        for (std::size_t n = 0; n < out_.dim(); ++n) {
          index_[{out_.odd_part[n], out_.base_index[n]}] = n;
        }
        out_.cyclic = *out_.find({}, 0);
      }

      InducedModule run() {
        auto const& g = p_.g();
        std::size_t d = out_.dim();
        for (std::size_t b = 0; b < g.dim(); ++b) {
          Matrix m(d, d);
          for (std::size_t n = 0; n < d; ++n) {
            std::vector<std::size_t> w{b};
            w.insert(w.end(), out_.odd_part[n].begin(), out_.odd_part[n].end());
            Vector e(m0_.space.dim());
            e[out_.base_index[n]] = 1;
            place(m, n, pbw_.straighten(w), e);
          }
          out_.module.g_action.push_back(std::move(m));
        }
        for (std::size_t k = 0; k < p_.kpoints().size(); ++k) {
          auto const& ad = p_.kpoints()[k].ad;
          if (!ad) {
            throw Error("induce: K-point " + p_.kpoints()[k].name + " does not normalize rho(g)");
          }
          Matrix m(d, d);
          for (std::size_t n = 0; n < d; ++n) {
            // Ad(k)(y_s1) ... Ad(k)(y_sr) expanded into words of odd letters
            std::map<std::vector<std::size_t>, Scalar> words{{{}, Scalar(1)}};
            for (auto s : out_.odd_part[n]) {
              std::map<std::vector<std::size_t>, Scalar> next;
              for (auto const& [w, c] : words) {
                for (std::size_t j = 0; j < g.odd_dim(); ++j) {
                  Scalar const& a = (*ad)(g.odd(j), s);
                  if (a.is_zero()) {
                    continue;
                  }
                  auto w2 = w;
                  w2.push_back(g.odd(j));
                  next[w2] += c * a;
                }
              }
              words = std::move(next);
            }
            PbwSum sum;
            for (auto const& [w, c] : words) {
              accumulate(sum, pbw_.straighten(w), c);
            }
            place(m, n, sum, column(m0_.kpoint_action[k], out_.base_index[n]));
          }
          out_.module.kpoint_action.push_back(std::move(m));
        }
        return out_;
      }

     private:
      // Column n of m receives sum c * y_S' (x) rho_0(u) v.
      void place(Matrix& m, std::size_t n, PbwSum const& sum, Vector const& v) {
        for (auto const& [mono, c] : sum) {
          Vector x = v;
          for (std::size_t i = mono.even.size(); i-- > 0;) {
            x = m0_.g0_action[mono.even[i]].apply(x);
          }
          for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j].is_zero()) {
              continue;
            }
            m(index_.at({mono.odd, j}), n) += c * x[j];
          }
        }
      }

      ShcPair const&                                                      p_;
      EvenModule const&                                                   m0_;
      PbwStraightener                                                     pbw_;
      InducedModule                                                       out_;
      std::map<std::pair<std::vector<std::size_t>, std::size_t>, std::size_t> index_;
    };
  }  // namespace

  InducedModule build_induced_trivial(ShcPair const& p) {
    return Inducer(p, trivial_even_module(p)).run();
  }

  InducedModule induce_from_even(ShcPair const& p, EvenModule const& m0) {
    auto issues = validate_even_module(p, m0);
    if (!issues.empty()) {
      throw Error("induce: inconsistent even module (" + issues[0].check + ": " + issues[0].witness + ")");
    }
    InducedModule v = Inducer(p, m0).run();
    issues          = validate_pair_module(p, v.module);
    if (!issues.empty()) {
      throw Error("induce: induced data is not a pair module (" + issues[0].check + ": " + issues[0].witness
                  + ")");
    }
    return v;
  }

  Matrix module_kword(PairModule const& m, KWord const& w) {
    Matrix r = Matrix::identity(m.space.dim());
    for (auto const& [k, e] : w) {
      if (k >= m.kpoint_action.size()) {
        throw Error("module: unknown K-point");
      }
      if (e > 0) {
        r = r * m.kpoint_action[k];
      } else {
        auto inv = inverse(m.kpoint_action[k]);
        if (!inv) {
          throw Error("module: K-point action is not invertible");
        }
        r = r * *inv;
      }
    }
    return r;
  }

  AOperator module_generator(ShcPair const& p, PairModule const& m, AlgebraPtr const& a, Generator const& gen) {
    validate_word(p, a, {gen});
    SuperSpace const& v = m.space;
    if (auto const* k = std::get_if<GenKPoint>(&gen)) {
      return AOperator::constant(a, v, module_kword(m, k->word));
    }
    if (auto const* e = std::get_if<GenEvenExp>(&gen)) {
      return op_exp(apply_images(a, v, m.g_action, e->t));
    }
    if (auto const* o = std::get_if<GenOdd>(&gen)) {
      return AOperator::identity(a, v) + AOperator::tensor(o->eta, v, m.g_action[p.g().odd(o->index)]);
    }
    auto const&              og = std::get<GenOddGeneral>(gen);
    std::vector<WeilElement> c;
    for (auto const& x : og.y.coords()) {
      c.push_back(og.eta * x);
    }
    return AOperator::identity(a, v) + apply_images(a, v, m.g_action, GPoint(a, p.lie(), c));
  }

  AOperator module_operator(ShcPair const& p, PairModule const& m, SplitElement const& s) {
    AOperator r = AOperator::identity(s.algebra(), m.space);
    for (auto const& gen : s.to_word()) {
      r = r * module_generator(p, m, s.algebra(), gen);
    }
    return r;
  }

  AOperator rp_operator(InducedModule const& v, SplitElement const& s) {
    return module_operator(*s.pair(), v.module, s);
  }

  SuperVector cyclic_vector(InducedModule const& v, AlgebraPtr const& a) {
    SuperVector x(v.dim(), a->zero());
    x[v.cyclic] = a->one();
    return x;
  }

  GroupModule group_from_pair(PairPtr const& p, PairModule const& m) {
    auto issues = validate_pair_module(*p, m);
    if (!issues.empty()) {
      throw Error("transfer: inconsistent module data (" + issues[0].check + ": " + issues[0].witness + ")");
    }
    GroupModule gm;
    gm.space = m.space;
    gm.act   = [p, m](AlgebraPtr const& a, Generator const& gen) {
      return module_generator(*p, m, a, gen);
    };
    return gm;
  }

  PairModule pair_from_group(PairPtr const& p, GroupModule const& gm) {
    auto const& g = p->g();
    PairModule  m;
    m.space = gm.space;
    auto k0 = build_grassmann(0);
    for (std::size_t k = 0; k < p->kpoints().size(); ++k) {
      m.kpoint_action.push_back(gm.act(k0, GenKPoint{{{k, 1}}}).augment());
    }
    auto dual = adjoin_dual_number(k0);
    auto l1   = build_grassmann(1);
    auto xi   = *l1->generator("xi1");
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (g.parity(b) == 0) {
        auto op = gm.act(dual.algebra, GenEvenExp{GPoint::tensor(dual.eps, p->lie(), g.basis_vector(b))});
        m.g_action.push_back(op.coeff(dual.eps.terms().front().first));
      } else {
        auto op = gm.act(l1, GenOdd{xi, b - g.even_dim()});
        m.g_action.push_back(op.coeff(xi.terms().front().first));
      }
    }
    auto issues = validate_pair_module(*p, m);
    if (!issues.empty()) {
      throw Error("transfer: inconsistent module data (" + issues[0].check + ": " + issues[0].witness + ")");
    }
    // the extracted data must reproduce the given action
    auto      l2 = build_grassmann(2);
    auto      x1 = *l2->generator("xi1");
    auto      x2 = *l2->generator("xi2");
    GroupWord probes;
    for (std::size_t k = 0; k < p->kpoints().size(); ++k) {
      probes.push_back(GenKPoint{{{k, 1}}});
      probes.push_back(GenKPoint{{{k, -1}}});
    }
    for (std::size_t b = 0; b < g.even_dim(); ++b) {
      probes.push_back(GenEvenExp{GPoint::tensor(x1 * x2, p->lie(), g.basis_vector(b))});
    }
    for (std::size_t i = 0; i < g.odd_dim(); ++i) {
      probes.push_back(GenOdd{x1 + x2 * Scalar(2), i});
    }
    for (auto const& gen : probes) {
      if (gm.act(l2, gen) != module_generator(*p, m, l2, gen)) {
        throw Error("transfer: group action is not determined by its pair data");
      }
    }
    return m;
  }

}  // namespace shcp
