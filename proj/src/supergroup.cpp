#include "shcp/supergroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace shcp {

  namespace {
    constexpr std::size_t kIterationLimit = 1000000;

    struct OddFactor {
      WeilElement eta;
      std::size_t index;
      int         generation;
    };

    GPoint odd_basis_point(ShcPair const& p, AlgebraPtr const& a, std::size_t i) {
      return GPoint::tensor(a->one(), p.lie(), p.g().basis_vector(p.g().odd(i)));
    }

    // (1 + eta Y) with Y = sum_j y_j Y_j, y_j even, equals the commuting product
    // of (1 + (eta y_j) Y_j): all pairwise corrections are multiples of eta^2.
    void expand(std::vector<OddFactor>& out, ShcPair const& p, WeilElement const& eta, GPoint const& y,
                int generation) {
      auto const& g = p.g();
      for (std::size_t j = 0; j < g.odd_dim(); ++j) {
        WeilElement const& c = y[g.odd(j)];
        if (c.is_zero()) {
          continue;
        }
        WeilElement e = eta * c;
        if (!e.is_zero()) {
          out.push_back({std::move(e), j, generation});
        }
      }
    }

    class Normalizer {
     public:
      Normalizer(PairPtr const& p, AlgebraPtr const& a)
          : p_(p), a_(a), g_(p->g()), even_(AOperator::identity(a, p->space())) {}

      void push(Generator const& gen) {
        if (auto const* k = std::get_if<GenKPoint>(&gen)) {
          push_kpoint(k->word);
        } else if (auto const* e = std::get_if<GenEvenExp>(&gen)) {
          push_even(e->t);
        } else if (auto const* o = std::get_if<GenOdd>(&gen)) {
          if (!o->eta.is_zero()) {
            odd_.push_back({o->eta, o->index, 0});
          }
        } else {
          auto const& og = std::get<GenOddGeneral>(gen);
          expand(odd_, *p_, og.eta, og.y, 0);
        }
      }

      void reorder(NormalizeTrace* trace) {
        std::vector<std::pair<int, WeilElement>> corrections;
        std::size_t                              guard = 0;
        while (true) {
          std::size_t i = 0;
          while (i + 1 < odd_.size() && odd_[i].index < odd_[i + 1].index) {
            ++i;
          }
          if (i + 1 >= odd_.size()) {
            break;
          }
          if (++guard > kIterationLimit) {
            throw Error("normalize: iteration limit exceeded");
          }
          OddFactor   fa = odd_[i];
          OddFactor   fb = odd_[i + 1];
          WeilElement c  = fb.eta * fa.eta;
          Vector      w;
          if (fa.index > fb.index) {
            // (1+a Y)(1+b Y') = (1 + ba[Y,Y']) (1+b Y')(1+a Y)
            w           = g_.bracket_basis(g_.odd(fa.index), g_.odd(fb.index));
            odd_[i]     = fb;
            odd_[i + 1] = fa;
            if (trace) {
              ++trace->swaps;
            }
          } else {
            // (1+a Y)(1+b Y) = (1 + ba Y^<2>) (1+(a+b) Y)
            w       = odd_square(g_, g_.basis_vector(g_.odd(fa.index)));
            odd_[i] = {fa.eta + fb.eta, fa.index, std::min(fa.generation, fb.generation)};
            odd_.erase(odd_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            if (trace) {
              ++trace->merges;
            }
          }
          if (!c.is_zero() && !is_zero(w)) {
            int    generation = std::max(fa.generation, fb.generation) + 1;
            GPoint t          = GPoint::tensor(c, p_->lie(), w);
            conjugate_prefix(i, t, generation);
            even_ = even_ * op_exp(p_->rho().apply(t));
            if (trace) {
              corrections.emplace_back(generation, c);
            }
          }
          odd_.erase(std::remove_if(odd_.begin(), odd_.end(), [](OddFactor const& f) { return f.eta.is_zero(); }),
                     odd_.end());
        }
        if (trace) {
          record(*trace, corrections);
        }
      }

      SplitElement result() const {
        GPoint t = p_->rho().pullback(op_log(even_));
        if (!t.odd_component().is_zero()) {
          throw Error("normalize: even factor left g_0");  // unreachable for valid pairs
        }
        std::vector<WeilElement> eta(g_.odd_dim(), a_->zero());
        for (auto const& f : odd_) {
          eta[f.index] = f.eta;
        }
        return SplitElement(p_, a_, k_, t, std::move(eta));
      }

      std::vector<WeilElement> ideal_gens;

     private:
      void push_kpoint(KWord const& w) {
        if (w.empty()) {
          return;
        }
        Matrix                 adinv = kword_ad(*p_, kword_inverse(w));
        std::vector<OddFactor> next;
        for (auto const& f : odd_) {
          std::size_t col = g_.odd(f.index);
          for (std::size_t j = 0; j < g_.odd_dim(); ++j) {
            Scalar const& c = adinv(g_.odd(j), col);
            if (!c.is_zero()) {
              next.push_back({f.eta * c, j, f.generation});
            }
          }
        }
        odd_       = std::move(next);
        Matrix k   = kword_matrix(*p_, w);
        even_      = AOperator::constant(a_, p_->space(), *inverse(k)) * even_ * AOperator::constant(a_, p_->space(), k);
        k_.insert(k_.end(), w.begin(), w.end());
      }

      void push_even(GPoint const& t) {
        if (t.is_zero()) {
          return;
        }
        conjugate_prefix(odd_.size(), t, 0);
        even_ = even_ * op_exp(p_->rho().apply(t));
      }

      // Moves exp(t) to the left of odd_[0, end): each factor (1 + eta Y)
      // becomes (1 + eta Ad(exp(-t))Y), kept as itself followed by the
      // factors of the nilpotent remainder.
      void conjugate_prefix(std::size_t end, GPoint const& t, int generation) {
        std::map<std::size_t, GPoint> rest;
        std::vector<OddFactor>        next;
        for (std::size_t q = 0; q < odd_.size(); ++q) {
          next.push_back(odd_[q]);
          if (q >= end) {
            continue;
          }
          std::size_t i  = odd_[q].index;
          auto        it = rest.find(i);
          if (it == rest.end()) {
            GPoint y = odd_basis_point(*p_, a_, i);
            it       = rest.emplace(i, exp_ad(-t, y) - y).first;
          }
          expand(next, *p_, odd_[q].eta, it->second, generation == 0 ? odd_[q].generation : generation);
        }
        odd_ = std::move(next);
      }

      void record(NormalizeTrace& trace, std::vector<std::pair<int, WeilElement>> const& corrections) const {
        IdealFiltration    filt(a_, ideal_gens);
        std::map<int, int> least;
        for (auto const& [gen, c] : corrections) {
          int d = filt.degree(c);
          trace.corrections.push_back({gen, d});
          auto it = least.find(gen);
          if (it == least.end() || d < it->second) {
            least[gen] = d;
          }
        }
        int prev = 0;  // input factors have degree >= 1
        for (auto const& [gen, d] : least) {
          if (d <= prev) {
            trace.measure_ok = false;
            trace.detail     = "generation " + std::to_string(gen) + " has a-degree " + std::to_string(d);
          }
          prev = d;
        }
      }

      PairPtr                p_;
      AlgebraPtr             a_;
      LieSuperalgebra const& g_;
      KWord                  k_;
      AOperator              even_;  // exp(rho(T))
      std::vector<OddFactor> odd_;
    };
  }  // namespace

  SplitElement::SplitElement(PairPtr p, AlgebraPtr a, KWord k, GPoint t, std::vector<WeilElement> eta)
      : pair_(std::move(p)), alg_(std::move(a)), k_(std::move(k)), t_(std::move(t)), eta_(std::move(eta)) {
    if (eta_.size() != pair_->g().odd_dim()) {
      throw Error("split element: wrong number of odd coordinates");
    }
    KWord reduced;
    for (auto const& letter : k_) {
      if (!reduced.empty() && reduced.back().first == letter.first && reduced.back().second == -letter.second) {
        reduced.pop_back();
      } else {
        reduced.push_back(letter);
      }
    }
    k_    = std::move(reduced);
    kmat_ = kword_matrix(*pair_, k_);
    even_ = AOperator::constant(alg_, pair_->space(), kmat_) * op_exp(pair_->rho().apply(t_));
  }

  GroupWord SplitElement::to_word() const {
    GroupWord w;
    if (!k_.empty()) {
      w.push_back(GenKPoint{k_});
    }
    if (!t_.is_zero()) {
      w.push_back(GenEvenExp{t_});
    }
    for (std::size_t i = 0; i < eta_.size(); ++i) {
      if (!eta_[i].is_zero()) {
        w.push_back(GenOdd{eta_[i], i});
      }
    }
    return w;
  }

  std::string SplitElement::to_string() const {
    std::ostringstream os;
    os << "k = " << kword_to_string(*pair_, k_) << "; T = " << t_.to_string() << "; eta = (";
    for (std::size_t i = 0; i < eta_.size(); ++i) {
      os << (i ? ", " : "") << eta_[i].to_string();
    }
    os << ")";
    return os.str();
  }

  void validate_word(ShcPair const& p, AlgebraPtr const& a, GroupWord const& w) {
    auto const& g = p.g();
    for (std::size_t n = 0; n < w.size(); ++n) {
      std::string where = "generator " + std::to_string(n) + ": ";
      if (auto const* k = std::get_if<GenKPoint>(&w[n])) {
        for (auto const& [i, e] : k->word) {
          if (i >= p.kpoints().size() || (e != 1 && e != -1)) {
            throw Error(where + "unknown K-point");
          }
          if (!p.kpoints()[i].ad) {
            throw Error(where + "K-point does not normalize rho(g)");
          }
        }
      } else if (auto const* e = std::get_if<GenEvenExp>(&w[n])) {
        if (e->t.lie() != p.lie() || e->t.algebra() != a) {
          throw Error(where + "exponent over a different algebra");
        }
        if (!e->t.odd_component().is_zero() || !e->t.is_even() || !e->t.is_nilpotent()) {
          throw Error(where + "exponent must be a nilpotent even point supported on g_0");
        }
      } else if (auto const* o = std::get_if<GenOdd>(&w[n])) {
        if (o->eta.algebra() != a || !o->eta.is_odd()) {
          throw Error(where + "odd factor needs an odd coefficient");
        }
        if (o->index >= g.odd_dim()) {
          throw Error(where + "odd basis index out of range");
        }
      } else {
        auto const& og = std::get<GenOddGeneral>(w[n]);
        if (og.eta.algebra() != a || !og.eta.is_odd()) {
          throw Error(where + "odd factor needs an odd coefficient");
        }
        if (og.y.lie() != p.lie() || og.y.algebra() != a || !og.y.even_component().is_zero()) {
          throw Error(where + "odd direction must lie in A_0 (x) g_1");
        }
        for (std::size_t j = 0; j < g.odd_dim(); ++j) {
          if (!og.y[g.odd(j)].is_even()) {
            throw Error(where + "odd direction must lie in A_0 (x) g_1");
          }
        }
      }
    }
  }

  SplitElement normalize(PairPtr const& p, AlgebraPtr const& a, GroupWord const& w, NormalizeTrace* trace) {
    validate_word(*p, a, w);
    Normalizer n(p, a);
    for (auto const& gen : w) {
      if (trace) {
        if (auto const* o = std::get_if<GenOdd>(&gen)) {
          n.ideal_gens.push_back(o->eta);
        } else if (auto const* og = std::get_if<GenOddGeneral>(&gen)) {
          n.ideal_gens.push_back(og->eta);
        }
      }
      n.push(gen);
    }
    n.reorder(trace);
    return n.result();
  }

  SplitElement identity_element(PairPtr const& p, AlgebraPtr const& a) {
    return SplitElement(p, a, {}, GPoint(a, p->lie()), std::vector<WeilElement>(p->g().odd_dim(), a->zero()));
  }

  SplitElement gp_mul(SplitElement const& x, SplitElement const& y) {
    if (x.pair() != y.pair() || x.algebra() != y.algebra()) {
      throw Error("gp_mul: elements of different groups");
    }
    GroupWord w  = x.to_word();
    GroupWord wy = y.to_word();
    w.insert(w.end(), wy.begin(), wy.end());
    return normalize(x.pair(), x.algebra(), w);
  }

  SplitElement gp_inv(SplitElement const& x) {
    GroupWord w;
    for (std::size_t i = x.odd_coords().size(); i-- > 0;) {
      if (!x.odd_coords()[i].is_zero()) {
        w.push_back(GenOdd{-x.odd_coords()[i], i});
      }
    }
    if (!x.even_log().is_zero()) {
      w.push_back(GenEvenExp{-x.even_log()});
    }
    if (!x.kword().empty()) {
      w.push_back(GenKPoint{kword_inverse(x.kword())});
    }
    return normalize(x.pair(), x.algebra(), w);
  }

  SplitElement gp_exp(PairPtr const& p, GPoint const& z) {
    if (z.lie() != p->lie() || !z.is_even() || !z.is_nilpotent()) {
      throw Error("gp_exp: argument must be a nilpotent point of L_g(A)");
    }
    auto const&       rho = p->rho();
    AlgebraPtr const& a   = z.algebra();
    GroupWord         word;
    GPoint            r = z;
    for (int iter = 0; !r.is_zero(); ++iter) {
      if (iter > a->nilpotency_index() + 1) {
        throw Error("gp_exp: remainder did not vanish");
      }
      GroupWord f;
      if (!r.even_component().is_zero()) {
        f.push_back(GenEvenExp{r.even_component()});
      }
      for (std::size_t j = 0; j < p->g().odd_dim(); ++j) {
        WeilElement const& c = r[p->g().odd(j)];
        if (!c.is_zero()) {
          f.push_back(GenOdd{c, j});
        }
      }
      AOperator fo = word_operator(*p, a, f);
      r            = rho.pullback(op_log(op_inverse(fo) * op_exp(rho.apply(r))));
      word.insert(word.end(), f.begin(), f.end());
    }
    return normalize(p, a, word);
  }

  GPoint gp_log(SplitElement const& s) {
    if (s.kmatrix() != Matrix::identity(s.pair()->space().dim())) {
      throw Error("gp_log: the K-point factor is not trivial");
    }
    return s.pair()->rho().pullback(op_log(linearize(s)));
  }

  SplitElement gp_push(AlgebraMorphism const& phi, SplitElement const& s) {
    if (phi.source() != s.algebra()) {
      throw Error("gp_push: morphism source differs from the element's algebra");
    }
    if (auto d = phi.defect()) {
      throw Error("gp_push: not an algebra morphism (" + *d + ")");
    }
    std::vector<WeilElement> tc;
    for (auto const& c : s.even_log().coords()) {
      tc.push_back(phi(c));
    }
    std::vector<WeilElement> eta;
    for (auto const& c : s.odd_coords()) {
      eta.push_back(phi(c));
    }
    return SplitElement(s.pair(), phi.target(), s.kword(), GPoint(phi.target(), s.pair()->lie(), std::move(tc)),
                        std::move(eta));
  }

  namespace {
    // Basis of [g_1, g_1] as the rows of an echelon matrix.
    Matrix odd_brackets(LieSuperalgebra const& g) {
      Matrix m(g.odd_dim() * g.odd_dim(), g.dim());
      for (std::size_t i = 0; i < g.odd_dim(); ++i) {
        for (std::size_t j = 0; j < g.odd_dim(); ++j) {
          auto const& v = g.bracket_basis(g.odd(i), g.odd(j));
          for (std::size_t k = 0; k < g.dim(); ++k) {
            m(i * g.odd_dim() + j, k) = v[k];
          }
        }
      }
      return m;
    }

    bool in_row_space(Matrix const& rows, Vector const& v) {
      if (is_zero(v)) {
        return true;
      }
      Matrix t = rows.transpose();
      return solve(t, v).has_value();
    }

    std::optional<std::string> log_defect(GPoint const& t) {
      auto const&              g = *t.lie();
      auto const&              a = t.algebra();
      std::vector<WeilElement> odd;
      for (std::size_t b = 0; b < a->dim(); ++b) {
        if (a->parity(b) == 1) {
          odd.push_back(a->basis(b));
        }
      }
      IdealFiltration square(a, odd);  // square.contains(x, 2): x in (A_1)^2
      for (std::size_t j = 0; j < g.dim(); ++j) {
        if (!t[j].is_even() || !square.contains(t[j], 2)) {
          return "coefficient of " + g.name(j) + " is not in A_1^[2]";
        }
      }
      Matrix w = odd_brackets(g);
      for (std::size_t b = 0; b < a->dim(); ++b) {
        Vector v(g.dim());
        for (std::size_t j = 0; j < g.dim(); ++j) {
          v[j] = t[j].coeff(b);
        }
        if (!in_row_space(w, v)) {
          return "component along " + a->label(b) + " is not in [g_1,g_1]";
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::optional<std::string> odd_subgroup_defect(SplitElement const& s) {
    if (s.kmatrix() != Matrix::identity(s.pair()->space().dim())) {
      return "the K-point factor is not trivial";
    }
    return log_defect(s.even_log());
  }

  OddSubgroupFactor factor_odd_subgroup(PairPtr const& p, AlgebraPtr const& a, GroupWord const& w) {
    for (auto const& gen : w) {
      if (std::holds_alternative<GenKPoint>(gen)) {
        throw Error("factor_odd_subgroup: K-points are not allowed");
      }
      if (auto const* e = std::get_if<GenEvenExp>(&gen)) {
        if (auto d = log_defect(e->t)) {
          throw Error("factor_odd_subgroup: even factor outside the odd subgroup (" + *d + ")");
        }
      }
    }
    SplitElement s = normalize(p, a, w);
    if (auto d = odd_subgroup_defect(s)) {
      throw Error("factor_odd_subgroup: " + *d);  // unreachable by the reordering argument
    }
    return {s.even_log(), s.odd_coords()};
  }

  AOperator word_operator(ShcPair const& p, AlgebraPtr const& a, GroupWord const& w) {
    validate_word(p, a, w);
    auto const& rho = p.rho();
    AOperator   r   = AOperator::identity(a, p.space());
    for (auto const& gen : w) {
      if (auto const* k = std::get_if<GenKPoint>(&gen)) {
        r = r * AOperator::constant(a, p.space(), kword_matrix(p, k->word));
      } else if (auto const* e = std::get_if<GenEvenExp>(&gen)) {
        r = r * op_exp(rho.apply(e->t));
      } else if (auto const* o = std::get_if<GenOdd>(&gen)) {
        r = r * (AOperator::identity(a, p.space())
                 + AOperator::tensor(o->eta, p.space(), rho.image(p.g().odd(o->index))));
      } else {
        auto const& og = std::get<GenOddGeneral>(gen);
        GPoint      y  = og.y;
        std::vector<WeilElement> c;
        for (auto const& x : y.coords()) {
          c.push_back(og.eta * x);
        }
        r = r * (AOperator::identity(a, p.space()) + rho.apply(GPoint(a, p.lie(), c)));
      }
    }
    return r;
  }

  AOperator linearize(SplitElement const& s) {
    return word_operator(*s.pair(), s.algebra(), s.to_word());
  }

}  // namespace shcp
