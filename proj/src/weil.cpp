#include "shcp/weil.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace shcp {

  namespace {
    constexpr std::size_t kMaxDim = 256;

    std::vector<std::uint32_t> grassmann_masks(int n) {
      std::vector<std::uint32_t> masks(std::size_t(1) << n);
      for (std::uint32_t m = 0; m < masks.size(); ++m) {
        masks[m] = m;
      }
      auto key = [](std::uint32_t m) {
        std::vector<int> idx;
        for (int k = 0; k < 32; ++k) {
          if (m & (1u << k)) {
            idx.push_back(k);
          }
        }
        return std::make_pair(static_cast<int>(idx.size()), idx);
      };
      std::sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
        return key(a) < key(b);
      });
      return masks;
    }

    // Sign of xi_S * xi_T with both index sets in increasing order.
    int grassmann_sign(std::uint32_t s, std::uint32_t t) {
      int inversions = 0;
      for (int k = 0; k < 32; ++k) {
        if (t & (1u << k)) {
          inversions += std::popcount(s >> (k + 1));
        }
      }
      return (inversions % 2) ? -1 : 1;
    }

    Sparse canonical(Sparse terms) {
      std::sort(terms.begin(), terms.end(), [](Term const& a, Term const& b) {
        return a.first < b.first;
      });
      Sparse out;
      for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first) {
          out.back().second += t.second;
        } else {
          out.push_back(std::move(t));
        }
      }
      out.erase(std::remove_if(out.begin(), out.end(), [](Term const& t) { return t.second.is_zero(); }),
                out.end());
      return out;
    }

    // Echelon basis of the span, pivots on the largest basis index.
    std::vector<WeilElement> echelon(AlgebraPtr const& a, std::vector<WeilElement> const& v) {
      std::size_t d = a->dim();
      Matrix      m(v.size(), d);
      for (std::size_t r = 0; r < v.size(); ++r) {
        for (auto const& [b, c] : v[r].terms()) {
          m(r, d - 1 - b) = c;
        }
      }
      auto                     piv = rref(m);
      std::vector<WeilElement> out;
      for (std::size_t r = piv.size(); r-- > 0;) {
        Sparse terms;
        for (std::size_t col = 0; col < d; ++col) {
          if (!m(r, col).is_zero()) {
            terms.emplace_back(static_cast<std::uint32_t>(d - 1 - col), m(r, col));
          }
        }
        out.emplace_back(a, std::move(terms));
      }
      return out;
    }

    std::size_t top_index(WeilElement const& x) {
      return x.terms().back().first;
    }

    // Reduces x modulo an echelon basis; returns the remainder.
    WeilElement reduce(WeilElement x, std::vector<WeilElement> const& basis) {
      for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
        Scalar c = x.coeff(top_index(*it));
        if (!c.is_zero()) {
          x -= *it * c;
        }
      }
      return x;
    }
  }  // namespace

  struct AlgebraBuilder {
    static std::shared_ptr<WeilAlgebra> make() {
      return std::shared_ptr<WeilAlgebra>(new WeilAlgebra());
    }
    static AlgebraPtr done(std::shared_ptr<WeilAlgebra> a) {
      a->self_ = a;
      a->finalize();
      return a;
    }
    static WeilAlgebra& edit(std::shared_ptr<WeilAlgebra> const& a) {
      return *a;
    }

    static AlgebraPtr grassmann(int n) {
      if (n < 0 || n > 8) {
        throw Error("grassmann: number of generators must be in 0..8");
      }
      auto  a     = make();
      auto& w     = *a;
      auto  masks = grassmann_masks(n);
      std::map<std::uint32_t, std::uint32_t> index;
      for (std::uint32_t i = 0; i < masks.size(); ++i) {
        index[masks[i]] = i;
        std::string label;
        for (int k = 0; k < n; ++k) {
          if (masks[i] & (1u << k)) {
            label += (label.empty() ? "" : "*") + std::string("xi") + std::to_string(k + 1);
          }
        }
        w.labels_.push_back(label.empty() ? "1" : label);
        w.parity_.push_back(std::popcount(masks[i]) % 2);
      }
      std::size_t d = masks.size();
      w.table_.resize(d * d);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (masks[i] & masks[j]) {
            continue;
          }
          w.table_[i * d + j].emplace_back(index[masks[i] | masks[j]],
                                           Scalar(grassmann_sign(masks[i], masks[j])));
        }
      }
      for (int k = 0; k < n; ++k) {
        w.gen_names_.push_back("xi" + std::to_string(k + 1));
        w.gen_values_.push_back({Term(index[1u << k], Scalar(1))});
      }
      w.descriptor_ = "grassmann:" + std::to_string(n);
      return done(a);
    }

    static AlgebraPtr dual(AlgebraPtr const& base, std::string const& eps_name) {
      std::size_t d = base->dim();
      if (2 * d > kMaxDim) {
        throw Error("adjoin_dual_number: algebra too large");
      }
      auto  a = make();
      auto& w = *a;
      for (std::size_t b = 0; b < d; ++b) {
        w.labels_.push_back(base->label(b));
        w.parity_.push_back(base->parity(b));
      }
      for (std::size_t b = 0; b < d; ++b) {
        w.labels_.push_back(b == 0 ? eps_name : eps_name + "*" + base->label(b));
        w.parity_.push_back(base->parity(b));
      }
      w.table_.resize(4 * d * d);
      auto shifted = [&](Sparse s) {
        for (auto& t : s) {
          t.first += static_cast<std::uint32_t>(d);
        }
        return s;
      };
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          Sparse const& p           = base->product(i, j);
          w.table_[i * 2 * d + j]   = p;
          w.table_[i * 2 * d + j + d] = shifted(p);
          w.table_[(i + d) * 2 * d + j] = shifted(p);
        }
      }
      w.gen_names_  = base->gen_names_;
      w.gen_values_ = base->gen_values_;
      w.gen_names_.push_back(eps_name);
      w.gen_values_.push_back({Term(static_cast<std::uint32_t>(d), Scalar(1))});
      w.descriptor_ = "dual:" + base->descriptor();
      return done(a);
    }

    static AlgebraPtr quotient(AlgebraPtr const& base,
                               std::vector<WeilElement> const& ideal,
                               std::string const& descriptor,
                               std::vector<std::uint32_t>& complement) {
      std::vector<bool> pivot(base->dim(), false);
      for (auto const& r : ideal) {
        pivot[top_index(r)] = true;
      }
      if (pivot[0]) {
        throw Error("quotient_algebra: ideal contains the unit");
      }
      complement.clear();
      std::vector<std::int64_t> position(base->dim(), -1);
      for (std::uint32_t b = 0; b < base->dim(); ++b) {
        if (!pivot[b]) {
          position[b] = static_cast<std::int64_t>(complement.size());
          complement.push_back(b);
        }
      }
      auto to_quotient = [&](WeilElement const& x) {
        Sparse      s;
        WeilElement r = reduce(x, ideal);
        for (auto const& [b, c] : r.terms()) {
          s.emplace_back(static_cast<std::uint32_t>(position[b]), c);
        }
        return s;
      };
      auto        a = make();
      auto&       w = *a;
      std::size_t d = complement.size();
      for (auto b : complement) {
        w.labels_.push_back(base->label(b));
        w.parity_.push_back(base->parity(b));
      }
      w.table_.resize(d * d);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          w.table_[i * d + j] = to_quotient(base->basis(complement[i]) * base->basis(complement[j]));
        }
      }
      w.gen_names_ = base->gen_names_;
      for (auto const& g : base->gen_values_) {
        w.gen_values_.push_back(to_quotient(WeilElement(base, g)));
      }
      w.descriptor_ = descriptor;
      return done(a);
    }
  };

  void WeilAlgebra::finalize() {
    std::size_t d = dim();
    if (d == 0 || d > kMaxDim) {
      throw Error("Weil algebra dimension out of range");
    }
    monomial_ = true;
    mono_sign_.assign(d * d, 0);
    mono_index_.assign(d * d, 0);
    for (std::size_t k = 0; k < d * d; ++k) {
      auto const& p = table_[k];
      if (p.empty()) {
        continue;
      }
      if (p.size() == 1 && (p[0].second.is_one() || (-p[0].second).is_one())) {
        mono_sign_[k]  = p[0].second.is_one() ? 1 : -1;
        mono_index_[k] = p[0].first;
      } else {
        monomial_ = false;
      }
    }
    auto nil  = nilradical_generators(ptr());
    nil_index_ = 1;
    while (!ideal_power_basis(ptr(), nil, nil_index_).empty()) {
      ++nil_index_;
      if (nil_index_ > static_cast<int>(d) + 1) {
        throw Error("Weil algebra: radical is not nilpotent");
      }
    }
  }

  AlgebraPtr WeilAlgebra::grassmann(int n) {
    return AlgebraBuilder::grassmann(n);
  }

  AlgebraPtr build_grassmann(int n) {
    return WeilAlgebra::grassmann(n);
  }

  AlgebraPtr WeilAlgebra::from_descriptor(std::string_view d) {
    std::string s(d);
    if (s.rfind("dual:", 0) == 0) {
      return adjoin_dual_number(from_descriptor(s.substr(5))).algebra;
    }
    if (s.rfind("grassmann:", 0) == 0) {
      std::string n = s.substr(10);
      if (n.empty() || n.size() > 2 || !std::all_of(n.begin(), n.end(), [](char c) {
            return c >= '0' && c <= '9';
          })) {
        throw Error("malformed Weil descriptor '" + s + "'");
      }
      return grassmann(std::stoi(n));
    }
    throw Error("unknown Weil descriptor '" + s + "'");
  }

  std::size_t WeilAlgebra::odd_dim() const {
    return static_cast<std::size_t>(std::count(parity_.begin(), parity_.end(), 1));
  }

  std::optional<WeilElement> WeilAlgebra::generator(std::string_view name) const {
    for (std::size_t k = 0; k < gen_names_.size(); ++k) {
      if (gen_names_[k] == name) {
        return WeilElement(ptr(), gen_values_[k]);
      }
    }
    return std::nullopt;
  }

  WeilElement WeilAlgebra::one() const {
    return WeilElement(ptr(), Scalar(1));
  }

  WeilElement WeilAlgebra::zero() const {
    return WeilElement(ptr());
  }

  WeilElement WeilAlgebra::basis(std::size_t b) const {
    return WeilElement(ptr(), Sparse{Term(static_cast<std::uint32_t>(b), Scalar(1))});
  }

  WeilElement::WeilElement(AlgebraPtr a, Sparse terms) : alg_(std::move(a)), terms_(canonical(std::move(terms))) {
    for (auto const& t : terms_) {
      if (t.first >= alg_->dim()) {
        throw Error("basis index out of range");
      }
    }
  }

  WeilElement::WeilElement(AlgebraPtr a, Scalar c) : alg_(std::move(a)) {
    if (!c.is_zero()) {
      terms_.emplace_back(0, std::move(c));
    }
  }

  Scalar WeilElement::coeff(std::size_t b) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b, [](Term const& t, std::size_t x) {
      return t.first < x;
    });
    if (it != terms_.end() && it->first == b) {
      return it->second;
    }
    return Scalar(0);
  }

  bool WeilElement::is_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](Term const& t) { return alg_->parity(t.first) == 0; });
  }

  bool WeilElement::is_odd() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](Term const& t) { return alg_->parity(t.first) == 1; });
  }

  WeilElement WeilElement::even_part() const {
    Sparse s;
    for (auto const& t : terms_) {
      if (alg_->parity(t.first) == 0) {
        s.push_back(t);
      }
    }
    return WeilElement(alg_, std::move(s));
  }

  WeilElement WeilElement::odd_part() const {
    Sparse s;
    for (auto const& t : terms_) {
      if (alg_->parity(t.first) == 1) {
        s.push_back(t);
      }
    }
    return WeilElement(alg_, std::move(s));
  }

  Vector WeilElement::dense() const {
    Vector v(alg_->dim());
    for (auto const& [b, c] : terms_) {
      v[b] = c;
    }
    return v;
  }

  std::string WeilElement::to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& [b, c] : terms_) {
      Scalar coef = c;
      bool   neg  = c.is_real() && c.re().sign() < 0;
      if (neg) {
        coef = -c;
      }
      if (first) {
        os << (neg ? "-" : "");
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      std::string cs = coef.is_real() ? coef.to_string() : "(" + coef.to_string() + ")";
      if (b == 0) {
        os << cs;
      } else if (coef.is_one()) {
        os << alg_->label(b);
      } else {
        os << cs << "*" << alg_->label(b);
      }
    }
    return os.str();
  }

  WeilElement WeilElement::operator-() const {
    WeilElement r(*this);
    for (auto& t : r.terms_) {
      t.second = -t.second;
    }
    return r;
  }

  WeilElement& WeilElement::operator+=(WeilElement const& o) {
    if (alg_ != o.alg_) {
      throw Error("adding elements of different Weil algebras");
    }
    if (o.terms_.empty()) {
      return *this;
    }
    Sparse out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first < i->first) {
        out.push_back(*j++);
      } else {
        Scalar s = i->second + j->second;
        if (!s.is_zero()) {
          out.emplace_back(i->first, std::move(s));
        }
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  WeilElement& WeilElement::operator-=(WeilElement const& o) {
    return *this += -o;
  }

  WeilElement& WeilElement::operator*=(Scalar const& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) {
      t.second *= c;
    }
    return *this;
  }

  WeilElement operator*(WeilElement const& a, WeilElement const& b) {
    if (a.alg_ != b.alg_) {
      throw Error("multiplying elements of different Weil algebras");
    }
    auto const& alg = *a.alg_;
    if (a.terms_.empty() || b.terms_.empty()) {
      return WeilElement(a.alg_);
    }
    std::vector<Scalar> acc(alg.dim());
    std::vector<bool>   hit(alg.dim(), false);
    for (auto const& [i, ci] : a.terms_) {
      for (auto const& [j, cj] : b.terms_) {
        if (alg.is_monomial()) {
          auto s = alg.mono_sign(i, j);
          if (s == 0) {
            continue;
          }
          auto k = alg.mono_index(i, j);
          Scalar p = ci * cj;
          if (s > 0) {
            acc[k] += p;
          } else {
            acc[k] -= p;
          }
          hit[k] = true;
        } else {
          Scalar p = ci * cj;
          for (auto const& [k, c] : alg.product(i, j)) {
            acc[k] += p * c;
            hit[k] = true;
          }
        }
      }
    }
    WeilElement r(a.alg_);
    for (std::uint32_t k = 0; k < alg.dim(); ++k) {
      if (hit[k] && !acc[k].is_zero()) {
        r.terms_.emplace_back(k, std::move(acc[k]));
      }
    }
    return r;
  }

  bool operator==(WeilElement const& a, WeilElement const& b) {
    if (a.alg_ != b.alg_) {
      if (!a.alg_ || !b.alg_ || a.alg_->descriptor() != b.alg_->descriptor()) {
        return false;
      }
    }
    return a.terms_ == b.terms_;
  }

  WeilElement w_mul(WeilElement const& a, WeilElement const& b) {
    return a * b;
  }

  WeilElement from_dense(AlgebraPtr const& a, Vector const& v) {
    Sparse s;
    for (std::uint32_t b = 0; b < v.size(); ++b) {
      if (!v[b].is_zero()) {
        s.emplace_back(b, v[b]);
      }
    }
    return WeilElement(a, std::move(s));
  }

  AlgebraMorphism::AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<WeilElement> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->dim()) {
      throw Error("algebra morphism: wrong number of images");
    }
    for (auto const& x : images_) {
      if (x.algebra() != target_) {
        throw Error("algebra morphism: image outside the target algebra");
      }
    }
  }

  AlgebraMorphism AlgebraMorphism::identity(AlgebraPtr const& a) {
    std::vector<WeilElement> im;
    for (std::size_t b = 0; b < a->dim(); ++b) {
      im.push_back(a->basis(b));
    }
    return AlgebraMorphism(a, a, std::move(im));
  }

  AlgebraMorphism AlgebraMorphism::augmentation(AlgebraPtr const& a) {
    auto                     k = WeilAlgebra::grassmann(0);
    std::vector<WeilElement> im(a->dim(), k->zero());
    im[0] = k->one();
    return AlgebraMorphism(a, k, std::move(im));
  }

  AlgebraMorphism AlgebraMorphism::substitution(AlgebraPtr const& source,
                                                AlgebraPtr const& target,
                                                std::vector<WeilElement> const& images) {
    int n = static_cast<int>(images.size());
    if (source->descriptor() != "grassmann:" + std::to_string(n)) {
      throw Error("substitution: source must be a Grassmann algebra on as many generators as images");
    }
    for (auto const& x : images) {
      if (x.algebra() != target || !x.is_odd()) {
        throw Error("substitution: images must be odd elements of the target");
      }
    }
    auto                     masks = grassmann_masks(n);
    std::vector<WeilElement> im;
    for (auto m : masks) {
      WeilElement x = target->one();
      for (int k = 0; k < n; ++k) {
        if (m & (1u << k)) {
          x = x * images[k];
        }
      }
      im.push_back(std::move(x));
    }
    return AlgebraMorphism(source, target, std::move(im));
  }

  WeilElement AlgebraMorphism::operator()(WeilElement const& x) const {
    if (x.algebra() != source_) {
      throw Error("algebra morphism applied outside its source");
    }
    WeilElement r = target_->zero();
    for (auto const& [b, c] : x.terms()) {
      r += images_[b] * c;
    }
    return r;
  }

  AlgebraMorphism AlgebraMorphism::then(AlgebraMorphism const& next) const {
    std::vector<WeilElement> im;
    for (auto const& x : images_) {
      im.push_back(next(x));
    }
    return AlgebraMorphism(source_, next.target_, std::move(im));
  }

  std::optional<std::string> AlgebraMorphism::defect() const {
    if (images_[0] != target_->one()) {
      return "unit not preserved";
    }
    for (std::size_t b = 0; b < source_->dim(); ++b) {
      bool ok = source_->parity(b) == 0 ? images_[b].is_even() : images_[b].is_odd();
      if (!ok) {
        return "parity not preserved at " + source_->label(b);
      }
    }
    for (std::size_t i = 0; i < source_->dim(); ++i) {
      for (std::size_t j = 0; j < source_->dim(); ++j) {
        WeilElement lhs = (*this)(source_->basis(i) * source_->basis(j));
        if (lhs != images_[i] * images_[j]) {
          return "not multiplicative on " + source_->label(i) + ", " + source_->label(j);
        }
      }
    }
    return std::nullopt;
  }

  DualExtension adjoin_dual_number(AlgebraPtr const& a) {
    int eps_count = 0;
    for (auto const& g : a->generator_names()) {
      if (g.rfind("eps", 0) == 0) {
        ++eps_count;
      }
    }
    std::string name = eps_count == 0 ? "eps" : "eps" + std::to_string(eps_count + 1);
    DualExtension ext;
    ext.algebra     = AlgebraBuilder::dual(a, name);
    std::size_t d   = a->dim();
    ext.eps         = ext.algebra->basis(d);
    std::vector<WeilElement> inc, drop;
    for (std::size_t b = 0; b < d; ++b) {
      inc.push_back(ext.algebra->basis(b));
    }
    for (std::size_t b = 0; b < 2 * d; ++b) {
      drop.push_back(b < d ? a->basis(b) : a->zero());
    }
    ext.include = AlgebraMorphism(a, ext.algebra, std::move(inc));
    ext.drop    = AlgebraMorphism(ext.algebra, a, std::move(drop));
    return ext;
  }

  std::vector<WeilElement> nilradical_generators(AlgebraPtr const& a) {
    std::vector<WeilElement> g;
    for (std::size_t b = 1; b < a->dim(); ++b) {
      g.push_back(a->basis(b));
    }
    return g;
  }

  std::vector<WeilElement> ideal_power_basis(AlgebraPtr const& a,
                                             std::vector<WeilElement> const& gens,
                                             int n) {
    if (n < 0) {
      throw Error("ideal_power_basis: negative exponent");
    }
    for (auto const& g : gens) {
      if (g.algebra() != a) {
        throw Error("ideal_power_basis: generator outside the algebra");
      }
    }
    std::vector<WeilElement> current;
    for (std::size_t b = 0; b < a->dim(); ++b) {
      current.push_back(a->basis(b));
    }
    for (int k = 0; k < n; ++k) {
      std::vector<WeilElement> next;
      for (auto const& r : current) {
        for (auto const& g : gens) {
          WeilElement p = r * g;
          if (!p.is_zero()) {
            next.push_back(std::move(p));
          }
        }
      }
      current = echelon(a, next);
      if (current.empty()) {
        break;
      }
    }
    return current;
  }

  Quotient quotient_algebra(AlgebraPtr const& a, std::vector<WeilElement> const& gens, int n) {
    if (n < 1) {
      throw Error("quotient_algebra: exponent must be positive");
    }
    std::string desc = a->descriptor() + "/(";
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!gens[k].is_even() && !gens[k].is_odd()) {
        throw Error("quotient_algebra: generators must be homogeneous");
      }
      desc += (k ? "," : "") + gens[k].to_string();
    }
    desc += ")^" + std::to_string(n);
    auto                       ideal = ideal_power_basis(a, gens, n);
    std::vector<std::uint32_t> complement;
    Quotient                   q;
    q.algebra = AlgebraBuilder::quotient(a, ideal, desc, complement);
    std::vector<std::int64_t> position(a->dim(), -1);
    for (std::size_t k = 0; k < complement.size(); ++k) {
      position[complement[k]] = static_cast<std::int64_t>(k);
    }
    std::vector<WeilElement> im;
    for (std::size_t b = 0; b < a->dim(); ++b) {
      Sparse      s;
      WeilElement r = reduce(a->basis(b), ideal);
      for (auto const& [i, c] : r.terms()) {
        s.emplace_back(static_cast<std::uint32_t>(position[i]), c);
      }
      im.emplace_back(q.algebra, std::move(s));
    }
    q.projection = AlgebraMorphism(a, q.algebra, std::move(im));
    return q;
  }

  bool same_span(std::vector<WeilElement> const& x, std::vector<WeilElement> const& y) {
    AlgebraPtr a = !x.empty() ? x[0].algebra() : (!y.empty() ? y[0].algebra() : nullptr);
    if (!a) {
      return true;
    }
    auto ex = echelon(a, x);
    auto ey = echelon(a, y);
    return ex == ey;
  }

  IdealFiltration::IdealFiltration(AlgebraPtr a, std::vector<WeilElement> const& gens) : alg_(std::move(a)) {
    powers_.push_back(ideal_power_basis(alg_, gens, 0));
    for (int d = 1; d <= static_cast<int>(alg_->dim()) + 1; ++d) {
      std::vector<WeilElement> next;
      for (auto const& r : powers_.back()) {
        for (auto const& g : gens) {
          WeilElement p = r * g;
          if (!p.is_zero()) {
            next.push_back(std::move(p));
          }
        }
      }
      next = echelon(alg_, next);
      if (next.empty() || next == powers_.back()) {
        break;
      }
      powers_.push_back(std::move(next));
    }
  }

  bool IdealFiltration::contains(WeilElement const& x, int d) const {
    if (x.is_zero()) {
      return true;
    }
    if (d < 0) {
      return true;
    }
    if (d >= static_cast<int>(powers_.size())) {
      return false;
    }
    return reduce(x, powers_[d]).is_zero();
  }

  int IdealFiltration::degree(WeilElement const& x) const {
    if (x.is_zero()) {
      return bound();
    }
    int d = 0;
    while (d + 1 < bound() && contains(x, d + 1)) {
      ++d;
    }
    return d;
  }

}  // namespace shcp
