#include "shcp/lie_super.hpp"

#include <set>
#include <sstream>

namespace shcp {

  LiePtr LieSuperalgebra::make(std::vector<std::string> even_names,
                               std::vector<std::string> odd_names,
                               std::map<std::pair<std::size_t, std::size_t>, Vector> const& brackets) {
    auto g     = std::shared_ptr<LieSuperalgebra>(new LieSuperalgebra());
    g->n_even_ = even_names.size();
    g->names_  = std::move(even_names);
    g->names_.insert(g->names_.end(), odd_names.begin(), odd_names.end());
    std::set<std::string> seen(g->names_.begin(), g->names_.end());
    if (seen.size() != g->names_.size()) {
      throw Error("Lie superalgebra: duplicate basis names");
    }
    std::size_t n = g->dim();
    g->table_.assign(n * n, Vector(n));
    for (auto const& [ab, v] : brackets) {
      if (ab.first >= n || ab.second >= n || v.size() != n) {
        throw Error("Lie superalgebra: bracket entry out of range");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (auto it = brackets.find({a, b}); it != brackets.end()) {
          g->table_[a * n + b] = it->second;
        } else if (auto jt = brackets.find({b, a}); jt != brackets.end()) {
          Scalar s = (g->parity(a) && g->parity(b)) ? Scalar(1) : Scalar(-1);
          g->table_[a * n + b] = scale(jt->second, s);
        }
      }
    }
    return g;
  }

  std::optional<std::size_t> LieSuperalgebra::index_of(std::string const& name) const {
    for (std::size_t b = 0; b < dim(); ++b) {
      if (names_[b] == name) {
        return b;
      }
    }
    return std::nullopt;
  }

  Vector LieSuperalgebra::basis_vector(std::size_t b) const {
    Vector v(dim());
    v.at(b) = 1;
    return v;
  }

  Vector LieSuperalgebra::bracket(Vector const& x, Vector const& y) const {
    if (x.size() != dim() || y.size() != dim()) {
      throw Error("bracket: vector size mismatch");
    }
    Vector r(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (x[a].is_zero()) {
        continue;
      }
      for (std::size_t b = 0; b < dim(); ++b) {
        if (y[b].is_zero()) {
          continue;
        }
        Scalar c = x[a] * y[b];
        auto const& t = bracket_basis(a, b);
        for (std::size_t k = 0; k < dim(); ++k) {
          if (!t[k].is_zero()) {
            r[k] += c * t[k];
          }
        }
      }
    }
    return r;
  }

  int LieSuperalgebra::vector_parity(Vector const& x) const {
    bool even = false, odd = false;
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (!x[b].is_zero()) {
        (parity(b) ? odd : even) = true;
      }
    }
    if (even && odd) {
      return -1;
    }
    return odd ? 1 : 0;
  }

  std::string LieSuperalgebra::vector_to_string(Vector const& x) const {
    std::ostringstream os;
    bool               first = true;
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (x[b].is_zero()) {
        continue;
      }
      Scalar c   = x[b];
      bool   neg = c.is_real() && c.re().sign() < 0;
      if (neg) {
        c = -c;
      }
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (!c.is_one()) {
        os << (c.is_real() ? c.to_string() : "(" + c.to_string() + ")") << "*";
      }
      os << names_[b];
      first = false;
    }
    return first ? "0" : os.str();
  }

  std::vector<Issue> validate_superalgebra(LieSuperalgebra const& g) {
    std::vector<Issue> issues;
    std::size_t        n = g.dim();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto const& t = g.bracket_basis(a, b);
        for (std::size_t k = 0; k < n; ++k) {
          if (!t[k].is_zero() && g.parity(k) != (g.parity(a) + g.parity(b)) % 2) {
            issues.push_back({"parity", "[" + g.name(a) + "," + g.name(b) + "] has a component on " + g.name(k)});
            break;
          }
        }
        Scalar s = (g.parity(a) && g.parity(b)) ? Scalar(-1) : Scalar(1);
        if (t != scale(g.bracket_basis(b, a), -s)) {
          issues.push_back({"antisymmetry", "(" + g.name(a) + "," + g.name(b) + ")"});
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          Vector ex = g.basis_vector(x), ey = g.basis_vector(y), ez = g.basis_vector(z);
          auto   sg = [&](std::size_t p, std::size_t q) { return Scalar((g.parity(p) && g.parity(q)) ? -1 : 1); };
          Vector j  = scale(g.bracket(ex, g.bracket(ey, ez)), sg(x, z));
          j         = add(j, scale(g.bracket(ey, g.bracket(ez, ex)), sg(y, x)));
          j         = add(j, scale(g.bracket(ez, g.bracket(ex, ey)), sg(z, y)));
          if (!is_zero(j)) {
            issues.push_back({"jacobi", "(" + g.name(x) + "," + g.name(y) + "," + g.name(z) + ")"});
          }
        }
      }
    }
    return issues;
  }

  Vector odd_square(LieSuperalgebra const& g, Vector const& y) {
    if (g.vector_parity(y) != 1 && !is_zero(y)) {
      throw Error("odd_square: argument is not in the odd part");
    }
    return scale(g.bracket(y, y), Scalar(1, 2));
  }

  GPoint::GPoint(AlgebraPtr a, LiePtr g) : alg_(std::move(a)), g_(std::move(g)) {
    coords_.assign(g_->dim(), alg_->zero());
  }

  GPoint::GPoint(AlgebraPtr a, LiePtr g, std::vector<WeilElement> coords)
      : alg_(std::move(a)), g_(std::move(g)), coords_(std::move(coords)) {
    if (coords_.size() != g_->dim()) {
      throw Error("point has the wrong number of coordinates");
    }
    for (auto const& c : coords_) {
      if (c.algebra() != alg_) {
        throw Error("point coordinate over a different algebra");
      }
    }
  }

  GPoint GPoint::tensor(WeilElement const& x, LiePtr const& g, Vector const& v) {
    GPoint p(x.algebra(), g);
    for (std::size_t b = 0; b < g->dim(); ++b) {
      if (!v.at(b).is_zero()) {
        p.coords_[b] = x * v[b];
      }
    }
    return p;
  }

  bool GPoint::is_zero() const {
    for (auto const& c : coords_) {
      if (!c.is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool GPoint::is_even() const {
    for (std::size_t b = 0; b < coords_.size(); ++b) {
      if (g_->parity(b) == 0 ? !coords_[b].is_even() : !coords_[b].is_odd()) {
        return false;
      }
    }
    return true;
  }

  bool GPoint::is_nilpotent() const {
    for (auto const& c : coords_) {
      if (!c.is_nilpotent()) {
        return false;
      }
    }
    return true;
  }

  GPoint GPoint::even_component() const {
    GPoint r(*this);
    for (std::size_t b = g_->even_dim(); b < g_->dim(); ++b) {
      r.coords_[b] = alg_->zero();
    }
    return r;
  }

  GPoint GPoint::odd_component() const {
    GPoint r(*this);
    for (std::size_t b = 0; b < g_->even_dim(); ++b) {
      r.coords_[b] = alg_->zero();
    }
    return r;
  }

  std::string GPoint::to_string() const {
    std::ostringstream os;
    bool               first = true;
    for (std::size_t b = 0; b < coords_.size(); ++b) {
      if (coords_[b].is_zero()) {
        continue;
      }
      os << (first ? "" : " + ") << "(" << coords_[b].to_string() << ")*" << g_->name(b);
      first = false;
    }
    return first ? "0" : os.str();
  }

  GPoint& GPoint::operator+=(GPoint const& o) {
    if (g_ != o.g_ || alg_ != o.alg_) {
      throw Error("adding points of different spaces");
    }
    for (std::size_t b = 0; b < coords_.size(); ++b) {
      coords_[b] += o.coords_[b];
    }
    return *this;
  }

  GPoint& GPoint::operator-=(GPoint const& o) {
    if (g_ != o.g_ || alg_ != o.alg_) {
      throw Error("subtracting points of different spaces");
    }
    for (std::size_t b = 0; b < coords_.size(); ++b) {
      coords_[b] -= o.coords_[b];
    }
    return *this;
  }

  GPoint& GPoint::operator*=(Scalar const& c) {
    for (auto& x : coords_) {
      x *= c;
    }
    return *this;
  }

  GPoint GPoint::operator-() const {
    GPoint r(*this);
    for (auto& x : r.coords_) {
      x = -x;
    }
    return r;
  }

  GPoint GPoint::scaled(WeilElement const& a) const {
    if (!a.is_even()) {
      throw Error("scaling a point by an element that is not even");
    }
    GPoint r(*this);
    for (auto& x : r.coords_) {
      x = a * x;
    }
    return r;
  }

  GPoint point_bracket(GPoint const& x, GPoint const& y) {
    if (x.lie() != y.lie() || x.algebra() != y.algebra()) {
      throw Error("bracket of points of different spaces");
    }
    auto const& g = *x.lie();
    GPoint      r(x.algebra(), x.lie());
    std::vector<WeilElement> out(g.dim(), x.algebra()->zero());
    std::vector<WeilElement> y_twisted;
    for (auto const& c : y.coords()) {
      y_twisted.push_back(c.even_part() - c.odd_part());
    }
    for (std::size_t a = 0; a < g.dim(); ++a) {
      if (x[a].is_zero()) {
        continue;
      }
      for (std::size_t b = 0; b < g.dim(); ++b) {
        if (y[b].is_zero()) {
          continue;
        }
        WeilElement c = x[a] * (g.parity(a) ? y_twisted[b] : y[b]);
        if (c.is_zero()) {
          continue;
        }
        auto const& t = g.bracket_basis(a, b);
        for (std::size_t k = 0; k < g.dim(); ++k) {
          if (!t[k].is_zero()) {
            out[k] += c * t[k];
          }
        }
      }
    }
    return GPoint(x.algebra(), x.lie(), std::move(out));
  }

  GPoint exp_ad(GPoint const& t, GPoint const& y) {
    if (!t.is_nilpotent()) {
      throw Error("exp_ad: exponent is not nilpotent");
    }
    GPoint result = y;
    GPoint term   = y;
    for (int k = 1; k <= t.algebra()->nilpotency_index(); ++k) {
      term = point_bracket(t, term) * Scalar(1, k);
      if (term.is_zero()) {
        break;
      }
      result += term;
    }
    return result;
  }

  BoseckSplit boseck_split_point(GPoint const& x) {
    if (!x.is_even()) {
      throw Error("boseck_split_point: argument is not an even point");
    }
    auto const& g = *x.lie();
    BoseckSplit s{Vector(g.dim()), x};
    for (std::size_t b = 0; b < g.even_dim(); ++b) {
      s.base[b] = x[b].augment();
    }
    s.nilpotent -= GPoint::tensor(x.algebra()->one(), x.lie(), s.base);
    return s;
  }

  int filtration_degree(GPoint const& x, std::vector<WeilElement> const& gens) {
    if (!x.is_nilpotent()) {
      throw Error("filtration_degree: point is not nilpotent");
    }
    IdealFiltration f(x.algebra(), gens);
    int             d = f.bound();
    for (auto const& c : x.coords()) {
      d = std::min(d, f.degree(c));
    }
    return d;
  }

  Representation::Representation(LiePtr g, SuperSpace v, std::vector<Matrix> images)
      : g_(std::move(g)), v_(v), images_(std::move(images)) {
    if (images_.size() != g_->dim()) {
      throw Error("representation: one matrix per basis element required");
    }
    std::size_t n = v_.dim();
    columns_      = Matrix(n * n, g_->dim());
    for (std::size_t b = 0; b < g_->dim(); ++b) {
      if (images_[b].rows() != n || images_[b].cols() != n) {
        throw Error("representation: matrix size does not match the super space");
      }
      for (std::size_t k = 0; k < n * n; ++k) {
        columns_(k, b) = images_[b](k / n, k % n);
      }
    }
    injective_ = rank(columns_) == g_->dim();
    if (injective_) {
      Matrix h      = columns_.conj_transpose();
      left_inverse_ = *inverse(h * columns_) * h;
    }
  }

  Matrix Representation::of(Vector const& x) const {
    Matrix m(v_.dim(), v_.dim());
    for (std::size_t b = 0; b < g_->dim(); ++b) {
      if (!x.at(b).is_zero()) {
        m += images_[b] * x[b];
      }
    }
    return m;
  }

  std::optional<Vector> Representation::preimage(Matrix const& m) const {
    if (!injective_) {
      throw Error("representation is not injective");
    }
    Vector flat = m.flatten();
    Vector c    = left_inverse_.apply(flat);
    if (columns_.apply(c) != flat) {
      return std::nullopt;
    }
    return c;
  }

  AOperator Representation::apply(GPoint const& x) const {
    AOperator r(x.algebra(), v_);
    for (std::size_t b = 0; b < g_->dim(); ++b) {
      if (!x[b].is_zero()) {
        r += AOperator::tensor(x[b], v_, images_[b]);
      }
    }
    return r;
  }

  GPoint Representation::pullback(AOperator const& op) const {
    std::vector<WeilElement> coords(g_->dim(), op.algebra()->zero());
    for (auto const& [m, mat] : op.terms()) {
      auto c = preimage(mat);
      if (!c) {
        throw Error("operator does not lie in the image of the representation");
      }
      WeilElement basis = op.algebra()->basis(m);
      for (std::size_t b = 0; b < g_->dim(); ++b) {
        if (!(*c)[b].is_zero()) {
          coords[b] += basis * (*c)[b];
        }
      }
    }
    return GPoint(op.algebra(), g_, std::move(coords));
  }

  GPoint bch_log(Representation const& rho, GPoint const& x, GPoint const& y) {
    if (!x.is_nilpotent() || !y.is_nilpotent()) {
      throw Error("bch_log: arguments must be nilpotent");
    }
    if (x.is_zero()) {
      return y;
    }
    if (y.is_zero()) {
      return x;
    }
    return rho.pullback(op_log(op_exp(rho.apply(x)) * op_exp(rho.apply(y))));
  }

}  // namespace shcp
