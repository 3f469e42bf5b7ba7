#include "shcp/cli_io.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace shcp {

  namespace {

    using json = nlohmann::ordered_json;

    // ---------------------------------------------------------------------
    // Coefficient expressions

    // A parsed subexpression: an element of A, or a point of A (x) g.
    struct Value {
      WeilElement                             s;
      std::optional<std::vector<WeilElement>> v;
    };

    bool is_name_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    bool is_name_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    class ExprParser {
     public:
      ExprParser(std::string_view src, AlgebraPtr a, LiePtr g, bool gaussian)
          : src_(src), a_(std::move(a)), g_(std::move(g)), gaussian_(gaussian) {}

      Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ < src_.size()) {
          fail(std::string("unexpected '") + src_[pos_] + "'", pos_);
        }
        return v;
      }

     private:
      [[noreturn]] void fail(std::string const& msg, std::size_t at) const {
        throw ParseError(msg, at + 1);
      }

      void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
          ++pos_;
        }
      }

      Value scalar(WeilElement x) const {
        return Value{std::move(x), std::nullopt};
      }

      Value expr() {
        Value v = term();
        for (;;) {
          skip_ws();
          if (pos_ >= src_.size() || (src_[pos_] != '+' && src_[pos_] != '-')) {
            return v;
          }
          char        op = src_[pos_];
          std::size_t at = pos_++;
          Value       r  = term();
          v              = add(v, op == '+' ? r : negate(r), at);
        }
      }

      Value term() {
        Value v = factor();
        for (;;) {
          skip_ws();
          if (pos_ >= src_.size() || src_[pos_] != '*') {
            return v;
          }
          std::size_t at = pos_++;
          Value       r  = factor();
          v              = multiply(v, r, at);
        }
      }

      Value factor() {
        skip_ws();
        if (pos_ >= src_.size()) {
          fail("expected a number, a name or '('", pos_);
        }
        char c = src_[pos_];
        if (c == '-') {
          ++pos_;
          return negate(factor());
        }
        if (c == '(') {
          std::size_t open = pos_++;
          Value       v    = expr();
          skip_ws();
          if (pos_ >= src_.size() || src_[pos_] != ')') {
            fail("unbalanced '(' opened here", open);
          }
          ++pos_;
          return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
          return number();
        }
        if (is_name_start(c)) {
          return name();
        }
        fail(std::string("unexpected '") + c + "'", pos_);
      }

      std::string digits() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          ++pos_;
        }
        return std::string(src_.substr(start, pos_ - start));
      }

      // INT ('/' INT)? 'i'?
      Value number() {
        std::size_t start = pos_;
        std::string num   = digits();
        Rational    q     = Rational::parse(num);
        if (pos_ + 1 < src_.size() && src_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
          ++pos_;
          std::string den = digits();
          if (Rational::parse(den).is_zero()) {
            fail("division by zero", start);
          }
          q = Rational::parse(num + "/" + den);
        }
        Scalar c(q);
        if (pos_ < src_.size() && src_[pos_] == 'i' && (pos_ + 1 >= src_.size() || !is_name_char(src_[pos_ + 1]))) {
          if (!gaussian_) {
            fail("imaginary unit outside the field Q(i)", pos_);
          }
          ++pos_;
          c = Scalar(Rational(0), q);
        }
        return scalar(WeilElement(a_, c));
      }

      Value name() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_name_char(src_[pos_])) {
          ++pos_;
        }
        std::string n(src_.substr(start, pos_ - start));
        if (g_) {
          if (auto b = g_->index_of(n)) {
            std::vector<WeilElement> c(g_->dim(), a_->zero());
            c[*b] = a_->one();
            return Value{a_->zero(), std::move(c)};
          }
        }
        if (auto x = a_->generator(n)) {
          return scalar(*x);
        }
        if (n == "i") {
          if (!gaussian_) {
            fail("imaginary unit outside the field Q(i)", start);
          }
          return scalar(WeilElement(a_, Scalar::i()));
        }
        if (n.rfind("xi", 0) == 0 && n.size() > 2
            && std::all_of(n.begin() + 2, n.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
          fail("unknown generator index '" + n + "' for " + a_->descriptor(), start);
        }
        fail("unknown name '" + n + "'", start);
      }

      static Value negate(Value v) {
        if (v.v) {
          for (auto& c : *v.v) {
            c = -c;
          }
        } else {
          v.s = -v.s;
        }
        return v;
      }

      Value add(Value const& x, Value const& y, std::size_t at) const {
        if (x.v.has_value() != y.v.has_value()) {
          fail("cannot add a scalar and a point of A (x) g", at);
        }
        if (!x.v) {
          return scalar(x.s + y.s);
        }
        Value r = x;
        for (std::size_t b = 0; b < r.v->size(); ++b) {
          (*r.v)[b] += (*y.v)[b];
        }
        return r;
      }

      Value multiply(Value const& x, Value const& y, std::size_t at) const {
        if (x.v && y.v) {
          fail("product of two points of A (x) g", at);
        }
        if (!x.v && !y.v) {
          return scalar(x.s * y.s);
        }
        if (y.v) {
          Value r = y;
          for (auto& c : *r.v) {
            c = x.s * c;
          }
          return r;
        }
        // (c (x) e_b) s = (-1)^{|e_b||s|} cs (x) e_b
        Value       r        = x;
        WeilElement s_even   = y.s.even_part();
        WeilElement s_twist  = s_even - y.s.odd_part();
        for (std::size_t b = 0; b < r.v->size(); ++b) {
          (*r.v)[b] = (*r.v)[b] * (g_->parity(b) ? s_twist : y.s);
        }
        return r;
      }

      std::string_view src_;
      AlgebraPtr       a_;
      LiePtr           g_;
      bool             gaussian_;
      std::size_t      pos_ = 0;
    };

    // Re-raises a parse error of a substring at its position in the whole text.
    template <class F>
    auto shifted(std::size_t offset, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (ParseError const& e) {
        throw ParseError(e.message(), e.column() + offset);
      }
    }

    // ---------------------------------------------------------------------
    // Words

    std::string trim(std::string_view s, std::size_t& offset) {
      std::size_t b = 0;
      std::size_t e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      offset += b;
      return std::string(s.substr(b, e - b));
    }

    // Splits on sep, returning (piece, offset of piece) pairs.
    std::vector<std::pair<std::string_view, std::size_t>> split(std::string_view s, char sep) {
      std::vector<std::pair<std::string_view, std::size_t>> out;
      std::size_t                                          start = 0;
      for (std::size_t k = 0; k <= s.size(); ++k) {
        if (k == s.size() || s[k] == sep) {
          out.emplace_back(s.substr(start, k - start), start);
          start = k + 1;
        }
      }
      return out;
    }

    Generator parse_token(std::string_view tok, std::size_t offset, ShcPair const& p, AlgebraPtr const& a) {
      auto const& g      = p.g();
      auto        fields = split(tok, ':');
      std::string kind(fields[0].first);
      auto        expect = [&](std::size_t lo, std::size_t hi) {
        if (fields.size() < lo || fields.size() > hi) {
          throw ParseError("token '" + std::string(tok) + "' has the wrong number of fields", offset + 1);
        }
      };
      auto coeff = [&](std::size_t f) {
        return shifted(offset + fields[f].second,
                       [&] { return parse_coeff_expr(fields[f].first, a, p.gaussian()); });
      };
      auto point = [&](std::size_t f) {
        return shifted(offset + fields[f].second,
                       [&] { return parse_point(fields[f].first, a, p.lie(), p.gaussian()); });
      };
      auto at = [&](std::size_t f) {
        return offset + fields[f].second + 1;
      };
      if (kind == "kpt" || kind == "kptinv") {
        expect(2, 2);
        std::size_t rel = 0;
        std::string n   = trim(fields[1].first, rel);
        auto        k   = p.kpoint_index(n);
        if (!k) {
          throw ParseError("unknown K-point '" + n + "'", at(1) + rel);
        }
        return GenKPoint{{{*k, kind == "kpt" ? 1 : -1}}};
      }
      if (kind == "odd") {
        expect(3, 3);
        std::size_t rel = 0;
        std::string n   = trim(fields[1].first, rel);
        auto        b   = g.index_of(n);
        if (!b || g.parity(*b) != 1) {
          throw ParseError("'" + n + "' is not an odd basis element", at(1) + rel);
        }
        WeilElement eta = coeff(2);
        if (!eta.is_odd()) {
          throw ParseError("coefficient of an odd factor must be odd", at(2));
        }
        return GenOdd{eta, *b - g.even_dim()};
      }
      if (kind == "oddgen") {
        expect(3, 3);
        GPoint y = point(1);
        if (!y.even_component().is_zero()) {
          throw ParseError("oddgen direction must lie in A (x) g_1", at(1));
        }
        for (auto const& c : y.coords()) {
          if (!c.is_even()) {
            throw ParseError("oddgen direction must have even coefficients", at(1));
          }
        }
        WeilElement eta = coeff(2);
        if (!eta.is_odd()) {
          throw ParseError("coefficient of an odd factor must be odd", at(2));
        }
        return GenOddGeneral{eta, y};
      }
      if (kind == "evexp") {
        expect(2, 3);
        GPoint t = point(1);
        if (fields.size() == 3) {
          WeilElement c = coeff(2);
          if (!c.is_even()) {
            throw ParseError("evexp coefficient must be even", at(2));
          }
          t = t.scaled(c);
        }
        if (!t.odd_component().is_zero()) {
          throw ParseError("evexp exponent must lie in A (x) g_0", at(1));
        }
        if (!t.is_even() || !t.is_nilpotent()) {
          throw ParseError("evexp exponent must have even nilpotent coefficients", at(1));
        }
        return GenEvenExp{t};
      }
      throw ParseError("unknown token kind '" + kind + "'", offset + 1);
    }

    std::vector<std::string> generator_tokens(ShcPair const& p, Generator const& gen) {
      std::vector<std::string> out;
      if (auto const* k = std::get_if<GenKPoint>(&gen)) {
        for (auto const& [i, e] : k->word) {
          out.push_back((e > 0 ? "kpt:" : "kptinv:") + p.kpoints().at(i).name);
        }
      } else if (auto const* e = std::get_if<GenEvenExp>(&gen)) {
        out.push_back("evexp:" + e->t.to_string());
      } else if (auto const* o = std::get_if<GenOdd>(&gen)) {
        out.push_back("odd:" + p.g().name(p.g().odd(o->index)) + ":" + o->eta.to_string());
      } else {
        auto const& og = std::get<GenOddGeneral>(gen);
        out.push_back("oddgen:" + og.y.to_string() + ":" + og.eta.to_string());
      }
      return out;
    }

    std::vector<std::string> word_tokens(ShcPair const& p, GroupWord const& w) {
      std::vector<std::string> out;
      for (auto const& gen : w) {
        for (auto& t : generator_tokens(p, gen)) {
          out.push_back(std::move(t));
        }
      }
      return out;
    }

    // ---------------------------------------------------------------------
    // JSON helpers

    std::string read_text(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error("cannot read '" + path + "'");
      }
      std::ostringstream os;
      os << in.rdbuf();
      return os.str();
    }

    json parse_json(std::string_view text, std::string const& what) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        throw Error(what + ": " + e.what());
      }
    }

    [[noreturn]] void path_error(std::string const& path, std::string const& msg) {
      throw Error(path + ": " + msg);
    }

    json const& member(json const& j, std::string const& key, std::string const& path) {
      if (!j.contains(key)) {
        path_error(path, "missing field '" + key + "'");
      }
      return j.at(key);
    }

    std::string string_at(json const& j, std::string const& path) {
      if (!j.is_string()) {
        path_error(path, "expected a string");
      }
      return j.get<std::string>();
    }

    Scalar scalar_at(json const& j, std::string const& path, bool gaussian) {
      Scalar s;
      if (j.is_number_integer()) {
        s = Scalar(j.get<std::int64_t>());
      } else if (j.is_string()) {
        try {
          s = Scalar::parse(j.get<std::string>());
        } catch (Error const& e) {
          path_error(path, e.what());
        }
      } else {
        path_error(path, "expected a rational string such as \"-3/4\"");
      }
      if (!gaussian && !s.is_real()) {
        path_error(path, "imaginary entry in a pair over Q");
      }
      return s;
    }

    Matrix matrix_at(json const& j, std::size_t n, std::string const& path, bool gaussian) {
      if (!j.is_array() || j.size() != n) {
        path_error(path, "expected " + std::to_string(n) + " rows");
      }
      Matrix m(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        std::string rp = path + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != n) {
          path_error(rp, "expected " + std::to_string(n) + " entries");
        }
        for (std::size_t c = 0; c < n; ++c) {
          m(r, c) = scalar_at(j[r][c], rp + "[" + std::to_string(c) + "]", gaussian);
        }
      }
      return m;
    }

    json matrix_json(Matrix const& m) {
      json rows = json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
          row.push_back(m(r, c).to_string());
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    std::vector<std::string> names_at(json const& j, std::string const& path, std::set<std::string>& seen) {
      if (!j.is_array()) {
        path_error(path, "expected an array of names");
      }
      std::vector<std::string> out;
      for (std::size_t k = 0; k < j.size(); ++k) {
        std::string p = path + "[" + std::to_string(k) + "]";
        std::string n = string_at(j[k], p);
        if (n.empty() || !is_name_start(n[0]) || !std::all_of(n.begin(), n.end(), is_name_char)) {
          path_error(p, "basis names must be identifiers");
        }
        if (n == "i" || n == "eps" || n.rfind("xi", 0) == 0 || n.rfind("eps", 0) == 0) {
          path_error(p, "basis name '" + n + "' clashes with coefficient names");
        }
        if (!seen.insert(n).second) {
          path_error(p, "duplicate basis name '" + n + "'");
        }
        out.push_back(n);
      }
      return out;
    }

    json point_json(GPoint const& x) {
      json o = json::object();
      for (std::size_t b = 0; b < x.coords().size(); ++b) {
        if (!x[b].is_zero()) {
          o[x.lie()->name(b)] = x[b].to_string();
        }
      }
      return o;
    }

    json split_json(SplitElement const& s) {
      auto const& p = *s.pair();
      json        j;
      j["k"]        = kword_to_string(p, s.kword());
      j["T"]        = point_json(s.even_log());
      json eta      = json::object();
      for (std::size_t i = 0; i < s.odd_coords().size(); ++i) {
        eta[p.g().name(p.g().odd(i))] = s.odd_coords()[i].to_string();
      }
      j["eta"]  = std::move(eta);
      j["word"] = word_tokens(p, s.to_word());
      j["text"] = s.to_string();
      return j;
    }

    json report_json(CheckReport const& r, bool timing) {
      json checks = json::array();
      for (auto const& c : r.checks) {
        json o;
        o["name"]    = c.name;
        o["pass"]    = c.pass;
        o["trials"]  = c.trials;
        o["seed"]    = c.seed;
        o["witness"] = c.witness;
        o["note"]    = c.note;
        if (timing) {
          o["seconds"] = c.seconds;
        }
        checks.push_back(std::move(o));
      }
      json j;
      j["schema"] = kSchema;
      j["pass"]   = r.pass();
      j["checks"] = std::move(checks);
      return j;
    }

    json issues_json(std::vector<Issue> const& issues) {
      json a = json::array();
      for (auto const& i : issues) {
        a.push_back(json{{"check", i.check}, {"witness", i.witness}});
      }
      return a;
    }

    std::string issues_text(std::vector<Issue> const& issues) {
      std::string s;
      for (auto const& i : issues) {
        s += "  " + i.check + ": " + i.witness + "\n";
      }
      return s;
    }

  }  // namespace

  WeilElement parse_coeff_expr(std::string_view src, AlgebraPtr const& a, bool gaussian) {
    Value v = ExprParser(src, a, nullptr, gaussian).parse();
    return v.s;
  }

  GPoint parse_point(std::string_view src, AlgebraPtr const& a, LiePtr const& g, bool gaussian) {
    Value v = ExprParser(src, a, g, gaussian).parse();
    if (!v.v) {
      if (!v.s.is_zero()) {
        throw ParseError("expected a point of A (x) g, found a scalar", 1);
      }
      return GPoint(a, g);
    }
    return GPoint(a, g, *v.v);
  }

  GroupWord parse_word(std::string_view src, ShcPair const& p, AlgebraPtr const& a) {
    GroupWord   w;
    std::size_t lead = 0;
    if (trim(src, lead).empty()) {
      return w;
    }
    for (auto const& [piece, off] : split(src, ',')) {
      std::size_t offset = off;
      std::string tok    = trim(piece, offset);
      if (tok.empty()) {
        throw ParseError("empty token", offset + 1);
      }
      w.push_back(parse_token(tok, offset, p, a));
    }
    validate_word(p, a, w);
    return w;
  }

  std::string format_word(ShcPair const& p, GroupWord const& w) {
    std::string s;
    for (auto const& t : word_tokens(p, w)) {
      s += (s.empty() ? "" : ", ") + t;
    }
    return s;
  }

  PairFileResult read_pair(std::string_view json_text) {
    json j = parse_json(json_text, "pair file");
    if (!j.is_object()) {
      path_error("$", "expected an object");
    }
    std::string name  = j.contains("name") ? string_at(j["name"], "$.name") : "pair";
    std::string field = j.contains("field") ? string_at(j["field"], "$.field") : "Q";
    if (field != "Q" && field != "Q(i)") {
      path_error("$.field", "expected \"Q\" or \"Q(i)\"");
    }
    bool                     gaussian = field == "Q(i)";
    std::set<std::string>    seen;
    std::vector<std::string> even = names_at(member(j, "even", "$"), "$.even", seen);
    std::vector<std::string> odd  = names_at(member(j, "odd", "$"), "$.odd", seen);
    std::vector<std::string> all  = even;
    all.insert(all.end(), odd.begin(), odd.end());
    auto index = [&](std::string const& n) -> std::optional<std::size_t> {
      auto it = std::find(all.begin(), all.end(), n);
      if (it == all.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - all.begin());
    };

    std::map<std::pair<std::size_t, std::size_t>, Vector> brackets;
    if (j.contains("brackets")) {
      json const& br = j["brackets"];
      if (!br.is_object()) {
        path_error("$.brackets", "expected an object");
      }
      for (auto const& [key, val] : br.items()) {
        std::string path = "$.brackets[\"" + key + "\"]";
        std::string k;
        for (char c : key) {
          if (!std::isspace(static_cast<unsigned char>(c))) {
            k.push_back(c);
          }
        }
        auto comma = k.find(',');
        if (k.size() < 5 || k.front() != '[' || k.back() != ']' || comma == std::string::npos) {
          path_error(path, "keys must look like \"[a,b]\"");
        }
        auto x = index(k.substr(1, comma - 1));
        auto y = index(k.substr(comma + 1, k.size() - comma - 2));
        if (!x || !y) {
          path_error(path, "unknown basis name");
        }
        if (brackets.count({*x, *y})) {
          path_error(path, "bracket given twice");
        }
        if (!val.is_object()) {
          path_error(path, "expected an object {name: coefficient}");
        }
        Vector v(all.size());
        for (auto const& [n, c] : val.items()) {
          auto b = index(n);
          if (!b) {
            path_error(path + "." + n, "unknown basis name");
          }
          v[*b] = scalar_at(c, path + "." + n, gaussian);
        }
        brackets[{*x, *y}] = v;
      }
    }

    json const& rep  = member(j, "representation", "$");
    json const& dims = member(rep, "dims", "$.representation");
    if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_unsigned() || !dims[1].is_number_unsigned()) {
      path_error("$.representation.dims", "expected [even, odd]");
    }
    SuperSpace  v{dims[0].get<std::size_t>(), dims[1].get<std::size_t>()};
    json const& mats = member(rep, "matrices", "$.representation");
    if (!mats.is_object()) {
      path_error("$.representation.matrices", "expected an object");
    }
    for (auto const& [n, m] : mats.items()) {
      if (!index(n)) {
        path_error("$.representation.matrices." + n, "unknown basis name");
      }
    }
    std::vector<Matrix> images;
    for (auto const& n : all) {
      std::string path = "$.representation.matrices." + n;
      if (!mats.contains(n)) {
        path_error(path, "missing matrix");
      }
      images.push_back(matrix_at(mats[n], v.dim(), path, gaussian));
    }

    std::vector<std::pair<std::string, Matrix>> kpoints;
    if (j.contains("kpoints")) {
      json const& ks = j["kpoints"];
      if (!ks.is_object()) {
        path_error("$.kpoints", "expected an object");
      }
      for (auto const& [n, m] : ks.items()) {
        if (n.empty() || !std::all_of(n.begin(), n.end(), is_name_char)) {
          path_error("$.kpoints." + n, "K-point names must be identifiers");
        }
        kpoints.emplace_back(n, matrix_at(m, v.dim(), "$.kpoints." + n, gaussian));
      }
    }

    LiePtr         g = LieSuperalgebra::make(even, odd, brackets);
    PairFileResult r;
    r.pair   = ShcPair::make(name, Representation(g, v, images), kpoints, gaussian);
    r.issues = validate_pair(*r.pair);
    return r;
  }

  PairFileResult read_pair_file(std::string const& path) {
    try {
      return read_pair(read_text(path));
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw Error(path + ": " + e.what());
    }
  }

  PairPtr load_pair(std::string const& path) {
    PairFileResult r = read_pair_file(path);
    if (!r.issues.empty()) {
      throw Error(path + ": invalid pair\n" + issues_text(r.issues));
    }
    return r.pair;
  }

  std::string pair_to_json(ShcPair const& p) {
    auto const& g = p.g();
    json        j;
    j["schema"] = kSchema;
    j["name"]   = p.name();
    j["field"]  = p.gaussian() ? "Q(i)" : "Q";
    std::vector<std::string> even(g.names().begin(), g.names().begin() + static_cast<long>(g.even_dim()));
    std::vector<std::string> odd(g.names().begin() + static_cast<long>(g.even_dim()), g.names().end());
    j["even"]   = even;
    j["odd"]    = odd;
    json br     = json::object();
    for (std::size_t a = 0; a < g.dim(); ++a) {
      for (std::size_t b = a; b < g.dim(); ++b) {
        Vector const& v = g.bracket_basis(a, b);
        if (is_zero(v)) {
          continue;
        }
        json c = json::object();
        for (std::size_t k = 0; k < v.size(); ++k) {
          if (!v[k].is_zero()) {
            c[g.name(k)] = v[k].to_string();
          }
        }
        br["[" + g.name(a) + "," + g.name(b) + "]"] = std::move(c);
      }
    }
    j["brackets"] = std::move(br);
    json mats     = json::object();
    for (std::size_t b = 0; b < g.dim(); ++b) {
      mats[g.name(b)] = matrix_json(p.rho().image(b));
    }
    j["representation"] = json{{"dims", {p.space().even, p.space().odd}}, {"matrices", std::move(mats)}};
    json ks             = json::object();
    for (auto const& k : p.kpoints()) {
      ks[k.name] = matrix_json(k.matrix);
    }
    j["kpoints"] = std::move(ks);
    return j.dump(2) + "\n";
  }

  EvenModule read_even_module(std::string_view json_text, ShcPair const& p) {
    json j = parse_json(json_text, "module file");
    if (!j.is_object()) {
      path_error("$", "expected an object");
    }
    json const& dims = member(j, "dims", "$");
    if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_unsigned() || !dims[1].is_number_unsigned()) {
      path_error("$.dims", "expected [even, odd]");
    }
    EvenModule m;
    m.space          = {dims[0].get<std::size_t>(), dims[1].get<std::size_t>()};
    auto const& g    = p.g();
    json const& g0   = member(j, "g0", "$");
    for (auto const& [n, x] : g0.items()) {
      auto b = g.index_of(n);
      if (!b || g.parity(*b) != 0) {
        path_error("$.g0." + n, "not an even basis element of " + p.name());
      }
    }
    for (std::size_t b = 0; b < g.even_dim(); ++b) {
      std::string path = "$.g0." + g.name(b);
      if (!g0.contains(g.name(b))) {
        path_error(path, "missing matrix");
      }
      m.g0_action.push_back(matrix_at(g0[g.name(b)], m.space.dim(), path, p.gaussian()));
    }
    json ks = j.contains("kpoints") ? j["kpoints"] : json::object();
    for (auto const& [n, x] : ks.items()) {
      if (!p.kpoint_index(n)) {
        path_error("$.kpoints." + n, "unknown K-point of " + p.name());
      }
    }
    for (auto const& k : p.kpoints()) {
      std::string path = "$.kpoints." + k.name;
      if (!ks.contains(k.name)) {
        path_error(path, "missing matrix");
      }
      m.kpoint_action.push_back(matrix_at(ks[k.name], m.space.dim(), path, p.gaussian()));
    }
    return m;
  }

  EvenModule load_even_module(std::string const& path, ShcPair const& p) {
    try {
      return read_even_module(read_text(path), p);
    } catch (Error const& e) {
      throw Error(path + ": " + e.what());
    }
  }

  std::string module_to_json(ShcPair const& p, InducedModule const& v) {
    json j;
    j["schema"] = kSchema;
    j["pair"]   = p.name();
    j["dims"]   = {v.module.space.even, v.module.space.odd};
    j["basis"]  = v.labels;
    j["cyclic"] = v.cyclic;
    json gm     = json::object();
    for (std::size_t b = 0; b < p.g().dim(); ++b) {
      gm[p.g().name(b)] = matrix_json(v.module.g_action[b]);
    }
    j["g"]  = std::move(gm);
    json ks = json::object();
    for (std::size_t k = 0; k < p.kpoints().size(); ++k) {
      ks[p.kpoints()[k].name] = matrix_json(v.module.kpoint_action[k]);
    }
    j["kpoints"] = std::move(ks);
    return j.dump(2) + "\n";
  }

  WordFile read_word_file(std::string const& path) {
    json     j = parse_json(read_text(path), path);
    WordFile w;
    if (!j.is_object()) {
      path_error(path + ": $", "expected an object");
    }
    std::filesystem::path pair(string_at(member(j, "pair", path + ": $"), path + ": $.pair"));
    if (pair.is_relative()) {
      pair = std::filesystem::path(path).parent_path() / pair;
    }
    w.pair_path       = pair.string();
    w.weil            = string_at(member(j, "weil", path + ": $"), path + ": $.weil");
    json const& words = member(j, "word", path + ": $");
    if (!words.is_array()) {
      path_error(path + ": $.word", "expected an array of tokens");
    }
    for (std::size_t k = 0; k < words.size(); ++k) {
      w.tokens.push_back(string_at(words[k], path + ": $.word[" + std::to_string(k) + "]"));
    }
    return w;
  }

  std::string word_file_to_json(WordFile const& w) {
    json j;
    j["schema"] = kSchema;
    j["pair"]   = w.pair_path;
    j["weil"]   = w.weil;
    j["word"]   = w.tokens;
    return j.dump(2) + "\n";
  }

  std::string split_to_json(SplitElement const& s) {
    return split_json(s).dump(2) + "\n";
  }

  std::string report_to_json(CheckReport const& r, bool timing) {
    return report_json(r, timing).dump(2) + "\n";
  }

  CheckReport report_from_json(std::string_view json_text) {
    json        j = parse_json(json_text, "report");
    CheckReport r;
    json const& checks = member(j, "checks", "$");
    if (!checks.is_array()) {
      path_error("$.checks", "expected an array");
    }
    for (std::size_t k = 0; k < checks.size(); ++k) {
      std::string path = "$.checks[" + std::to_string(k) + "]";
      json const& o    = checks[k];
      CheckResult c;
      c.name    = string_at(member(o, "name", path), path + ".name");
      c.pass    = member(o, "pass", path).get<bool>();
      c.trials  = member(o, "trials", path).get<std::size_t>();
      c.seed    = member(o, "seed", path).get<std::uint64_t>();
      c.witness = o.value("witness", "");
      c.note    = o.value("note", "");
      c.seconds = o.value("seconds", 0.0);
      r.checks.push_back(std::move(c));
    }
    return r;
  }

  std::string report_to_text(CheckReport const& r, bool timing) {
    std::ostringstream os;
    for (auto const& c : r.checks) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name << "  trials=" << c.trials << " seed=" << c.seed;
      if (timing) {
        os << " time=" << std::fixed << std::setprecision(3) << c.seconds << "s";
      }
      os << "\n";
      if (!c.witness.empty()) {
        os << "  witness: " << c.witness << "\n";
      }
      if (!c.note.empty()) {
        os << "  note: " << c.note << "\n";
      }
    }
    os << "overall: " << (r.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }

  namespace {

    struct Inputs {
      std::string pair_path;
      std::string weil;
      std::string word;
      std::string word_file;
      std::string by;
      std::string point;
      std::string format = "text";
      bool        no_timing = false;
    };

    // Thrown for pairs that load but fail validation.
    struct InvalidPair {
      std::string              path;
      std::vector<Issue>       issues;
    };

    class Session {
     public:
      Session(Inputs const& in, std::ostream& out) : in_(in), out_(out) {}

      bool json() const {
        return in_.format == "json";
      }

      // Resolves --word-file into pair, algebra and tokens.
      void load(bool need_weil) {
        std::vector<std::string> tokens;
        std::string              pair_path = in_.pair_path;
        std::string              weil      = in_.weil;
        if (!in_.word_file.empty()) {
          WordFile wf = read_word_file(in_.word_file);
          if (pair_path.empty()) {
            pair_path = wf.pair_path;
          }
          if (weil.empty()) {
            weil = wf.weil;
          }
          tokens = wf.tokens;
        }
        if (pair_path.empty()) {
          throw CLI::RequiredError("--pair");
        }
        PairFileResult r = read_pair_file(pair_path);
        if (!r.issues.empty()) {
          throw InvalidPair{pair_path, r.issues};
        }
        pair_ = r.pair;
        if (need_weil) {
          if (weil.empty()) {
            throw CLI::RequiredError("--weil");
          }
          alg_ = WeilAlgebra::from_descriptor(weil);
        }
        if (!in_.word.empty()) {
          word_ = in_.word;
        } else {
          for (auto const& t : tokens) {
            word_ += (word_.empty() ? "" : ",") + t;
          }
        }
      }

      PairPtr const& pair() const {
        return pair_;
      }
      AlgebraPtr const& algebra() const {
        return alg_;
      }
      GroupWord word(std::string const& src) const {
        return parse_word(src, *pair_, alg_);
      }
      std::string const& word_text() const {
        return word_;
      }

      void emit(SplitElement const& s, std::string const& command) {
        if (json()) {
          nlohmann::ordered_json j;
          j["schema"]  = kSchema;
          j["command"] = command;
          j["pair"]    = pair_->name();
          j["weil"]    = alg_->descriptor();
          j["result"]  = split_json(s);
          out_ << j.dump(2) << "\n";
        } else {
          out_ << s.to_string() << "\n";
        }
      }

     private:
      Inputs const& in_;
      std::ostream& out_;
      PairPtr       pair_;
      AlgebraPtr    alg_;
      std::string   word_;
    };

    std::uint64_t default_seed() {
      if (char const* s = std::getenv("SHCP_SEED")) {
        try {
          std::size_t used = 0;
          auto        v    = std::stoull(s, &used);
          if (used == std::string(s).size()) {
            return v;
          }
        } catch (std::exception const&) {
        }
        throw CLI::ValidationError("SHCP_SEED", "expected an unsigned integer");
      }
      return 42;
    }

  }  // namespace

  int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"shcp: super Harish-Chandra pairs and the groups G_P"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Inputs        in;
    std::size_t   trials = 200;
    std::uint64_t seed   = 0;
    int           depth  = 0;
    std::string   suite;
    std::string   module_path;

    auto common = [&](CLI::App* sub) {
      sub->add_option("--format", in.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto word_inputs = [&](CLI::App* sub) {
      sub->add_option("--pair", in.pair_path, "Pair file (JSON)");
      sub->add_option("--weil", in.weil, "Weil algebra, e.g. grassmann:3 or dual:grassmann:2");
      sub->add_option("--word", in.word, "Comma separated word tokens");
      sub->add_option("--word-file", in.word_file, "Word file (JSON)");
      common(sub);
    };

    auto* validate = app.add_subcommand("validate", "Validate a pair file");
    validate->add_option("--pair", in.pair_path, "Pair file (JSON)")->required();
    common(validate);

    auto* normalize_cmd = app.add_subcommand("normalize", "Split normal form of a word");
    word_inputs(normalize_cmd);
    auto* mul = app.add_subcommand("mul", "Product of two words in normal form");
    word_inputs(mul);
    mul->add_option("--by", in.by, "Right factor (word tokens)")->required();
    auto* inv = app.add_subcommand("inv", "Inverse of a word in normal form");
    word_inputs(inv);
    auto* exp_cmd = app.add_subcommand("exp", "Exponential of a nilpotent point of L_g(A)");
    word_inputs(exp_cmd);
    exp_cmd->add_option("--point", in.point, "Point such as (xi1*xi2)*X1 + xi3*Yp")->required();
    auto* log_cmd = app.add_subcommand("log", "Logarithm of a word with trivial K-point part");
    word_inputs(log_cmd);

    auto* check = app.add_subcommand("check", "Randomized and exhaustive checks");
    check->add_option("suite", suite, "relations | roundtrip | quotient | all")
        ->required()
        ->check(CLI::IsMember({"relations", "roundtrip", "quotient", "all"}));
    check->add_option("--pair", in.pair_path, "Pair file (JSON)")->required();
    check->add_option("--weil", in.weil, "Weil algebra descriptor (default grassmann:3)");
    check->add_option("--trials", trials, "Trials per randomized check")->default_val(200);
    check->add_option("--seed", seed, "Seed (default: $SHCP_SEED or 42)");
    check->add_option("--depth", depth, "Quotient depth n (default: 1 and 2)")->check(CLI::Range(1, 8));
    check->add_flag("--no-timing", in.no_timing, "Omit wall times from the report");
    common(check);

    auto* induce = app.add_subcommand("induce", "Induced module from g_0-data");
    induce->add_option("--pair", in.pair_path, "Pair file (JSON)")->required();
    induce->add_option("--module", module_path, "Even module file (JSON); default trivial");
    common(induce);

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      if (e.get_exit_code() == 0) {
        app.exit(e, out, err);
        return 0;
      }
      err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
      return 2;
    }

    Session session(in, out);
    try {
      if (validate->parsed()) {
        PairFileResult r = read_pair_file(in.pair_path);
        if (session.json()) {
          nlohmann::ordered_json j;
          j["schema"]  = kSchema;
          j["command"] = "validate";
          j["pair"]    = r.pair->name();
          j["valid"]   = r.issues.empty();
          j["issues"]  = issues_json(r.issues);
          out << j.dump(2) << "\n";
        } else if (r.issues.empty()) {
          out << r.pair->name() << ": valid\n";
        } else {
          out << r.pair->name() << ": invalid\n" << issues_text(r.issues);
        }
        return r.issues.empty() ? 0 : 1;
      }
      if (normalize_cmd->parsed()) {
        session.load(true);
        session.emit(normalize(session.pair(), session.algebra(), session.word(session.word_text())), "normalize");
        return 0;
      }
      if (mul->parsed()) {
        session.load(true);
        auto x = normalize(session.pair(), session.algebra(), session.word(session.word_text()));
        auto y = normalize(session.pair(), session.algebra(), session.word(in.by));
        session.emit(gp_mul(x, y), "mul");
        return 0;
      }
      if (inv->parsed()) {
        session.load(true);
        session.emit(gp_inv(normalize(session.pair(), session.algebra(), session.word(session.word_text()))), "inv");
        return 0;
      }
      if (exp_cmd->parsed()) {
        session.load(true);
        GPoint z = parse_point(in.point, session.algebra(), session.pair()->lie(), session.pair()->gaussian());
        session.emit(gp_exp(session.pair(), z), "exp");
        return 0;
      }
      if (log_cmd->parsed()) {
        session.load(true);
        GPoint z = gp_log(normalize(session.pair(), session.algebra(), session.word(session.word_text())));
        if (session.json()) {
          nlohmann::ordered_json j;
          j["schema"]  = kSchema;
          j["command"] = "log";
          j["pair"]    = session.pair()->name();
          j["weil"]    = session.algebra()->descriptor();
          j["result"]  = point_json(z);
          out << j.dump(2) << "\n";
        } else {
          out << z.to_string() << "\n";
        }
        return 0;
      }
      if (check->parsed()) {
        if (check->count("--seed") == 0) {
          seed = default_seed();
        }
        if (in.weil.empty()) {
          in.weil = "grassmann:3";
        }
        session.load(true);
        auto const& p = session.pair();
        auto const& a = session.algebra();
        CheckReport r;
        if (suite == "relations" || suite == "all") {
          r.append(relations_check(p, a, trials, seed));
        }
        if (suite == "roundtrip" || suite == "all") {
          r.append(lie_of_psi(p).report);
          r.append(omega_iso_check(p, a, trials, seed));
          r.append(transfer_check(p));
        }
        if (suite == "quotient" || suite == "all") {
          std::vector<int> ns = depth ? std::vector<int>{depth} : std::vector<int>{1, 2};
          for (int n : ns) {
            r.append(quotient_lemma_check(p, a, {}, n, trials, seed));
          }
        }
        bool timing = !in.no_timing;
        if (session.json()) {
          nlohmann::ordered_json j;
          j["schema"]  = kSchema;
          j["command"] = "check";
          j["suite"]   = suite;
          j["pair"]    = p->name();
          j["weil"]    = a->descriptor();
          j["trials"]  = trials;
          j["seed"]    = seed;
          auto body    = report_json(r, timing);
          j["pass"]    = body["pass"];
          j["checks"]  = body["checks"];
          out << j.dump(2) << "\n";
        } else {
          out << "pair " << p->name() << " over " << a->descriptor() << ", suite " << suite << "\n"
              << report_to_text(r, timing);
        }
        return r.pass() ? 0 : 1;
      }
      if (induce->parsed()) {
        session.load(false);
        auto const&   p = *session.pair();
        InducedModule v;
        if (module_path.empty()) {
          v = build_induced_trivial(p);
        } else {
          EvenModule m0     = load_even_module(module_path, p);
          auto       issues = validate_even_module(p, m0);
          if (!issues.empty()) {
            err << module_path << ": invalid even module\n" << issues_text(issues);
            return 1;
          }
          v = induce_from_even(p, m0);
        }
        if (session.json()) {
          out << module_to_json(p, v);
        } else {
          out << "induced module of " << p.name() << ": dim " << v.module.space.even << "|" << v.module.space.odd
              << "\nbasis:";
          for (auto const& l : v.labels) {
            out << " " << l;
          }
          out << "\n";
          for (std::size_t b = 0; b < p.g().dim(); ++b) {
            out << p.g().name(b) << " =\n" << v.module.g_action[b].to_string() << "\n";
          }
          for (std::size_t k = 0; k < p.kpoints().size(); ++k) {
            out << p.kpoints()[k].name << " =\n" << v.module.kpoint_action[k].to_string() << "\n";
          }
        }
        return 0;
      }
    } catch (InvalidPair const& bad) {
      err << bad.path << ": invalid pair\n" << issues_text(bad.issues);
      return 1;
    } catch (CLI::Error const& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << "\n";
      return 2;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    return 2;
  }

}  // namespace shcp
