#include "shcp/scalar.hpp"

#include <limits>
#include <ostream>

namespace shcp {

  namespace {
    using u128 = unsigned __int128;
    using i128 = __int128;

    u128 uabs(i128 x) {
      return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
    }

    u128 gcd128(u128 a, u128 b) {
      while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) {
          auto x = static_cast<std::uint64_t>(a);
          auto y = static_cast<std::uint64_t>(b);
          while (y != 0) {
            auto t = x % y;
            x      = y;
            y      = t;
          }
          return x;
        }
        u128 t = a % b;
        a      = b;
        b      = t;
      }
      return a;
    }

    bool fits64(i128 x) {
      return x >= std::numeric_limits<std::int64_t>::min()
             && x <= std::numeric_limits<std::int64_t>::max();
    }

    mpz_class to_mpz(i128 x) {
      bool neg = x < 0;
      u128 u   = uabs(x);
      mpz_class hi(static_cast<unsigned long>(u >> 64));
      mpz_class lo(static_cast<unsigned long>(u & ~std::uint64_t(0)));
      mpz_class r = (hi << 64) + lo;
      return neg ? mpz_class(-r) : r;
    }
  }  // namespace

  Rational::Rational(std::int64_t n, std::int64_t d) : num_(0), den_(1) {
    if (d == 0) {
      throw Error("rational with zero denominator");
    }
    assign_wide(n, d);
  }

  Rational::Rational(mpq_class const& q) : num_(0), den_(1) {
    mpq_class c(q);
    c.canonicalize();
    assign_big(std::move(c));
  }

  Rational::Rational(Rational const& other)
      : num_(other.num_),
        den_(other.den_),
        big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

  Rational& Rational::operator=(Rational const& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
  }

  void Rational::assign_big(mpq_class&& q) {
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
      num_ = mpz_get_si(q.get_num_mpz_t());
      den_ = mpz_get_si(q.get_den_mpz_t());
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_unique<mpq_class>(std::move(q));
    }
  }

  void Rational::assign_wide(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (fits64(n) && fits64(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      mpq_class q(to_mpz(n), to_mpz(d));
      q.canonicalize();
      assign_big(std::move(q));
    }
  }

  Rational Rational::parse(std::string_view s) {
    std::string str(s);
    if (str.empty()) {
      throw Error("empty rational literal");
    }
    std::size_t start = (str[0] == '-' || str[0] == '+') ? 1 : 0;
    bool        slash = false;
    if (start == str.size()) {
      throw Error("malformed rational literal '" + str + "'");
    }
    for (std::size_t i = start; i < str.size(); ++i) {
      if (str[i] == '/') {
        if (slash || i == start || i + 1 == str.size()) {
          throw Error("malformed rational literal '" + str + "'");
        }
        slash = true;
      } else if (str[i] < '0' || str[i] > '9') {
        throw Error("malformed rational literal '" + str + "'");
      }
    }
    if (str[0] == '+') {
      str.erase(0, 1);
    }
    mpq_class q;
    if (q.set_str(str, 10) != 0) {
      throw Error("malformed rational literal '" + str + "'");
    }
    if (q.get_den() == 0) {
      throw Error("rational with zero denominator");
    }
    q.canonicalize();
    return Rational(q);
  }

  int Rational::sign() const {
    if (big_) {
      return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
  }

  mpq_class Rational::to_mpq() const {
    if (big_) {
      return *big_;
    }
    mpq_class q;
    mpq_set_si(q.get_mpq_t(), num_, static_cast<unsigned long>(den_));
    return q;
  }

  std::string Rational::to_string() const {
    if (big_) {
      return big_->get_str();
    }
    if (den_ == 1) {
      return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational Rational::operator-() const {
    Rational r;
    if (big_) {
      r.assign_big(mpq_class(-*big_));
    } else {
      r.assign_wide(-static_cast<i128>(num_), den_);
    }
    return r;
  }

  Rational& Rational::operator+=(Rational const& o) {
    if (!big_ && !o.big_) {
      if (o.num_ == 0) {
        return *this;
      }
      if (num_ == 0) {
        num_ = o.num_;
        den_ = o.den_;
        return *this;
      }
      if (den_ == 1 && o.den_ == 1) {
        std::int64_t r;
        if (!__builtin_add_overflow(num_, o.num_, &r)) {
          num_ = r;
          return *this;
        }
      }
      assign_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                  static_cast<i128>(den_) * o.den_);
      return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
  }

  Rational& Rational::operator-=(Rational const& o) {
    return *this += -o;
  }

  Rational& Rational::operator*=(Rational const& o) {
    if (!big_ && !o.big_) {
      if (num_ == 0 || o.num_ == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
      }
      if (den_ == 1 && o.den_ == 1) {
        std::int64_t r;
        if (!__builtin_mul_overflow(num_, o.num_, &r)) {
          num_ = r;
          return *this;
        }
      }
      assign_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
      return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
  }

  Rational Rational::inverse() const {
    if (is_zero()) {
      throw Error("division by zero");
    }
    Rational r;
    if (big_) {
      r.assign_big(mpq_class(1 / *big_));
    } else {
      r.assign_wide(den_, num_);
    }
    return r;
  }

  Rational& Rational::operator/=(Rational const& o) {
    return *this *= o.inverse();
  }

  bool operator==(Rational const& a, Rational const& b) {
    if (!a.big_ && !b.big_) {
      return a.num_ == b.num_ && a.den_ == b.den_;
    }
    if (a.big_ && b.big_) {
      return *a.big_ == *b.big_;
    }
    return false;  // demotion keeps representations canonical
  }

  bool operator<(Rational const& a, Rational const& b) {
    if (!a.big_ && !b.big_) {
      return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
  }

  Scalar Scalar::parse(std::string_view s) {
    std::string str;
    for (char c : s) {
      if (c != ' ') {
        str.push_back(c);
      }
    }
    if (str.empty()) {
      throw Error("empty scalar literal");
    }
    if (str.back() != 'i') {
      return Scalar(Rational::parse(str));
    }
    str.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = str.size(); k-- > 1;) {
      if (str[k] == '+' || str[k] == '-') {
        split = k;
        break;
      }
    }
    std::string re_part = split == std::string::npos ? "" : str.substr(0, split);
    std::string im_part = split == std::string::npos ? str : str.substr(split);
    if (im_part.empty() || im_part == "+") {
      im_part = "1";
    } else if (im_part == "-") {
      im_part = "-1";
    }
    Rational re = re_part.empty() ? Rational(0) : Rational::parse(re_part);
    return Scalar(re, Rational::parse(im_part));
  }

  Scalar Scalar::inverse() const {
    if (im_.is_zero()) {
      return Scalar(re_.inverse());
    }
    Rational n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
  }

  std::string Scalar::to_string() const {
    if (im_.is_zero()) {
      return re_.to_string();
    }
    std::string im_str;
    if (im_.is_one()) {
      im_str = "i";
    } else if (im_ == Rational(-1)) {
      im_str = "-i";
    } else {
      im_str = im_.to_string() + "i";
    }
    if (re_.is_zero()) {
      return im_str;
    }
    if (im_str[0] != '-') {
      im_str = "+" + im_str;
    }
    return re_.to_string() + im_str;
  }

  Scalar& Scalar::operator+=(Scalar const& o) {
    re_ += o.re_;
    if (!o.im_.is_zero()) {
      im_ += o.im_;
    }
    return *this;
  }

  Scalar& Scalar::operator-=(Scalar const& o) {
    re_ -= o.re_;
    if (!o.im_.is_zero()) {
      im_ -= o.im_;
    }
    return *this;
  }

  Scalar& Scalar::operator*=(Scalar const& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_        = std::move(r);
    im_        = std::move(i);
    return *this;
  }

  Scalar& Scalar::operator/=(Scalar const& o) {
    return *this *= o.inverse();
  }

  std::ostream& operator<<(std::ostream& os, Rational const& q) {
    return os << q.to_string();
  }

  std::ostream& operator<<(std::ostream& os, Scalar const& s) {
    return os << s.to_string();
  }

}  // namespace shcp
