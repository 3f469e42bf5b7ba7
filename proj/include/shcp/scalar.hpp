// Exact scalars: rationals with an int64 fast path that promotes to GMP on
// overflow, and Gaussian rationals built on top of them.
#ifndef SHCP_SCALAR_HPP_
#define SHCP_SCALAR_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace shcp {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class Rational {
   public:
    Rational() noexcept : num_(0), den_(1) {}
    Rational(std::int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(mpq_class const& q);

    Rational(Rational const& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(Rational const& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    // Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view s);

    bool is_zero() const noexcept {
      return !big_ && num_ == 0;
    }
    bool is_one() const noexcept {
      return !big_ && num_ == 1 && den_ == 1;
    }
    bool is_small() const noexcept {
      return !big_;
    }
    int sign() const;

    mpq_class to_mpq() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(Rational const& o);
    Rational& operator-=(Rational const& o);
    Rational& operator*=(Rational const& o);
    Rational& operator/=(Rational const& o);
    Rational inverse() const;

    friend Rational operator+(Rational a, Rational const& b) {
      return a += b;
    }
    friend Rational operator-(Rational a, Rational const& b) {
      return a -= b;
    }
    friend Rational operator*(Rational a, Rational const& b) {
      return a *= b;
    }
    friend Rational operator/(Rational a, Rational const& b) {
      return a /= b;
    }
    friend bool operator==(Rational const& a, Rational const& b);
    friend bool operator<(Rational const& a, Rational const& b);

   private:
    void assign_big(mpq_class&& q);
    void assign_wide(__int128 n, __int128 d);

    std::int64_t                num_;
    std::int64_t                den_;
    std::unique_ptr<mpq_class> big_;
  };

  // a + b i with a, b rational.  The imaginary part is zero unless the
  // ambient field is Q(i).
  class Scalar {
   public:
    Scalar() = default;
    Scalar(std::int64_t n) : re_(n) {}  // NOLINT
    Scalar(std::int64_t n, std::int64_t d) : re_(n, d) {}
    Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() {
      return Scalar(Rational(0), Rational(1));
    }
    // Accepts rational strings and Gaussian forms such as "1/2+3i", "-i".
    static Scalar parse(std::string_view s);

    Rational const& re() const noexcept {
      return re_;
    }
    Rational const& im() const noexcept {
      return im_;
    }
    bool is_zero() const noexcept {
      return re_.is_zero() && im_.is_zero();
    }
    bool is_one() const noexcept {
      return re_.is_one() && im_.is_zero();
    }
    bool is_real() const noexcept {
      return im_.is_zero();
    }

    Scalar conj() const {
      return Scalar(re_, -im_);
    }
    Scalar inverse() const;
    std::string to_string() const;

    Scalar operator-() const {
      return Scalar(-re_, -im_);
    }
    Scalar& operator+=(Scalar const& o);
    Scalar& operator-=(Scalar const& o);
    Scalar& operator*=(Scalar const& o);
    Scalar& operator/=(Scalar const& o);

    friend Scalar operator+(Scalar a, Scalar const& b) {
      return a += b;
    }
    friend Scalar operator-(Scalar a, Scalar const& b) {
      return a -= b;
    }
    friend Scalar operator*(Scalar a, Scalar const& b) {
      return a *= b;
    }
    friend Scalar operator/(Scalar a, Scalar const& b) {
      return a /= b;
    }
    friend bool operator==(Scalar const& a, Scalar const& b) {
      return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(Scalar const& a, Scalar const& b) {
      return !(a == b);
    }

   private:
    Rational re_;
    Rational im_;
  };

  std::ostream& operator<<(std::ostream& os, Rational const& q);
  std::ostream& operator<<(std::ostream& os, Scalar const& s);

}  // namespace shcp

#endif  // SHCP_SCALAR_HPP_
