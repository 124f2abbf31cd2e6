#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kustab {

using Int = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Serialized as "p/q", or "p" when q = 1.
class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& v) : q_(v) {}            // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);

  static Rat parse(std::string_view text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpq_class& gmp() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  Rat abs() const;
  Int floor() const;
  Int ceil() const;

  std::string str() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// A rational or +infinity. Used for slopes, where a vanishing denominator
/// (torsion class, or Im Z = 0) yields +infinity.
class ExtRat {
 public:
  ExtRat(Rat v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static ExtRat infinity() { return ExtRat(); }

  bool is_infinite() const { return infinite_; }
  /// Precondition: !is_infinite().
  const Rat& value() const;
  std::string str() const;

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);
  friend std::ostream& operator<<(std::ostream& os, const ExtRat& r) { return os << r.str(); }

 private:
  ExtRat() : infinite_(true) {}
  bool infinite_ = false;
  Rat value_;
};

/// Gaussian rational re + im * sqrt(-1).
struct GaussRat {
  Rat re;
  Rat im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussRat conj() const { return {re, -im}; }
  /// Multiplication by sqrt(-1).
  GaussRat times_i() const { return {-im, re}; }
  std::string str() const;

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator*(const Rat& t, const GaussRat& z) { return {t * z.re, t * z.im}; }
  GaussRat operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussRat&, const GaussRat&) = default;
  friend std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }
};

/// s with s*s == n, when n >= 0 is a perfect square.
std::optional<Int> perfect_square(const Int& n);

/// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

Int gcd(const Int& a, const Int& b);

/// Parses a decimal integer, rejecting anything else.
Int parse_int(std::string_view text);

}  // namespace kustab
