#include "kustab/rational.hpp"

#include <cctype>

#include "kustab/error.hpp"

namespace kustab {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw InputError("expected an integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw InputError("expected an integer, got '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw InputError("denominator must be an unsigned integer in '" + std::string(text) + "'");
  }
  const Int den = parse_int(den_text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(q_))); }

Int Rat::floor() const {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Int Rat::ceil() const {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
  q_ += o.q_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  q_ -= o.q_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  q_ *= o.q_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InputError("division by zero");
  q_ /= o.q_;
  return *this;
}
Rat Rat::operator-() const { return Rat(mpq_class(-q_)); }

const Rat& ExtRat::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite slope");
  return value_;
}

std::string ExtRat::str() const { return infinite_ ? "+inf" : value_.str(); }

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  return a.value_ <=> b.value_;
}

std::string GaussRat::str() const {
  if (im.is_zero()) return re.str();
  const std::string imag = (im.abs() == Rat(1) ? std::string() : im.abs().str() + "*") + "i";
  if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
  return re.str() + (im.sign() < 0 ? " - " : " + ") + imag;
}

std::optional<Int> perfect_square(const Int& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  return isqrt(n);
}

Int isqrt(const Int& n) {
  if (n < 0) throw InputError("square root of a negative integer");
  Int out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

Int gcd(const Int& a, const Int& b) {
  Int out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace kustab
