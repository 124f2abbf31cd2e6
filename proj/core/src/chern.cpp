#include "kustab/chern.hpp"

namespace kustab {

ChernY twist_cl0(const ChernY& e) {
  ChernY out = e;
  out.ch2 = e.ch2 - e.ch0 / Rat(8);
  if (e.ch3) out.ch3 = *e.ch3 - e.ch1 / Rat(8);
  return out;
}

ChernY untwist_cl0(const ChernY& e) {
  ChernY out = e;
  out.ch2 = e.ch2 + e.ch0 / Rat(8);
  if (e.ch3) out.ch3 = *e.ch3 + e.ch1 / Rat(8);
  return out;
}

ChernY beta_twist(const ChernY& e, const Rat& beta) {
  const Rat b2 = beta * beta / Rat(2);
  const Rat b3 = beta * beta * beta / Rat(6);
  ChernY out;
  out.ch0 = e.ch0;
  out.ch1 = e.ch1 - beta * e.ch0;
  out.ch2 = e.ch2 - beta * e.ch1 + b2 * e.ch0;
  if (e.ch3) {
    out.ch3 = *e.ch3 - beta * e.ch2 + b2 * e.ch1 - b3 * e.ch0;
  } else {
    out.ch3.reset();
  }
  return out;
}

TwistedClass beta_twist(const TwistedClass& v, const Rat& beta) {
  // Each coordinate carries the same factor h^3 = 2, so the series acts as on ch.
  return {v.v0, v.v1 - beta * v.v0, v.v2 - beta * v.v1 + beta * beta / Rat(2) * v.v0};
}

TwistedClass to_twisted_class(const ChernY& twisted) {
  const Rat d(kDegreeY);
  return {d * twisted.ch0, d * twisted.ch1, d * twisted.ch2};
}

TwistedClass twisted_class_of(const ChernY& raw) { return to_twisted_class(twist_cl0(raw)); }

Rat discriminant_y(const ChernY& raw, DiscriminantForm form) {
  const Rat d(kDegreeY);
  if (form == DiscriminantForm::raw) {
    // h ch1^2 - 2 rk (h ch2 - rk/4)
    return d * raw.ch1 * raw.ch1 - Rat(2) * raw.ch0 * (d * raw.ch2 - raw.ch0 / Rat(4));
  }
  const ChernY t = twist_cl0(raw);
  return d * (t.ch1 * t.ch1 - Rat(2) * t.ch0 * t.ch2);
}

Rat discriminant(const TwistedClass& v) {
  return (v.v1 * v.v1 - Rat(2) * v.v0 * v.v2) / Rat(kDegreeY);
}

Rat discriminant_sigma(const ChernSigma& e) {
  const Rat ch1_sq = Rat(2 * kSigmaH1H2) * e.b1 * e.b2;
  return ch1_sq - Rat(2) * e.rk * (e.c - e.rk / Rat(4));
}

ChernSigma restrict_to_sigma(const ChernY& e) { return {e.ch0, e.ch1, e.ch1, Rat(2) * e.ch2}; }

ExtRat slope_h(const ChernY& e) {
  if (e.ch0.is_zero()) return ExtRat::infinity();
  return e.ch1 / e.ch0;
}

ExtRat slope_h(const TwistedClass& v) {
  if (v.v0.is_zero()) return ExtRat::infinity();
  return v.v1 / v.v0;
}

bool looks_integral(const ChernY& e) { return e.ch0.is_integer() && e.ch1.is_integer(); }

bool looks_integral(const ChernSigma& e) {
  return e.rk.is_integer() && e.b1.is_integer() && e.b2.is_integer() && e.c.is_integer();
}

std::string to_string(const ChernY& e) {
  return "(" + e.ch0.str() + ", " + e.ch1.str() + ", " + e.ch2.str() + ", " +
         (e.ch3 ? e.ch3->str() : std::string("?")) + ")";
}

std::string to_string(const TwistedClass& v) {
  return "(" + v.v0.str() + ", " + v.v1.str() + ", " + v.v2.str() + ")";
}

std::string to_string(const ChernSigma& e) {
  return "(" + e.rk.str() + ", " + e.b1.str() + ", " + e.b2.str() + ", " + e.c.str() + ")";
}

}  // namespace kustab
