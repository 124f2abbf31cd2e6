#pragma once

#include <optional>
#include <string>

#include "kustab/rational.hpp"

namespace kustab {

// Intersection numbers on the quadric threefold Y and the quadric surface
// Sigma = Y ∩ hyperplane. Characters are stored in the h-power basis.
inline constexpr int kDegreeY = 2;                ///< h^3 on Y
inline constexpr int kSigmaH1H2 = 1;              ///< h1*h2 on Sigma; h1^2 = h2^2 = 0
inline constexpr int kBlowupHE2 = -2;             ///< q^*h * e^2 on the blowup of Y in a conic
inline constexpr int kBlowupHConic = 2;           ///< q^*h * q^*[C]

/// Chern character ch0 + ch1 h + ch2 h^2 + ch3 h^3 on Y. The top term may be
/// unknown: only the truncation ch_{<=2} is available for some classes.
struct ChernY {
  Rat ch0;
  Rat ch1;
  Rat ch2;
  std::optional<Rat> ch3 = Rat(0);

  friend bool operator==(const ChernY&, const ChernY&) = default;
};

/// Element (h^3 ch_0, h^2 ch_1, h ch_2) of the rank 3 lattice receiving the
/// Clifford-twisted character.
struct TwistedClass {
  Rat v0;
  Rat v1;
  Rat v2;

  friend bool operator==(const TwistedClass&, const TwistedClass&) = default;
  friend TwistedClass operator+(const TwistedClass& a, const TwistedClass& b) {
    return {a.v0 + b.v0, a.v1 + b.v1, a.v2 + b.v2};
  }
  friend TwistedClass operator-(const TwistedClass& a, const TwistedClass& b) {
    return {a.v0 - b.v0, a.v1 - b.v1, a.v2 - b.v2};
  }
  friend TwistedClass operator*(const Rat& t, const TwistedClass& a) { return {t * a.v0, t * a.v1, t * a.v2}; }
  TwistedClass operator-() const { return {-v0, -v1, -v2}; }
};

/// Chern character rk + b1 h1 + b2 h2 + c [pt] on Sigma.
struct ChernSigma {
  Rat rk;
  Rat b1;
  Rat b2;
  Rat c;

  friend bool operator==(const ChernSigma&, const ChernSigma&) = default;
  friend ChernSigma operator+(const ChernSigma& a, const ChernSigma& b) {
    return {a.rk + b.rk, a.b1 + b.b1, a.b2 + b.b2, a.c + b.c};
  }
  friend ChernSigma operator*(const Rat& t, const ChernSigma& a) { return {t * a.rk, t * a.b1, t * a.b2, t * a.c}; }
};

enum class DiscriminantForm { raw, twisted };

/// ch * (1 - h^2/8).
ChernY twist_cl0(const ChernY& e);
/// ch * (1 - h^2/8)^{-1} = ch * (1 + h^2/8) (h^4 = 0 on Y).
ChernY untwist_cl0(const ChernY& e);

/// ch * exp(-beta h), truncated at h^3.
ChernY beta_twist(const ChernY& e, const Rat& beta);
TwistedClass beta_twist(const TwistedClass& v, const Rat& beta);

/// Degree-wise image of an already twisted character in Q^3.
TwistedClass to_twisted_class(const ChernY& twisted);
/// Clifford twist followed by the degree map.
TwistedClass twisted_class_of(const ChernY& raw);

/// Bogomolov discriminant of a raw (untwisted) character. Both forms agree.
Rat discriminant_y(const ChernY& raw, DiscriminantForm form);
/// The same discriminant evaluated on the twisted class: (v1^2 - 2 v0 v2) / h^3.
Rat discriminant(const TwistedClass& v);

Rat discriminant_sigma(const ChernSigma& e);

/// Restriction to a smooth hyperplane section: h|Sigma = h1 + h2, h^2|Sigma = 2 pt.
ChernSigma restrict_to_sigma(const ChernY& e);

/// mu_h = ch1 h^2 / (ch0 h^3); +infinity for ch0 = 0.
ExtRat slope_h(const ChernY& e);
ExtRat slope_h(const TwistedClass& v);

/// ch0, ch1 integral (the advisory check for characters of genuine modules).
bool looks_integral(const ChernY& e);
bool looks_integral(const ChernSigma& e);

std::string to_string(const ChernY& e);
std::string to_string(const TwistedClass& v);
std::string to_string(const ChernSigma& e);

}  // namespace kustab
