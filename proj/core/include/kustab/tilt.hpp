#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kustab/chern.hpp"
#include "kustab/mukai_vector.hpp"
#include "kustab/report.hpp"

namespace kustab {

/// (alpha^2, beta) of the tilted weak stability conditions. Only alpha^2
/// enters any formula, so alpha itself is never stored.
class TiltParams {
 public:
  TiltParams(Rat alpha_sq, Rat beta);
  const Rat& alpha_sq() const { return alpha_sq_; }
  const Rat& beta() const { return beta_; }

 private:
  Rat alpha_sq_;
  Rat beta_;
};

enum class Tilt { first, second };

/// Z_{alpha,beta}(v) = alpha^2/2 * v0^beta - v2^beta + i v1^beta, where
/// v^beta is the beta-twisted class (the h-powers are already in v).
GaussRat z_first(const TiltParams& p, const TwistedClass& v);
/// Z^0 = -i * Z.
GaussRat z_second(const TiltParams& p, const TwistedClass& v);
/// -Re Z / Im Z of the selected charge; +infinity when Im Z = 0.
ExtRat tilt_slope(const TiltParams& p, const TwistedClass& v, Tilt which);

/// The exceptional Clifford modules whose twisted characters are tabulated.
struct ExceptionalClass {
  std::string name;
  ChernY twisted_ch;  ///< ch_{Cl0,<=2}; ch3 unknown
  TwistedClass twisted;
};

/// Cl0, Cl1, Ra, Rb, Cl1(-h), Cl0(-h), Ra*Cl1(-h), Rb*Cl1(-h), in that order.
const std::vector<ExceptionalClass>& exceptional_table();
const ExceptionalClass& exceptional(const std::string& name);

/// Lower edge and open upper edge of the beta range in which the four
/// exceptional sheaves and the shifted Serre duals lie in the tilted heart.
inline const Rat kHeartBetaMin{Int(-3), Int(2)};
inline const Rat kHeartBetaMax{Int(-1)};
inline const Rat kDoubleTiltBeta{Int(-5), Int(4)};
/// alpha < 1/4 as alpha^2 < 1/16 (open interval).
inline const Rat kAlphaSqWindow{Int(1), Int(16)};

bool alpha_sq_in_window(const Rat& alpha_sq);

/// Numerical heart certification: the mu_h chain and tilted-heart
/// containment for beta, then the double-tilt slope orderings and the
/// nonvanishing of Z^0 on Cl0, Cl1, Ra, Rb at the requested (alpha^2, beta).
Report verify_heart_window(const TiltParams& p);

/// Untwisted ch_{<=2} of the images of lambda_1 and lambda_2 in D^b(Y, Cl0).
ChernY psi_character(int which);

/// Z_alpha(a lambda_1 + b lambda_2) from the closed form.
GaussRat ku_charge_closed_form(const Rat& alpha_sq, const MukaiVector& v);
/// The same charge through twist -> degree map -> z_second at beta = -5/4.
GaussRat ku_charge_from_characters(const Rat& alpha_sq, const MukaiVector& v);
/// Closed form, verified against the character pipeline. alpha^2 >= 0.
GaussRat ku_charge(const Rat& alpha_sq, const MukaiVector& v);

/// det [Re Z(l1), Im Z(l1); Re Z(l2), Im Z(l2)].
Rat charge_independence_determinant(const Rat& alpha_sq);

struct WallSolution {
  MukaiVector destabilizer;
  std::optional<Rat> alpha_sq_root;  ///< none when the equation has no alpha^2 solution
  bool in_window = false;
};

/// Im(conj Z(w) Z(v)) as A + B alpha^2.
std::pair<Rat, Rat> parallelism_coefficients(const MukaiVector& v, const MukaiVector& w);

/// All w with |a'|,|b'| <= bound, not proportional to v, with the exact
/// alpha^2 at which Z(w) and Z(v) become parallel. Sorted by root (rootless
/// last), then by w.
std::vector<WallSolution> wall_scan(const MukaiVector& v, int bound);

}  // namespace kustab
