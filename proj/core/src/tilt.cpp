#include "kustab/tilt.hpp"

#include <algorithm>
#include <stdexcept>

#include "kustab/error.hpp"
#include "kustab/limits.hpp"

namespace kustab {

namespace {

GaussRat z_unchecked(const Rat& alpha_sq, const Rat& beta, const TwistedClass& v) {
  const TwistedClass vb = beta_twist(v, beta);
  return {alpha_sq / Rat(2) * vb.v0 - vb.v2, vb.v1};
}

ExtRat slope_of(const GaussRat& z) {
  if (z.im.is_zero()) return ExtRat::infinity();
  return -z.re / z.im;
}

}  // namespace

TiltParams::TiltParams(Rat alpha_sq, Rat beta) : alpha_sq_(std::move(alpha_sq)), beta_(std::move(beta)) {
  if (alpha_sq_.sign() <= 0) throw InputError("alpha^2 must be positive, got " + alpha_sq_.str());
}

GaussRat z_first(const TiltParams& p, const TwistedClass& v) { return z_unchecked(p.alpha_sq(), p.beta(), v); }

GaussRat z_second(const TiltParams& p, const TwistedClass& v) { return -z_first(p, v).times_i(); }

ExtRat tilt_slope(const TiltParams& p, const TwistedClass& v, Tilt which) {
  return slope_of(which == Tilt::first ? z_first(p, v) : z_second(p, v));
}

const std::vector<ExceptionalClass>& exceptional_table() {
  static const std::vector<ExceptionalClass> table = [] {
    struct Row {
      const char* name;
      Rat ch0, ch1, ch2;
    };
    const Row rows[] = {
        {"Cl0", 4, -4, 2},
        {"Cl1", 4, -4, 2},
        {"Ra", 4, -2, Rat(1, 2)},
        {"Rb", 4, -2, Rat(1, 2)},
        {"Cl1(-h)", 4, -8, 8},
        {"Cl0(-h)", 4, -8, 8},
        {"Ra*Cl1(-h)", 4, -6, Rat(9, 2)},
        {"Rb*Cl1(-h)", 4, -6, Rat(9, 2)},
    };
    std::vector<ExceptionalClass> out;
    for (const auto& r : rows) {
      ChernY ch{r.ch0, r.ch1, r.ch2, std::nullopt};
      out.push_back({r.name, ch, to_twisted_class(ch)});
    }
    return out;
  }();
  return table;
}

const ExceptionalClass& exceptional(const std::string& name) {
  for (const auto& e : exceptional_table())
    if (e.name == name) return e;
  throw InputError("unknown exceptional class '" + name + "'");
}

bool alpha_sq_in_window(const Rat& alpha_sq) { return alpha_sq.sign() > 0 && alpha_sq < kAlphaSqWindow; }

Report verify_heart_window(const TiltParams& p) {
  Report r;
  r.title = "heart window at alpha^2 = " + p.alpha_sq().str() + ", beta = " + p.beta().str();
  const Rat& beta = p.beta();

  const auto mu = [](const std::string& name) { return slope_h(exceptional(name).twisted); };
  const std::pair<const char*, Rat> expected[] = {
      {"Cl1(-h)", -2}, {"Cl0(-h)", -2}, {"Ra*Cl1(-h)", Rat(-3, 2)}, {"Rb*Cl1(-h)", Rat(-3, 2)},
      {"Cl0", -1},     {"Cl1", -1},     {"Ra", Rat(-1, 2)},         {"Rb", Rat(-1, 2)},
  };
  for (const auto& [name, value] : expected) {
    const ExtRat m = mu(name);
    r.add("mu_h." + std::string(name), "mu_h(" + std::string(name) + ") = " + value.str(), m == ExtRat(value),
          "computed " + m.str());
  }
  r.add("mu_h.chain-shifted", "mu_h(Cl1(-h)) < mu_h(Ra*Cl1(-h))", mu("Cl1(-h)") < mu("Ra*Cl1(-h)"));
  r.add("mu_h.chain", "mu_h(Cl0) < mu_h(Ra)", mu("Cl0") < mu("Ra"));

  for (const char* name : {"Cl0", "Cl1", "Ra", "Rb"}) {
    const ExtRat m = mu(name);
    r.add(std::string("coh-beta.") + name, "mu_h(" + std::string(name) + ") > beta", m > ExtRat(beta),
          m.str() + " vs beta " + beta.str());
  }
  for (const char* name : {"Cl1(-h)", "Cl0(-h)", "Ra*Cl1(-h)", "Rb*Cl1(-h)"}) {
    const ExtRat m = mu(name);
    r.add(std::string("coh-beta.") + name + "[1]", "mu_h(" + std::string(name) + ") <= beta", m <= ExtRat(beta),
          m.str() + " vs beta " + beta.str());
  }
  if (beta < kHeartBetaMin || beta >= kHeartBetaMax)
    r.notes.push_back("beta " + beta.str() + " lies outside [-3/2, -1)");

  // S(E)[-2] has class -[E'] for the listed sheaf E'; the slope is unchanged by the sign.
  const auto mu_ab = [&](const std::string& name) { return tilt_slope(p, exceptional(name).twisted, Tilt::first); };
  const ExtRat s_cl0 = mu_ab("Cl1(-h)");
  const ExtRat s_cl1 = mu_ab("Cl0(-h)");
  const ExtRat s_ra = mu_ab("Ra*Cl1(-h)");
  const ExtRat s_rb = mu_ab("Rb*Cl1(-h)");
  const ExtRat m_cl0 = mu_ab("Cl0");
  const ExtRat m_cl1 = mu_ab("Cl1");
  const ExtRat m_ra = mu_ab("Ra");
  const ExtRat m_rb = mu_ab("Rb");
  const ExtRat zero(Rat(0));

  r.add("double-tilt.serre-equal", "mu(S Cl0[-2]) = mu(S Cl1[-2])", s_cl0 == s_cl1, s_cl0.str() + ", " + s_cl1.str());
  r.add("double-tilt.serre-order", "mu(S Cl0[-2]) < mu(S Ra[-2])", s_cl0 < s_ra, s_cl0.str() + " < " + s_ra.str());
  r.add("double-tilt.serre-equal-r", "mu(S Ra[-2]) = mu(S Rb[-2])", s_ra == s_rb, s_ra.str() + ", " + s_rb.str());
  r.add("double-tilt.serre-negative", "mu(S Ra[-2]) < 0", s_ra < zero, s_ra.str());
  r.add("double-tilt.positive", "0 < mu(Cl0)", zero < m_cl0, m_cl0.str());
  r.add("double-tilt.equal", "mu(Cl0) = mu(Cl1)", m_cl0 == m_cl1, m_cl0.str() + ", " + m_cl1.str());
  r.add("double-tilt.order", "mu(Cl0) < mu(Ra)", m_cl0 < m_ra, m_cl0.str() + " < " + m_ra.str());
  r.add("double-tilt.equal-r", "mu(Ra) = mu(Rb)", m_ra == m_rb, m_ra.str() + ", " + m_rb.str());
  for (const char* name : {"Cl0", "Cl1", "Ra", "Rb"}) {
    const GaussRat z0 = z_second(p, exceptional(name).twisted);
    r.add(std::string("double-tilt.nonzero.") + name, "Z0(" + std::string(name) + ") != 0", !z0.is_zero(), z0.str());
  }
  if (beta != kDoubleTiltBeta)
    r.notes.push_back("double-tilt orderings evaluated at beta " + beta.str() + "; the stated case is beta = -5/4");
  if (!alpha_sq_in_window(p.alpha_sq()))
    r.notes.push_back("alpha^2 " + p.alpha_sq().str() + " lies outside (0, 1/16)");
  return r;
}

ChernY psi_character(int which) {
  if (which == 1) return {8, 2, Rat(13, 6), std::nullopt};
  if (which == 2) return {-8, -4, Rat(-1, 6), std::nullopt};
  throw InputError("lambda index must be 1 or 2");
}

GaussRat ku_charge_closed_form(const Rat& alpha_sq, const MukaiVector& v) {
  const GaussRat l1{24, Rat(-8) * alpha_sq + Rat(119, 6)};
  const GaussRat l2{-28, Rat(8) * alpha_sq - Rat(125, 6)};
  return Rat(v.a) * l1 + Rat(v.b) * l2;
}

GaussRat ku_charge_from_characters(const Rat& alpha_sq, const MukaiVector& v) {
  const TwistedClass c = Rat(v.a) * twisted_class_of(psi_character(1)) + Rat(v.b) * twisted_class_of(psi_character(2));
  return -z_unchecked(alpha_sq, kDoubleTiltBeta, c).times_i();
}

GaussRat ku_charge(const Rat& alpha_sq, const MukaiVector& v) {
  if (alpha_sq.sign() < 0) throw InputError("alpha^2 must be nonnegative, got " + alpha_sq.str());
  GaussRat closed = ku_charge_closed_form(alpha_sq, v);
  const GaussRat piped = ku_charge_from_characters(alpha_sq, v);
  if (closed != piped)
    throw std::logic_error("charge mismatch: closed form " + closed.str() + ", character pipeline " + piped.str());
  return closed;
}

Rat charge_independence_determinant(const Rat& alpha_sq) {
  const GaussRat z1 = ku_charge(alpha_sq, {1, 0});
  const GaussRat z2 = ku_charge(alpha_sq, {0, 1});
  return z1.re * z2.im - z1.im * z2.re;
}

std::pair<Rat, Rat> parallelism_coefficients(const MukaiVector& v, const MukaiVector& w) {
  // Z(u) = X + i (Y + S alpha^2); Im(conj Z(w) Z(v)) = X_w Im Z(v) - X_v Im Z(w).
  const GaussRat v0 = ku_charge(0, v);
  const GaussRat w0 = ku_charge(0, w);
  const GaussRat v1 = ku_charge(1, v);
  const GaussRat w1 = ku_charge(1, w);
  const Rat sv = v1.im - v0.im;
  const Rat sw = w1.im - w0.im;
  return {w0.re * v0.im - v0.re * w0.im, w0.re * sv - v0.re * sw};
}

std::vector<WallSolution> wall_scan(const MukaiVector& v, int bound) {
  if (!v.primitive()) throw InputError("wall_scan needs a primitive v, got " + v.str());
  if (bound <= 0) throw InputError("bound must be positive");
  require_within_cap(box_size(static_cast<std::uint64_t>(bound), 2), "wall scan");
  std::vector<WallSolution> out;
  for (std::int64_t a = -bound; a <= bound; ++a) {
    for (std::int64_t b = -bound; b <= bound; ++b) {
      if (a * v.b - b * v.a == 0) continue;
      const MukaiVector w{a, b};
      const auto [c0, c1] = parallelism_coefficients(v, w);
      WallSolution s{w, std::nullopt, false};
      if (!c1.is_zero()) {
        s.alpha_sq_root = -c0 / c1;
        s.in_window = alpha_sq_in_window(*s.alpha_sq_root);
      }
      out.push_back(s);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const WallSolution& x, const WallSolution& y) {
    if (x.alpha_sq_root.has_value() != y.alpha_sq_root.has_value()) return x.alpha_sq_root.has_value();
    if (x.alpha_sq_root && *x.alpha_sq_root != *y.alpha_sq_root) return *x.alpha_sq_root < *y.alpha_sq_root;
    return x.destabilizer < y.destabilizer;
  });
  return out;
}

}  // namespace kustab
