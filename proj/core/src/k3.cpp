#include "kustab/k3.hpp"

#include "kustab/error.hpp"

namespace kustab {

std::string to_string(DivisorStatus s) {
  switch (s) {
    case DivisorStatus::invalid:
      return "invalid";
    case DivisorStatus::single:
      return "single";
    case DivisorStatus::split:
      return "split";
  }
  return "?";
}

PeriodDivisorLabel d_label(std::int64_t d) {
  if (d < 1) throw InputError("d must be positive");
  PeriodDivisorLabel l;
  l.d = d;
  const std::string ds = std::to_string(d);
  switch (d % 8) {
    case 0:
    case 4:
      l.status = DivisorStatus::single;
      l.components = {"D_" + ds};
      break;
    case 2:
      l.status = DivisorStatus::split;
      l.components = {"D'_" + ds, "D''_" + ds};
      break;
    default:
      l.status = DivisorStatus::invalid;
  }
  return l;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw InputError("factorization needs a positive integer");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

StarStarPrime star_star_prime(std::int64_t d) {
  if (d < 1) throw InputError("d must be positive");
  StarStarPrime r;
  r.factorization = factorize(d);
  r.holds = true;
  for (const auto& [p, e] : r.factorization)
    if (p % 4 == 3 && e % 2 != 0) r.holds = false;
  return r;
}

CriterionResult twisted_k3_criterion(const IntegralLattice& hodge, std::int64_t bound) {
  const IsotropyResult iso = isotropic_exists(hodge, bound);
  CriterionResult r{iso.status, {}, iso.method, iso.bound_used, kSublatticeNote};
  if (iso.witness) r.witness.push_back(*iso.witness);
  return r;
}

CriterionResult untwisted_k3_criterion(const IntegralLattice& hodge, std::int64_t bound) {
  const HyperbolicResult hyp = hyperbolic_plane_exists(hodge, bound);
  CriterionResult r{hyp.status, {}, hyp.method, hyp.bound_used, kSublatticeNote};
  if (hyp.witness) {
    r.witness.push_back(hyp.witness->first);
    r.witness.push_back(hyp.witness->second);
  }
  return r;
}

Rat pair_rational(const IntegralLattice& l, const RatVector& u, const RatVector& v) {
  if (u.size() != l.rank() || v.size() != l.rank()) throw InputError("vector length does not match lattice rank");
  Rat total(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) total += u[i] * Rat(l.gram()(i, j)) * v[j];
  }
  return total;
}

bool in_P(const EtaVector& eta) {
  const Rat a = pair_rational(eta.lattice, eta.re, eta.re);
  const Rat b = pair_rational(eta.lattice, eta.re, eta.im);
  const Rat c = pair_rational(eta.lattice, eta.im, eta.im);
  return a.sign() > 0 && (a * c - b * b).sign() > 0;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::in_certified:
      return "in_certified";
    case Membership::not_in:
      return "not_in";
    case Membership::in_within_bound:
      return "in_within_bound";
  }
  return "?";
}

namespace {

IntVector clear_denominators(const RatVector& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  IntVector out;
  for (const auto& x : v) out.push_back((x * Rat(l)).num());
  return out;
}

}  // namespace

P0Result in_P0(const EtaVector& eta, std::int64_t bound) {
  P0Result r;
  r.in_p = in_P(eta);
  if (!r.in_p) return r;
  const Complement c = orthogonal_complement(eta.lattice, {clear_denominators(eta.re), clear_denominators(eta.im)});
  r.complement_rank = c.lattice.rank();
  if (r.complement_rank == 0) {
    r.status = Membership::in_certified;
    return r;
  }
  const Enumeration e = enumerate_square(c.lattice, -2, bound);
  r.bound_used = e.bound_used;
  if (!e.vectors.empty()) {
    IntVector delta(eta.lattice.rank(), Int(0));
    const IntVector& local = e.vectors.front();
    for (std::size_t k = 0; k < local.size(); ++k)
      for (std::size_t i = 0; i < delta.size(); ++i) delta[i] += local[k] * c.embedding(k, i);
    r.obstruction = delta;
    r.status = Membership::not_in;
    return r;
  }
  r.status = e.certified ? Membership::in_certified : Membership::in_within_bound;
  return r;
}

Report period_obstruction(std::int64_t d, std::int64_t bound) {
  Report rep;
  rep.title = "period divisor d = " + std::to_string(d);
  const StarStarPrime ssp = star_star_prime(d);
  rep.add("period.32", "32 divides d", d % 32 == 0);
  rep.add("period.star", "(**') holds for d", ssp.holds);
  if (d % 32 == 0 && ssp.holds) {
    const NegTwoCertificate c = neg_two_obstruction(d / 32, bound);
    for (const auto& ch : c.report.checks) rep.checks.push_back(ch);
  }
  return rep;
}

}  // namespace kustab
