#include "kustab/moduli.hpp"

#include <numeric>
#include <stdexcept>

#include "kustab/error.hpp"

namespace kustab {

bool MukaiVector::primitive() const { return std::gcd(a, b) == 1; }

MukaiVector parse_mukai_vector(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("expected a,b, got '" + text + "'");
  const Int a = parse_int(text.substr(0, comma));
  const Int b = parse_int(text.substr(comma + 1));
  const Int limit = Int(1) << 30;
  if (abs(a) > limit || abs(b) > limit) throw InputError("Mukai vector coordinates out of range in '" + text + "'");
  return {a.get_si(), b.get_si()};
}

std::optional<Int> moduli_dimension(const Int& square) {
  if (square < -2) return std::nullopt;
  return square + 2;
}

Involution involution_exists(const MukaiVector& v) {
  if (!v.primitive()) throw InputError("involution needs coprime (a, b), got " + v.str());
  Involution r;
  r.modulus = Int(v.a) * v.a + Int(v.b) * v.b;
  if (r.modulus == 1) {
    r.witness = 0;
    return r;
  }
  Int inv;
  const Int a = Int(v.a);
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), r.modulus.get_mpz_t()) == 0)
    throw std::logic_error("a not invertible modulo a^2 + b^2");
  Int t = inv * v.b;
  mpz_mod(t.get_mpz_t(), t.get_mpz_t(), r.modulus.get_mpz_t());
  Int check = t * t + 1;
  mpz_mod(check.get_mpz_t(), check.get_mpz_t(), r.modulus.get_mpz_t());
  if (check != 0) throw std::logic_error("involution witness fails t^2 = -1");
  r.witness = t;
  return r;
}

std::optional<IntVector> coordinates_in(const IntMatrix& rows, const IntVector& v) {
  IntVector rem = v;
  IntVector c(rows.rows(), Int(0));
  for (std::size_t k = 0; k < rows.rows(); ++k) {
    std::size_t p = 0;
    while (p < rows.cols() && rows(k, p) == 0) ++p;
    if (p == rows.cols()) continue;
    if (!mpz_divisible_p(rem[p].get_mpz_t(), rows(k, p).get_mpz_t())) return std::nullopt;
    c[k] = rem[p] / rows(k, p);
    for (std::size_t j = 0; j < rows.cols(); ++j) rem[j] -= c[k] * rows(k, j);
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return c;
}

Int lattice_divisibility(const MukaiVector& v) {
  const MukaiEmbedding& m = mukai24_default();
  const IntVector vv = m.vector(v.a, v.b);
  const IntVector h = m.vector(v.b, -v.a);
  const Complement perp = orthogonal_complement(m.ambient, {vv});
  const IntVector gh = m.ambient.pairings(h);
  Int g = 0;
  for (std::size_t k = 0; k < perp.embedding.rows(); ++k) {
    Int s = 0;
    for (std::size_t i = 0; i < gh.size(); ++i) s += gh[i] * perp.embedding(k, i);
    g = gcd(g, s);
  }
  return g;
}

std::string example_label(const Int& m) {
  if (m == 1) return "double EPW sextic";
  if (m == 2) return "EPW cube";
  if (m == 5) return "12-fold (point projections)";
  return "new family (conjecturally unknown)";
}

namespace {

const Int& primitive_part_discriminant() {
  static const Int order = [] {
    const MukaiEmbedding& m = mukai24_default();
    return discriminant_order(discriminant_group(orthogonal_complement(m.ambient, {m.lambda1, m.lambda2}).lattice));
  }();
  return order;
}

}  // namespace

ModuliReport family_invariants(const MukaiVector& v) {
  if (!v.primitive()) throw InputError("family invariants need coprime (a, b), got " + v.str());
  const MukaiEmbedding& emb = mukai24_default();
  ModuliReport r;
  r.v = v;
  const Int m = Int(v.a) * v.a + Int(v.b) * v.b;
  r.square = emb.ambient.square(emb.vector(v.a, v.b));
  r.dimension = *moduli_dimension(r.square);
  r.polarization = {v.b, -v.a};
  r.degree = emb.ambient.square(emb.vector(v.b, -v.a));
  r.divisibility = m;
  r.lattice_divisibility = lattice_divisibility(v);
  if (r.lattice_divisibility != r.divisibility)
    throw std::logic_error("divisibility mismatch for " + v.str() + ": closed form " + r.divisibility.get_str() +
                           ", lattice " + r.lattice_divisibility.get_str() + " (" + kMukai24Convention + ")");
  if (r.dimension != 2 * (m + 1) || r.degree != 2 * m)
    throw std::logic_error("dimension or degree disagrees with the closed form for " + v.str());
  r.involution = involution_exists(v);
  r.prim_discriminant_order = primitive_part_discriminant();
  r.h_discriminant_order = r.degree;
  // v is primitive in a unimodular lattice, so |disc(v-perp)| = (v, v).
  r.h2_discriminant_order = r.square;
  const auto k = perfect_square(r.prim_discriminant_order * r.h_discriminant_order / r.h2_discriminant_order);
  if (!k) throw std::logic_error("index of prim + Zh is not an integer");
  r.index = *k;
  r.label = example_label(m);
  if (m == 1) r.candidates = {"double EPW sextic Y~_A", "dual double EPW sextic Y~_{A-perp}"};
  r.convention = kMukai24Convention;
  return r;
}

std::vector<ModuliReport> family_grid(int max) {
  if (max < 1) throw InputError("grid max must be positive");
  std::vector<ModuliReport> out;
  for (std::int64_t a = 0; a <= max; ++a)
    for (std::int64_t b = -max; b <= max; ++b) {
      if (a == 0 && b != 1) continue;
      if (std::gcd(a, b) != 1) continue;
      out.push_back(family_invariants({a, b}));
    }
  return out;
}

H2Structure h2_structure(const IntegralLattice& ambient, const IntVector& v) {
  const Int sq = ambient.square(v);
  if (sq < 0) throw InputError("H^2 structure needs (v,v) >= 0, got " + sq.get_str());
  const Complement perp = orthogonal_complement(ambient, {v});
  H2Structure r;
  if (sq > 0) {
    r.lattice = perp.lattice;
    r.lattice.set_name("v-perp");
    r.basis = perp.embedding;
    if (!r.lattice.degenerate()) r.discriminant = discriminant_group(r.lattice);
    return r;
  }
  r.quotient = true;
  const IntVector vp = primitive_part(v);
  const auto c = coordinates_in(perp.embedding, vp);
  if (!c) throw std::logic_error("v not found in its own orthogonal complement");
  // Unimodular change of basis of v-perp whose first vector is v.
  const IntMatrix u = unimodular_to_first_axis(*c);
  const RatMatrix uinv = inverse(to_rational(u));
  const std::size_t n = c->size();
  IntMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = uinv(j, i).num();
  const IntMatrix basis = p * perp.embedding;
  IntMatrix rest(n - 1, ambient.rank());
  for (std::size_t i = 1; i < n; ++i) rest.set_row(i - 1, basis.row(i));
  r.basis = rest;
  r.lattice = IntegralLattice(rest * ambient.gram() * rest.transpose(), "v-perp/Zv");
  if (!r.lattice.degenerate()) r.discriminant = discriminant_group(r.lattice);
  return r;
}

}  // namespace kustab
