#include "kustab/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "kustab/error.hpp"
#include "kustab/limits.hpp"

namespace kustab {

namespace {

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

IntegralLattice power(const IntegralLattice& l, int k) {
  IntegralLattice out(IntMatrix(0, 0));
  for (int i = 0; i < k; ++i) out = direct_sum(out, l);
  return out;
}

// Odometer over [-bound, bound]^n; stops when visit returns true.
bool for_each_in_box(std::size_t n, std::int64_t bound, const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> x(n, -bound);
  if (n == 0) return false;
  while (true) {
    if (visit(x)) return true;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < bound) {
        ++x[i];
        break;
      }
      x[i] = -bound;
      if (i == 0) return false;
    }
  }
}

// Shells of growing sup-norm, so the first hit is a smallest witness.
bool for_each_by_shell(std::size_t n, std::int64_t bound, const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  for (std::int64_t r = 1; r <= bound; ++r) {
    const bool stop = for_each_in_box(n, r, [&](const std::vector<std::int64_t>& x) {
      std::int64_t m = 0;
      for (auto v : x) m = std::max(m, v < 0 ? -v : v);
      return m == r && visit(x);
    });
    if (stop) return true;
  }
  return false;
}

std::int64_t capped_bound(std::size_t n, std::int64_t bound) {
  const std::uint64_t cap = max_enum();
  std::int64_t b = bound;
  while (b > 0 && box_size(static_cast<std::uint64_t>(b), n) > cap) --b;
  return b;
}

IntVector to_int_vector(const std::vector<std::int64_t>& x) {
  IntVector v;
  v.reserve(x.size());
  for (auto c : x) v.emplace_back(static_cast<long>(c));
  return v;
}

// Gram matrix in machine integers when entries are small enough for exact int64 evaluation in boxes.
std::optional<std::vector<std::int64_t>> small_gram(const IntegralLattice& l) {
  const std::size_t n = l.rank();
  std::vector<std::int64_t> g(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int& v = l.gram()(i, j);
      if (abs(v) > 1'000'000) return std::nullopt;
      g[i * n + j] = v.get_si();
    }
  return g;
}

Int quad_form(const IntegralLattice& l, const std::optional<std::vector<std::int64_t>>& g,
              const std::vector<std::int64_t>& x) {
  const std::size_t n = x.size();
  if (g) {
    __int128 total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      __int128 row = 0;
      for (std::size_t j = 0; j < n; ++j) row += static_cast<__int128>((*g)[i * n + j]) * x[j];
      total += row * x[i];
    }
    return Int(static_cast<long>(total));
  }
  return l.square(to_int_vector(x));
}

}  // namespace

IntegralLattice::IntegralLattice(IntMatrix gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  if (!gram_.square()) throw InputError("Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i))
        throw InputError("Gram matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                         gram_(i, j).get_str() + " != " + gram_(j, i).get_str());
  det_ = kustab::determinant(gram_);
  sig_ = kustab::signature(to_rational(gram_));
}

bool IntegralLattice::even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

IntVector IntegralLattice::pairings(const IntVector& v) const {
  if (v.size() != rank())
    throw InputError("vector of length " + std::to_string(v.size()) + " in a lattice of rank " + std::to_string(rank()));
  return apply<Int>(gram_, v);
}

Int IntegralLattice::pair(const IntVector& u, const IntVector& v) const {
  if (u.size() != rank()) throw InputError("vector length does not match lattice rank");
  const IntVector gv = pairings(v);
  Int total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) total += u[i] * gv[i];
  return total;
}

IntVector IntegralLattice::basis_vector(std::size_t i) const {
  IntVector e(rank(), Int(0));
  e.at(i) = 1;
  return e;
}

Int pair(const LatticeVector& u, const LatticeVector& v) {
  if (u.lattice == nullptr || u.lattice != v.lattice) throw InputError("vectors live in different lattices");
  return u.lattice->pair(u.coords, v.coords);
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  std::string name = a.name().empty() ? b.name() : (b.name().empty() ? a.name() : a.name() + "+" + b.name());
  return IntegralLattice(block_diagonal(a.gram(), b.gram()), name);
}

IntegralLattice scaled(const IntegralLattice& l, const Int& factor) {
  IntMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= factor;
  return IntegralLattice(g, l.name() + "(" + factor.get_str() + ")");
}

IntegralLattice lattice_a1() { return IntegralLattice(IntMatrix{{2}}, "A1"); }
IntegralLattice lattice_a1_negative() { return IntegralLattice(IntMatrix{{-2}}, "A1(-1)"); }
IntegralLattice lattice_a1_squared() { return IntegralLattice(IntMatrix{{2, 0}, {0, 2}}, "A1^2"); }
IntegralLattice lattice_u() { return IntegralLattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }

IntegralLattice lattice_e8_negative() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (const auto& [a, b] : edges) g(a, b) = g(b, a) = 1;
  return IntegralLattice(g, "E8(-1)");
}

IntegralLattice lattice_ls(const Int& s) {
  if (s < 1) throw InputError("Ls(s) needs s >= 1");
  return IntegralLattice(IntMatrix{{2, 0, 0, 0}, {0, 2, 0, 1}, {0, 0, Int(-8 * s), 0}, {0, 1, 0, -2}},
                         "Ls(" + s.get_str() + ")");
}

IntegralLattice lattice_lambda22() {
  IntegralLattice l = direct_sum(power(lattice_e8_negative(), 2),
                                 direct_sum(power(lattice_u(), 2), power(lattice_a1_negative(), 2)));
  l.set_name("Lambda22");
  return l;
}

IntVector MukaiEmbedding::vector(const Int& a, const Int& b) const {
  IntVector v(ambient.rank(), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a * lambda1[i] + b * lambda2[i];
  return v;
}

MukaiEmbedding mukai24_default() {
  static const MukaiEmbedding m = [] {
    IntegralLattice l = direct_sum(power(lattice_e8_negative(), 2), power(lattice_u(), 4));
    l.set_name("Mukai24-default");
    IntVector l1(24, Int(0));
    IntVector l2(24, Int(0));
    l1[16] = l1[17] = 1;
    l2[18] = l2[19] = 1;
    return MukaiEmbedding{l, l1, l2, kMukai24Convention};
  }();
  return m;
}

IntegralLattice build_named(const std::string& name) {
  if (name.empty()) throw InputError("empty lattice name");
  std::vector<std::string> terms;
  std::size_t depth = 0;
  std::string cur;
  for (char ch : name) {
    if (ch == '(') ++depth;
    if (ch == ')' && depth > 0) --depth;
    // split on top-level '+'
    if (ch == '+' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  terms.push_back(cur);

  IntegralLattice out(IntMatrix(0, 0));
  for (const auto& term : terms) {
    std::string base = term;
    int times = 1;
    if (const auto caret = term.rfind('^'); caret != std::string::npos && term.find(')', caret) == std::string::npos) {
      base = term.substr(0, caret);
      const Int k = parse_int(term.substr(caret + 1));
      if (k < 1 || k > 64) throw InputError("power out of range in '" + term + "'");
      times = static_cast<int>(k.get_si());
    }
    IntegralLattice piece;
    if (base == "A1" || base == "A1(2)") {
      piece = lattice_a1();
    } else if (base == "A1(-1)") {
      piece = lattice_a1_negative();
    } else if (base == "U") {
      piece = lattice_u();
    } else if (base == "E8(-1)") {
      piece = lattice_e8_negative();
    } else if (base == "Lambda22") {
      piece = lattice_lambda22();
    } else if (base == "Mukai24-default") {
      piece = mukai24_default().ambient;
    } else if (base.starts_with("Ls(") && base.ends_with(")")) {
      piece = lattice_ls(parse_int(base.substr(3, base.size() - 4)));
    } else {
      throw InputError("unknown lattice name '" + base + "'");
    }
    out = direct_sum(out, power(piece, times));
  }
  out.set_name(name);
  return out;
}

std::vector<Int> discriminant_group(const IntegralLattice& l) {
  if (l.degenerate()) throw InputError("discriminant group of a degenerate lattice");
  std::vector<Int> out;
  for (auto& d : smith_invariants(l.gram()))
    if (d != 1) out.push_back(d);
  return out;
}

Int discriminant_order(const std::vector<Int>& factors) {
  Int n = 1;
  for (const auto& f : factors) n *= f;
  return n;
}

Int divisibility(const IntegralLattice& l, const IntVector& v) {
  if (content(v) == 0) throw InputError("divisibility of the zero vector");
  const Int g = content(l.pairings(v));
  if (g == 0) throw InputError("vector lies in the radical; divisibility undefined");
  return g;
}

Complement orthogonal_complement(const IntegralLattice& l, const std::vector<IntVector>& vs) {
  IntMatrix m(vs.size(), l.rank());
  for (std::size_t k = 0; k < vs.size(); ++k) m.set_row(k, l.pairings(vs[k]));
  IntMatrix k = vs.empty() ? IntMatrix::identity(l.rank()) : integer_kernel(m);
  IntMatrix g = k * l.gram() * k.transpose();
  return {IntegralLattice(g, "complement"), k};
}

IntVector primitive_part(const IntVector& v) {
  const Int g = content(v);
  if (g == 0) throw InputError("primitive part of the zero vector");
  IntVector out = v;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::string to_string(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "]";
}

std::vector<IntVector> box_search_square(const IntegralLattice& l, const Int& s, std::int64_t bound) {
  std::vector<IntVector> out;
  const auto g = small_gram(l);
  for_each_in_box(l.rank(), bound, [&](const std::vector<std::int64_t>& x) {
    if (std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; })) return false;
    if (quad_form(l, g, x) == s) out.push_back(to_int_vector(x));
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Fincke-Pohst over Q for a positive definite Gram matrix: Q(x) = sum d_i (x_i + sum_{j>i} mu_ij x_j)^2.
void fincke_pohst(const IntegralLattice& l, const Int& s, std::vector<IntVector>& out) {
  const std::size_t n = l.rank();
  RatMatrix q = to_rational(l.gram());
  std::vector<Rat> d(n);
  RatMatrix mu(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = q(i, i);
    for (std::size_t j = i + 1; j < n; ++j) mu(i, j) = q(i, j) / d[i];
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = k; j < n; ++j) {
        q(k, j) -= mu(i, k) * q(i, j);
        q(j, k) = q(k, j);
      }
  }
  IntVector x(n, Int(0));
  const Rat target(s);
  std::function<void(std::size_t, const Rat&)> level = [&](std::size_t i, const Rat& budget) {
    Rat c(0);
    for (std::size_t j = i + 1; j < n; ++j) c -= mu(i, j) * Rat(x[j]);
    const Int r = isqrt((budget / d[i]).floor());
    const Int lo = c.floor() - r - 1;
    const Int hi = c.ceil() + r + 1;
    for (Int v = lo; v <= hi; ++v) {
      const Rat t = Rat(v) - c;
      const Rat used = d[i] * t * t;
      if (used > budget) continue;
      x[i] = v;
      if (i == 0) {
        if (budget == used && content(x) != 0) out.push_back(x);
      } else {
        level(i - 1, budget - used);
      }
    }
    x[i] = 0;
  };
  if (n > 0) level(n - 1, target);
}

}  // namespace

Enumeration enumerate_square(const IntegralLattice& l, const Int& s, std::int64_t bound) {
  Enumeration e;
  const std::size_t n = l.rank();
  if (l.definite()) {
    e.certified = true;
    const bool negative = l.negative_definite();
    const Int t = negative ? Int(-s) : s;
    if (t <= 0) return e;
    IntMatrix g = l.gram();
    if (negative)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = -g(i, j);
    const IntegralLattice pos(g, l.name());
    const RatMatrix inv = inverse(to_rational(g));
    for (std::size_t i = 0; i < n; ++i) e.coordinate_bounds.push_back(isqrt((Rat(t) * inv(i, i)).floor()).get_si());
    fincke_pohst(pos, t, e.vectors);
    std::sort(e.vectors.begin(), e.vectors.end());
    return e;
  }
  if (bound <= 0) throw InputError("bound must be positive for an indefinite or degenerate lattice");
  e.bound_used = capped_bound(n, bound);
  if (e.bound_used > 0) e.vectors = box_search_square(l, s, e.bound_used);
  return e;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::yes:
      return "yes";
    case SearchStatus::no_certified:
      return "no_certified";
    case SearchStatus::none_found_within_bound:
      return "none_found_within_bound";
  }
  return "?";
}

std::optional<IntVector> binary_isotropic_vector(const Int& a, const Int& b, const Int& c) {
  if (a == 0) return IntVector{1, 0};
  if (c == 0) return IntVector{0, 1};
  const auto root = perfect_square(b * b - a * c);
  if (!root) return std::nullopt;
  return primitive_part(IntVector{Int(-b + *root), a});
}

IsotropyResult isotropic_exists(const IntegralLattice& l, std::int64_t bound) {
  IsotropyResult r;
  const std::size_t n = l.rank();
  const IntMatrix& g = l.gram();
  if (n == 0) {
    r.status = SearchStatus::no_certified;
    r.method = "rank 0";
    return r;
  }
  if (n == 1) {
    r.method = "rank 1";
    r.status = g(0, 0) == 0 ? SearchStatus::yes : SearchStatus::no_certified;
    if (g(0, 0) == 0) r.witness = IntVector{1};
    return r;
  }
  if (n == 2) {
    r.method = "binary form: b^2 - ac perfect square";
    if (auto w = binary_isotropic_vector(g(0, 0), g(0, 1), g(1, 1))) {
      r.status = SearchStatus::yes;
      r.witness = *w;
    } else {
      r.status = SearchStatus::no_certified;
    }
    return r;
  }
  if (l.degenerate()) {
    r.method = "radical vector";
    r.status = SearchStatus::yes;
    r.witness = primitive_part(integer_kernel(g).row_vector(0));
    return r;
  }
  if (l.definite()) {
    r.method = "definite form";
    r.status = SearchStatus::no_certified;
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (auto w = binary_isotropic_vector(g(i, i), g(i, j), g(j, j))) {
        IntVector v(n, Int(0));
        v[i] = (*w)[0];
        v[j] = (*w)[1];
        r.method = "binary sub-form on basis vectors " + std::to_string(i) + ", " + std::to_string(j);
        r.status = SearchStatus::yes;
        r.witness = v;
        return r;
      }
  if (bound <= 0) throw InputError("bound must be positive");
  r.method = "bounded search";
  r.bound_used = capped_bound(n, bound);
  const auto sg = small_gram(l);
  for_each_by_shell(n, r.bound_used, [&](const std::vector<std::int64_t>& x) {
    if (quad_form(l, sg, x) != 0) return false;
    r.witness = primitive_part(to_int_vector(x));
    return true;
  });
  r.status = r.witness ? SearchStatus::yes : SearchStatus::none_found_within_bound;
  return r;
}

std::optional<IntVector> hyperbolic_partner(const IntegralLattice& l, const IntVector& u) {
  const IntVector gu = l.pairings(u);
  auto x = solve_unit_pairing(gu);
  if (!x) return std::nullopt;
  if (l.square(*x) % 2 != 0) {
    IntMatrix row(1, gu.size());
    row.set_row(0, gu);
    const IntMatrix k = integer_kernel(row);
    bool fixed = false;
    for (std::size_t i = 0; i < k.rows() && !fixed; ++i) {
      const IntVector kv = k.row_vector(i);
      if (l.square(kv) % 2 != 0) {
        for (std::size_t j = 0; j < x->size(); ++j) (*x)[j] += kv[j];
        fixed = true;
      }
    }
    if (!fixed) return std::nullopt;
  }
  const Int half = l.square(*x) / 2;
  IntVector w = *x;
  for (std::size_t j = 0; j < w.size(); ++j) w[j] -= half * u[j];
  if (l.square(w) != 0 || l.pair(u, w) != 1) throw std::logic_error("hyperbolic completion failed");
  return w;
}

HyperbolicResult hyperbolic_plane_exists(const IntegralLattice& l, std::int64_t bound) {
  HyperbolicResult r;
  const std::size_t n = l.rank();
  const IntMatrix& g = l.gram();
  const auto try_u = [&](const IntVector& u) -> bool {
    if (l.square(u) != 0 || content(u) != 1 || content(l.pairings(u)) != 1) return false;
    if (auto w = hyperbolic_partner(l, u)) {
      r.witness = std::make_pair(u, *w);
      return true;
    }
    return false;
  };
  if (n < 2) {
    r.status = SearchStatus::no_certified;
    r.method = "rank below 2";
    return r;
  }
  if (l.definite()) {
    r.status = SearchStatus::no_certified;
    r.method = "definite form";
    return r;
  }
  if (n == 2) {
    r.method = "binary form: even with determinant -1";
    r.status = SearchStatus::no_certified;
    if (l.determinant() == -1 && l.even()) {
      const auto u = binary_isotropic_vector(g(0, 0), g(0, 1), g(1, 1));
      if (u && try_u(*u)) r.status = SearchStatus::yes;
      else throw std::logic_error("even unimodular binary form without a hyperbolic basis");
    }
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g(i, i) % 2 != 0 || g(j, j) % 2 != 0 || g(i, i) * g(j, j) - g(i, j) * g(i, j) != -1) continue;
      const auto w = binary_isotropic_vector(g(i, i), g(i, j), g(j, j));
      if (!w) continue;
      IntVector u(n, Int(0));
      u[i] = (*w)[0];
      u[j] = (*w)[1];
      if (try_u(u)) {
        r.status = SearchStatus::yes;
        r.method = "unimodular even sub-form on basis vectors " + std::to_string(i) + ", " + std::to_string(j);
        return r;
      }
    }
  if (bound <= 0) throw InputError("bound must be positive");
  r.method = "bounded search";
  r.bound_used = capped_bound(n, bound);
  const auto sg = small_gram(l);
  for_each_by_shell(n, r.bound_used, [&](const std::vector<std::int64_t>& x) {
    if (quad_form(l, sg, x) != 0) return false;
    return try_u(to_int_vector(x));
  });
  r.status = r.witness ? SearchStatus::yes : SearchStatus::none_found_within_bound;
  return r;
}

NegTwoCertificate neg_two_obstruction(std::int64_t s, std::int64_t bound) {
  if (s < 1) throw InputError("s must be positive");
  if (bound < 0) throw InputError("bound must be nonnegative");
  NegTwoCertificate c;
  c.report.title = "no (-2)-classes in A1^2 + <-8*" + std::to_string(s) + ">";

  bool residue_hit = false;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if ((x * x + y * y) % 4 == 3) residue_hit = true;
  // -2 = 2(x^2 + y^2) - 8 s k^2 forces 2(x^2 + y^2) = 6 mod 8
  bool reduction = true;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int k = 0; k < 8; ++k) {
        const long long lhs = 2LL * (x * x + y * y) - 8LL * s * k * k;
        if (((lhs + 2) % 8 + 8) % 8 == 0 && (x * x + y * y) % 4 != 3) reduction = false;
      }
  c.symbolic = !residue_hit && reduction;
  c.report.add("neg-two.symbolic", "x^2 + y^2 = 3 mod 4 has no solution", c.symbolic,
               "squares mod 4 lie in {0, 1}");

  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y) {
      const std::int64_t w2 = 2 * (x * x + y * y);
      for (std::int64_t k = -bound; k <= bound; ++k) {
        ++c.enumerated;
        if (w2 - 8 * s * k * k == -2) ++c.found;
      }
    }
  c.report.add("neg-two.enumeration", "no (-2)-vector with |x|,|y|,|k| <= " + std::to_string(bound), c.found == 0,
               std::to_string(c.enumerated) + " vectors checked, " + std::to_string(c.found) + " found");
  return c;
}

}  // namespace kustab
