#include "kustab/mutation.hpp"

#include <cctype>

#include "kustab/error.hpp"
#include "kustab/euler_sigma.hpp"

namespace kustab {

EulerContext::EulerContext(RatMatrix e, std::vector<std::string> l)
    : EulerContext(e, std::move(l), RatMatrix::identity(e.rows())) {}

EulerContext::EulerContext(RatMatrix e, std::vector<std::string> l, RatMatrix c)
    : euler(std::move(e)), labels(std::move(l)), classes(std::move(c)) {
  if (!euler.square()) throw InputError("Euler matrix must be square");
  if (labels.size() != euler.rows())
    throw InputError("expected " + std::to_string(euler.rows()) + " basis labels, got " + std::to_string(labels.size()));
  if (classes.rows() != euler.rows()) throw InputError("class matrix does not match the Euler matrix");
}

bool EulerContext::numerically_exceptional() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (euler(i, i) != Rat(1)) return false;
  return true;
}

bool EulerContext::semiorthogonal() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!euler(i, j).is_zero()) return false;
  return true;
}

Rat chi(const EulerContext& ctx, const KClass& e, const KClass& f) {
  const std::size_t n = ctx.size();
  if (e.size() != n || f.size() != n)
    throw InputError("class of length " + std::to_string(e.size() != n ? e.size() : f.size()) +
                     " in a context of rank " + std::to_string(n));
  Rat total(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (e[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!f[j].is_zero()) total += e[i] * ctx.euler(i, j) * f[j];
  }
  return total;
}

KClass basis_class(const EulerContext& ctx, std::size_t i) {
  if (i >= ctx.size()) throw InputError("basis index " + std::to_string(i) + " out of range");
  KClass e(ctx.size(), Rat(0));
  e[i] = 1;
  return e;
}

namespace {

KClass mutate(const EulerContext& ctx, std::size_t e_idx, const KClass& f, bool left) {
  const KClass e = basis_class(ctx, e_idx);
  if (ctx.euler(e_idx, e_idx) != Rat(1))
    throw InputError("pivot " + ctx.labels[e_idx] + " is not exceptional: chi = " + ctx.euler(e_idx, e_idx).str());
  const Rat n = left ? chi(ctx, e, f) : chi(ctx, f, e);
  KClass out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= n * e[i];
  return out;
}

}  // namespace

KClass left_mutate(const EulerContext& ctx, std::size_t e_idx, const KClass& f) { return mutate(ctx, e_idx, f, true); }
KClass right_mutate(const EulerContext& ctx, std::size_t e_idx, const KClass& f) { return mutate(ctx, e_idx, f, false); }

std::vector<MutationStep> parse_script(const std::string& script) {
  std::vector<MutationStep> out;
  std::size_t i = 0;
  const auto fail = [&](const std::string& why) {
    throw InputError("mutation script '" + script + "' at offset " + std::to_string(i) + ": " + why);
  };
  while (i < script.size()) {
    const char c = script[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    MutationStep s;
    if (c == 'L' || c == 'l') s.left = true;
    else if (c == 'R' || c == 'r') s.left = false;
    else fail("expected L or R");
    ++i;
    const std::size_t start = i;
    while (i < script.size() && std::isdigit(static_cast<unsigned char>(script[i]))) ++i;
    if (i == start) fail("expected a position");
    s.position = std::stoul(script.substr(start, i - start));
    if (i < script.size() && script[i] == '[') {
      const std::size_t close = script.find(']', i);
      if (close == std::string::npos) fail("unterminated shift");
      const Int k = parse_int(script.substr(i + 1, close - i - 1));
      if (abs(k) > 1000) fail("shift out of range");
      s.shift = static_cast<int>(k.get_si());
      i = close + 1;
    }
    out.push_back(s);
  }
  return out;
}

std::string to_string(const MutationStep& s) {
  std::string out = (s.left ? "L" : "R") + std::to_string(s.position);
  if (s.shift != 0) out += "[" + std::to_string(s.shift) + "]";
  return out;
}

EulerContext mutate_collection(const EulerContext& ctx, const std::vector<MutationStep>& steps) {
  if (!ctx.numerically_exceptional()) throw InputError("collection is not numerically exceptional");
  EulerContext cur = ctx;
  for (const auto& s : steps) {
    const std::size_t n = cur.size();
    const std::size_t i = s.position;
    if (i + 1 >= n)
      throw InputError("mutation position " + std::to_string(i) + " needs a neighbour; collection has " +
                       std::to_string(n) + " members");
    const Rat sign = (s.shift % 2 == 0) ? Rat(1) : Rat(-1);
    const std::string suffix = s.shift != 0 ? "[" + std::to_string(s.shift) + "]" : "";
    RatMatrix c = RatMatrix::identity(n);
    std::vector<std::string> labels = cur.labels;
    const Rat pairing = cur.euler(i, i + 1);
    c(i, i) = 0;
    c(i + 1, i + 1) = 0;
    if (s.left) {
      c(i, i + 1) = sign;
      c(i, i) = -sign * pairing;
      c(i + 1, i) = 1;
      labels[i] = "L_" + cur.labels[i] + "(" + cur.labels[i + 1] + ")" + suffix;
      labels[i + 1] = cur.labels[i];
    } else {
      c(i, i + 1) = 1;
      c(i + 1, i) = sign;
      c(i + 1, i + 1) = -sign * pairing;
      labels[i] = cur.labels[i + 1];
      labels[i + 1] = "R_" + cur.labels[i + 1] + "(" + cur.labels[i] + ")" + suffix;
    }
    cur = EulerContext(c * cur.euler * c.transpose(), labels, c * cur.classes);
  }
  return cur;
}

EulerContext builtin_sigma_context() {
  const EulerMatrix g = basis_gram();
  return EulerContext(to_rational(g.entries), g.basis_labels);
}

EulerContext builtin_q3_context() {
  return EulerContext(to_rational(IntMatrix{{1, 5, 16, 14}, {0, 1, 4, 5}, {0, 0, 1, 4}, {0, 0, 0, 1}}),
                      {"O(-h)", "O", "S^v", "O(h)"});
}

EulerContext builtin_context(const std::string& name) {
  if (name == "sigma") return builtin_sigma_context();
  if (name == "q3") return builtin_q3_context();
  throw InputError("unknown built-in context '" + name + "' (expected sigma or q3)");
}

}  // namespace kustab
