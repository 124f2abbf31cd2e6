#pragma once

#include <string>
#include <vector>

#include "kustab/matrix.hpp"

namespace kustab {

/// A collection of classes in a numerical Grothendieck group, together with
/// the (generally nonsymmetric) Euler form on it. `classes` records each
/// collection member in the coordinates of the original basis.
struct EulerContext {
  RatMatrix euler;
  std::vector<std::string> labels;
  RatMatrix classes;

  EulerContext() = default;
  EulerContext(RatMatrix euler, std::vector<std::string> labels);
  EulerContext(RatMatrix euler, std::vector<std::string> labels, RatMatrix classes);

  std::size_t size() const { return euler.rows(); }
  bool numerically_exceptional() const;  ///< every chi(E_i, E_i) = 1
  bool semiorthogonal() const;           ///< chi(E_j, E_i) = 0 for j > i

  friend bool operator==(const EulerContext&, const EulerContext&) = default;
};

using KClass = RatVector;

Rat chi(const EulerContext& ctx, const KClass& e, const KClass& f);
KClass basis_class(const EulerContext& ctx, std::size_t i);

/// F - chi(E_i, F) E_i. Throws InputError when chi(E_i, E_i) != 1.
KClass left_mutate(const EulerContext& ctx, std::size_t e_idx, const KClass& f);
/// F - chi(F, E_i) E_i.
KClass right_mutate(const EulerContext& ctx, std::size_t e_idx, const KClass& f);

struct MutationStep {
  bool left = true;
  std::size_t position = 0;
  int shift = 0;  ///< the new class is multiplied by (-1)^shift
};

/// "L0,R2[1]": comma or space separated steps; [k] shifts the mutated object.
std::vector<MutationStep> parse_script(const std::string& script);
std::string to_string(const MutationStep& s);

/// Applies the steps in order. L at i replaces (E_i, E_{i+1}) with
/// (L_{E_i} E_{i+1}, E_i); R at i with (E_{i+1}, R_{E_{i+1}} E_i).
EulerContext mutate_collection(const EulerContext& ctx, const std::vector<MutationStep>& steps);

/// Clifford basis (Cl0, Cl0(-h1), Cl0(-h2), Cl0(-h)) on the quadric surface.
EulerContext builtin_sigma_context();
/// <O(-h), O, S^dual, O(h)> on the quadric threefold.
EulerContext builtin_q3_context();
EulerContext builtin_context(const std::string& name);

}  // namespace kustab
