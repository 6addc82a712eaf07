#ifndef HEXT_HIGHER_CENTRAL_HPP
#define HEXT_HIGHER_CENTRAL_HPP

#include <optional>

#include "hext/birkhoff.hpp"
#include "hext/cube.hpp"

namespace hext {

/// [A]_n for the abelianization datum: the product over all S of
/// [cap_{i in S} K[a_i], cap_{i not in S} K[a_i]], a normal subgroup of the
/// top vertex.  Assumes (does not re-check) that A is an n-fold extension.
Subgroup bracket_n_explicit(const Cube& a);

/// One categorical step along direction i: kernel pair of delta_i(A),
/// level-(n-1) radicals, kernel of [pi1] pushed along pi2.  Inner radicals
/// use the explicit formula for AB and recurse otherwise.
Subgroup bracket_n_categorical(const Cube& a, const BirkhoffDatum& d, int i);

/// Route dispatch: explicit for AB at n >= 2, categorical otherwise.
Subgroup bracket_n(const Cube& a, const BirkhoffDatum& d);

struct BracketReport {
  std::optional<Subgroup> explicit_route;     // present for AB
  std::vector<Subgroup> categorical_routes;   // one per direction
  bool agree = true;
};
BracketReport bracket_report(const Cube& a, const BirkhoffDatum& d);

/// n-fold centrality: the bracket vanishes.  For n = 2 with AB the verdict
/// is independently recomputed through the categorical normality route
/// (kernel pair of delta_1 tested trivial against the level-1 reflector)
/// and the two must agree.
bool is_n_fold_central(const Cube& a, const BirkhoffDatum& d = BirkhoffDatum::AB());

/// Replaces the top vertex by its quotient by the bracket; all other
/// vertices untouched.  The result is again an n-fold extension and is
/// central (both re-checked).
Cube centralize_n(const Cube& a, const BirkhoffDatum& d = BirkhoffDatum::AB());

// --- machinery shared with the Hopf module ---------------------------------

/// Radical of X relative to base dimension b (objects live in Arr^b):
/// the subgroup of the top vertex whose iota-image is the kernel of the
/// relevant reflection unit.
Subgroup cube_radical_rel(const Cube& x, int base_dim, const BirkhoffDatum& d);

/// [f]_1 for a morphism of cubes over base dimension b.
Subgroup bracket1_rel(const CubeMorphism& f, int base_dim, const BirkhoffDatum& d);

/// [X]_{k} over base dimension b, k = x.dim() - b >= 1.
Subgroup bracket_rel(const Cube& x, int base_dim, const BirkhoffDatum& d);

/// Centralization of a 1-cube (an extension viewed as an object of ArrA).
struct ArrowCentralization {
  Cube reflected;
  CubeMorphism unit;
};
ArrowCentralization centralize_level1(const Cube& one, const BirkhoffDatum& d);

/// Trivial-extension test for a morphism of 1-cubes against the level-1
/// reflector: the unit naturality square must be a pointwise pullback.
bool is_trivial_level1(const CubeMorphism& q, const BirkhoffDatum& d);

}  // namespace hext

#endif
