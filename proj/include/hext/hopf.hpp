#ifndef HEXT_HOPF_HPP
#define HEXT_HOPF_HPP

#include <optional>

#include "hext/higher_central.hpp"

namespace hext {

struct HopfReport {
  Subgroup numerator;    // radical(top) meet all arrow kernels
  Subgroup denominator;  // the bracket; always inside the numerator
  GroupPtr quotient;
  /// Constructive witnesses: the numerator realized as a group and the
  /// projection of that group onto the quotient.
  std::optional<SubgroupEmbedding> numerator_embedding;
  std::optional<GroupHom> projection;
  std::optional<std::vector<long long>> abelian_invariants;  // iff abelian
  bool presentation_conditions_met = false;  // all non-bottom vertices trivial
};

/// The 1-fold Hopf quotient of a surjection p for datum D:
/// (radical(P) meet K[p]) / [p]_1.
HopfReport hopf_delta(const GroupHom& p, const BirkhoffDatum& d);

/// The n-fold Hopf quotient of an n-fold extension.
HopfReport hopf_delta_n(const Cube& p, const BirkhoffDatum& d);

/// Kernel of the comparison I1(p) -> T(p), realized as a group; must be
/// isomorphic to the hopf_delta quotient (checked, AgreementFailure if not).
GroupPtr hopf_via_trivialization(const GroupHom& p, const BirkhoffDatum& d);

/// Diagnostic for the reduction of Delta_n through rho_i.  Both sides are
/// computed and compared; nothing is asserted (the reduction needs
/// projective inner vertices, which finite groups lack).
struct RhoReductionReport {
  int direction = 0;
  long long lhs_order = 0;  // |Delta_n(P)|
  long long rhs_order = 0;  // |Delta_{n-1}(rho_i P)| over the arrow category
  bool sides_isomorphic = false;
  bool side_condition_holds = false;  // radical(P_top) meet K[a_i] == [a_i]_1
};
RhoReductionReport rho_reduction_check(const Cube& p, int i);

}  // namespace hext

#endif
