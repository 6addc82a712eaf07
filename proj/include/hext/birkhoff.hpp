#ifndef HEXT_BIRKHOFF_HPP
#define HEXT_BIRKHOFF_HPP

#include <functional>
#include <string>

#include "hext/fin_group.hpp"

namespace hext {

/// Reflective-subcategory datum given by its radical functor
/// radical(A) = ker(A -> IA).  Shipped instances: AB (derived subgroup) and
/// AB_MOD(m) (commutators and m-th powers).  Every radical call re-checks
/// normality and idempotence; reflection of arrows checks functoriality.
class BirkhoffDatum {
 public:
  static const BirkhoffDatum& AB();
  static BirkhoffDatum ab_mod(int m);

  const std::string& name() const { return name_; }
  bool is_ab() const { return ab_; }
  Subgroup radical(GroupPtr a) const;

 private:
  BirkhoffDatum(std::string name, bool ab,
                std::function<Subgroup(GroupPtr)> radical)
      : name_(std::move(name)), ab_(ab), radical_(std::move(radical)) {}

  std::string name_;
  bool ab_;
  std::function<Subgroup(GroupPtr)> radical_;
};

/// The eta-naturality square of f: A -> B: unit components as quotients by
/// the radicals and the reflected arrow between them.
struct ReflectionSquare {
  QuotientResult unit_dom;  // A -> IA
  QuotientResult unit_cod;  // B -> IB
  GroupHom reflected;       // IA -> IB
  CommSquare square;        // top eta_A, left f, right If, bottom eta_B
};
ReflectionSquare reflection_square(const BirkhoffDatum& d, const GroupHom& f);

bool is_strongly_birkhoff_on(const BirkhoffDatum& d, const GroupHom& f);

/// Trivial: the eta square is a pullback.  For AB, cross-checked against the
/// derived-subgroup restriction being an isomorphism; disagreement throws.
bool is_trivial_extension(const BirkhoffDatum& d, const GroupHom& f);

/// Normal: the kernel-pair projection R[f] -> A is trivial.
bool is_normal_extension(const BirkhoffDatum& d, const GroupHom& f);

/// Central, routed through the normal test; for AB additionally compared to
/// the classical criterion K[f] <= Z(A).
bool is_central_extension(const BirkhoffDatum& d, const GroupHom& f);

/// [f]_1: kernel of [pi1] pushed into A along pi2, radicals applied to the
/// kernel pair.  For AB the result is compared against [K[f], A].
Subgroup bracket1_categorical(const GroupHom& f, const BirkhoffDatum& d);

/// Dispatch: the commutator formula for AB, the categorical route otherwise.
Subgroup bracket1(const GroupHom& f, const BirkhoffDatum& d);

struct Centralization {
  GroupHom reduced;  // A/N -> B
  GroupHom unit;     // A -> A/N
  Subgroup nulled;   // N
};
Centralization centralize_explicit(const GroupHom& f);  // AB: N = [K[f], A]
Centralization centralize(const BirkhoffDatum& d, const GroupHom& f);

struct Trivialization {
  GroupHom trivialized;   // Tf: B x_{IB} IA -> B
  GroupHom comparison;    // I1(A) -> dom(Tf); surjective (strongly Birkhoff)
  Centralization central;
  PullbackResult pb;
};
Trivialization trivialize(const BirkhoffDatum& d, const GroupHom& f);

}  // namespace hext

#endif
