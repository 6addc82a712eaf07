#include "hext/birkhoff.hpp"

#include <set>

#include "hext/cube.hpp"

namespace hext {

namespace {

int power_of(const FinGroup& g, int x, int m) {
  int r = g.identity();
  for (int k = 0; k < m; ++k) r = g.mul(r, x);
  return r;
}

void require_surjection(const GroupHom& f, const char* who) {
  if (!is_surjective(f))
    throw NotAnExtension(std::string(who) + " needs a surjective hom");
}

}  // namespace

const BirkhoffDatum& BirkhoffDatum::AB() {
  static BirkhoffDatum d("ab", true,
                         [](GroupPtr a) { return derived_subgroup(a); });
  return d;
}

BirkhoffDatum BirkhoffDatum::ab_mod(int m) {
  if (m < 1) throw ValidationError("ab-mod modulus must be >= 1");
  return BirkhoffDatum(
      "ab-mod:" + std::to_string(m), false, [m](GroupPtr a) {
        std::set<int> seed;
        for (int x = 0; x < a->order(); ++x) {
          seed.insert(power_of(*a, x, m));
          for (int y = 0; y < a->order(); ++y) seed.insert(a->commutator(x, y));
        }
        return subgroup_generated(a, std::vector<int>(seed.begin(), seed.end()));
      });
}

Subgroup BirkhoffDatum::radical(GroupPtr a) const {
  Subgroup r = radical_(a);
  if (r.parent != a) throw ConsistencyError("radical returned foreign subgroup");
  if (!is_normal(r)) throw ConsistencyError("radical is not normal");
  // Idempotence: the radical of the reflection is trivial.
  GroupPtr refl = quotient(a, r).group;
  if (radical_(refl).order() != 1)
    throw ConsistencyError("radical is not idempotent");
  return r;
}

ReflectionSquare reflection_square(const BirkhoffDatum& d, const GroupHom& f) {
  Subgroup rad_a = d.radical(f.dom);
  Subgroup rad_b = d.radical(f.cod);
  // Functoriality of the radical along f.
  Subgroup pushed = image_of(f, rad_a);
  if (!subgroup_contains(rad_b, pushed))
    throw ConsistencyError("radical is not functorial along the given hom");
  QuotientResult qa = quotient(f.dom, rad_a);
  QuotientResult qb = quotient(f.cod, rad_b);
  GroupHom refl = induced_between_quotients(qa, qb, f);
  CommSquare sq{qa.projection, f, refl, qb.projection};
  return {qa, qb, refl, sq};
}

bool is_strongly_birkhoff_on(const BirkhoffDatum& d, const GroupHom& f) {
  require_surjection(f, "strongly-Birkhoff test");
  ReflectionSquare rs = reflection_square(d, f);
  auto surj = [](const GroupHom& h) { return is_surjective(h); };
  return is_double_extension(rs.square, surj);
}

namespace {
bool eta_square_is_pullback(const BirkhoffDatum& d, const GroupHom& f) {
  ReflectionSquare rs = reflection_square(d, f);
  return is_bijective(comparison_to_pullback(rs.square));
}
}  // namespace

bool is_trivial_extension(const BirkhoffDatum& d, const GroupHom& f) {
  require_surjection(f, "trivial-extension test");
  bool categorical = eta_square_is_pullback(d, f);
  if (d.is_ab()) {
    // Classical reading: f restricted to derived subgroups is an iso.
    RestrictionResult r = restrict_hom(f, derived_subgroup(f.dom));
    bool classical = is_injective(r.hom) &&
                     subgroup_equal(image(compose(f, r.dom_inclusion)),
                                    derived_subgroup(f.cod));
    if (classical != categorical)
      throw AgreementFailure("trivial-extension tests disagree");
  }
  return categorical;
}

bool is_normal_extension(const BirkhoffDatum& d, const GroupHom& f) {
  require_surjection(f, "normal-extension test");
  KernelPairResult kp = kernel_pair(f);
  return is_trivial_extension(d, kp.pi1);
}

bool is_central_extension(const BirkhoffDatum& d, const GroupHom& f) {
  require_surjection(f, "central-extension test");
  bool categorical = is_normal_extension(d, f);
  if (d.is_ab()) {
    bool classical = subgroup_contains(center(f.dom), kernel(f));
    if (classical != categorical)
      throw AgreementFailure("central-extension tests disagree (" + f.dom->label() + ")");
  }
  return categorical;
}

Subgroup bracket1_categorical(const GroupHom& f, const BirkhoffDatum& d) {
  require_surjection(f, "bracket computation");
  KernelPairResult kp = kernel_pair(f);
  Subgroup rad_r = d.radical(kp.group);
  Subgroup rad_a = d.radical(f.dom);
  if (!subgroup_contains(rad_a, image_of(kp.pi1, rad_r)) ||
      !subgroup_contains(rad_a, image_of(kp.pi2, rad_r)))
    throw ConsistencyError("kernel-pair projections do not respect the radical");
  std::set<int> out;
  int e = f.dom->identity();
  for (int r : rad_r.members)
    if (kp.pi1.map[r] == e) out.insert(kp.pi2.map[r]);
  Subgroup result{f.dom, std::vector<int>(out.begin(), out.end())};
  if (!is_normal(result))
    throw ConsistencyError("categorical bracket is not normal");
  if (d.is_ab()) {
    Subgroup expl = commutator_subgroup(f.dom, kernel(f), full_subgroup(f.dom));
    if (!subgroup_equal(result, expl))
      throw AgreementFailure("bracket1 routes disagree");
  }
  return result;
}

Subgroup bracket1(const GroupHom& f, const BirkhoffDatum& d) {
  if (d.is_ab())
    return commutator_subgroup(f.dom, kernel(f), full_subgroup(f.dom));
  return bracket1_categorical(f, d);
}

Centralization centralize_explicit(const GroupHom& f) {
  require_surjection(f, "centralization");
  Subgroup n = commutator_subgroup(f.dom, kernel(f), full_subgroup(f.dom));
  QuotientResult q = quotient(f.dom, n);
  return {induced_on_quotient(q, f), q.projection, n};
}

Centralization centralize(const BirkhoffDatum& d, const GroupHom& f) {
  require_surjection(f, "centralization");
  Subgroup n = bracket1(f, d);
  QuotientResult q = quotient(f.dom, n);
  return {induced_on_quotient(q, f), q.projection, n};
}

Trivialization trivialize(const BirkhoffDatum& d, const GroupHom& f) {
  require_surjection(f, "trivialization");
  ReflectionSquare rs = reflection_square(d, f);
  // Tf = eta_B^*(If): pull If back along eta_B.
  PullbackResult pb = pullback(rs.unit_cod.projection, rs.reflected);
  Centralization cent = centralize(d, f);
  // A -> B x_{IB} IA via (f, eta_A); descends to I1(A) since the nulled
  // subgroup sits inside K[f] and inside the radical.
  GroupHom from_a = factor_through_pullback(pb, f, rs.unit_dom.projection);
  GroupHom comparison = induced_on_quotient(
      QuotientResult{cent.unit.cod, cent.unit}, from_a);
  if (!is_surjective(comparison))
    throw ConsistencyError("trivialization comparison is not surjective");
  return {pb.to_left, comparison, cent, pb};
}

}  // namespace hext
