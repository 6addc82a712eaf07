#include "hext/hopf.hpp"

namespace hext {

namespace {

// numerator / denominator as a group, with invariants when abelian.
HopfReport finish_report(Subgroup numerator, Subgroup denominator,
                         bool presentation_ok) {
  if (!subgroup_contains(numerator, denominator))
    throw ConsistencyError("Hopf denominator escapes the numerator");
  SubgroupEmbedding num = sub_as_group(numerator);
  std::vector<int> denom_inside;
  denom_inside.reserve(denominator.members.size());
  for (int x : denominator.members) denom_inside.push_back(num.index_of(x));
  QuotientResult q =
      quotient(num.group, Subgroup{num.group, std::move(denom_inside)});
  HopfReport rep;
  rep.numerator = std::move(numerator);
  rep.denominator = std::move(denominator);
  rep.quotient = q.group;
  rep.numerator_embedding = std::move(num);
  rep.projection = std::move(q.projection);
  if (q.group->is_abelian()) rep.abelian_invariants = abelian_divisors(q.group);
  rep.presentation_conditions_met = presentation_ok;
  return rep;
}

}  // namespace

HopfReport hopf_delta(const GroupHom& p, const BirkhoffDatum& d) {
  if (!is_surjective(p)) throw NotAnExtension("Hopf formula needs a surjection");
  Subgroup numerator = intersection(d.radical(p.dom), kernel(p));
  Subgroup denominator = bracket1(p, d);
  return finish_report(std::move(numerator), std::move(denominator),
                       p.dom->order() == 1);
}

HopfReport hopf_delta_n(const Cube& p, const BirkhoffDatum& d) {
  int n = p.dim();
  if (n < 1) throw ValidationError("Hopf formula needs dimension >= 1");
  if (!is_n_fold_extension(p))
    throw NotAnExtension("Hopf formula needs an n-fold extension");
  Subgroup numerator = d.radical(p.top());
  for (int i = 0; i < n; ++i)
    numerator = intersection(numerator, kernel(p.cover(p.full_mask(), i)));
  Subgroup denominator = bracket_n(p, d);
  bool presentation_ok = true;
  for (Mask s = 1; s <= p.full_mask(); ++s)
    if (p.vertex(s)->order() != 1) presentation_ok = false;
  return finish_report(std::move(numerator), std::move(denominator),
                       presentation_ok);
}

GroupPtr hopf_via_trivialization(const GroupHom& p, const BirkhoffDatum& d) {
  Trivialization t = trivialize(d, p);
  SubgroupEmbedding k = sub_as_group(kernel(t.comparison));
  HopfReport direct = hopf_delta(p, d);
  if (!isomorphic(k.group, direct.quotient))
    throw AgreementFailure("trivialization kernel differs from the Hopf quotient");
  return k.group;
}

RhoReductionReport rho_reduction_check(const Cube& p, int i) {
  int n = p.dim();
  if (n < 2) throw ValidationError("rho reduction needs dimension >= 2");
  if (i < 0 || i >= n) throw IndexOutOfRange("rho direction out of range");
  if (n > limits().bracket_dim_cap)
    throw DimCapExceeded("rho reduction capped with the bracket dimension");
  if (!is_n_fold_extension(p))
    throw NotAnExtension("rho reduction needs an n-fold extension");
  const BirkhoffDatum& d = BirkhoffDatum::AB();

  HopfReport lhs = hopf_delta_n(p, d);

  // Delta_{n-1}(rho_i P) over the arrow category, top-vertex level.  The top
  // vertex of rho_i P is the arrow g along the old direction i; the outer
  // kernels are the top components of the remaining covers.
  ArrowCube rc = rho(p, i);
  const Cube& c = rc.carrier;
  Mask full = c.full_mask();
  GroupHom g = rc.vertex_arrow((Mask{1} << rc.dim()) - 1);
  Subgroup numerator = bracket1(g, d);
  for (int k = 1; k < c.dim(); ++k)
    numerator = intersection(numerator, kernel(c.cover(full, k)));
  Subgroup denominator = bracket_rel(c, 1, d);

  RhoReductionReport rep;
  rep.direction = i;
  rep.lhs_order = lhs.quotient->order();
  rep.side_condition_holds = subgroup_equal(
      intersection(d.radical(p.top()), kernel(g)), bracket1(g, d));
  if (subgroup_contains(numerator, denominator)) {
    SubgroupEmbedding num = sub_as_group(numerator);
    std::vector<int> denom_inside;
    for (int x : denominator.members) denom_inside.push_back(num.index_of(x));
    QuotientResult q =
        quotient(num.group, Subgroup{num.group, std::move(denom_inside)});
    rep.rhs_order = q.group->order();
    rep.sides_isomorphic = isomorphic(q.group, lhs.quotient);
  } else {
    rep.rhs_order = -1;  // denominator escaped; sides cannot match
    rep.sides_isomorphic = false;
  }
  return rep;
}

}  // namespace hext
