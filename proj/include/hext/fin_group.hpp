#ifndef HEXT_FIN_GROUP_HPP
#define HEXT_FIN_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hext/config.hpp"
#include "hext/errors.hpp"

namespace hext {

class FinGroup;
using GroupPtr = std::shared_ptr<const FinGroup>;

/// A finite group as a closed multiplication table over element ids
/// 0..order-1.  Immutable after construction; construction validates the
/// Latin-square property, identity/inverse laws and associativity (fully up
/// to order 64, on 1000 seeded random triples above that).
class FinGroup {
 public:
  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  const std::string& label() const { return label_; }

  bool is_abelian() const;
  int element_order(int g) const;
  int exponent() const;
  int conjugate(int g, int by) const;  // by^-1 * g * by
  int commutator(int a, int b) const;  // a^-1 b^-1 a b

  /// Validating factory; `table[g][h]` is the id of g*h.
  static GroupPtr from_table(const std::vector<std::vector<int>>& table,
                             std::string label = "");
  static GroupPtr trivial();

 private:
  FinGroup() = default;
  friend GroupPtr make_group_unchecked(std::vector<int> table, int order,
                                       int identity, std::vector<int> inverse,
                                       std::string label);

  int order_ = 1;
  int identity_ = 0;
  std::vector<int> table_;    // row-major order x order
  std::vector<int> inverse_;
  std::string label_;
};

/// A subset of a parent group's ids, closed under multiplication and inverse.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted ascending

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
  bool same_parent(const Subgroup& other) const { return parent == other.parent; }
};

bool subgroup_equal(const Subgroup& a, const Subgroup& b);
bool subgroup_contains(const Subgroup& big, const Subgroup& small);

/// A total map of element ids respecting multiplication.  Validated on
/// construction (O(n^2) table walk).  Canonical constructions whose maps are
/// multiplicative by construction (composites, projections, induced maps)
/// use the unchecked factory instead.
struct GroupHom {
  GroupPtr dom;
  GroupPtr cod;
  std::vector<int> map;

  GroupHom(GroupPtr dom_, GroupPtr cod_, std::vector<int> map_);
  static GroupHom unchecked(GroupPtr dom_, GroupPtr cod_, std::vector<int> map_);
  int operator()(int g) const { return map[g]; }

 private:
  struct unchecked_t {};
  GroupHom(unchecked_t, GroupPtr dom_, GroupPtr cod_, std::vector<int> map_)
      : dom(std::move(dom_)), cod(std::move(cod_)), map(std::move(map_)) {}
};

bool hom_equal(const GroupHom& f, const GroupHom& g);

// --- constructions -------------------------------------------------------

GroupPtr from_permutation_generators(int degree,
                                     const std::vector<std::vector<int>>& gens,
                                     std::string label = "");

GroupPtr cyclic_group(int m);

struct ProductResult {
  GroupPtr group;
  GroupHom proj_left;
  GroupHom proj_right;
};
ProductResult direct_product(GroupPtr g, GroupPtr h);

Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
Subgroup subgroup_generated(GroupPtr g, const std::vector<int>& seed);
Subgroup commutator_subgroup(GroupPtr g, const Subgroup& h, const Subgroup& k);
Subgroup derived_subgroup(GroupPtr g);
Subgroup center(GroupPtr g);
Subgroup normal_closure(GroupPtr g, const Subgroup& s);
Subgroup setwise_product(const Subgroup& n, const Subgroup& m);
Subgroup intersection(const Subgroup& h, const Subgroup& k);
bool is_normal(const Subgroup& s);
bool normalizes(const Subgroup& n, const Subgroup& m);  // n normalizes m

struct QuotientResult {
  GroupPtr group;
  GroupHom projection;
};
/// Cosets keyed by least member id, representatives sorted; identity coset
/// therefore gets id 0.
QuotientResult quotient(GroupPtr g, const Subgroup& n);

Subgroup kernel(const GroupHom& f);
Subgroup image(const GroupHom& f);
Subgroup image_of(const GroupHom& f, const Subgroup& s);
bool is_surjective(const GroupHom& f);
bool is_injective(const GroupHom& f);
bool is_bijective(const GroupHom& f);
GroupHom compose(const GroupHom& g, const GroupHom& f);  // g after f
GroupHom identity_hom(GroupPtr g);
GroupHom trivial_hom(GroupPtr dom, GroupPtr cod);
GroupHom to_terminal(GroupPtr g);  // g -> 1

/// A subgroup realized as a FinGroup in its own right (ids = sorted member
/// positions) together with the inclusion witness.
struct SubgroupEmbedding {
  Subgroup sub;
  GroupPtr group;
  GroupHom inclusion;
  int index_of(int parent_id) const;  // position in sub.members, -1 if absent
};
SubgroupEmbedding sub_as_group(const Subgroup& s);

/// f restricted to H <= dom(f); codomain is the image realized as a group.
struct RestrictionResult {
  GroupHom hom;            // H_grp -> Im_grp
  GroupHom dom_inclusion;  // H_grp -> dom(f)
  GroupHom cod_inclusion;  // Im_grp -> cod(f)
};
RestrictionResult restrict_hom(const GroupHom& f, const Subgroup& h);

/// Corestrict h: X -> parent to the embedded subgroup, which must contain
/// image(h).
GroupHom corestrict(const GroupHom& h, const SubgroupEmbedding& target);

struct PullbackResult {
  GroupPtr group;      // {(a,c) : f(a) = g(c)}, ids in lex order of (a,c)
  GroupHom to_left;    // P -> dom(f)
  GroupHom to_right;   // P -> dom(g)
};
PullbackResult pullback(const GroupHom& f, const GroupHom& g);

/// Universal factorization: given u: X -> dom(f), v: X -> dom(g) with
/// f u = g v, the unique hom X -> P.
GroupHom factor_through_pullback(const PullbackResult& pb, const GroupHom& u,
                                 const GroupHom& v);

struct KernelPairResult {
  GroupPtr group;
  GroupHom pi1;
  GroupHom pi2;
};
KernelPairResult kernel_pair(const GroupHom& f);

/// Commutative square: right . top = bottom . left.
struct CommSquare {
  GroupHom top;     // A1 -> B1
  GroupHom left;    // A1 -> A0
  GroupHom right;   // B1 -> B0
  GroupHom bottom;  // A0 -> B0
};
bool square_commutes(const CommSquare& sq);
/// The unique map A1 -> A0 x_{B0} B1 through the pullback of (bottom, right).
GroupHom comparison_to_pullback(const CommSquare& sq);

/// Hom A/N -> B induced by f when N <= ker(f).
GroupHom induced_on_quotient(const QuotientResult& q, const GroupHom& f);
/// Hom A/N -> B/M induced by f when f(N) <= M.
GroupHom induced_between_quotients(const QuotientResult& qa,
                                   const QuotientResult& qb,
                                   const GroupHom& f);

struct ExactnessWitness {
  GroupHom kernel_inclusion;
  GroupHom projection;
};
ExactnessWitness exactness_witness(const GroupHom& surjection);

// --- isomorphism search ---------------------------------------------------

/// Backtracking over generator images with order-multiset pruning; orders
/// above limits().iso_cap raise CapExceeded.
std::optional<GroupHom> find_isomorphism(GroupPtr g, GroupPtr h);
bool isomorphic(GroupPtr g, GroupPtr h);

/// Greedy small generating set (deterministic; ids ascending).
std::vector<int> minimal_generators(GroupPtr g);
std::vector<int> minimal_generators_of(const Subgroup& s);

/// Elementary divisor chain d1 | d2 | ... (each > 1) of an abelian group.
std::vector<long long> abelian_divisors(GroupPtr g);

}  // namespace hext

#endif
