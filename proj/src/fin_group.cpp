#include "hext/fin_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

namespace hext {

Limits& limits() {
  static Limits l;
  return l;
}

GroupPtr make_group_unchecked(std::vector<int> table, int order, int identity,
                              std::vector<int> inverse, std::string label) {
  auto g = std::shared_ptr<FinGroup>(new FinGroup());
  g->order_ = order;
  g->identity_ = identity;
  g->table_ = std::move(table);
  g->inverse_ = std::move(inverse);
  g->label_ = std::move(label);
  return g;
}

namespace {

// Full validation funnel.  Every factory ends up here.
GroupPtr build_group(std::vector<int> flat, int order, std::string label) {
  if (order <= 0) throw ValidationError("group order must be positive");
  if (order > limits().order_cap)
    throw ClosureCapExceeded("group of order " + std::to_string(order) +
                             " exceeds cap " + std::to_string(limits().order_cap));
  if (static_cast<long long>(flat.size()) != 1LL * order * order)
    throw ValidationError("multiplication table has wrong shape");
  for (int v : flat)
    if (v < 0 || v >= order) throw ValidationError("table entry out of range");

  auto at = [&](int a, int b) { return flat[static_cast<size_t>(a) * order + b]; };

  // Latin square: rows and columns are permutations.
  std::vector<char> seen(order);
  for (int a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order; ++b) {
      if (seen[at(a, b)]) throw ValidationError("table row is not a permutation");
      seen[at(a, b)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order; ++b) {
      if (seen[at(b, a)]) throw ValidationError("table column is not a permutation");
      seen[at(b, a)] = 1;
    }
  }

  int identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int g = 0; g < order && ok; ++g)
      ok = at(e, g) == g && at(g, e) == g;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ValidationError("table has no identity element");

  std::vector<int> inverse(order, -1);
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      if (at(g, h) == identity) {
        if (at(h, g) != identity)
          throw ValidationError("one-sided inverse found");
        inverse[g] = h;
        break;
      }
    }
    if (inverse[g] < 0) throw ValidationError("element without inverse");
  }

  if (order <= 64) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw ValidationError("associativity fails");
  } else {
    Rng rng(0x5eedULL + static_cast<std::uint64_t>(order));
    for (int t = 0; t < 1000; ++t) {
      int a = static_cast<int>(rng.below(order));
      int b = static_cast<int>(rng.below(order));
      int c = static_cast<int>(rng.below(order));
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw ValidationError("associativity fails (sampled)");
    }
  }

  return make_group_unchecked(std::move(flat), order, identity,
                              std::move(inverse), std::move(label));
}

}  // namespace

bool FinGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FinGroup::element_order(int g) const {
  int n = 1, x = g;
  while (x != identity_) {
    x = mul(x, g);
    ++n;
  }
  return n;
}

int FinGroup::exponent() const {
  long long e = 1;
  for (int g = 0; g < order_; ++g)
    e = std::lcm(e, static_cast<long long>(element_order(g)));
  return static_cast<int>(e);
}

int FinGroup::conjugate(int g, int by) const {
  return mul(mul(inv(by), g), by);
}

int FinGroup::commutator(int a, int b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

GroupPtr FinGroup::from_table(const std::vector<std::vector<int>>& table,
                              std::string label) {
  int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("multiplication table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return build_group(std::move(flat), n, std::move(label));
}

GroupPtr FinGroup::trivial() {
  static GroupPtr t = build_group({0}, 1, "1");
  return t;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) {
  return a.parent == b.parent && a.members == b.members;
}

bool subgroup_contains(const Subgroup& big, const Subgroup& small) {
  if (big.parent != small.parent) throw ParentMismatch("subgroups of different parents");
  return std::includes(big.members.begin(), big.members.end(),
                       small.members.begin(), small.members.end());
}

GroupHom::GroupHom(GroupPtr dom_, GroupPtr cod_, std::vector<int> map_)
    : dom(std::move(dom_)), cod(std::move(cod_)), map(std::move(map_)) {
  if (!dom || !cod) throw ValidationError("hom endpoints missing");
  if (static_cast<int>(map.size()) != dom->order())
    throw ValidationError("hom map has wrong length");
  for (int v : map)
    if (v < 0 || v >= cod->order()) throw ValidationError("hom image out of range");
  if (map[dom->identity()] != cod->identity())
    throw ValidationError("hom does not preserve identity");
  for (int a = 0; a < dom->order(); ++a)
    for (int b = 0; b < dom->order(); ++b)
      if (map[dom->mul(a, b)] != cod->mul(map[a], map[b]))
        throw ValidationError("map is not multiplicative");
}

GroupHom GroupHom::unchecked(GroupPtr dom_, GroupPtr cod_,
                             std::vector<int> map_) {
  return GroupHom(unchecked_t{}, std::move(dom_), std::move(cod_), std::move(map_));
}

bool hom_equal(const GroupHom& f, const GroupHom& g) {
  return f.dom == g.dom && f.cod == g.cod && f.map == g.map;
}

// --- permutation closure ---------------------------------------------------

namespace {
using Perm = std::vector<int>;

Perm perm_compose(const Perm& p, const Perm& q) {  // p after q
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}
}  // namespace

GroupPtr from_permutation_generators(int degree,
                                     const std::vector<std::vector<int>>& gens,
                                     std::string label) {
  if (degree <= 0) throw ValidationError("degree must be positive");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw ValidationError("generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || hit[v])
        throw ValidationError("generator is not a bijection");
      hit[v] = 1;
    }
  }

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  // Breadth-first closure from the identity, generators applied in order.
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm nxt = perm_compose(elems[i], g);
      if (index.emplace(nxt, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(nxt));
        if (static_cast<int>(elems.size()) > limits().order_cap)
          throw ClosureCapExceeded("permutation closure exceeds order cap");
      }
    }
  }

  int n = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<size_t>(a) * n + b] = index.at(perm_compose(elems[a], elems[b]));
  return build_group(std::move(flat), n, std::move(label));
}

GroupPtr cyclic_group(int m) {
  if (m < 1) throw ValidationError("cyclic order must be >= 1");
  if (m == 1) return FinGroup::trivial();
  std::vector<int> cyc(m);
  for (int i = 0; i < m; ++i) cyc[i] = (i + 1) % m;
  return from_permutation_generators(m, {cyc}, "Z" + std::to_string(m));
}

ProductResult direct_product(GroupPtr g, GroupPtr h) {
  long long n = 1LL * g->order() * h->order();
  if (n > limits().order_cap)
    throw ClosureCapExceeded("direct product exceeds order cap");
  int no = static_cast<int>(n), ho = h->order();
  std::vector<int> flat(static_cast<size_t>(no) * no);
  for (int a = 0; a < no; ++a) {
    int a1 = a / ho, a2 = a % ho;
    for (int b = 0; b < no; ++b) {
      int b1 = b / ho, b2 = b % ho;
      flat[static_cast<size_t>(a) * no + b] = g->mul(a1, b1) * ho + h->mul(a2, b2);
    }
  }
  std::string label = g->label() + "x" + h->label();
  GroupPtr p = build_group(std::move(flat), no, label);
  std::vector<int> m1(no), m2(no);
  for (int a = 0; a < no; ++a) {
    m1[a] = a / ho;
    m2[a] = a % ho;
  }
  return {p, GroupHom::unchecked(p, g, std::move(m1)),
          GroupHom::unchecked(p, h, std::move(m2))};
}

Subgroup trivial_subgroup(GroupPtr g) { return {g, {g->identity()}}; }

Subgroup full_subgroup(GroupPtr g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return {std::move(g), std::move(all)};
}

Subgroup subgroup_generated(GroupPtr g, const std::vector<int>& seed) {
  for (int s : seed)
    if (s < 0 || s >= g->order()) throw ValidationError("seed id out of range");
  std::set<int> mem{g->identity()};
  std::queue<int> work;
  auto add = [&](int x) {
    if (mem.insert(x).second) work.push(x);
  };
  for (int s : seed) add(s);
  work.push(g->identity());
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    add(g->inv(x));
    for (int y : std::vector<int>(mem.begin(), mem.end())) {
      add(g->mul(x, y));
      add(g->mul(y, x));
    }
  }
  return {std::move(g), std::vector<int>(mem.begin(), mem.end())};
}

Subgroup commutator_subgroup(GroupPtr g, const Subgroup& h, const Subgroup& k) {
  if (h.parent != g || k.parent != g)
    throw ParentMismatch("commutator arguments live in different groups");
  std::set<int> gens;
  for (int a : h.members)
    for (int b : k.members) gens.insert(g->commutator(a, b));
  return subgroup_generated(g, std::vector<int>(gens.begin(), gens.end()));
}

Subgroup derived_subgroup(GroupPtr g) {
  Subgroup full = full_subgroup(g);
  return commutator_subgroup(g, full, full);
}

Subgroup center(GroupPtr g) {
  std::vector<int> z;
  for (int x = 0; x < g->order(); ++x) {
    bool central = true;
    for (int y = 0; y < g->order() && central; ++y)
      central = g->mul(x, y) == g->mul(y, x);
    if (central) z.push_back(x);
  }
  return {std::move(g), std::move(z)};
}

Subgroup normal_closure(GroupPtr g, const Subgroup& s) {
  if (s.parent != g) throw ParentMismatch("subgroup of a different group");
  std::set<int> gens(s.members.begin(), s.members.end());
  for (;;) {
    Subgroup h = subgroup_generated(g, std::vector<int>(gens.begin(), gens.end()));
    size_t before = gens.size();
    gens.insert(h.members.begin(), h.members.end());
    for (int x : h.members)
      for (int c = 0; c < g->order(); ++c) gens.insert(g->conjugate(x, c));
    if (gens.size() == before) {
      return h;
    }
  }
}

bool normalizes(const Subgroup& n, const Subgroup& m) {
  if (n.parent != m.parent) throw ParentMismatch("subgroups of different parents");
  const auto& g = *n.parent;
  for (int a : n.members)
    for (int b : m.members)
      if (!m.contains(g.conjugate(b, a))) return false;
  return true;
}

Subgroup setwise_product(const Subgroup& n, const Subgroup& m) {
  if (n.parent != m.parent) throw ParentMismatch("subgroups of different parents");
  if (!normalizes(n, m) && !normalizes(m, n))
    throw NotPermutable("neither factor normalizes the other");
  const auto& g = *n.parent;
  std::set<int> prod;
  for (int a : n.members)
    for (int b : m.members) prod.insert(g.mul(a, b));
  Subgroup res{n.parent, std::vector<int>(prod.begin(), prod.end())};
  // Under the precondition the product set is already a subgroup.
  for (int a : res.members)
    if (!res.contains(g.inv(a))) throw NotPermutable("product set is not closed");
  return res;
}

Subgroup intersection(const Subgroup& h, const Subgroup& k) {
  if (h.parent != k.parent) throw ParentMismatch("subgroups of different parents");
  std::vector<int> out;
  std::set_intersection(h.members.begin(), h.members.end(), k.members.begin(),
                        k.members.end(), std::back_inserter(out));
  return {h.parent, std::move(out)};
}

bool is_normal(const Subgroup& s) {
  const auto& g = *s.parent;
  for (int x : s.members)
    for (int c = 0; c < g.order(); ++c)
      if (!s.contains(g.conjugate(x, c))) return false;
  return true;
}

QuotientResult quotient(GroupPtr g, const Subgroup& n) {
  if (n.parent != g) throw ParentMismatch("subgroup of a different group");
  if (!is_normal(n)) throw NotNormal("quotient by a non-normal subgroup");
  int order = g->order();
  std::vector<int> coset(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);  // x is the least member of its coset by scan order
    for (int m : n.members) coset[g->mul(x, m)] = id;
  }
  int q = static_cast<int>(reps.size());
  std::vector<int> flat(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      flat[static_cast<size_t>(a) * q + b] = coset[g->mul(reps[a], reps[b])];
  GroupPtr qg = build_group(std::move(flat), q, g->label() + "/N");
  return {qg, GroupHom::unchecked(g, qg, std::move(coset))};
}

Subgroup kernel(const GroupHom& f) {
  std::vector<int> k;
  for (int x = 0; x < f.dom->order(); ++x)
    if (f.map[x] == f.cod->identity()) k.push_back(x);
  return {f.dom, std::move(k)};
}

Subgroup image(const GroupHom& f) {
  std::set<int> im(f.map.begin(), f.map.end());
  return {f.cod, std::vector<int>(im.begin(), im.end())};
}

Subgroup image_of(const GroupHom& f, const Subgroup& s) {
  if (s.parent != f.dom) throw ParentMismatch("subgroup not in hom domain");
  std::set<int> im;
  for (int x : s.members) im.insert(f.map[x]);
  return {f.cod, std::vector<int>(im.begin(), im.end())};
}

bool is_surjective(const GroupHom& f) {
  return image(f).order() == f.cod->order();
}

bool is_injective(const GroupHom& f) {
  return kernel(f).order() == 1;
}

bool is_bijective(const GroupHom& f) {
  return f.dom->order() == f.cod->order() && is_injective(f);
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.cod != g.dom)
    throw CompositionMismatch("codomain/domain mismatch in composition");
  std::vector<int> m(f.dom->order());
  for (int x = 0; x < f.dom->order(); ++x) m[x] = g.map[f.map[x]];
  return GroupHom::unchecked(f.dom, g.cod, std::move(m));
}

GroupHom identity_hom(GroupPtr g) {
  std::vector<int> m(g->order());
  std::iota(m.begin(), m.end(), 0);
  return GroupHom::unchecked(g, g, std::move(m));
}

GroupHom trivial_hom(GroupPtr dom, GroupPtr cod) {
  std::vector<int> m(dom->order(), cod->identity());
  return GroupHom::unchecked(std::move(dom), std::move(cod), std::move(m));
}

GroupHom to_terminal(GroupPtr g) {
  return GroupHom::unchecked(g, FinGroup::trivial(), std::vector<int>(g->order(), 0));
}

int SubgroupEmbedding::index_of(int parent_id) const {
  auto it = std::lower_bound(sub.members.begin(), sub.members.end(), parent_id);
  if (it == sub.members.end() || *it != parent_id) return -1;
  return static_cast<int>(it - sub.members.begin());
}

SubgroupEmbedding sub_as_group(const Subgroup& s) {
  int n = s.order();
  const auto& g = *s.parent;
  auto pos = [&](int parent_id) {
    return static_cast<int>(std::lower_bound(s.members.begin(), s.members.end(),
                                             parent_id) -
                            s.members.begin());
  };
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = g.mul(s.members[a], s.members[b]);
      if (!s.contains(p)) throw ValidationError("member set is not closed");
      flat[static_cast<size_t>(a) * n + b] = pos(p);
    }
  GroupPtr grp = build_group(std::move(flat), n, g.label() + "|sub");
  return {s, grp, GroupHom::unchecked(grp, s.parent, s.members)};
}

RestrictionResult restrict_hom(const GroupHom& f, const Subgroup& h) {
  if (h.parent != f.dom) throw ParentMismatch("restriction subgroup not in domain");
  SubgroupEmbedding dom_emb = sub_as_group(h);
  GroupHom through = compose(f, dom_emb.inclusion);
  SubgroupEmbedding cod_emb = sub_as_group(image(through));
  std::vector<int> m(dom_emb.group->order());
  for (int x = 0; x < dom_emb.group->order(); ++x)
    m[x] = cod_emb.index_of(through.map[x]);
  return {GroupHom::unchecked(dom_emb.group, cod_emb.group, std::move(m)),
          dom_emb.inclusion, cod_emb.inclusion};
}

GroupHom corestrict(const GroupHom& h, const SubgroupEmbedding& target) {
  if (h.cod != target.sub.parent)
    throw ShapeMismatch("corestriction target lives elsewhere");
  std::vector<int> m(h.dom->order());
  for (int x = 0; x < h.dom->order(); ++x) {
    int idx = target.index_of(h.map[x]);
    if (idx < 0) throw ShapeMismatch("image escapes the target subgroup");
    m[x] = idx;
  }
  return GroupHom::unchecked(h.dom, target.group, std::move(m));
}

PullbackResult pullback(const GroupHom& f, const GroupHom& g) {
  if (f.cod != g.cod) throw CompositionMismatch("pullback legs have different codomains");
  int na = f.dom->order(), nc = g.dom->order();
  long long count = 0;
  for (int a = 0; a < na; ++a)
    for (int c = 0; c < nc; ++c)
      if (f.map[a] == g.map[c]) ++count;
  if (count > limits().order_cap)
    throw ClosureCapExceeded("pullback of order " + std::to_string(count) +
                             " exceeds cap " + std::to_string(limits().order_cap));
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(count));
  std::unordered_map<long long, int> index;
  index.reserve(static_cast<size_t>(count) * 2);
  for (int a = 0; a < na; ++a)
    for (int c = 0; c < nc; ++c)
      if (f.map[a] == g.map[c]) {
        index[1LL * a * nc + c] = static_cast<int>(pairs.size());
        pairs.emplace_back(a, c);
      }
  int n = static_cast<int>(pairs.size());
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = f.dom->mul(pairs[i].first, pairs[j].first);
      int c = g.dom->mul(pairs[i].second, pairs[j].second);
      flat[static_cast<size_t>(i) * n + j] = index.at(1LL * a * nc + c);
    }
  GroupPtr p = build_group(std::move(flat), n, "pb");
  std::vector<int> m1(n), m2(n);
  for (int i = 0; i < n; ++i) {
    m1[i] = pairs[i].first;
    m2[i] = pairs[i].second;
  }
  return {p, GroupHom::unchecked(p, f.dom, std::move(m1)),
          GroupHom::unchecked(p, g.dom, std::move(m2))};
}

GroupHom factor_through_pullback(const PullbackResult& pb, const GroupHom& u,
                                 const GroupHom& v) {
  if (u.dom != v.dom) throw CompositionMismatch("factorization legs disagree on domain");
  if (u.cod != pb.to_left.cod || v.cod != pb.to_right.cod)
    throw CompositionMismatch("factorization legs do not match the pullback span");
  int n = pb.group->order();
  int nc = pb.to_right.cod->order();
  std::unordered_map<long long, int> index;
  index.reserve(static_cast<size_t>(n) * 2);
  for (int i = 0; i < n; ++i)
    index[1LL * pb.to_left.map[i] * nc + pb.to_right.map[i]] = i;
  std::vector<int> m(u.dom->order());
  for (int x = 0; x < u.dom->order(); ++x) {
    auto it = index.find(1LL * u.map[x] * nc + v.map[x]);
    if (it == index.end())
      throw NonCommutingSquare("legs do not agree over the base");
    m[x] = it->second;
  }
  return GroupHom::unchecked(u.dom, pb.group, std::move(m));
}

KernelPairResult kernel_pair(const GroupHom& f) {
  PullbackResult pb = pullback(f, f);
  return {pb.group, pb.to_left, pb.to_right};
}

bool square_commutes(const CommSquare& sq) {
  if (sq.top.dom != sq.left.dom || sq.top.cod != sq.right.dom ||
      sq.left.cod != sq.bottom.dom || sq.right.cod != sq.bottom.cod)
    return false;
  return hom_equal(compose(sq.right, sq.top), compose(sq.bottom, sq.left));
}

GroupHom comparison_to_pullback(const CommSquare& sq) {
  if (!square_commutes(sq)) throw NonCommutingSquare("square does not commute");
  PullbackResult pb = pullback(sq.bottom, sq.right);
  return factor_through_pullback(pb, sq.left, sq.top);
}

GroupHom induced_on_quotient(const QuotientResult& q, const GroupHom& f) {
  if (q.projection.dom != f.dom)
    throw CompositionMismatch("quotient and hom have different domains");
  int nq = q.group->order();
  std::vector<int> m(nq, -1);
  for (int x = 0; x < f.dom->order(); ++x) {
    int c = q.projection.map[x];
    if (m[c] < 0)
      m[c] = f.map[x];
    else if (m[c] != f.map[x])
      throw ValidationError("hom does not factor through the quotient");
  }
  return GroupHom::unchecked(q.group, f.cod, std::move(m));
}

GroupHom induced_between_quotients(const QuotientResult& qa,
                                   const QuotientResult& qb,
                                   const GroupHom& f) {
  return induced_on_quotient(qa, compose(qb.projection, f));
}

ExactnessWitness exactness_witness(const GroupHom& surjection) {
  if (!is_surjective(surjection))
    throw NotAnExtension("exactness witness needs a surjection");
  SubgroupEmbedding k = sub_as_group(kernel(surjection));
  return {k.inclusion, surjection};
}

// --- generators, isomorphism, abelian invariants ---------------------------

std::vector<int> minimal_generators(GroupPtr g) {
  return minimal_generators_of(full_subgroup(g));
}

std::vector<int> minimal_generators_of(const Subgroup& s) {
  std::vector<int> gens;
  Subgroup have = trivial_subgroup(s.parent);
  for (int x : s.members) {
    if (have.contains(x)) continue;
    gens.push_back(x);
    std::vector<int> seed = gens;
    have = subgroup_generated(s.parent, seed);
    if (have.order() == s.order()) break;
  }
  return gens;
}

namespace {

// Extend a partial map (defined at least on the identity and all currently
// "known" ids) multiplicatively; returns false on conflict.
bool close_partial_map(const FinGroup& g, const FinGroup& h, std::vector<int>& m) {
  std::vector<int> known;
  for (int x = 0; x < g.order(); ++x)
    if (m[x] >= 0) known.push_back(x);
  for (size_t i = 0; i < known.size(); ++i) {
    for (size_t j = 0; j < known.size(); ++j) {
      int p = g.mul(known[i], known[j]);
      int q = h.mul(m[known[i]], m[known[j]]);
      if (m[p] < 0) {
        m[p] = q;
        known.push_back(p);
      } else if (m[p] != q) {
        return false;
      }
    }
  }
  return true;
}

bool iso_backtrack(const FinGroup& g, const FinGroup& h,
                   const std::vector<int>& gens, size_t at,
                   const std::vector<std::vector<int>>& candidates,
                   std::vector<int>& m, std::vector<int>& out) {
  if (at == gens.size()) {
    if (std::count(m.begin(), m.end(), -1) != 0) return false;
    std::vector<char> hit(h.order(), 0);
    for (int v : m) {
      if (hit[v]) return false;
      hit[v] = 1;
    }
    out = m;
    return true;
  }
  int gen = gens[at];
  for (int cand : candidates[at]) {
    std::vector<int> trial = m;
    if (trial[gen] >= 0) {
      if (trial[gen] != cand) continue;
    } else {
      trial[gen] = cand;
    }
    if (!close_partial_map(g, h, trial)) continue;
    if (iso_backtrack(g, h, gens, at + 1, candidates, trial, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<GroupHom> find_isomorphism(GroupPtr g, GroupPtr h) {
  if (g->order() != h->order()) return std::nullopt;
  if (g->order() > limits().iso_cap)
    throw CapExceeded("isomorphism search above order cap");
  if (g->is_abelian() != h->is_abelian()) return std::nullopt;

  std::vector<int> og(g->order()), oh(h->order());
  for (int x = 0; x < g->order(); ++x) og[x] = g->element_order(x);
  for (int x = 0; x < h->order(); ++x) oh[x] = h->element_order(x);
  {
    std::vector<int> a = og, b = oh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<int> gens = minimal_generators(g);
  if (gens.empty()) {  // trivial group
    return GroupHom(g, h, std::vector<int>{h->identity()});
  }
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < h->order(); ++y)
      if (oh[y] == og[gens[i]]) candidates[i].push_back(y);

  std::vector<int> m(g->order(), -1), out;
  m[g->identity()] = h->identity();
  if (iso_backtrack(*g, *h, gens, 0, candidates, m, out))
    return GroupHom(g, h, std::move(out));
  return std::nullopt;
}

bool isomorphic(GroupPtr g, GroupPtr h) {
  return find_isomorphism(std::move(g), std::move(h)).has_value();
}

std::vector<long long> abelian_divisors(GroupPtr g) {
  if (!g->is_abelian()) throw ValidationError("abelian invariants of a non-abelian group");
  std::vector<long long> collected;  // largest first
  GroupPtr cur = g;
  while (cur->order() > 1) {
    int exp = cur->exponent();
    int pick = -1;
    for (int x = 0; x < cur->order(); ++x)
      if (cur->element_order(x) == exp) {
        pick = x;
        break;
      }
    collected.push_back(exp);
    cur = quotient(cur, subgroup_generated(cur, {pick})).group;
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

}  // namespace hext
