#include "hext/library.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace hext {

namespace {

GroupPtr make_quaternion() {
  // ids: 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k
  // axis table for i,j,k products: ax[a][b], sg[a][b] with 0:e 1:i 2:j 3:k
  static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int a_ax = a / 2, a_neg = a % 2, b_ax = b / 2, b_neg = b % 2;
      int axis = ax[a_ax][b_ax];
      int sign = sg[a_ax][b_ax] * (a_neg ? -1 : 1) * (b_neg ? -1 : 1);
      t[a][b] = axis * 2 + (sign < 0 ? 1 : 0);
    }
  return FinGroup::from_table(t, "Q8");
}

std::vector<LibraryEntry> build_library() {
  std::vector<LibraryEntry> lib;
  auto add = [&](std::string name, GroupPtr g) {
    lib.push_back({std::move(name), std::move(g)});
  };
  add("1", FinGroup::trivial());
  for (int m = 2; m <= 12; ++m) add("Z" + std::to_string(m), cyclic_group(m));
  GroupPtr z2 = lib[1].group;
  GroupPtr klein = direct_product(z2, z2).group;
  add("Klein", klein);
  add("Z2^3", direct_product(klein, z2).group);
  add("Z2xZ4", direct_product(z2, cyclic_group(4)).group);
  add("Z2xZ6", direct_product(z2, cyclic_group(6)).group);
  add("Z3xZ3", direct_product(cyclic_group(3), cyclic_group(3)).group);
  add("Z4xZ4", direct_product(cyclic_group(4), cyclic_group(4)).group);
  GroupPtr s3 = from_permutation_generators(3, {{1, 2, 0}, {1, 0, 2}}, "S3");
  add("S3", s3);
  add("D4", from_permutation_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}, "D4"));
  add("Q8", make_quaternion());
  add("D5", from_permutation_generators(5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}, "D5"));
  add("A4", from_permutation_generators(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4"));
  add("S3xZ2", direct_product(s3, z2).group);
  return lib;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

const std::vector<LibraryEntry>& group_library() {
  static const std::vector<LibraryEntry> lib = build_library();
  return lib;
}

GroupPtr library_group(const std::string& name) {
  std::string key = lower(name);
  if (key == "v4") key = "klein";
  if (key == "trivial") key = "1";
  for (const auto& e : group_library())
    if (lower(e.name) == key) return e.group;
  throw UserError("unknown library group: " + name);
}

std::vector<Subgroup> enumerate_normal_subgroups(GroupPtr g) {
  if (g->order() > 64) throw CapExceeded("normal subgroup enumeration capped at order 64");

  // Conjugacy classes; every normal subgroup is generated by the classes it
  // contains, so closing class-by-class from below reaches all of them.
  std::vector<std::vector<int>> classes;
  {
    std::vector<char> seen(g->order(), 0);
    for (int x = 0; x < g->order(); ++x) {
      if (seen[x]) continue;
      std::set<int> orbit;
      for (int c = 0; c < g->order(); ++c) orbit.insert(g->conjugate(x, c));
      classes.emplace_back(orbit.begin(), orbit.end());
      for (int y : classes.back()) seen[y] = 1;
    }
  }

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> work;
  std::vector<int> triv{g->identity()};
  found.insert(triv);
  work.push_back(triv);
  while (!work.empty()) {
    std::vector<int> n = std::move(work.back());
    work.pop_back();
    for (const auto& cls : classes) {
      if (std::includes(n.begin(), n.end(), cls.begin(), cls.end())) continue;
      std::vector<int> seed = n;
      seed.insert(seed.end(), cls.begin(), cls.end());
      Subgroup bigger = subgroup_generated(g, seed);
      if (found.insert(bigger.members).second) work.push_back(bigger.members);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& mem : found) out.push_back(Subgroup{g, mem});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::vector<GroupHom> enumerate_extensions_from(GroupPtr g) {
  if (g->order() > 32) throw CapExceeded("extension enumeration capped at order 32");
  std::vector<GroupHom> out;
  for (const Subgroup& n : enumerate_normal_subgroups(g))
    out.push_back(quotient(g, n).projection);
  return out;
}

std::vector<Cube> enumerate_double_extensions(GroupPtr g) {
  if (g->order() > 16)
    throw CapExceeded("double extension enumeration capped at order 16");
  std::vector<Cube> out;
  std::vector<Subgroup> normals = enumerate_normal_subgroups(g);
  for (const Subgroup& n : normals)
    for (const Subgroup& m : normals) {
      Cube sq = quotient_lattice_cube(g, {n, m});
      if (is_n_fold_extension(sq)) out.push_back(std::move(sq));
    }
  return out;
}

Cube quotient_lattice_cube(GroupPtr g, const std::vector<Subgroup>& normals) {
  int n = static_cast<int>(normals.size());
  for (const Subgroup& s : normals) {
    if (s.parent != g) throw ParentMismatch("normal subgroup of a different group");
    if (!is_normal(s)) throw NotNormal("lattice cube needs normal subgroups");
  }
  Mask full = (Mask{1} << n) - 1;
  std::vector<QuotientResult> quots(size_t{1} << n,
                                    QuotientResult{g, identity_hom(g)});
  for (Mask s = 0; s < full; ++s) {
    Subgroup prod = trivial_subgroup(g);
    for (int i = 0; i < n; ++i)
      if (!(s & (Mask{1} << i))) prod = setwise_product(prod, normals[i]);
    quots[s] = quotient(g, prod);
  }
  std::vector<GroupPtr> verts(size_t{1} << n);
  std::map<std::pair<Mask, int>, GroupHom> covers;
  for (Mask s = 0; s <= full; ++s) verts[s] = quots[s].group;
  for (Mask t = 1; t <= full; ++t)
    for (int i = 0; i < n; ++i) {
      if (!(t & (Mask{1} << i))) continue;
      Mask s = t & ~(Mask{1} << i);
      covers.emplace(std::make_pair(t, i),
                     t == full ? quots[s].projection
                               : induced_between_quotients(quots[t], quots[s],
                                                           identity_hom(g)));
    }
  return Cube(n, std::move(verts), std::move(covers));
}

namespace {

// Replace the top vertex by an embedded subgroup, restricting the top
// arrows.  Functoriality is preserved; surjectivity generally is not.
Cube replace_top(const Cube& a, const SubgroupEmbedding& emb) {
  int n = a.dim();
  Mask full = a.full_mask();
  std::vector<GroupPtr> verts(size_t{1} << n);
  std::map<std::pair<Mask, int>, GroupHom> covers;
  for (Mask s = 0; s <= full; ++s)
    verts[s] = s == full ? emb.group : a.vertex(s);
  for (Mask t = 1; t <= full; ++t)
    for (int i = 0; i < n; ++i) {
      if (!(t & (Mask{1} << i))) continue;
      covers.emplace(std::make_pair(t, i),
                     t == full ? compose(a.cover(t, i), emb.inclusion)
                               : a.cover(t, i));
    }
  return Cube(n, std::move(verts), std::move(covers));
}

bool top_arrow_broken(const Cube& a) {
  for (int i = 0; i < a.dim(); ++i)
    if (!is_surjective(a.cover(a.full_mask(), i))) return true;
  return false;
}

}  // namespace

Cube random_cube(int dim, std::uint64_t seed, const RandomCubeOptions& opts) {
  if (dim < 1 || dim > 3) throw DimCapExceeded("random cubes support dimensions 1..3");
  // Lattice cubes of quotients are double extensions automatically, but for
  // n = 3 the triple of normal subgroups must additionally satisfy a
  // modularity condition (counterexample: three order-4 subgroups of Z2xZ4
  // with pairwise products everything).  Draws failing the extension test
  // are therefore rejected and retried.
  std::uint64_t draw_seed = seed;
  for (int tries = 0; tries < 64; ++tries) {
    Rng rng(draw_seed);
    draw_seed = rng.next();
    std::vector<GroupPtr> pool;
    for (const auto& e : group_library()) {
      if (e.group->order() > opts.max_top_order) continue;
      if (opts.mutate && e.group->order() == 1) continue;
      pool.push_back(e.group);
    }
    if (pool.empty()) throw UserError("no library group fits the size budget");
    GroupPtr g = pool[rng.below(pool.size())];
    std::vector<Subgroup> normals_all = enumerate_normal_subgroups(g);
    std::vector<Subgroup> picked;
    for (int i = 0; i < dim; ++i)
      picked.push_back(normals_all[rng.below(normals_all.size())]);

    if (opts.mutate) {
      bool all_full = true;
      for (const Subgroup& s : picked)
        if (s.order() != g->order()) all_full = false;
      if (all_full) picked[0] = trivial_subgroup(g);
    }

    Cube cube = quotient_lattice_cube(g, picked);
    if (!opts.mutate) {
      if (dim >= 3 && !is_n_fold_extension(cube)) continue;
      return cube;
    }

    // Try a few proper subgroups as the new top; fall back to the trivial
    // one, which is guaranteed to break some arrow after the redraw above.
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::vector<int> seeds;
      for (int k = 0; k < 1 + static_cast<int>(rng.below(2)); ++k)
        seeds.push_back(static_cast<int>(rng.below(g->order())));
      Subgroup h = subgroup_generated(g, seeds);
      if (h.order() == g->order()) continue;
      Cube mutated = replace_top(cube, sub_as_group(h));
      if (top_arrow_broken(mutated)) return mutated;
    }
    Cube mutated = replace_top(cube, sub_as_group(trivial_subgroup(g)));
    if (!top_arrow_broken(mutated))
      throw ConsistencyError("mutation failed to break the cube");
    return mutated;
  }
  throw ConsistencyError("no extension cube found after 64 draws");
}

}  // namespace hext
