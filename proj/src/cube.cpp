#include "hext/cube.hpp"

#include <algorithm>

namespace hext {

namespace {

std::string mask_string(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; s >> i; ++i)
    if (s & (Mask{1} << i)) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

}  // namespace

Cube::Cube(int dim, std::vector<GroupPtr> vertices,
           std::map<std::pair<Mask, int>, GroupHom> covers)
    : dim_(dim), verts_(std::move(vertices)), covers_(std::move(covers)) {
  if (dim_ < 0) throw ValidationError("cube dimension must be >= 0");
  if (dim_ > limits().dim_cap)
    throw DimCapExceeded("cube dimension exceeds cap");
  if (verts_.size() != (size_t{1} << dim_))
    throw ShapeMismatch("cube has wrong vertex count");
  for (const auto& v : verts_)
    if (!v) throw ShapeMismatch("cube vertex missing");

  for (Mask t = 0; t <= full_mask(); ++t)
    for (int i = 0; i < dim_; ++i) {
      if (!(t & (Mask{1} << i))) continue;
      auto it = covers_.find({t, i});
      if (it == covers_.end())
        throw ShapeMismatch("missing arrow " + mask_string(t) + " -> " +
                            mask_string(t & ~(Mask{1} << i)));
      const GroupHom& h = it->second;
      if (h.dom != verts_[t] || h.cod != verts_[t & ~(Mask{1} << i)])
        throw ShapeMismatch("arrow endpoints disagree with vertices at " +
                            mask_string(t));
    }

  // Functoriality: every coface square commutes.
  for (Mask t = 0; t <= full_mask(); ++t)
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j) {
        Mask bi = Mask{1} << i, bj = Mask{1} << j;
        if ((t & bi) == 0 || (t & bj) == 0) continue;
        GroupHom via_i = compose(cover(t & ~bi, j), cover(t, i));
        GroupHom via_j = compose(cover(t & ~bj, i), cover(t, j));
        if (!hom_equal(via_i, via_j))
          throw ValidationError("coface square at " + mask_string(t) +
                                " in directions " + std::to_string(i) + "," +
                                std::to_string(j) + " does not commute");
      }
}

Cube Cube::point(GroupPtr g) {
  return Cube(0, {std::move(g)}, {});
}

GroupPtr Cube::vertex(Mask s) const {
  if (s > full_mask()) throw IndexOutOfRange("vertex mask out of range");
  return verts_[s];
}

const GroupHom& Cube::cover(Mask t, int i) const {
  auto it = covers_.find({t, i});
  if (it == covers_.end()) throw IndexOutOfRange("no such covering arrow");
  return it->second;
}

GroupHom Cube::hom(Mask t, Mask s) const {
  if ((s & ~t) != 0) throw IndexOutOfRange("target is not a subset");
  if (s == t) return identity_hom(vertex(t));
  // Peel highest set bit of t \ s each step; functoriality makes the chain
  // choice irrelevant.
  Mask diff = t & ~s;
  int i = 31 - __builtin_clz(diff);
  GroupHom first = cover(t, i);
  if ((t & ~(Mask{1} << i)) == s) return first;
  return compose(hom(t & ~(Mask{1} << i), s), first);
}

CubeMorphism::CubeMorphism(Cube dom_, Cube cod_, std::vector<GroupHom> comps_)
    : dom(std::move(dom_)), cod(std::move(cod_)), comps(std::move(comps_)) {
  if (dom.dim() != cod.dim()) throw ShapeMismatch("morphism endpoints differ in dimension");
  if (comps.size() != (size_t{1} << dom.dim()))
    throw ShapeMismatch("morphism has wrong component count");
  for (Mask s = 0; s <= dom.full_mask(); ++s)
    if (comps[s].dom != dom.vertex(s) || comps[s].cod != cod.vertex(s))
      throw ShapeMismatch("component endpoints disagree at " + mask_string(s));
  for (Mask t = 0; t <= dom.full_mask(); ++t)
    for (int i = 0; i < dom.dim(); ++i) {
      if (!(t & (Mask{1} << i))) continue;
      Mask s = t & ~(Mask{1} << i);
      if (!hom_equal(compose(cod.cover(t, i), comps[t]),
                     compose(comps[s], dom.cover(t, i))))
        throw ValidationError("naturality fails at " + mask_string(t) +
                              " direction " + std::to_string(i));
    }
}

bool group_tables_equal(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (a->order() != b->order()) return false;
  if (a->identity() != b->identity()) return false;
  for (int x = 0; x < a->order(); ++x)
    for (int y = 0; y < a->order(); ++y)
      if (a->mul(x, y) != b->mul(x, y)) return false;
  return true;
}

bool cube_equal(const Cube& a, const Cube& b) {
  if (a.dim() != b.dim()) return false;
  for (Mask s = 0; s <= a.full_mask(); ++s)
    if (!group_tables_equal(a.vertex(s), b.vertex(s))) return false;
  for (Mask t = 0; t <= a.full_mask(); ++t)
    for (int i = 0; i < a.dim(); ++i) {
      if (!(t & (Mask{1} << i))) continue;
      if (a.cover(t, i).map != b.cover(t, i).map) return false;
    }
  return true;
}

bool morphism_equal(const CubeMorphism& f, const CubeMorphism& g) {
  if (f.dim() != g.dim()) return false;
  if (!cube_equal(f.dom, g.dom) || !cube_equal(f.cod, g.cod)) return false;
  for (Mask s = 0; s <= f.dom.full_mask(); ++s)
    if (f.comps[s].map != g.comps[s].map) return false;
  return true;
}

Cube subcube(const Cube& a, int d, int bit) {
  if (d < 0 || d >= a.dim()) throw IndexOutOfRange("subcube direction out of range");
  int n = a.dim() - 1;
  Mask fixed = bit ? (Mask{1} << d) : 0;
  std::vector<GroupPtr> verts(size_t{1} << n);
  std::map<std::pair<Mask, int>, GroupHom> covers;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    Mask big = index_shift(d, s) | fixed;
    verts[s] = a.vertex(big);
    for (int k = 0; k < n; ++k) {
      if (!(s & (Mask{1} << k))) continue;
      int old_k = k < d ? k : k + 1;
      covers.emplace(std::make_pair(s, k), a.cover(big, old_k));
    }
  }
  return Cube(n, std::move(verts), std::move(covers));
}

CubeMorphism delta(const Cube& a, int i) {
  if (a.dim() < 1) throw IndexOutOfRange("delta needs dimension >= 1");
  if (i < 0 || i >= a.dim()) throw IndexOutOfRange("delta direction out of range");
  Cube dom = subcube(a, i, 1);
  Cube cod = subcube(a, i, 0);
  std::vector<GroupHom> comps;
  comps.reserve(size_t{1} << (a.dim() - 1));
  for (Mask s = 0; s < (Mask{1} << (a.dim() - 1)); ++s)
    comps.push_back(a.cover(index_shift(i, s) | (Mask{1} << i), i));
  return CubeMorphism(std::move(dom), std::move(cod), std::move(comps));
}

Cube assemble_at(const CubeMorphism& f, int i) {
  int n = f.dim() + 1;
  if (i < 0 || i >= n) throw IndexOutOfRange("assembly position out of range");
  std::vector<GroupPtr> verts(size_t{1} << n);
  std::map<std::pair<Mask, int>, GroupHom> covers;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    Mask low = index_unshift(i, m & ~(Mask{1} << i));
    bool in_dom = (m & (Mask{1} << i)) != 0;
    const Cube& side = in_dom ? f.dom : f.cod;
    verts[m] = side.vertex(low);
    for (int j = 0; j < n; ++j) {
      if (!(m & (Mask{1} << j))) continue;
      if (j == i) {
        covers.emplace(std::make_pair(m, j), f.at(low));
      } else {
        int small_j = j < i ? j : j - 1;
        covers.emplace(std::make_pair(m, j), side.cover(low, small_j));
      }
    }
  }
  return Cube(n, std::move(verts), std::move(covers));
}

Cube permute_directions(const Cube& a, const std::vector<int>& perm) {
  int n = a.dim();
  if (static_cast<int>(perm.size()) != n)
    throw ShapeMismatch("permutation has wrong length");
  auto old_mask = [&](Mask m) {
    Mask r = 0;
    for (int k = 0; k < n; ++k)
      if (m & (Mask{1} << k)) r |= Mask{1} << perm[k];
    return r;
  };
  std::vector<GroupPtr> verts(size_t{1} << n);
  std::map<std::pair<Mask, int>, GroupHom> covers;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    verts[m] = a.vertex(old_mask(m));
    for (int k = 0; k < n; ++k)
      if (m & (Mask{1} << k))
        covers.emplace(std::make_pair(m, k), a.cover(old_mask(m), perm[k]));
  }
  return Cube(n, std::move(verts), std::move(covers));
}

Cube iota(int n, GroupPtr a) {
  if (n < 0) throw ValidationError("iota dimension must be >= 0");
  if (n == 0) return Cube::point(std::move(a));
  GroupPtr one = FinGroup::trivial();
  Mask full = (Mask{1} << n) - 1;
  std::vector<GroupPtr> verts(size_t{1} << n, one);
  verts[full] = a;
  std::map<std::pair<Mask, int>, GroupHom> covers;
  for (Mask t = 1; t <= full; ++t)
    for (int i = 0; i < n; ++i) {
      if (!(t & (Mask{1} << i))) continue;
      covers.emplace(std::make_pair(t, i),
                     trivial_hom(verts[t], verts[t & ~(Mask{1} << i)]));
    }
  return Cube(n, std::move(verts), std::move(covers));
}

GroupHom ArrowCube::vertex_arrow(Mask s) const {
  return carrier.cover((s << 1) | 1, 0);
}

ArrowCube rho(const Cube& a, int i) {
  if (a.dim() < 1) throw IndexOutOfRange("rho needs dimension >= 1");
  if (i < 0 || i >= a.dim()) throw IndexOutOfRange("rho direction out of range");
  std::vector<int> perm(a.dim());
  perm[0] = i;
  for (int k = 1; k < a.dim(); ++k) perm[k] = k - 1 < i ? k - 1 : k;
  return ArrowCube{permute_directions(a, perm)};
}

CommSquare square_of(const CubeMorphism& f) {
  if (f.dim() != 1) throw ShapeMismatch("square view needs 1-cubes");
  return CommSquare{f.at(1), f.dom.cover(1, 0), f.cod.cover(1, 0), f.at(0)};
}

CubeMorphism square_morphism(const GroupHom& top, const GroupHom& left,
                             const GroupHom& right, const GroupHom& bottom) {
  return CubeMorphism(one_cube(left), one_cube(right), {bottom, top});
}

Cube one_cube(const GroupHom& f) {
  std::map<std::pair<Mask, int>, GroupHom> covers;
  covers.emplace(std::make_pair(Mask{1}, 0), f);
  return Cube(1, {f.cod, f.dom}, std::move(covers));
}

bool is_double_extension(const CommSquare& sq,
                         const std::function<bool(const GroupHom&)>& is_ext_base) {
  if (!square_commutes(sq)) throw NonCommutingSquare("square does not commute");
  if (!is_ext_base(sq.top) || !is_ext_base(sq.bottom) || !is_ext_base(sq.left) ||
      !is_ext_base(sq.right))
    return false;
  return is_ext_base(comparison_to_pullback(sq));
}

CubeKernel cube_kernel(const CubeMorphism& f) {
  int n = f.dim();
  std::vector<SubgroupEmbedding> embs;
  embs.reserve(size_t{1} << n);
  for (Mask s = 0; s <= f.dom.full_mask(); ++s)
    embs.push_back(sub_as_group(kernel(f.at(s))));
  std::vector<GroupPtr> verts(size_t{1} << n);
  std::map<std::pair<Mask, int>, GroupHom> covers;
  std::vector<GroupHom> incl;
  for (Mask s = 0; s <= f.dom.full_mask(); ++s) {
    verts[s] = embs[s].group;
    incl.push_back(embs[s].inclusion);
    for (int i = 0; i < n; ++i) {
      if (!(s & (Mask{1} << i))) continue;
      Mask tgt = s & ~(Mask{1} << i);
      covers.emplace(std::make_pair(s, i),
                     corestrict(compose(f.dom.cover(s, i), embs[s].inclusion),
                                embs[tgt]));
    }
  }
  Cube k(n, std::move(verts), std::move(covers));
  CubeMorphism inclusion(k, f.dom, std::move(incl));
  return {std::move(k), std::move(inclusion), std::move(embs)};
}

CubePullback cube_pullback(const CubeMorphism& f, const CubeMorphism& g) {
  if (f.dim() != g.dim()) throw ShapeMismatch("pullback legs differ in dimension");
  if (!cube_equal(f.cod, g.cod))
    throw ShapeMismatch("pullback legs have different codomains");
  int n = f.dim();
  std::vector<PullbackResult> prs;
  prs.reserve(size_t{1} << n);
  for (Mask s = 0; s <= f.dom.full_mask(); ++s)
    prs.push_back(pullback(f.at(s), g.at(s)));
  std::vector<GroupPtr> verts(size_t{1} << n);
  std::map<std::pair<Mask, int>, GroupHom> covers;
  std::vector<GroupHom> left, right;
  for (Mask s = 0; s <= f.dom.full_mask(); ++s) {
    verts[s] = prs[s].group;
    left.push_back(prs[s].to_left);
    right.push_back(prs[s].to_right);
    for (int i = 0; i < n; ++i) {
      if (!(s & (Mask{1} << i))) continue;
      Mask tgt = s & ~(Mask{1} << i);
      GroupHom u = compose(f.dom.cover(s, i), prs[s].to_left);
      GroupHom v = compose(g.dom.cover(s, i), prs[s].to_right);
      covers.emplace(std::make_pair(s, i), factor_through_pullback(prs[tgt], u, v));
    }
  }
  Cube apex(n, std::move(verts), std::move(covers));
  CubeMorphism to_left(apex, f.dom, std::move(left));
  CubeMorphism to_right(apex, g.dom, std::move(right));
  return {std::move(apex), std::move(to_left), std::move(to_right), std::move(prs)};
}

CubeMorphism cube_comparison(const CubePullback& pb, const CubeMorphism& u,
                             const CubeMorphism& v) {
  if (!cube_equal(u.dom, v.dom)) throw ShapeMismatch("comparison legs disagree on domain");
  std::vector<GroupHom> comps;
  for (Mask s = 0; s <= u.dom.full_mask(); ++s)
    comps.push_back(factor_through_pullback(pb.vertex_pullbacks[s], u.at(s), v.at(s)));
  return CubeMorphism(u.dom, pb.apex, std::move(comps));
}

CubeKernelPair cube_kernel_pair(const CubeMorphism& f) {
  CubePullback pb = cube_pullback(f, f);
  return {std::move(pb.apex), std::move(pb.to_left), std::move(pb.to_right)};
}

CubeMorphism compose(const CubeMorphism& g, const CubeMorphism& f) {
  if (!cube_equal(f.cod, g.dom)) throw CompositionMismatch("cube morphisms do not compose");
  std::vector<GroupHom> comps;
  for (Mask s = 0; s <= f.dom.full_mask(); ++s)
    comps.push_back(compose(g.at(s), f.at(s)));
  return CubeMorphism(f.dom, g.cod, std::move(comps));
}

CubeMorphism identity_morphism(const Cube& a) {
  std::vector<GroupHom> comps;
  for (Mask s = 0; s <= a.full_mask(); ++s) comps.push_back(identity_hom(a.vertex(s)));
  return CubeMorphism(a, a, std::move(comps));
}

bool is_surjective(const CubeMorphism& f) {
  for (Mask s = 0; s <= f.dom.full_mask(); ++s)
    if (!is_surjective(f.at(s))) return false;
  return true;
}

namespace {

CubeMorphism restrict_morphism(const CubeMorphism& f, int d, int bit) {
  Cube dom = subcube(f.dom, d, bit);
  Cube cod = subcube(f.cod, d, bit);
  Mask fixed = bit ? (Mask{1} << d) : 0;
  std::vector<GroupHom> comps;
  for (Mask s = 0; s < (Mask{1} << (f.dim() - 1)); ++s)
    comps.push_back(f.at(index_shift(d, s) | fixed));
  return CubeMorphism(std::move(dom), std::move(cod), std::move(comps));
}

}  // namespace

bool is_extension_morphism(const CubeMorphism& f, int split_dir) {
  if (f.dim() == 0) return is_surjective(f.at(0));
  int d = split_dir < 0 ? f.dim() - 1 : split_dir;
  if (d < 0 || d >= f.dim()) throw IndexOutOfRange("split direction out of range");
  CubeMorphism f1 = restrict_morphism(f, d, 1);
  CubeMorphism f0 = restrict_morphism(f, d, 0);
  CubeMorphism a = delta(f.dom, d);
  CubeMorphism b = delta(f.cod, d);
  if (!is_extension_morphism(f1) || !is_extension_morphism(f0) ||
      !is_extension_morphism(a) || !is_extension_morphism(b))
    return false;
  CubePullback pb = cube_pullback(f0, b);
  CubeMorphism r = cube_comparison(pb, a, f1);
  return is_extension_morphism(r);
}

bool is_n_fold_extension(const Cube& a) {
  if (a.dim() == 0) return true;
  return is_extension_morphism(delta(a, a.dim() - 1));
}

bool extension_status_via(const Cube& a, int i) {
  return is_extension_morphism(delta(a, i));
}

bool double_status_via(const Cube& a, int i, int j) {
  if (a.dim() < 2) throw IndexOutOfRange("double status needs dimension >= 2");
  return is_extension_morphism(delta(a, i), j);
}

bool is_rho_extension(const ArrowCube& r) {
  int outer = r.dim();
  for (Mask s = 0; s < (Mask{1} << outer); ++s)
    if (!is_surjective(r.vertex_arrow(s))) return false;
  if (outer == 0) return true;
  return is_extension_morphism(delta(r.carrier, r.carrier.dim() - 1));
}

}  // namespace hext
