#ifndef HEXT_CUBE_HPP
#define HEXT_CUBE_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hext/fin_group.hpp"

namespace hext {

using Mask = unsigned;

/// s_i on subsets-of-naturals encoded as bitmasks: bits below i stay, bits
/// at or above i shift up by one.
inline Mask index_shift(int i, Mask s) {
  return ((s >> i) << (i + 1)) | (s & ((Mask{1} << i) - 1));
}

/// Inverse of index_shift on masks avoiding bit i (drops the gap).
inline Mask index_unshift(int i, Mask s) {
  return ((s >> (i + 1)) << i) | (s & ((Mask{1} << i) - 1));
}

/// An n-fold arrow: a contravariant functor on the powerset of {0..n-1},
/// stored as one group per subset mask and one hom per covering pair
/// (T, T\{i}).  General composites are derived on demand; functoriality of
/// every coface square is validated on construction.
class Cube {
 public:
  Cube(int dim, std::vector<GroupPtr> vertices,
       std::map<std::pair<Mask, int>, GroupHom> covers);
  static Cube point(GroupPtr g);

  int dim() const { return dim_; }
  Mask full_mask() const { return (Mask{1} << dim_) - 1; }
  GroupPtr vertex(Mask s) const;
  GroupPtr top() const { return vertex(full_mask()); }
  GroupPtr bottom() const { return vertex(0); }
  /// Arrow from T to T\{i}; requires i in T.
  const GroupHom& cover(Mask t, int i) const;
  /// Composite arrow from T to S along a canonical chain; requires S <= T.
  GroupHom hom(Mask t, Mask s) const;

 private:
  int dim_;
  std::vector<GroupPtr> verts_;
  std::map<std::pair<Mask, int>, GroupHom> covers_;
};

/// Natural transformation between n-fold arrows; components per mask.
struct CubeMorphism {
  Cube dom;
  Cube cod;
  std::vector<GroupHom> comps;

  CubeMorphism(Cube dom_, Cube cod_, std::vector<GroupHom> comps_);
  int dim() const { return dom.dim(); }
  const GroupHom& at(Mask s) const { return comps[s]; }
};

bool group_tables_equal(const GroupPtr& a, const GroupPtr& b);
bool cube_equal(const Cube& a, const Cube& b);
bool morphism_equal(const CubeMorphism& f, const CubeMorphism& g);

/// The (n-1)-cube sitting at coordinate `bit` of direction d.
Cube subcube(const Cube& a, int d, int bit);

/// Reads an n-cube as an arrow of (n-1)-cubes along direction i.
CubeMorphism delta(const Cube& a, int i);

/// Rebuilds an (m+1)-cube from a morphism of m-cubes, inserting the split
/// direction at position i (inverse of delta up to reindexing).
Cube assemble_at(const CubeMorphism& f, int i);

/// Cube with directions relabeled: new direction k is old direction perm[k].
Cube permute_directions(const Cube& a, const std::vector<int>& perm);

/// ι^n: top vertex A, every other vertex the trivial group.
Cube iota(int n, GroupPtr a);

/// An (n-1)-cube valued in arrows, realized as an n-cube whose direction 0
/// is the arrow direction.
struct ArrowCube {
  Cube carrier;
  int dim() const { return carrier.dim() - 1; }
  /// The arrow carried by outer vertex S.
  GroupHom vertex_arrow(Mask s) const;
};

/// rho_i: vertex S carries the old arrow along direction i at position
/// s_i(S).  Carrier direction k>0 is old direction s_i(k-1).
ArrowCube rho(const Cube& a, int i);

CommSquare square_of(const CubeMorphism& f);  // f between 1-cubes
CubeMorphism square_morphism(const GroupHom& top, const GroupHom& left,
                             const GroupHom& right, const GroupHom& bottom);
Cube one_cube(const GroupHom& f);  // 1-cube with vertex arrow f

/// Double-extension test on a plain square against a caller-chosen base
/// class of arrows: all four sides plus the comparison to the pullback.
bool is_double_extension(const CommSquare& sq,
                         const std::function<bool(const GroupHom&)>& is_ext_base);

// --- pointwise limit constructions -----------------------------------------

struct CubeKernel {
  Cube kernel;
  CubeMorphism inclusion;
  std::vector<SubgroupEmbedding> embeddings;  // by mask
};
CubeKernel cube_kernel(const CubeMorphism& f);

struct CubePullback {
  Cube apex;
  CubeMorphism to_left;
  CubeMorphism to_right;
  std::vector<PullbackResult> vertex_pullbacks;  // by mask
};
CubePullback cube_pullback(const CubeMorphism& f, const CubeMorphism& g);
CubeMorphism cube_comparison(const CubePullback& pb, const CubeMorphism& u,
                             const CubeMorphism& v);

struct CubeKernelPair {
  Cube apex;
  CubeMorphism pi1;
  CubeMorphism pi2;
};
CubeKernelPair cube_kernel_pair(const CubeMorphism& f);

CubeMorphism compose(const CubeMorphism& g, const CubeMorphism& f);
CubeMorphism identity_morphism(const Cube& a);
bool is_surjective(const CubeMorphism& f);  // every component surjective

// --- the recursive extension classes ---------------------------------------

/// Membership of f in E^m (m = f.dim()): for m = 0 surjectivity, otherwise
/// the square obtained by splitting along `split_dir` must be a double
/// E^{m-1}-extension.  Default split is the top direction (the definition);
/// other choices exist to exercise the symmetry theorem.
bool is_extension_morphism(const CubeMorphism& f, int split_dir = -1);

bool is_n_fold_extension(const Cube& a);
/// Extension status read through delta_i; theorem: independent of i.
bool extension_status_via(const Cube& a, int i);
/// Double-extension status of delta_j(delta_i(a)); independent of (i, j).
bool double_status_via(const Cube& a, int i, int j);

/// rho_i characterization: vertex arrows all surjective and the carrier
/// passes the recursive test as an (n-1)-cube over the arrow category.
bool is_rho_extension(const ArrowCube& r);

}  // namespace hext

#endif
