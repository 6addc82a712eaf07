#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hext/cube.hpp"
#include "hext/library.hpp"

using namespace hext;

namespace {

Cube d4_square() {
  GroupPtr d4 = library_group("D4");
  return quotient_lattice_cube(
      d4, {subgroup_generated(d4, {1}), subgroup_generated(d4, {2, 3})});
}

Cube klein_square() {
  GroupPtr k = library_group("Klein");
  return quotient_lattice_cube(
      k, {subgroup_generated(k, {2}), subgroup_generated(k, {1})});
}

}  // namespace

TEST_CASE("index shift") {
  CHECK(index_shift(0, 0b11u) == 0b110u);
  CHECK(index_shift(5, 0u) == 0u);
  CHECK(index_shift(2, 0b11u) == 0b11u);
  CHECK(index_shift(1, 0b101u) == 0b1001u);
  for (Mask m = 0; m < 64; ++m)
    for (int i = 0; i < 4; ++i) CHECK(index_unshift(i, index_shift(i, m)) == m);
}

TEST_CASE("cube construction validates functoriality") {
  Cube sq = klein_square();
  CHECK(sq.dim() == 2);
  CHECK(sq.top()->order() == 4);
  CHECK(sq.bottom()->order() == 1);

  // break one arrow: swap the two cover maps out of the top vertex
  GroupPtr k = library_group("Klein");
  Subgroup a = subgroup_generated(k, {2});
  Subgroup b = subgroup_generated(k, {1});
  QuotientResult qa = quotient(k, a);
  QuotientResult qb = quotient(k, b);
  QuotientResult qc = quotient(k, setwise_product(a, b));
  std::map<std::pair<Mask, int>, GroupHom> covers;
  covers.emplace(std::make_pair(Mask{3}, 0), qa.projection);
  covers.emplace(std::make_pair(Mask{3}, 1), qb.projection);
  covers.emplace(std::make_pair(Mask{1}, 0),
                 induced_between_quotients(qa, qc, identity_hom(k)));
  covers.emplace(std::make_pair(Mask{2}, 1),
                 induced_between_quotients(qb, qc, identity_hom(k)));
  // vertices wired so the coface square cannot commute: swap the two sides
  std::vector<GroupPtr> verts{qc.group, qb.group, qa.group, k};
  CHECK_THROWS_AS(Cube(2, verts, covers), ShapeMismatch);
}

TEST_CASE("delta unfolds and reassembles") {
  Cube sq = d4_square();
  CubeMorphism d1 = delta(sq, 1);
  CHECK(d1.dim() == 1);
  CHECK(d1.dom.top() == sq.top());
  CHECK(d1.dom.bottom() == sq.vertex(0b10));
  CHECK(d1.cod.top() == sq.vertex(0b01));
  CHECK(hom_equal(d1.at(1), sq.cover(3, 1)));

  CubeMorphism d0 = delta(sq, 0);
  CHECK(d0.dom.bottom() == sq.vertex(0b01));
  CHECK(d0.cod.top() == sq.vertex(0b10));

  CHECK(cube_equal(assemble_at(d1, 1), sq));
  CHECK(cube_equal(assemble_at(d0, 0), sq));

  // one-dimensional case: delta is the arrow itself
  GroupPtr s3 = library_group("S3");
  Cube arrow = quotient_lattice_cube(s3, {subgroup_generated(s3, {1})});
  CubeMorphism m = delta(arrow, 0);
  CHECK(m.dim() == 0);
  CHECK(hom_equal(m.at(0), arrow.cover(1, 0)));

  CHECK_THROWS_AS(delta(Cube::point(s3), 0), IndexOutOfRange);
  CHECK_THROWS_AS(delta(sq, 2), IndexOutOfRange);
}

TEST_CASE("iota") {
  GroupPtr s3 = library_group("S3");
  Cube i0 = iota(0, s3);
  CHECK(i0.dim() == 0);
  CHECK(i0.top() == s3);

  Cube i1 = iota(1, cyclic_group(2));
  CHECK(i1.top()->order() == 2);
  CHECK(i1.bottom()->order() == 1);

  Cube i2 = iota(2, s3);
  CHECK(i2.top() == s3);
  for (Mask s = 0; s < 3; ++s) CHECK(i2.vertex(s)->order() == 1);
  CHECK(is_n_fold_extension(i2));
}

TEST_CASE("rho carries the expected vertex arrows") {
  Cube sq = d4_square();
  for (int i = 0; i < 2; ++i) {
    ArrowCube r = rho(sq, i);
    CHECK(r.dim() == 1);
    for (Mask s = 0; s < 2; ++s) {
      Mask si = index_shift(i, s);
      GroupHom arrow = r.vertex_arrow(s);
      CHECK(arrow.dom == sq.vertex(si | (Mask{1} << i)));
      CHECK(arrow.cod == sq.vertex(si));
    }
  }
  CHECK_THROWS_AS(rho(sq, 2), IndexOutOfRange);
}

TEST_CASE("double extension checks on squares") {
  auto surj = [](const GroupHom& h) { return is_surjective(h); };

  // the Klein projection square is a double extension
  GroupPtr z2 = cyclic_group(2);
  ProductResult pr = direct_product(z2, z2);
  CommSquare good{pr.proj_right, pr.proj_left, to_terminal(z2), to_terminal(z2)};
  CHECK(is_double_extension(good, surj));

  // the diagonal witness: all four maps surjective, comparison is not
  GroupPtr klein = pr.group;
  Subgroup diag{klein, {0, 3}};
  SubgroupEmbedding diag_emb = sub_as_group(diag);
  CommSquare bad{compose(pr.proj_right, diag_emb.inclusion),
                 compose(pr.proj_left, diag_emb.inclusion), to_terminal(z2),
                 to_terminal(z2)};
  CHECK(is_surjective(bad.top));
  CHECK(is_surjective(bad.left));
  CHECK_FALSE(is_double_extension(bad, surj));

  // square whose top-left is the pullback of the legs
  GroupPtr s3 = library_group("S3");
  GroupHom sign = quotient(s3, subgroup_generated(s3, {1})).projection;
  PullbackResult pb = pullback(sign, sign);
  CommSquare fromPb{pb.to_right, pb.to_left, sign, sign};
  CHECK(is_double_extension(fromPb, surj));

  // D4 over (Z2, Z2, 1): comparison has full image
  Cube sq = d4_square();
  CHECK(is_n_fold_extension(sq));
}

TEST_CASE("n-fold extension statuses") {
  GroupPtr s3 = library_group("S3");
  Cube arrow = quotient_lattice_cube(s3, {subgroup_generated(s3, {1})});
  CHECK(is_n_fold_extension(arrow));

  // non-surjective 1-cube
  SubgroupEmbedding a3 = sub_as_group(subgroup_generated(s3, {1}));
  Cube bad = one_cube(a3.inclusion);
  CHECK_FALSE(is_n_fold_extension(bad));

  CHECK(is_n_fold_extension(klein_square()));
  CHECK(is_n_fold_extension(d4_square()));

  // statuses agree through every direction
  Cube sq = d4_square();
  CHECK(extension_status_via(sq, 0));
  CHECK(extension_status_via(sq, 1));

  // the diagonal square as a cube: vertices Z2 (diagonal), Z2, Z2, 1
  GroupPtr z2 = cyclic_group(2);
  ProductResult pr = direct_product(z2, z2);
  SubgroupEmbedding diag = sub_as_group(Subgroup{pr.group, {0, 3}});
  std::vector<GroupPtr> verts{FinGroup::trivial(), z2, z2, diag.group};
  std::map<std::pair<Mask, int>, GroupHom> covers;
  covers.emplace(std::make_pair(Mask{3}, 0), compose(pr.proj_left, diag.inclusion));
  covers.emplace(std::make_pair(Mask{3}, 1), compose(pr.proj_right, diag.inclusion));
  covers.emplace(std::make_pair(Mask{1}, 0), to_terminal(z2));
  covers.emplace(std::make_pair(Mask{2}, 1), to_terminal(z2));
  Cube diag_cube(2, std::move(verts), std::move(covers));
  CHECK_FALSE(is_n_fold_extension(diag_cube));
  CHECK_FALSE(extension_status_via(diag_cube, 0));
  CHECK_FALSE(extension_status_via(diag_cube, 1));
}

TEST_CASE("pointwise limits of cubes") {
  Cube sq = klein_square();
  CubeMorphism d1 = delta(sq, 1);

  CubeKernel k = cube_kernel(d1);
  CHECK(k.kernel.dim() == 1);
  CHECK(k.kernel.top()->order() == 2);
  CHECK(k.kernel.bottom()->order() == 2);
  CHECK(is_surjective(k.kernel.cover(1, 0)));

  CubeKernel kid = cube_kernel(identity_morphism(sq));
  for (Mask s = 0; s <= sq.full_mask(); ++s)
    CHECK(kid.kernel.vertex(s)->order() == 1);

  CubeKernelPair kp = cube_kernel_pair(d1);
  for (Mask s = 0; s < 2; ++s) {
    PullbackResult direct = pullback(d1.at(s), d1.at(s));
    CHECK(kp.apex.vertex(s)->order() == direct.group->order());
  }
  CHECK(is_surjective(kp.pi1));
  CHECK(is_surjective(kp.pi2));
}

TEST_CASE("3-cube from coordinate kernels") {
  GroupPtr z2cubed = library_group("Z2^3");
  // coordinate subgroups of (Z2 x Z2) x Z2 under lexicographic ids
  Subgroup n0 = subgroup_generated(z2cubed, {4});
  Subgroup n1 = subgroup_generated(z2cubed, {2});
  Subgroup n2 = subgroup_generated(z2cubed, {1});
  Cube c = quotient_lattice_cube(z2cubed, {n0, n1, n2});
  CHECK(c.dim() == 3);
  CHECK(is_n_fold_extension(c));
  for (int i = 0; i < 3; ++i) CHECK(extension_status_via(c, i));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) CHECK(double_status_via(c, i, j));
  for (int i = 0; i < 3; ++i) CHECK(is_rho_extension(rho(c, i)));
}

TEST_CASE("cube document equality and permutation") {
  Cube sq = d4_square();
  CHECK(cube_equal(sq, sq));
  Cube flipped = permute_directions(sq, {1, 0});
  CHECK(flipped.vertex(0b01) == sq.vertex(0b10));
  CHECK(cube_equal(permute_directions(flipped, {1, 0}), sq));
  CHECK(is_n_fold_extension(flipped));
}
