#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hext/library.hpp"
#include "hext/parse.hpp"

using namespace hext;

TEST_CASE("group spec grammar") {
  CHECK(parse_group("Z 4")->order() == 4);
  CHECK(parse_group("Z4")->order() == 4);
  CHECK(parse_group("z12")->order() == 12);
  CHECK(parse_group("S3")->order() == 6);
  CHECK(parse_group("klein")->order() == 4);
  CHECK(parse_group("Z2 x S3")->order() == 12);
  CHECK(parse_group("Z2 x Z2 x Z2")->order() == 8);
  CHECK(parse_group("perm 3: (0 1 2), (0 1)")->order() == 6);
  CHECK(parse_group("perm 4: (0 1 2 3)")->order() == 4);
  // non-disjoint cycles compose right to left: (0 1)(1 2) sends 1 to 0
  GroupPtr g = parse_group("perm 3: (0 1)(1 2)");
  CHECK(g->order() == 3);
  CHECK(parse_group("table [[0,1],[1,0]]")->order() == 2);
  CHECK(parse_group("table [[0,1],[1,0]] x Z3")->order() == 6);
}

TEST_CASE("parse errors carry position") {
  CHECK_THROWS_AS(parse_group("(0 1"), ParseError);
  try {
    parse_group("perm 3: (0 1");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column >= 9);
    CHECK(e.expected.find(")") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_group("Z"), ParseError);
  CHECK_THROWS_AS(parse_group("nonsense"), ParseError);
  CHECK_THROWS_AS(parse_group("S3 x"), ParseError);
  CHECK_THROWS_AS(parse_group("perm 3: (0 1 5)"), ParseError);
  CHECK_THROWS_AS(parse_group("table [[0,1],[0,1]]"), ValidationError);
}

TEST_CASE("subset keys") {
  CHECK(subset_string(0) == "{}");
  CHECK(subset_string(0b101) == "{0,2}");
  CHECK(parse_subset("{}") == 0u);
  CHECK(parse_subset("{0,2}") == 0b101u);
  CHECK(parse_subset("{ 1 }") == 0b10u);
  CHECK_THROWS_AS(parse_subset("0,1"), ValidationError);
  for (Mask m = 0; m < 32; ++m) CHECK(parse_subset(subset_string(m)) == m);
}

TEST_CASE("cube documents resolve") {
  nlohmann::json doc = {
      {"dim", 2},
      {"normals", {{"A", {2}}, {"B", {1}}}},
      {"vertices",
       {{"{0,1}", "Klein"},
        {"{0}", "top / A"},
        {"{1}", "top / B"},
        {"{}", "top / A*B"}}}};
  Cube c = parse_cube_document(doc);
  CHECK(c.dim() == 2);
  CHECK(c.top()->order() == 4);
  CHECK(c.vertex(1)->order() == 2);
  CHECK(is_n_fold_extension(c));

  // dim 0
  nlohmann::json point = {{"dim", 0}, {"vertices", {{"{}", "S3"}}}};
  CHECK(parse_cube_document(point).top()->order() == 6);

  // explicit table vertex and explicit arrows
  nlohmann::json arrow = {
      {"dim", 1},
      {"vertices",
       {{"{0}", "Z4"}, {"{}", {{"table", {{0, 1}, {1, 0}}}}}}},
      {"arrows", {{"{0}->{}", {0, 1, 0, 1}}}}};
  Cube a = parse_cube_document(arrow);
  CHECK(a.top()->order() == 4);
  CHECK(is_n_fold_extension(a));

  // sparse generator-image arrow closed multiplicatively
  nlohmann::json sparse = {
      {"dim", 1},
      {"vertices",
       {{"{0}", "Z4"}, {"{}", {{"table", {{0, 1}, {1, 0}}}}}}},
      {"arrows", {{"{0}->{}", {{"1", 1}}}}}};
  Cube s = parse_cube_document(sparse);
  CHECK(s.cover(1, 0).map == a.cover(1, 0).map);
}

TEST_CASE("cube document failure modes") {
  nlohmann::json missing = {{"dim", 1}, {"vertices", {{"{0}", "Z4"}}}};
  CHECK_THROWS_AS(parse_cube_document(missing), ValidationError);

  nlohmann::json not_normal = {
      {"dim", 1},
      {"normals", {{"T", {2}}}},  // a transposition generates a non-normal Z2
      {"vertices", {{"{0}", "S3"}, {"{}", "top / T"}}}};
  CHECK_THROWS_AS(parse_cube_document(not_normal), ValidationError);

  nlohmann::json free_vertex = {
      {"dim", 1}, {"vertices", {{"{0}", "Z4"}, {"{}", "Z2"}}}};
  CHECK_THROWS_AS(parse_cube_document(free_vertex), ValidationError);

  nlohmann::json bad_arrow = {
      {"dim", 1},
      {"vertices", {{"{0}", "Z4"}, {"{}", "Z2"}}},
      {"arrows", {{"{0}->{}", {0, 1, 1, 0}}}}};  // not multiplicative
  CHECK_THROWS_AS(parse_cube_document(bad_arrow), ValidationError);

  // functoriality failure is reported with the offending coface square:
  // collapsing {0}->{} while {1}->{} still projects breaks commutation
  nlohmann::json twisted = {
      {"dim", 2},
      {"normals", {{"A", {2}}, {"E", nlohmann::json::array()}}},
      {"vertices",
       {{"{0,1}", "Z4"},
        {"{0}", "top / A"},
        {"{1}", "top"},
        {"{}", "top / A"}}},
      {"arrows", {{"{0}->{}", {0, 0}}}}};
  try {
    parse_cube_document(twisted);
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("coface") != std::string::npos);
  }
}

TEST_CASE("round trip through the document form") {
  GroupPtr d4 = library_group("D4");
  Cube sq = quotient_lattice_cube(
      d4, {subgroup_generated(d4, {1}), subgroup_generated(d4, {2, 3})});
  nlohmann::json doc = cube_to_document(sq);
  Cube back = parse_cube_document(doc);
  CHECK(cube_equal(sq, back));
  // documents are byte-stable
  CHECK(doc.dump() == cube_to_document(back).dump());
}

TEST_CASE("subgroup json") {
  GroupPtr s3 = library_group("S3");
  nlohmann::json j = subgroup_json(subgroup_generated(s3, {1}));
  CHECK(j["order"] == 3);
  CHECK(j["generators"].size() == 1);
}
