#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mapref/builders.hpp"
#include "mapref/taxonomy.hpp"

using namespace mapref;

namespace {

Perm cyc(std::size_t n, const char* text) { return Perm::parse_cycles(n, text); }

FlagMap two_flag(bool r0_trivial, bool r1_trivial, bool r2_trivial) {
  auto pick = [](bool trivial) { return trivial ? Perm(2) : cyc(2, "(0 1)"); };
  return FlagMap::validate(pick(r0_trivial), pick(r1_trivial), pick(r2_trivial));
}

FlagMap four_flag(const char* r1) {
  return FlagMap::validate(cyc(4, "(0 1)(2 3)"), cyc(4, r1), cyc(4, "(0 3)(1 2)"));
}

// tetrahedron with its edge 0-1 subdivided by vertex 4
FlagMap subdivided_tetrahedron() {
  return oriented_to_flags(rotation_from_faces(5, {{0, 4, 1, 2}, {0, 3, 1, 4}, {0, 2, 3}, {1, 3, 2}}));
}

}  // namespace

TEST_CASE("type table") {
  CHECK(gw_table().size() == 14);
  CHECK(gw_type_info("3").cr == Range{1, 4});
  CHECK(gw_type_info("2*").cr == Range{1, 3});
  for (const char* zero : {"5", "5*", "5P", "2Pex"}) CHECK(gw_type_info(zero).cr == Range{0, 0});
  CHECK(gw_type_info("2P").cr == Range{1, 2});
  CHECK(gw_type_info("3").symbols.empty());
  CHECK(gw_type_info("1").symbols == "VFP");
  CHECK_THROWS_AS(gw_type_info("6"), std::invalid_argument);
}

TEST_CASE("dual labels") {
  CHECK(dual_label("2") == "2*");
  CHECK(dual_label("2*") == "2");
  CHECK(dual_label("4") == "4*");
  CHECK(dual_label("5") == "5*");
  CHECK(dual_label("2ex") == "2*ex");
  CHECK(dual_label("2*ex") == "2ex");
  CHECK(dual_label("3") == "3");
  CHECK(dual_label("1") == "1");
  for (const auto& t : gw_table()) CHECK(dual_label(dual_label(t.label)) == t.label);
}

TEST_CASE("edge-transitivity") {
  CHECK(is_edge_transitive(torus44(2, 0)));
  CHECK(is_edge_transitive(branched_double_cover(4).cover.map));
  CHECK(is_edge_transitive(example52_cube().map));
  CHECK_FALSE(is_edge_transitive(subdivided_tetrahedron()));
  CHECK_THROWS_AS(gw_type(subdivided_tetrahedron()), NotEdgeTransitive);
}

TEST_CASE("two-flag quotients") {
  CHECK(classify_quotient(two_flag(false, false, false)).label == "2Pex");
  CHECK(classify_quotient(two_flag(true, false, false)).label == "2*ex");
  CHECK(classify_quotient(two_flag(false, true, false)).label == "2P");
  CHECK(classify_quotient(two_flag(false, false, true)).label == "2ex");
  CHECK(classify_quotient(two_flag(true, true, false)).label == "2*");
  CHECK(classify_quotient(two_flag(false, true, true)).label == "2");
  CHECK_THROWS_AS(classify_quotient(two_flag(true, false, true)), UnclassifiableQuotient);
}

TEST_CASE("four-flag quotients in canonical form") {
  CHECK(classify_quotient(four_flag("()")).label == "3");
  CHECK(classify_quotient(four_flag("(1 2)")).label == "4");
  CHECK(classify_quotient(four_flag("(0 3)")).label == "4");
  CHECK(classify_quotient(four_flag("(1 3)")).label == "4P");
  CHECK(classify_quotient(four_flag("(0 2)")).label == "4P");
  CHECK(classify_quotient(four_flag("(2 3)")).label == "4*");
  CHECK(classify_quotient(four_flag("(0 1)")).label == "4*");
  CHECK(classify_quotient(four_flag("(0 1)(2 3)")).label == "5*");
  CHECK(classify_quotient(four_flag("(0 2)(1 3)")).label == "5P");
  CHECK(classify_quotient(four_flag("(0 3)(1 2)")).label == "5");
}

TEST_CASE("four-flag quotients under every relabelling") {
  for (const char* r1 : {"()", "(1 2)", "(1 3)", "(2 3)", "(0 1)(2 3)", "(0 2)(1 3)", "(0 3)(1 2)"}) {
    const FlagMap q = four_flag(r1);
    const std::string label = classify_quotient(q).label;
    std::vector<Point> img{0, 1, 2, 3};
    do {
      CHECK(classify_quotient(relabel(q, Perm(img))).label == label);
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("types of built maps") {
  CHECK(gw_type(torus44(2, 1)).label == "2Pex");
  CHECK(gw_type(torus44(2, 0)).label == "1");
  const FlagMap ex52 = example52_cube().map;
  CHECK(gw_type(ex52).label == "3");
  CHECK(classify(ex52).reflections.cr == 2);
  const FlagMap p = cor43_cover(necklace({0, 2, 0, 0, 0, {}}).map).cover.map;
  CHECK(gw_type(p).label == "2P");
  const int cr = classify(p).reflections.cr;
  CHECK((cr == 1 || cr == 2));
}

TEST_CASE("classification line") {
  CHECK(classify(torus44(2, 0)).line() == "type=1 symbols=VFP cr=3 cr_i=1,1,1 bounds_ok=true");
  CHECK(classify(torus44(2, 1)).line() == "type=2Pex symbols=VFP cr=0 cr_i=0,0,0 bounds_ok=true");
  const auto c = classify(example52_cube().map);
  CHECK(c.symbols_ok);
  CHECK(c.bounds_ok);
  CHECK_THROWS_AS(classify(subdivided_tetrahedron()), NotEdgeTransitive);
}

TEST_CASE("type is invariant under relabelling and duality pairs types") {
  for (const FlagMap& m : {torus44(2, 1), example52_cube().map, petrie_dual(torus44(3, 1)),
                           cor43_cover(necklace({0, 2, 0, 0, 0, {}}).map).cover.map}) {
    std::vector<Point> img(m.n_flags());
    std::iota(img.begin(), img.end(), Point{0});
    std::rotate(img.begin(), img.begin() + 3, img.end());
    CHECK(gw_type(relabel(m, Perm(img))).label == gw_type(m).label);
    CHECK(gw_type(dual(m)).label == dual_label(gw_type(m).label));
  }
}

TEST_CASE("cr bound over closed maps") {
  const Thm13Report r = check_thm13({torus44(2, 0), torus44(2, 1), cube(), example52_cube().map,
                                     branched_double_cover(4).cover.map, disc_n3(), subdivided_tetrahedron()});
  CHECK(r.maps_seen == 7);
  CHECK(r.bordered_skipped == 1);
  CHECK(r.entries.size() == 5);
  CHECK(r.all_passed());
  const auto four = std::find_if(r.entries.begin(), r.entries.end(), [](const Thm13Entry& e) { return e.cr == 4; });
  REQUIRE(four != r.entries.end());
  CHECK(four->label == "3");
}
