#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mapref/builders.hpp"
#include "mapref/symmetry.hpp"
#include "mapref/taxonomy.hpp"

using namespace mapref;

namespace {

Perm cyc(std::size_t n, const char* text) { return Perm::parse_cycles(n, text); }

std::vector<std::size_t> sorted_class_sizes(const FlagMap& m) {
  std::vector<std::size_t> out;
  for (const auto& c : reflections(m).classes) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  return out;
}

// orbit size of the cell containing each flag
std::vector<std::size_t> orbit_size_of(const Partition& p, std::size_t n) {
  std::vector<std::size_t> out(n);
  for (const auto& b : p) {
    for (Point x : b) out[x] = b.size();
  }
  return out;
}

std::vector<InvolutionQuadruple> s5_quadruples() {
  return {make_quadruple({cyc(5, "(0 1)(2 3)"), cyc(5, "(2 3)"), cyc(5, "(1 2)"), cyc(5, "(3 4)")}),
          make_quadruple({cyc(5, "(0 1)"), cyc(5, "(1 2)(3 4)"), cyc(5, "(3 4)"), cyc(5, "(2 3)")})};
}

}  // namespace

TEST_CASE("catalog") {
  const FlagMap d = disc_n3();
  CHECK(d.n_flags() == 4);
  CHECK(d.r(1).is_identity());
  const FlagMap t = torus44(2, 0);
  CHECK(t.n_flags() == 32);
  CHECK(euler_characteristic(t) == 0);
  CHECK(reflections(t).cr == 3);
  const FlagMap u = torus44(2, 1);
  CHECK(cells(u).n_vertices() == 5);
  CHECK(cells(u).n_edges() == 10);
  CHECK(u.n_flags() == 40);
  CHECK(reflections(u).cr == 0);
  CHECK(catalog("cube") == cube());
  CHECK(catalog("torus44", 3, 1) == torus44(3, 1));
  CHECK_THROWS_AS(torus44(0, 0), BuildError);
  CHECK_THROWS_AS(catalog("dodecahedron"), BuildError);
}

TEST_CASE("oriented maps to flags") {
  const SignedRotationSystem monogon{cyc(2, "(0 1)"), cyc(2, "(0 1)"), {1, 1}};
  const FlagMap m = oriented_to_flags(monogon);
  CHECK(m.n_flags() == 4);
  const auto c = cells(m);
  CHECK(c.n_vertices() == 1);
  CHECK(c.n_edges() == 1);
  CHECK(c.n_faces() == 2);
  CHECK(euler_characteristic(m) == 2);

  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Point> rot(12), inv(12);
    for (Point i = 0; i < 12; ++i) rot[i] = inv[i] = i;
    std::shuffle(rot.begin(), rot.end(), rng);
    std::vector<Point> order(inv);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < 12; i += 2) {
      inv[order[i]] = order[i + 1];
      inv[order[i + 1]] = order[i];
    }
    try {
      const FlagMap r = oriented_to_flags({Perm(rot), Perm(inv), std::vector<std::int8_t>(12, 1)});
      CHECK(orientability_and_boundary(r).orientable);
    } catch (const MapAxiomError& e) {
      CHECK(e.axiom() == Axiom::disconnected);
    }
  }
  CHECK_THROWS_AS(SignedRotationSystem({cyc(2, "(0 1)"), Perm(2), {1, 1}}).validate(), BuildError);
  CHECK_THROWS_AS(SignedRotationSystem({cyc(2, "(0 1)"), cyc(2, "(0 1)"), {1, -1}}).validate(), BuildError);
}

TEST_CASE("dihedral products") {
  const auto c1 = dihedral_product({1});
  CHECK(c1.group.elements().size() == 2);
  CHECK(c1.classes.at(0).size() == 1);
  const auto c2 = dihedral_product({2});
  CHECK(c2.group.elements().size() == 8);
  CHECK(c2.classes.at(0).size() == 2);
  const auto c3 = dihedral_product({3});
  CHECK(c3.group.elements().size() == 6);
  CHECK(c3.classes.at(0).size() == 3);
  const auto c12 = dihedral_product({1, 2});
  CHECK(c12.group.elements().size() == 16);
  for (const auto* d : {&c1, &c2, &c3, &c12}) CHECK(d->record.all_passed());
  CHECK_THROWS_AS(dihedral_product({}), BuildError);
  CHECK_THROWS_AS(dihedral_product({0}), BuildError);
}

TEST_CASE("Cayley tubes") {
  const TubeResult ex = example21_tube(true);
  CHECK(ex.record.all_passed());
  const auto s = orientability_and_boundary(ex.map);
  CHECK(s.euler_characteristic == -24);
  CHECK(s.genus == 13);
  CHECK(sorted_class_sizes(ex.map) == std::vector<std::size_t>{6});

  const TubeResult plain = example21_tube(false);
  const auto c = cells(plain.map);
  CHECK(c.n_vertices() == 24);
  CHECK(c.n_edges() == 3 * 24 * 3 / 2);
  CHECK(c.n_faces() == 24 * (2 + 3) / 2);

  // C2 with k = l = 1: a sphere
  const TubeResult sphere = dihedral_tube({1}, false);
  CHECK(sphere.map.n_flags() == 12);
  CHECK(orientability_and_boundary(sphere.map).euler_characteristic == 2);

  for (const auto& dims : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}}) {
    const TubeResult t = dihedral_tube(dims, true);
    CHECK(t.record.all_passed());
    std::vector<std::size_t> expected(dims.begin(), dims.end());
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_class_sizes(t.map) == expected);
    const auto order = static_cast<long long>(dihedral_product(dims).group.elements().size());
    CHECK(euler_characteristic(t.map) == order * (2 - static_cast<long long>(t.slots)));
  }
}

TEST_CASE("Cayley tube input errors") {
  const std::vector<Perm> gens{cyc(4, "(0 1)"), cyc(4, "(0 2 3)")};
  const PermGroup s4 = closure(gens);
  const GPlusTest even = [](const Perm& p) { return parity(p) == Parity::even; };
  CHECK_THROWS_AS(cayley_tube({&s4, even, {gens[1], gens[0]}, 1, false}), BuildError);
  CHECK_THROWS_AS(cayley_tube({&s4, even, {gens[0]}, 1, false}), BuildError);
  CHECK_THROWS_AS(cayley_tube({&s4, even, {gens[0], cyc(4, "(0 2)"), gens[1]}, 2, false}), BuildError);
}

TEST_CASE("necklaces") {
  CHECK(necklace({1, 2, 1, 0, 0, {}}).map.n_flags() == 8);
  CHECK(necklace({1, 1, 1, 0, 0, {}}).map.n_flags() == 5);
  const auto single = necklace({1, 0, 0, 0, 0, {}});
  CHECK(single.map.n_flags() == 2);
  CHECK(prop41_counts(single.map) == std::array<int, 3>{1, 0, 0});
  CHECK_THROWS_AS(necklace({1, 1, 0, 0, 0, {}}), BuildError);
  CHECK_THROWS_AS(necklace({0, 0, 0, 0, 0, {}}), BuildError);
  CHECK_THROWS_AS(necklace({1, 2, 1, 0, 0, {Bead::sigma4}}), BuildError);
  for (int c0 = 0; c0 <= 3; ++c0) {
    for (int c1 = 0; c1 <= 3; ++c1) {
      for (int c2 = 0; c2 <= 3; ++c2) {
        if (c0 + c1 + c2 == 0 || (c1 % 2 == 1 && (c0 == 0 || c2 == 0))) continue;
        CHECK(prop41_counts(necklace({c0, c1, c2, 0, 0, {}}).map) == std::array<int, 3>{c0, c1, c2});
        CHECK(prop41_counts(necklace({c0, c1, c2, 1, 1, {}}).map) == std::array<int, 3>{c0, c1, c2});
      }
    }
  }
}

TEST_CASE("voltage covers") {
  const FlagMap t = torus44(2, 0);
  const VoltageCover trivial = voltage_cover(t, 1, Voltage(t.n_flags(), {0, 0, 0}));
  CHECK(trivial.map.n_flags() == t.n_flags());
  CHECK(find_isomorphism(trivial.map, t).has_value());
  CHECK(trivial.deck_order == 1);

  Voltage bad(t.n_flags(), {0, 0, 0});
  bad[0][0] = bad[t.apply(0, 0)][0] = 1;
  CHECK_THROWS_AS(voltage_cover(t, 1, bad), EdgeOrbitBranching);

  const auto d = branched_double_cover(4);
  CHECK(d.record.all_passed());
  CHECK(d.cover.map.n_flags() <= t.n_flags() * 8);
}

TEST_CASE("covers for the commutator-square subgroup") {
  const Cor43Result disc = cor43_cover(disc_n3());
  CHECK(disc.generators == 5);
  // the (r0 r2)^2 walk around the one edge uses the non-tree wall, so one relation survives
  CHECK(disc.relation_rank == 1);
  CHECK(disc.cover.dimension == 4);
  CHECK(disc.cover.deck_order == 16);
  CHECK(is_closed(disc.cover.map));
  CHECK_FALSE(disc.record.warnings().empty());

  const Cor43Result neck = cor43_cover(necklace({1, 1, 1, 0, 0, {}}).map);
  CHECK(neck.cover.map.n_flags() == 80);
  CHECK(neck.record.all_passed());
  CHECK(neck.record.warnings().empty());
  CHECK(reflections(neck.cover.map).cr_by_type == std::array<int, 3>{1, 1, 1});
}

TEST_CASE("branched double cover of the 2 x 2 torus") {
  const auto d = branched_double_cover(2);
  const auto c = cells(d.cover.map);
  CHECK(d.cover.map.n_flags() == 64);
  CHECK(c.n_vertices() == 6);
  CHECK(c.n_edges() == 16);
  CHECK(c.n_faces() == 6);
  CHECK(orientability_and_boundary(d.cover.map).genus == 3);
  // b = 2 is 2 mod 4: no homology class survives the colour-preserving half-turns
  CHECK_FALSE(d.record.warnings().empty());
  CHECK_THROWS_AS(branched_double_cover(3), BuildError);
}

TEST_CASE("jet maps obey the valency, face and Petrie laws") {
  std::vector<InvolutionQuadruple> qs = s5_quadruples();
  qs.push_back(example52_cube().quadruple);
  qs.push_back(make_quadruple({cyc(4, "(0 1)"), cyc(4, "(1 2)"), cyc(4, "(2 3)"), cyc(4, "(0 1)")}));
  for (const auto& q : qs) {
    const FlagMap m = jet_map(q);
    const auto c = cells(m);
    const auto vsize = orbit_size_of(c.vertices, m.n_flags());
    const auto fsize = orbit_size_of(c.faces, m.n_flags());
    const auto psize = orbit_size_of(c.petrie, m.n_flags());
    for (const auto& e : c.edges) {
      std::multiset<std::size_t> v, f, p;
      for (Point x : e) {
        v.insert(vsize[x]);
        f.insert(fsize[x]);
        p.insert(psize[x]);
      }
      CHECK(v == std::multiset<std::size_t>{2 * 2 * q.order(0, 1), 2 * 2 * q.order(0, 1), 2 * 2 * q.order(2, 3),
                                            2 * 2 * q.order(2, 3)});
      CHECK(f == std::multiset<std::size_t>{2 * 2 * q.order(0, 3), 2 * 2 * q.order(0, 3), 2 * 2 * q.order(1, 2),
                                            2 * 2 * q.order(1, 2)});
      CHECK(p == std::multiset<std::size_t>{2 * 2 * q.order(0, 2), 2 * 2 * q.order(0, 2), 2 * 2 * q.order(1, 3),
                                            2 * 2 * q.order(1, 3)});
    }
    // r0 and r2 only move the slot; every slot fibre holds a copy of G
    for (Point x = 0; x < m.n_flags(); ++x) {
      CHECK(m.apply(x, 0) / 4 == x / 4);
      CHECK(m.apply(x, 2) / 4 == x / 4);
      CHECK(m.apply(x, 1) % 4 == x % 4);
    }
  }
}

TEST_CASE("explicit and algebraic jet reports agree") {
  for (const auto& q : s5_quadruples()) {
    const PermGroup g = closure(q.s);
    REQUIRE(g.elements().size() <= 200);
    const FlagMap m = jet_map(q, g);
    const auto alg = algebraic_jet_report(make_quadruple(q.s, JetMode::algebraic));
    const auto exp = explicit_jet_report(q, g);
    CHECK(alg.group == "S5");
    CHECK(alg.order == std::optional<std::uint64_t>{120});
    CHECK(alg.cr == exp.cr);
    CHECK(alg.cr == reflections(m).cr);
    CHECK(alg.euler_characteristic == std::optional<long long>{euler_characteristic(m)});
    CHECK(alg.orientable == orientability_and_boundary(m).orientable);
    CHECK(alg.valencies == exp.valencies);
  }
}

TEST_CASE("cube example") {
  const Example52 ex = example52_cube();
  CHECK(ex.record.all_passed());
  CHECK(ex.map.n_flags() == 192);
  CHECK(orientability_and_boundary(ex.map).genus == 8);
  CHECK(ex.quadruple.order(0, 1) == 2);
  CHECK(ex.quadruple.order(1, 2) == 3);
  CHECK(ex.quadruple.order(1, 3) == 3);
  CHECK(ex.quadruple.order(2, 3) == 3);
  CHECK(ex.quadruple.order(0, 2) == 4);
  CHECK(ex.quadruple.order(0, 3) == 4);
  const auto r = reflections(ex.map);
  CHECK(r.cr == 2);
  CHECK(gw_type(ex.map).label == "3");
}

TEST_CASE("path families") {
  const PathFamily f33 = thm51_family(3, 3);
  CHECK(f33.parts == std::array<int, 4>{5, 3, 3, 1});
  CHECK(f33.n == 13);
  CHECK(f33.report.cr == 3);
  CHECK(f33.record.all_passed());
  const PathFamily f13 = thm51_family(1, 3);
  CHECK(f13.report.orientable);
  const PathFamily f44 = thm51_family(4, 4);
  CHECK(f44.parts == std::array<int, 4>{7, 5, 3, 1});
  CHECK(f44.n == 17);
  CHECK(f44.report.cr == 4);
  for (int k = 1; k <= 4; ++k) {
    const PathFamily f = thm51_family(k, 4);
    std::vector<int> count(4, 0);
    for (int s : f.assignment) ++count[static_cast<std::size_t>(s)];
    CHECK(f.assignment.size() == 16);
    for (std::size_t i = 0; i < 4; ++i) CHECK(count[i] == f.parts[i]);
    CHECK(f.parts[0] + f.parts[1] + f.parts[2] + f.parts[3] == 16);
  }
  CHECK_THROWS_AS(thm51_family(1, 5), NonPrime);
  CHECK_THROWS_AS(thm51_family(4, 3), PartEmpty);
  CHECK_THROWS_AS(thm51_family(5, 3), BuildError);
}
