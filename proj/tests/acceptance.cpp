// Acceptance criteria 1-8. Usage: acceptance [criterion]
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "mapref/analysis.hpp"
#include "mapref/builders.hpp"
#include "mapref/suites.hpp"
#include "mapref/symmetry.hpp"
#include "mapref/taxonomy.hpp"

using namespace mapref;

namespace {

std::vector<std::size_t> valencies(const AnalysisReport& r) {
  std::vector<std::size_t> out;
  for (auto s : r.vertex_orbit_sizes) out.push_back(s / 2);
  return out;
}

std::vector<std::size_t> sorted_class_sizes(const ReflectionReport& r) {
  std::vector<std::size_t> out;
  for (const auto& c : r.classes) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  return out;
}

VerificationRecord c1_catalog() {
  VerificationRecord rec;
  struct Item {
    const char* name;
    FlagMap map;
    int cr;
  };
  for (const Item& it : {Item{"tetrahedron", tetrahedron(), 1}, Item{"cube", cube(), 2},
                         Item{"{4,4}_{2,0}", torus44(2, 0), 3}, Item{"{4,4}_{2,1}", torus44(2, 1), 0}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const AnalysisReport a = analyze(it.map);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rec.expect_eq(std::string(it.name) + " cr", it.cr, a.reflections.cr);
    rec.expect(std::string(it.name) + " under 1 s", s < 1.0, std::to_string(s));
    if (it.cr == 3) rec.expect_eq("{4,4}_{2,0} cr_i", std::array<int, 3>{1, 1, 1}, a.reflections.cr_by_type);
  }
  return rec;
}

VerificationRecord c2_necklaces() {
  VerificationRecord rec;
  int swept = 0;
  std::vector<std::string> bad;
  for (int c0 = 0; c0 <= 3; ++c0) {
    for (int c1 = 0; c1 <= 3; ++c1) {
      for (int c2 = 0; c2 <= 3; ++c2) {
        if (c0 + c1 + c2 == 0 || (c1 % 2 == 1 && (c0 == 0 || c2 == 0))) continue;
        ++swept;
        if (prop41_counts(necklace({c0, c1, c2, 0, 0, {}}).map) != std::array<int, 3>{c0, c1, c2}) {
          bad.push_back(std::to_string(c0) + std::to_string(c1) + std::to_string(c2));
        }
      }
    }
  }
  rec.expect_eq("valid triples", 49, swept);
  rec.expect_eq("triples with wrong counts", std::size_t{0}, bad.size());
  return rec;
}

VerificationRecord c3_path_families() {
  VerificationRecord rec;
  int instances = 0;
  for (int k = 1; k <= 4; ++k) {
    for (int m = 3; m <= 5; ++m) {
      if ((k == 4 && m == 3) || !is_prime(static_cast<std::uint64_t>(4 * m + 1))) continue;
      ++instances;
      const PathFamily f = thm51_family(k, m);
      const std::string tag = "k=" + std::to_string(k) + " m=" + std::to_string(m) + " ";
      rec.merge(f.record, tag);
      rec.expect_eq(tag + "cr", k, f.report.cr);
    }
  }
  rec.expect_eq("instances", 7, instances);
  return rec;
}

VerificationRecord c4_double_cover() {
  VerificationRecord rec;
  {
    const auto d = branched_double_cover(2);
    const FlagMap& m = d.cover.map;
    const AnalysisReport a = analyze(m);
    rec.expect_eq("b=2 vertices", std::size_t{6}, a.vertices);
    rec.expect_eq("b=2 edges", std::size_t{16}, a.edges);
    rec.expect_eq("b=2 faces", std::size_t{6}, a.faces);
    rec.expect_eq("b=2 euler characteristic", -4LL, a.surface.euler_characteristic);
    rec.expect_eq("b=2 genus", 3LL, a.surface.genus);
    rec.expect("b=2 orientable", a.surface.orientable);
    rec.expect("b=2 edge-transitive", a.transitivity.edge);
    rec.expect("b=2 not vertex-transitive", !a.transitivity.vertex);
    rec.expect("b=2 not face-transitive", !a.transitivity.face);
    rec.expect_eq("b=2 type", std::string("3"), a.type.value_or("none"));
    rec.expect_eq("b=2 cr", 4, a.reflections.cr);
    rec.expect_eq("b=2 |Aut|", std::size_t{16}, a.aut_order);
  }
  {
    const auto d = branched_double_cover(4);
    const AnalysisReport a = analyze(d.cover.map);
    rec.expect_eq("b=4 euler characteristic", -16LL, a.surface.euler_characteristic);
    rec.expect_eq("b=4 genus", 9LL, a.surface.genus);
    rec.expect_eq("b=4 cr", 4, a.reflections.cr);
  }
  return rec;
}

VerificationRecord c5_cube_example() {
  VerificationRecord rec;
  const Example52 ex = example52_cube();
  const AnalysisReport a = analyze(ex.map);
  rec.expect_eq("flags", std::size_t{192}, a.n_flags);
  rec.expect_eq("genus", 8LL, a.surface.genus);
  rec.expect_eq("valencies", std::vector<std::size_t>{4, 6}, valencies(a));
  rec.expect_eq("face orbit sizes", std::vector<std::size_t>{12, 16}, a.face_orbit_sizes);
  rec.expect_eq("type", std::string("3"), a.type.value_or("none"));
  rec.expect_eq("cr", 2, a.reflections.cr);
  const PermGroup g = cube_symmetry_group();
  const auto& s = ex.quadruple.s;
  auto conj = [&](const Perm& x, const Perm& y) {
    const auto cls = conjugacy_class(x, g.generators());
    return std::find(cls.begin(), cls.end(), y) != cls.end();
  };
  rec.expect("s2, s3, s4 conjugate", conj(s[1], s[2]) && conj(s[1], s[3]));
  rec.expect("s1 not conjugate to s2", !conj(s[0], s[1]));
  return rec;
}

VerificationRecord c6_tubes() {
  VerificationRecord rec;
  {
    const TubeResult t = example21_tube(true);
    const AnalysisReport a = analyze(t.map);
    rec.expect_eq("S4 euler characteristic", -24LL, a.surface.euler_characteristic);
    rec.expect_eq("S4 genus", 13LL, a.surface.genus);
    rec.expect("S4 orientable", a.surface.orientable);
    rec.expect("S4 vertex-transitive", a.transitivity.vertex);
    rec.expect_eq("S4 reflection classes", std::vector<std::size_t>{6}, sorted_class_sizes(a.reflections));
  }
  for (const auto& c : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}}) {
    std::string tag = "c=(";
    for (std::size_t i = 0; i < c.size(); ++i) tag += (i ? "," : "") + std::to_string(c[i]);
    tag += ") ";
    const TubeResult t = dihedral_tube(c, true);
    const auto order = dihedral_product(c).group.elements().size();
    const AnalysisReport a = analyze(t.map);
    std::vector<std::size_t> expected(c.begin(), c.end());
    std::sort(expected.begin(), expected.end());
    rec.expect_eq(tag + "reflection classes", expected, sorted_class_sizes(a.reflections));
    rec.expect_eq(tag + "euler characteristic", static_cast<long long>(order) * (2 - static_cast<long long>(t.slots)),
                  a.surface.euler_characteristic);
    rec.expect_eq(tag + "|Aut| = |G|", order, a.aut_order);
  }
  return rec;
}

VerificationRecord c7_commutator_cover() {
  VerificationRecord rec;
  const Cor43Result r = cor43_cover(disc_n3());
  const FlagMap& m = r.cover.map;
  rec.expect("closed", is_closed(m));
  rec.expect_eq("deck group order (C2)^5", std::size_t{32}, r.cover.deck_order);
  bool free_action = true, quotient_ok = true;
  for (const auto& c : r.record.checks()) {
    if (c.name.find("acts freely") != std::string::npos) free_action = c.passed;
    if (c.name.find("quotient by the deck group") != std::string::npos) quotient_ok = c.passed;
  }
  rec.expect("deck group acts freely", free_action);
  rec.expect("quotient is the disc map", quotient_ok);
  const auto aut = automorphism_group(m);
  const auto refl = reflections(m, aut);
  rec.expect("cr_1 >= 4", refl.cr_by_type[1] >= 4, std::to_string(refl.cr_by_type[1]));
  const bool certificate = aut.elements().size() == 32;
  const bool reported = certificate || !r.record.warnings().empty();
  rec.expect("normaliser certificate reported", reported,
             certificate ? "|Aut| = 32" : "warning: |Aut| = " + std::to_string(aut.elements().size()));
  return rec;
}

VerificationRecord c8_properties() { return property_suite(generate_corpus(2000)); }

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<VerificationRecord()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "catalog cr values", 4.0, c1_catalog},
      {2, "necklace coset counts sweep", 1.0, c2_necklaces},
      {3, "path family grid", 5.0, c3_path_families},
      {4, "branched double cover of {4,4}_{b,0}", 30.0, c4_double_cover},
      {5, "cube symmetry jet map", 60.0, c5_cube_example},
      {6, "Cayley tubes and dihedral products", 60.0, c6_tubes},
      {7, "commutator-square cover of the disc map", 10.0, c7_commutator_cover},
      {8, "property sweeps over the corpus", 600.0, c8_properties},
  };
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 8) {
      std::cerr << "usage: acceptance [1-8]\n";
      return 2;
    }
  }
  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    VerificationRecord rec;
    std::string error;
    try {
      rec = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < c.limit_s;
    const bool passed = error.empty() && rec.all_passed() && in_time;
    all = all && passed;
    std::ostringstream line;
    line << "criterion " << c.id << ": " << (passed ? "PASS" : "FAIL") << " " << c.title << " (" << rec.checks().size()
         << " checks, " << std::fixed << std::setprecision(3) << s << " s)";
    std::vector<std::string> notes;
    if (!error.empty()) notes.push_back("error: " + error);
    if (!in_time) notes.push_back("over the time limit");
    for (const auto& ch : rec.checks()) {
      if (!ch.passed) notes.push_back(ch.name + " expected " + ch.expected + " got " + ch.actual);
    }
    for (const auto& w : rec.warnings()) notes.push_back("warning: " + w);
    for (std::size_t i = 0; i < notes.size(); ++i) line << (i == 0 ? " | " : "; ") << notes[i];
    std::cout << line.str() << "\n";
  }
  return all ? 0 : 1;
}
