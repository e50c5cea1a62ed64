#include "mapref/suites.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "mapref/analysis.hpp"
#include "mapref/builders.hpp"
#include "mapref/io.hpp"
#include "mapref/symmetry.hpp"
#include "mapref/taxonomy.hpp"

namespace mapref {

namespace {

FlagMap named(const FlagMap& m, const std::string& name) {
  Meta meta = m.meta().is_object() ? m.meta() : Meta::object();
  meta["name"] = name;
  return m.with_meta(std::move(meta));
}

std::string name_of(const FlagMap& m) { return m.meta().value("name", std::string("map")); }

std::string join(const std::vector<std::string>& v) {
  if (v.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

struct JetSeed {
  std::size_t degree;
  std::array<const char*, 4> s;
};

std::vector<JetSeed> jet_seeds() {
  return {
      {4, {"(0 1)", "(1 2)", "(2 3)", "(0 1)"}},
      {4, {"(0 1)", "(2 3)", "(1 2)", "(0 3)"}},
      {4, {"(0 1)(2 3)", "(1 2)", "(0 1)", "(2 3)"}},
      {4, {"(0 2)", "(0 1)(2 3)", "(1 3)", "(1 2)"}},
      {5, {"(1 4)(2 3)", "(0 1)(2 4)", "(1 4)(2 3)", "(0 2)(3 4)"}},
  };
}

}  // namespace

std::vector<FlagMap> generate_corpus(std::size_t max_flags) {
  std::vector<FlagMap> out;
  auto add = [&](const FlagMap& m, const std::string& name) {
    if (m.n_flags() <= max_flags) out.push_back(named(m, name));
  };
  auto add_with_duals = [&](const FlagMap& m, const std::string& name) {
    if (m.n_flags() > max_flags) return;
    add(m, name);
    add(dual(m), "dual(" + name + ")");
    add(petrie_dual(m), "petrie(" + name + ")");
  };

  add_with_duals(disc_n3(), "disc_n3");
  add_with_duals(tetrahedron(), "tetrahedron");
  add_with_duals(cube(), "cube");
  for (int b = 1; b <= 5; ++b) {
    for (int c = 0; c <= b; ++c) {
      if (b * b + c * c > 26) continue;
      add_with_duals(torus44(b, c), "torus44(" + std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }
  for (const auto& seed : jet_seeds()) {
    std::array<Perm, 4> s;
    std::string name = "jet";
    for (std::size_t i = 0; i < 4; ++i) {
      s[i] = Perm::parse_cycles(seed.degree, seed.s[i]);
      name += std::string(" ") + seed.s[i];
    }
    add_with_duals(jet_map(make_quadruple(s)), name);
  }
  add(example52_cube().map, "example52");
  add(branched_double_cover(2).cover.map, "double_cover(2)");
  add(branched_double_cover(4).cover.map, "double_cover(4)");
  add(example21_tube(false).map, "example21_tube");
  add(example21_tube(true).map, "example21_tube(rigid)");
  for (const auto& c : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}}) {
    std::string label;
    for (int ci : c) label += (label.empty() ? "" : ",") + std::to_string(ci);
    add(dihedral_tube(c, false).map, "dihedral_tube(" + label + ")");
    add(dihedral_tube(c, true).map, "dihedral_tube(" + label + ",rigid)");
  }
  add(cor43_cover(disc_n3()).cover.map, "cor43(disc_n3)");
  for (int c0 = 0; c0 <= 2; ++c0) {
    for (int c1 = 0; c1 <= 2; ++c1) {
      for (int c2 = 0; c2 <= 2; ++c2) {
        if (c0 + c1 + c2 == 0 || (c1 % 2 == 1 && (c0 == 0 || c2 == 0))) continue;
        const std::string label = std::to_string(c0) + "," + std::to_string(c1) + "," + std::to_string(c2);
        const FlagMap q = necklace({c0, c1, c2, 0, 0, {}}).map;
        add(q, "necklace(" + label + ")");
        // the cover grows as 2^rank; skip it once the base is too large
        if (q.n_flags() <= 8) add(cor43_cover(q).cover.map, "cor43(necklace(" + label + "))");
      }
    }
  }
  return out;
}

VerificationRecord thm13_suite(const std::vector<FlagMap>& corpus) {
  VerificationRecord rec("thm13");
  const Thm13Report r = check_thm13(corpus);
  std::vector<std::string> failed;
  for (const auto& e : r.entries) {
    if (!e.passed) failed.push_back(e.name + ": " + e.detail);
  }
  rec.expect("closed edge-transitive maps found", !r.entries.empty(), std::to_string(r.entries.size()));
  rec.expect_eq("maps violating the bound or the type bounds", std::string("none"), join(failed));
  int max_cr = 0;
  for (const auto& e : r.entries) max_cr = std::max(max_cr, e.cr);
  rec.expect("largest cr <= 4", max_cr <= 4, std::to_string(max_cr));
  if (r.bordered_skipped > 0) rec.warn(std::to_string(r.bordered_skipped) + " bordered maps skipped");
  return rec;
}

VerificationRecord property_suite(const std::vector<FlagMap>& corpus) {
  VerificationRecord rec("props");
  std::vector<std::string> cor42_bad, dual_bad, relabel_bad, roundtrip_bad;
  std::mt19937_64 rng(20240601);
  for (const auto& m : corpus) {
    const std::string name = name_of(m);
    const AnalysisReport a = analyze(m);
    if (!a.cor42_ok) cor42_bad.push_back(name);

    const AnalysisReport d = analyze(dual(m));
    const auto& ci = a.reflections.cr_by_type;
    const auto& di = d.reflections.cr_by_type;
    if (d.reflections.cr != a.reflections.cr || di[0] != ci[2] || di[1] != ci[1] || di[2] != ci[0] ||
        d.vertices != a.faces || d.faces != a.vertices || d.edges != a.edges || d.type.has_value() != a.type.has_value() ||
        (a.type && *d.type != dual_label(*a.type))) {
      dual_bad.push_back(name);
    }

    std::vector<Point> sigma(m.n_flags());
    for (Point x = 0; x < sigma.size(); ++x) sigma[x] = x;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    if (analyze(relabel(m, Perm(sigma))).invariant_json() != a.invariant_json()) relabel_bad.push_back(name);

    const std::string text = write_json(m);
    const FlagMap back = read_json(text);
    if (!(back == m) || back.meta() != m.meta() || write_json(back) != text ||
        analyze(back).to_json() != a.to_json()) {
      roundtrip_bad.push_back(name);
    }
  }
  rec.expect_eq("corpus maps", corpus.size(), corpus.size());
  rec.expect_eq("Cor 4.2 violations", std::string("none"), join(cor42_bad));
  rec.expect_eq("duality swaps cr_0 and cr_2, V and F, type pairs", std::string("none"), join(dual_bad));
  rec.expect_eq("relabelling changes a report", std::string("none"), join(relabel_bad));
  rec.expect_eq("JSON round trip differs", std::string("none"), join(roundtrip_bad));
  rec.merge(thm13_suite(corpus), "thm13: ");
  return rec;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm11", "cor12", "thm42", "cor43", "thm13",
                                              "thm51", "ex51",  "ex52",  "props"};
  return names;
}

namespace {

VerificationRecord suite_thm11() {
  VerificationRecord rec("thm11");
  const TubeResult rigid = example21_tube(true);
  rec.merge(rigid.record, "rigid: ");
  const SurfaceReport s = orientability_and_boundary(rigid.map);
  rec.expect_eq("euler characteristic", -24LL, s.euler_characteristic);
  rec.expect_eq("genus", 13LL, s.genus);
  rec.expect("orientable", s.orientable);
  rec.expect("vertex-transitive", transitivity(rigid.map).vertex);
  std::vector<std::size_t> sizes;
  for (const auto& c : reflections(rigid.map).classes) sizes.push_back(c.size);
  rec.expect_eq("reflection class sizes", std::vector<std::size_t>{6}, sizes);
  const TubeResult plain = example21_tube(false);
  rec.merge(plain.record, "plain: ");
  return rec;
}

VerificationRecord suite_cor12() {
  VerificationRecord rec("cor12");
  for (const auto& c : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}}) {
    std::string label;
    for (int ci : c) label += (label.empty() ? "" : ",") + std::to_string(ci);
    const TubeResult t = dihedral_tube(c, true);
    rec.merge(t.record, "(" + label + ") ");
    std::vector<std::size_t> expected(c.begin(), c.end()), found;
    for (const auto& cls : reflections(t.map).classes) found.push_back(cls.size);
    std::sort(expected.begin(), expected.end());
    std::sort(found.begin(), found.end());
    rec.expect_eq("(" + label + ") reflection class sizes", expected, found);
  }
  return rec;
}

VerificationRecord suite_thm42() {
  VerificationRecord rec("thm42");
  std::vector<std::string> bad;
  int valid = 0;
  for (int c0 = 0; c0 <= 3; ++c0) {
    for (int c1 = 0; c1 <= 3; ++c1) {
      for (int c2 = 0; c2 <= 3; ++c2) {
        if (c0 + c1 + c2 == 0 || (c1 % 2 == 1 && (c0 == 0 || c2 == 0))) continue;
        ++valid;
        const auto r = necklace({c0, c1, c2, 0, 0, {}});
        if (!r.record.all_passed() || prop41_counts(r.map) != std::array<int, 3>{c0, c1, c2}) {
          bad.push_back(std::to_string(c0) + "," + std::to_string(c1) + "," + std::to_string(c2));
        }
      }
    }
  }
  rec.expect_eq("valid triples with c_i <= 3", 49, valid);
  rec.expect_eq("triples with wrong counts", std::string("none"), join(bad));
  rec.expect_eq("(1,2,1) flags", std::size_t{8}, necklace({1, 2, 1, 0, 0, {}}).map.n_flags());
  rec.expect_eq("(1,1,1) flags", std::size_t{5}, necklace({1, 1, 1, 0, 0, {}}).map.n_flags());
  rec.expect_eq("(1,0,0) flags", std::size_t{2}, necklace({1, 0, 0, 0, 0, {}}).map.n_flags());
  const auto filled = necklace({1, 2, 1, 1, 1, {}});
  rec.merge(filled.record, "(1,2,1) with fillers: ");
  NecklaceSpec reordered{1, 2, 1, 0, 0, {Bead::sigma2_2, Bead::sigma2_0, Bead::sigma4}};
  rec.merge(necklace(reordered).record, "(1,2,1) reordered: ");
  return rec;
}

VerificationRecord suite_cor43() {
  VerificationRecord rec("cor43");
  const Cor43Result disc = cor43_cover(disc_n3());
  rec.merge(disc.record, "disc: ");
  rec.expect_eq("disc: deck group (C2)^5", std::size_t{32}, disc.cover.deck_order);
  rec.expect_eq("disc: cover flags", std::size_t{128}, disc.cover.map.n_flags());
  rec.expect("disc: cr_1 of the cover >= 4", reflections(disc.cover.map).cr_by_type[1] >= 4,
             std::to_string(reflections(disc.cover.map).cr_by_type[1]));
  const Cor43Result neck = cor43_cover(necklace({1, 1, 1, 0, 0, {}}).map);
  rec.merge(neck.record, "necklace(1,1,1): ");
  return rec;
}

VerificationRecord suite_thm51() {
  VerificationRecord rec("thm51");
  int instances = 0;
  for (int k = 1; k <= 4; ++k) {
    for (int m = 3; m <= 5; ++m) {
      if (k == 4 && m == 3) continue;
      if (!is_prime(static_cast<std::uint64_t>(4 * m + 1))) continue;
      ++instances;
      const PathFamily f = thm51_family(k, m);
      rec.merge(f.record, "k=" + std::to_string(k) + " m=" + std::to_string(m) + ": ");
    }
  }
  rec.expect_eq("instances", 7, instances);
  bool non_prime = false, empty = false;
  try {
    thm51_family(1, 5);
  } catch (const NonPrime&) {
    non_prime = true;
  }
  try {
    thm51_family(4, 3);
  } catch (const PartEmpty&) {
    empty = true;
  }
  rec.expect("n = 21 rejected as not prime", non_prime);
  rec.expect("k = 4, m = 3 rejected for an empty s_4", empty);
  return rec;
}

VerificationRecord suite_ex51() {
  VerificationRecord rec("ex51");
  for (int b : {2, 4}) rec.merge(branched_double_cover(b).record, "b=" + std::to_string(b) + ": ");
  return rec;
}

VerificationRecord suite_ex52() {
  VerificationRecord rec("ex52");
  rec.merge(example52_cube().record);
  return rec;
}

}  // namespace

VerificationRecord run_suite(std::string_view name) {
  if (name == "thm11") return suite_thm11();
  if (name == "cor12") return suite_cor12();
  if (name == "thm42") return suite_thm42();
  if (name == "cor43") return suite_cor43();
  if (name == "thm13") return thm13_suite(generate_corpus());
  if (name == "thm51") return suite_thm51();
  if (name == "ex51") return suite_ex51();
  if (name == "ex52") return suite_ex52();
  if (name == "props") return property_suite(generate_corpus());
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace mapref
