#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mapref/analysis.hpp"
#include "mapref/builders.hpp"
#include "mapref/io.hpp"
#include "mapref/suites.hpp"
#include "mapref/taxonomy.hpp"

using namespace mapref;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct BuildOptions {
  std::string family;
  std::string out;
  int b = 2, c = 0, k = 1, m = 3;
  int c0 = 0, c1 = 0, c2 = 0, minus = 0, star = 0;
  std::vector<int> dims{1};
  bool no_rigidify = false;
  std::string input;
  std::size_t degree = 0;
  std::string s1, s2, s3, s4;
};

std::string quadruple_text(const InvolutionQuadruple& q) {
  std::ostringstream out;
  for (std::size_t i = 0; i < 4; ++i) out << "s" << i + 1 << ": " << q.s[i].to_cycle_string() << "\n";
  out << "p:";
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) out << " p" << i + 1 << j + 1 << "=" << q.order(i, j);
  }
  return out.str() + "\n";
}

std::string jet_report_text(const AlgebraicJetReport& r) {
  std::ostringstream out;
  out << "group: " << r.group << " (degree " << r.degree << ")\n";
  if (r.order) out << "order: " << *r.order << "\n";
  out << "valencies: " << r.valencies[0] << "," << r.valencies[1] << "\n";
  out << "face sizes: " << r.faces[0] << "," << r.faces[1] << "\n";
  out << "petrie lengths: " << r.petrie[0] << "," << r.petrie[1] << "\n";
  out << "cr: " << r.cr << "\n";
  out << "classes: " << r.class_of[0] << "," << r.class_of[1] << "," << r.class_of[2] << "," << r.class_of[3] << "\n";
  out << "orientable: " << (r.orientable ? "true" : "false") << "\n";
  if (r.euler_characteristic) out << "euler characteristic: " << *r.euler_characteristic << "\n";
  return out.str();
}

int emit(const FlagMap& m, const VerificationRecord* rec, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << write_json(m);
    if (rec) std::cerr << rec->to_text();
  } else {
    write_map_file(m, out);
    if (rec) std::cout << rec->to_text();
  }
  return rec && !rec->all_passed() ? kVerifyFailed : kOk;
}

int run_build(const BuildOptions& o) {
  const std::string& f = o.family;
  if (f == "disc") return emit(disc_n3(), nullptr, o.out);
  if (f == "tetrahedron") return emit(tetrahedron(), nullptr, o.out);
  if (f == "cube") return emit(cube(), nullptr, o.out);
  if (f == "torus") return emit(torus44(o.b, o.c), nullptr, o.out);
  if (f == "tube") {
    const auto r = dihedral_tube(o.dims, !o.no_rigidify);
    return emit(r.map, &r.record, o.out);
  }
  if (f == "ex21") {
    const auto r = example21_tube(!o.no_rigidify);
    return emit(r.map, &r.record, o.out);
  }
  if (f == "necklace") {
    const auto r = necklace({o.c0, o.c1, o.c2, o.minus, o.star, {}});
    return emit(r.map, &r.record, o.out);
  }
  if (f == "cor43") {
    const FlagMap base = o.input.empty() ? disc_n3() : read_map_file(o.input);
    const auto r = cor43_cover(base);
    return emit(r.cover.map, &r.record, o.out);
  }
  if (f == "double-cover") {
    const auto r = branched_double_cover(o.b);
    return emit(r.cover.map, &r.record, o.out);
  }
  if (f == "ex52") {
    const auto r = example52_cube();
    std::cerr << quadruple_text(r.quadruple);
    return emit(r.map, &r.record, o.out);
  }
  if (f == "path-family") {
    const auto r = thm51_family(o.k, o.m);
    std::cout << "n: " << r.n << "\nparts: " << r.parts[0] << "," << r.parts[1] << "," << r.parts[2] << ","
              << r.parts[3] << "\n"
              << quadruple_text(r.quadruple) << jet_report_text(r.report) << r.record.to_text();
    return r.record.all_passed() ? kOk : kVerifyFailed;
  }
  if (f == "jet") {
    if (o.degree == 0) throw BuildError("jet needs --degree");
    const auto q = make_quadruple({Perm::parse_cycles(o.degree, o.s1), Perm::parse_cycles(o.degree, o.s2),
                                   Perm::parse_cycles(o.degree, o.s3), Perm::parse_cycles(o.degree, o.s4)});
    try {
      return emit(jet_map(q), nullptr, o.out);
    } catch (const CapExceeded&) {
      std::cout << quadruple_text(q) << jet_report_text(algebraic_jet_report(make_quadruple(q.s, JetMode::algebraic)));
      return kOk;
    }
  }
  throw BuildError("unknown family: " + f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag-permutation maps: build, analyse and classify maps and their reflections"};
  app.require_subcommand(1);

  BuildOptions bo;
  auto* build = app.add_subcommand("build", "Build a map family");
  build->add_option("family", bo.family,
                    "disc | tetrahedron | cube | torus | tube | ex21 | necklace | cor43 | double-cover | ex52 | "
                    "path-family | jet")
      ->required();
  build->add_option("-o,--output", bo.out, "Output JSON file (stdout if omitted)");
  build->add_option("--b", bo.b, "Torus / double cover parameter b");
  build->add_option("--c", bo.c, "Torus parameter c");
  build->add_option("--k", bo.k, "Path family k");
  build->add_option("--m", bo.m, "Path family m");
  build->add_option("--c0", bo.c0, "Necklace c0");
  build->add_option("--c1", bo.c1, "Necklace c1");
  build->add_option("--c2", bo.c2, "Necklace c2");
  build->add_option("--minus", bo.minus, "Necklace filler count (sigma2-)");
  build->add_option("--star", bo.star, "Necklace filler count (sigma4*)");
  build->add_option("--dims", bo.dims, "Dihedral factor sizes for tube")->delimiter(',');
  build->add_flag("--no-rigidify", bo.no_rigidify, "Skip the rigidifying loops");
  build->add_option("--input", bo.input, "Base map file for cor43 (disc map if omitted)");
  build->add_option("--degree", bo.degree, "Point count for jet");
  build->add_option("--s1", bo.s1, "Jet involution s1 in cycle notation");
  build->add_option("--s2", bo.s2, "Jet involution s2");
  build->add_option("--s3", bo.s3, "Jet involution s3");
  build->add_option("--s4", bo.s4, "Jet involution s4");

  std::string analyze_path;
  bool as_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report cells, surface, symmetry and reflections");
  analyze_cmd->add_option("file", analyze_path)->required();
  analyze_cmd->add_flag("--json", as_json, "JSON output");

  std::string classify_path;
  auto* classify_cmd = app.add_subcommand("classify", "Edge-transitive type of a map");
  classify_cmd->add_option("file", classify_path)->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "thm11 | cor12 | thm42 | cor43 | thm13 | thm51 | ex51 | ex52 | props | all")
      ->required();

  std::string dual_in, dual_out, petrie_in, petrie_out;
  auto* dual_cmd = app.add_subcommand("dual", "Write the dual map");
  dual_cmd->add_option("file", dual_in)->required();
  dual_cmd->add_option("-o,--output", dual_out)->required();
  auto* petrie_cmd = app.add_subcommand("petrie", "Write the Petrie dual");
  petrie_cmd->add_option("file", petrie_in)->required();
  petrie_cmd->add_option("-o,--output", petrie_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*build) return run_build(bo);
    if (*analyze_cmd) {
      const auto report = analyze(read_map_file(analyze_path));
      std::cout << (as_json ? report.to_json().dump(2) + "\n" : report.to_text());
      return kOk;
    }
    if (*classify_cmd) {
      const FlagMap m = read_map_file(classify_path);
      try {
        std::cout << classify(m).line() << "\n";
      } catch (const NotEdgeTransitive&) {
        std::cout << "type=none (not edge-transitive)\n";
      }
      return kOk;
    }
    if (*verify) {
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      for (const auto& n : names) {
        const auto rec = run_suite(n);
        std::cout << "== " << n << ": " << (rec.all_passed() ? "PASS" : "FAIL") << " (" << rec.checks().size()
                  << " checks, " << rec.failures() << " failed)\n"
                  << rec.to_text();
        ok = ok && rec.all_passed();
      }
      return ok ? kOk : kVerifyFailed;
    }
    if (*dual_cmd) {
      write_map_file(dual(read_map_file(dual_in)), dual_out);
      return kOk;
    }
    if (*petrie_cmd) {
      write_map_file(petrie_dual(read_map_file(petrie_in)), petrie_out);
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const MapAxiomError& e) {
    std::cerr << "error: invalid map: " << e.what() << "\n";
    return kInputError;
  } catch (const BuildError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise MAPREF_CAP)\n";
    return kInputError;
  }
  return kInputError;
}
