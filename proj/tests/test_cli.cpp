#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <set>

#include "mapref/analysis.hpp"
#include "mapref/builders.hpp"
#include "mapref/io.hpp"
#include "mapref/suites.hpp"

using namespace mapref;

TEST_CASE("JSON map format") {
  CHECK(write_json(disc_n3()) ==
        "{\"n_flags\":4,\"r\":[[1,0,3,2],[0,1,2,3],[2,3,0,1]],\"meta\":{\"name\":\"disc_n3\"}}\n");
  const FlagMap m = read_json("{\"n_flags\":2,\"r\":[[1,0],[0,1],[1,0]]}");
  CHECK(m.n_flags() == 2);
  CHECK(m.meta() == Meta::object());
  CHECK(write_json(m) == "{\"n_flags\":2,\"r\":[[1,0],[0,1],[1,0]],\"meta\":{}}\n");
}

TEST_CASE("text format") {
  CHECK(to_text(disc_n3()) == "r0: (0 1)(2 3)\nr1: ()\nr2: (0 2)(1 3)\n");
}

TEST_CASE("read errors") {
  CHECK_THROWS_AS(read_json("{"), InputError);
  CHECK_THROWS_AS(read_json("[]"), InputError);
  CHECK_THROWS_AS(read_json("{\"n_flags\":2,\"r\":[[1,0],[0,1]]}"), InputError);
  CHECK_THROWS_AS(read_json("{\"n_flags\":2,\"r\":[[1,0],[0,1],[1,2]]}"), InputError);
  CHECK_THROWS_AS(read_json("{\"n_flags\":2,\"r\":[[1,0],[0,0],[1,0]]}"), InputError);
  CHECK_THROWS_AS(read_json("{\"n_flags\":3,\"r\":[[1,2,0],[0,1,2],[1,2,0]]}"), MapAxiomError);
  CHECK_THROWS_AS(read_map_file("/nonexistent/map.json"), InputError);
}

TEST_CASE("file round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "mapref_roundtrip.json").string();
  for (const FlagMap& m : {cube(), torus44(2, 1), disc_n3(), example52_cube().map}) {
    write_map_file(m, path);
    const FlagMap back = read_map_file(path);
    CHECK(back == m);
    CHECK(back.meta() == m.meta());
    CHECK(analyze(back).to_json() == analyze(m).to_json());
  }
  std::remove(path.c_str());
}

TEST_CASE("analysis reports") {
  CHECK(analyze(cube()).reflections.cr == 2);
  const AnalysisReport t = analyze(torus44(2, 1));
  CHECK(t.reflections.cr == 0);
  CHECK(t.type == std::optional<std::string>{"2Pex"});
  const AnalysisReport d = analyze(disc_n3());
  CHECK_FALSE(d.surface.closed);
  CHECK(d.surface.euler_characteristic == 1);
  CHECK(d.surface.boundary_components == 1);

  const AnalysisReport c = analyze(cube());
  CHECK(c.n_flags == 4 * c.edges);
  CHECK(c.aut_order == 48);
  CHECK(c.cor42_ok);
  const auto j = c.to_json();
  CHECK(j["reflections"]["cr"] == 2);
  CHECK(j["reflections"]["classes"].size() == 2);
  CHECK(j["reflections"]["classes"][0].contains("representative_cycles"));
  CHECK(c.to_text().find("cr: 2\n") != std::string::npos);
  CHECK(analyze(cube()).to_json() == j);

  const AnalysisReport n = analyze(necklace({1, 1, 1, 0, 0, {}}).map);
  CHECK_FALSE(n.type.has_value());
  CHECK(n.to_json()["type"].is_null());
}

TEST_CASE("corpus") {
  const auto corpus = generate_corpus();
  CHECK(corpus.size() > 50);
  std::set<std::string> names;
  for (const auto& m : corpus) {
    CHECK(m.n_flags() <= 2000);
    names.insert(m.meta().value("name", std::string()));
  }
  CHECK(names.size() == corpus.size());
  CHECK(generate_corpus(100).size() < corpus.size());
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 9);
  CHECK(run_suite("thm51").all_passed());
  CHECK(run_suite("ex52").all_passed());
  CHECK(run_suite("thm11").all_passed());
  CHECK(run_suite("cor12").all_passed());
  CHECK(run_suite("thm42").all_passed());
  CHECK_THROWS_AS(run_suite("thm99"), std::invalid_argument);
}

TEST_CASE("property sweep") {
  const VerificationRecord r = property_suite(generate_corpus());
  CHECK(r.all_passed());
  if (!r.all_passed()) MESSAGE(r.to_text());
}
