#include "mapref/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mapref/taxonomy.hpp"

namespace mapref {

namespace {

std::vector<std::size_t> distinct_sizes(const Partition& p) {
  std::set<std::size_t> s;
  for (const auto& b : p) s.insert(b.size());
  return {s.begin(), s.end()};
}

std::vector<int> type_list(TypeMask mask) {
  std::vector<int> out;
  for (int i = 0; i < 3; ++i) {
    if ((mask >> i) & 1u) out.push_back(i);
  }
  return out;
}

nlohmann::ordered_json transitivity_json(const TransitivityProfile& t) {
  return {{"vertex", t.vertex}, {"edge", t.edge}, {"face", t.face}, {"flag", t.flag}, {"petrie", t.petrie}};
}

nlohmann::ordered_json surface_json(const SurfaceReport& s) {
  return {{"euler_characteristic", s.euler_characteristic},
          {"orientable", s.orientable},
          {"boundary_components", s.boundary_components},
          {"genus", s.genus},
          {"closed", s.closed}};
}

nlohmann::ordered_json report_json(const AnalysisReport& r, bool with_representatives) {
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  std::vector<nlohmann::ordered_json> items;
  for (const auto& c : r.reflections.classes) {
    nlohmann::ordered_json cj{{"size", c.size}, {"types", type_list(c.types)}};
    if (with_representatives) cj["representative_cycles"] = c.representative.to_cycle_string();
    items.push_back(std::move(cj));
  }
  if (!with_representatives) std::sort(items.begin(), items.end());
  for (auto& cj : items) classes.push_back(std::move(cj));

  nlohmann::ordered_json out;
  out["n_flags"] = r.n_flags;
  out["cells"] = {{"vertices", r.vertices}, {"edges", r.edges}, {"faces", r.faces}, {"petrie", r.petrie_polygons}};
  out["vertex_orbit_sizes"] = r.vertex_orbit_sizes;
  out["face_orbit_sizes"] = r.face_orbit_sizes;
  out["surface"] = surface_json(r.surface);
  out["aut_order"] = r.aut_order;
  out["transitivity"] = transitivity_json(r.transitivity);
  out["reflections"] = {{"cr", r.reflections.cr}, {"cr_i", r.reflections.cr_by_type}, {"classes", classes}};
  out["type"] = r.type ? nlohmann::ordered_json(*r.type) : nlohmann::ordered_json(nullptr);
  out["observed_symbols"] = r.observed_symbols;
  out["type_bounds_ok"] = r.type_bounds_ok ? nlohmann::ordered_json(*r.type_bounds_ok) : nlohmann::ordered_json(nullptr);
  out["cor42"] = {{"cr_i", r.cor42.cr_by_type}, {"bound", r.cor42.bound}, {"ok", r.cor42_ok}};
  return out;
}

std::string yes_no(bool v) { return v ? "true" : "false"; }

}  // namespace

AnalysisReport analyze(const FlagMap& m) {
  AnalysisReport r;
  const auto c = cells(m);
  r.n_flags = m.n_flags();
  r.vertices = c.n_vertices();
  r.edges = c.n_edges();
  r.faces = c.n_faces();
  r.petrie_polygons = c.petrie.size();
  r.vertex_orbit_sizes = distinct_sizes(c.vertices);
  r.face_orbit_sizes = distinct_sizes(c.faces);
  r.surface = orientability_and_boundary(m);
  const auto aut = automorphism_group(m);
  r.aut_order = aut.elements().size();
  r.transitivity = transitivity(m, aut);
  r.reflections = reflections(m, aut);
  r.observed_symbols = observed_symbols(r.transitivity);
  if (r.transitivity.edge) {
    const GWType& t = classify_quotient(quotient_map(m, aut));
    r.type = t.label;
    r.type_bounds_ok = t.admits(r.reflections.cr, r.reflections.cr_by_type);
  }
  r.cor42 = cor42_report(m, aut);
  r.cor42_ok = r.cor42.holds();
  return r;
}

nlohmann::ordered_json AnalysisReport::to_json() const { return report_json(*this, true); }

nlohmann::ordered_json AnalysisReport::invariant_json() const { return report_json(*this, false); }

std::string AnalysisReport::to_text() const {
  std::ostringstream out;
  auto list = [](const auto& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  out << "flags: " << n_flags << "\n";
  out << "cells: V=" << vertices << " E=" << edges << " F=" << faces << " P=" << petrie_polygons << "\n";
  out << "vertex orbit sizes: " << list(vertex_orbit_sizes) << "\n";
  out << "face orbit sizes: " << list(face_orbit_sizes) << "\n";
  out << "euler characteristic: " << surface.euler_characteristic << "\n";
  out << "orientable: " << yes_no(surface.orientable) << "\n";
  out << "closed: " << yes_no(surface.closed) << "\n";
  out << "boundary components: " << surface.boundary_components << "\n";
  out << (surface.orientable ? "genus: " : "crosscaps: ") << surface.genus << "\n";
  out << "|Aut|: " << aut_order << "\n";
  out << "transitive: vertex=" << yes_no(transitivity.vertex) << " edge=" << yes_no(transitivity.edge)
      << " face=" << yes_no(transitivity.face) << " flag=" << yes_no(transitivity.flag)
      << " petrie=" << yes_no(transitivity.petrie) << "\n";
  out << "cr: " << reflections.cr << "\n";
  out << "cr_i: " << list(reflections.cr_by_type) << "\n";
  for (std::size_t i = 0; i < reflections.classes.size(); ++i) {
    const auto& c = reflections.classes[i];
    out << "class " << i << ": size=" << c.size << " types=" << list(type_list(c.types))
        << " representative=" << c.representative.to_cycle_string() << "\n";
  }
  out << "type: " << (type ? *type : std::string("none (not edge-transitive)")) << "\n";
  if (type_bounds_ok) out << "type bounds: " << (*type_bounds_ok ? "ok" : "violated") << "\n";
  out << "cor42: cr_i=" << list(cor42.cr_by_type) << " bound=" << list(cor42.bound) << " "
      << (cor42_ok ? "ok" : "violated") << "\n";
  return out.str();
}

}  // namespace mapref
