#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mapref/flagmap.hpp"
#include "mapref/symmetry.hpp"

namespace mapref {

struct AnalysisReport {
  std::size_t n_flags = 0;
  std::size_t vertices = 0, edges = 0, faces = 0, petrie_polygons = 0;
  std::vector<std::size_t> vertex_orbit_sizes;  // distinct, ascending
  std::vector<std::size_t> face_orbit_sizes;
  SurfaceReport surface;
  std::size_t aut_order = 0;
  TransitivityProfile transitivity;
  ReflectionReport reflections;
  std::optional<std::string> type;  // edge-transitive maps only
  std::string observed_symbols;
  std::optional<bool> type_bounds_ok;
  Cor42Report cor42;
  bool cor42_ok = false;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
  /// Everything except the labels of reflection representatives.
  nlohmann::ordered_json invariant_json() const;
};

AnalysisReport analyze(const FlagMap& m);

}  // namespace mapref
