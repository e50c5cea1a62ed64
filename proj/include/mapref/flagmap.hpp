#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mapref/perm.hpp"

namespace mapref {

using Meta = nlohmann::ordered_json;

enum class Axiom { degree_mismatch, empty, not_involution, edge_relation, disconnected };

class MapAxiomError : public std::runtime_error {
 public:
  MapAxiomError(Axiom axiom, int generator, const std::string& what)
      : std::runtime_error(what), axiom_(axiom), generator_(generator) {}
  Axiom axiom() const { return axiom_; }
  /// Offending generator index for not_involution, otherwise -1.
  int generator() const { return generator_; }

 private:
  Axiom axiom_;
  int generator_;
};

/// A connected map given by three involutions r0, r1, r2 on its flags with
/// (r0 r2)^2 = 1. Fixed points of r_i are boundary flags.
class FlagMap {
 public:
  /// Checks every axiom and throws MapAxiomError naming the first failure.
  static FlagMap validate(Perm r0, Perm r1, Perm r2, Meta meta = Meta::object());

  std::size_t n_flags() const { return r_[0].degree(); }
  const Perm& r(int i) const { return r_[static_cast<std::size_t>(i)]; }
  const std::array<Perm, 3>& generators() const { return r_; }
  Point apply(Point flag, int i) const { return r_[static_cast<std::size_t>(i)][flag]; }

  const Meta& meta() const { return meta_; }
  FlagMap with_meta(Meta meta) const;

  /// Compares the three involutions; metadata is ignored.
  friend bool operator==(const FlagMap& a, const FlagMap& b) { return a.r_ == b.r_; }

 private:
  FlagMap(std::array<Perm, 3> r, Meta meta) : r_(std::move(r)), meta_(std::move(meta)) {}
  std::array<Perm, 3> r_;
  Meta meta_;
};

struct CellStructure {
  Partition vertices;  // <r1, r2>
  Partition edges;     // <r0, r2>
  Partition faces;     // <r0, r1>
  Partition petrie;    // <r1, r0 r2>

  std::size_t n_vertices() const { return vertices.size(); }
  std::size_t n_edges() const { return edges.size(); }
  std::size_t n_faces() const { return faces.size(); }
};

CellStructure cells(const FlagMap& m);

/// Number of walls of type i: 2-cycles plus fixed points of r_i.
std::size_t wall_count(const FlagMap& m, int i);

/// Barycentric count V_B - E_B + F_B, valid with or without boundary.
long long euler_characteristic(const FlagMap& m);

struct SurfaceReport {
  long long euler_characteristic = 0;
  bool orientable = false;
  std::size_t boundary_components = 0;
  /// Orientable genus or crosscap number of the surface with its boundary
  /// circles capped by discs.
  long long genus = 0;
  bool closed = false;
};

SurfaceReport orientability_and_boundary(const FlagMap& m);

bool is_closed(const FlagMap& m);

/// 2-colouring of the flag graph (loops ignored) when it is bipartite.
std::optional<std::vector<std::int8_t>> orientation_classes(const FlagMap& m);

/// Swaps r0 and r2.
FlagMap dual(const FlagMap& m);
/// Replaces r0 by r0 r2.
FlagMap petrie_dual(const FlagMap& m);

/// Relabels flags: flag x of `m` becomes flag sigma[x].
FlagMap relabel(const FlagMap& m, const Perm& sigma);

/// Flag bijection f with f(x r_i) = f(x) r_i, if one exists.
std::optional<Perm> find_isomorphism(const FlagMap& a, const FlagMap& b);

}  // namespace mapref
