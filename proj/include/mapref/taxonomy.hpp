#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mapref/flagmap.hpp"
#include "mapref/symmetry.hpp"

namespace mapref {

using Range = std::pair<int, int>;  // inclusive

/// One of the 14 edge-transitive types, with its transitivity symbols and
/// the bounds on cr and cr_i that the type forces.
struct GWType {
  std::string label;    // "1", "2Pex", "2*ex", "2P", "2ex", "2*", "2", "3", "4", "4P", "4*", "5*", "5P", "5"
  std::string symbols;  // subset of "VFP" in that order; empty for type 3
  std::size_t quotient_flags = 0;
  Range cr;
  std::array<Range, 3> cr_i;

  bool admits(int cr_value, const std::array<int, 3>& cr_by_type) const;
};

class NotEdgeTransitive : public std::runtime_error {
 public:
  NotEdgeTransitive() : std::runtime_error("map is not edge-transitive") {}
};

class UnclassifiableQuotient : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

const std::vector<GWType>& gw_table();
/// Throws std::invalid_argument for an unknown label.
const GWType& gw_type_info(std::string_view label);
/// Label of the type of the dual map.
std::string_view dual_label(std::string_view label);

bool is_edge_transitive(const FlagMap& m, const PermGroup& aut);
bool is_edge_transitive(const FlagMap& m);

/// Type from the quotient M / Aut M; throws NotEdgeTransitive.
const GWType& gw_type(const FlagMap& m, const PermGroup& aut);
const GWType& gw_type(const FlagMap& m);

/// Type of an edge-transitive quotient (1, 2 or 4 flags).
const GWType& classify_quotient(const FlagMap& q);

/// "VFP" subset observed directly from the transitivity profile.
std::string observed_symbols(const TransitivityProfile& t);

struct Classification {
  const GWType* type = nullptr;
  std::string observed_symbols;
  ReflectionReport reflections;
  bool bounds_ok = false;
  bool symbols_ok = false;

  /// type=<label> symbols=<VFP> cr=<n> cr_i=<a,b,c> bounds_ok=<bool>
  std::string line() const;
};

Classification classify(const FlagMap& m);

struct Thm13Entry {
  std::string name;
  std::string label;
  int cr = 0;
  std::array<int, 3> cr_by_type{};
  bool passed = false;
  std::string detail;
};

struct Thm13Report {
  std::size_t maps_seen = 0;
  std::size_t bordered_skipped = 0;
  std::vector<Thm13Entry> entries;  // closed edge-transitive maps only
  bool all_passed() const;
};

/// For every closed edge-transitive map: cr <= 4, cr = 4 only for type 3, and cr,
/// cr_i within the bounds of the type.
Thm13Report check_thm13(const std::vector<FlagMap>& corpus);

}  // namespace mapref
