#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mapref/flagmap.hpp"
#include "mapref/perm.hpp"

namespace mapref {

/// All automorphisms of a map (permutations of flags commuting with r0, r1,
/// r2), with a small generating set. Elements are ordered by the image of
/// flag 0, so the identity comes first.
PermGroup automorphism_group(const FlagMap& m);

struct TransitivityProfile {
  bool vertex = false;
  bool edge = false;
  bool face = false;
  bool flag = false;
  bool petrie = false;
};

TransitivityProfile transitivity(const FlagMap& m, const PermGroup& aut);
TransitivityProfile transitivity(const FlagMap& m);

using TypeMask = std::uint8_t;  // bit i set: acts with type i on some flag

struct ReflectionClass {
  Perm representative;
  std::size_t size = 0;
  TypeMask types = 0;
  std::vector<Perm> members;

  bool has_type(int i) const { return (types >> i) & 1u; }
};

struct ReflectionReport {
  std::vector<ReflectionClass> classes;
  int cr = 0;
  std::array<int, 3> cr_by_type{0, 0, 0};
};

/// Type mask of an automorphism: i is set when a(x) = x r_i != x for some x.
TypeMask reflection_types(const FlagMap& m, const Perm& a);

ReflectionReport reflections(const FlagMap& m, const PermGroup& aut);
ReflectionReport reflections(const FlagMap& m);

/// M / Aut M: flags are Aut-orbits numbered by least member.
FlagMap quotient_map(const FlagMap& m, const PermGroup& aut);
FlagMap quotient_map(const FlagMap& m);

/// Reflection class counts (c0, c1, c2) of the subgroup whose coset action
/// is the given map: r2-cycles on Fix(r0), |Fix(r1)|, r0-cycles on Fix(r2).
std::array<int, 3> prop41_counts(const FlagMap& q);

struct Cor42Report {
  std::array<int, 3> cr_by_type{};
  std::array<int, 3> bound{};

  bool holds() const;
};

/// cr_i of the map next to the coset counts of its quotient.
Cor42Report cor42_report(const FlagMap& m, const PermGroup& aut);

/// Throws std::logic_error if some cr_i exceeds its coset bound; that can
/// only happen through an internal bug.
Cor42Report check_cor42(const FlagMap& m, const PermGroup& aut);
Cor42Report check_cor42(const FlagMap& m);

}  // namespace mapref
