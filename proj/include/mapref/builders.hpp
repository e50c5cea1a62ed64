#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapref/flagmap.hpp"
#include "mapref/perm.hpp"
#include "mapref/verification.hpp"

namespace mapref {

class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuildResult {
  FlagMap map;
  VerificationRecord record;
};

// ---------------------------------------------------------------- rotation

/// Darts with a vertex rotation and a signed edge involution. A negative
/// edge is glued with a twist.
struct SignedRotationSystem {
  Perm rotation;
  Perm edge_inv;
  std::vector<std::int8_t> sign;  // +1 or -1 per dart

  std::size_t darts() const { return rotation.degree(); }
  /// Throws BuildError unless edge_inv is fixed-point free, sign is +-1 and
  /// constant on edges.
  void validate() const;
};

/// Flags are darts x {+1,-1}; flag index 2*d for (d,+1), 2*d+1 for (d,-1).
/// r1(d,e) = (rot^e d, -e), r2(d,e) = (d,-e), r0(d,e) = (inv d, -sign(d) e).
FlagMap oriented_to_flags(const SignedRotationSystem& rs, Meta meta = Meta::object());

/// Oriented polyhedral surface from its faces, each listed counterclockwise.
/// Darts are the directed edges u->v; rot(u->v) = u->w where w->u->v occurs
/// consecutively in some face.
SignedRotationSystem rotation_from_faces(std::size_t n_vertices,
                                         const std::vector<std::vector<Point>>& faces);

/// Dart indices of rotation_from_faces: directed edge (u, v) -> dart.
std::vector<std::pair<Point, Point>> face_darts(const std::vector<std::vector<Point>>& faces);

// ----------------------------------------------------------------- catalog

FlagMap disc_n3();
FlagMap tetrahedron();
FlagMap cube();
/// {4,4}_{b,c}: vertex set Z^2 / <(b,c), (-c,b)>, b, c >= 0 not both zero.
FlagMap torus44(int b, int c);

struct TorusLayout {
  int b = 0, c = 0;
  int a = 0, shift = 0, d = 0;  // lattice basis {(a, shift), (0, d)}
  std::size_t vertex(long long x, long long y) const;
  std::size_t n_vertices() const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(d); }
  /// Flag (dart dir at (x,y), +1); dir 0..3 = E, N, W, S.
  Point flag(long long x, long long y, int dir) const;
};
TorusLayout torus_layout(int b, int c);

/// Named catalog entry: disc_n3, tetrahedron, cube, torus44 (params b, c).
FlagMap catalog(const std::string& name, int b = 0, int c = 0);

// ---------------------------------------------------------- dihedral / tube

struct DihedralProduct {
  PermGroup group;
  std::vector<int> c;
  std::vector<std::size_t> offsets;  // first point of each factor
  std::vector<std::size_t> sizes;    // points of each factor
  std::vector<Perm> class_representatives;  // reflection fixing point 0 of factor i (the swap if c_i = 1)
  std::vector<std::vector<Perm>> classes;   // K_i
  VerificationRecord record;

  /// True iff g has an even number of reflection coordinates.
  bool in_gplus(const Perm& g) const;
};

DihedralProduct dihedral_product(const std::vector<int>& c);

using GPlusTest = std::function<bool(const Perm&)>;

/// Appends lexicographically least non-identity G+ elements not yet in the
/// generated subgroup until the generators generate G.
std::vector<Perm> complete_generators(const PermGroup& g, const GPlusTest& gplus,
                                      std::vector<Perm> gens);

struct TubeInput {
  const PermGroup* group = nullptr;  // with explicit elements
  GPlusTest gplus;
  std::vector<Perm> gens;  // g_1..g_l, the first k involutions outside G+
  std::size_t k = 0;
  bool rigidify = false;
};

struct TubeResult {
  FlagMap map;
  VerificationRecord record;
  std::size_t slots = 0;  // m = 2l - k
};

/// Vertex set G; slot i <= k joins g to g g_i by a twisted edge, slot i > k
/// joins slot i at g to slot i + l - k at g g_i. With rigidify, slot i is
/// followed by i + 1 nested loops and one further loop.
TubeResult cayley_tube(const TubeInput& in);

/// G = S4 on {0..3}, g1 = (0 1), g2 = (0 2 3), k = 1.
TubeResult example21_tube(bool rigidify);

/// cayley_tube over dihedral_product(c): g_i = class representatives,
/// completed by G+ elements. The product's own record is merged in.
TubeResult dihedral_tube(const std::vector<int>& c, bool rigidify);

// ---------------------------------------------------------------- necklace

enum class Bead { sigma1, sigma2_0, sigma2_2, sigma2_minus, sigma4, sigma4_star };

struct NecklaceSpec {
  int c0 = 0, c1 = 0, c2 = 0;
  int sigma2_minus = 0;  // filler counts
  int sigma4_star = 0;
  /// Optional cyclic order of beads other than sigma1; empty means the
  /// canonical order (sigma2_0, sigma4, sigma2_2, sigma2_minus, sigma4_star).
  std::vector<Bead> arrangement;
};

/// Default bead list for a spec (sigma1 excluded).
std::vector<Bead> necklace_beads(const NecklaceSpec& spec);
BuildResult necklace(const NecklaceSpec& spec);

// ------------------------------------------------------------------ covers

class EdgeOrbitBranching : public std::runtime_error {
 public:
  explicit EdgeOrbitBranching(Point flag)
      : std::runtime_error("nonzero voltage around the edge orbit of flag " + std::to_string(flag)),
        flag_(flag) {}
  Point flag() const { return flag_; }

 private:
  Point flag_;
};

/// Voltages in (C2)^dim as bitmasks, indexed [flag][i]; must agree on both
/// sides of every wall.
using Voltage = std::vector<std::array<std::uint64_t, 3>>;

struct VoltageCover {
  FlagMap map;
  std::vector<Point> projection;      // cover flag -> base flag
  std::vector<std::uint64_t> fibre;   // cover flag -> element of H
  std::size_t dimension = 0;          // of H
  std::size_t deck_order = 0;         // component size / base flags
};

/// Component of (flag 0, 0) in the derived map (phi, h) r_i = (phi r_i, h + w(phi, i)).
VoltageCover voltage_cover(const FlagMap& base, std::size_t dimension, const Voltage& omega);

struct Cor43Result {
  VoltageCover cover;
  std::size_t generators = 0;  // non-tree walls + fixed walls
  std::size_t relation_rank = 0;
  VerificationRecord record;
};

/// Cover for the subgroup generated by commutators and squares of the map
/// subgroup of `base`: voltages are the mod-2 classes of the fundamental
/// walls, reduced by the (r0 r2)^2 relations.
Cor43Result cor43_cover(const FlagMap& base);

struct DoubleCoverResult {
  VoltageCover cover;
  std::array<int, 2> homology{0, 0};  // row and column walk voltages chosen
  VerificationRecord record;
};

/// Branched double cover of {4,4}_{b,0}, b even, ramified over black
/// vertices and dark faces.
DoubleCoverResult branched_double_cover(int b);

// -------------------------------------------------------------- quadruples

enum class JetMode { explicit_group, algebraic };

struct InvolutionQuadruple {
  std::size_t degree = 0;
  std::array<Perm, 4> s;
  JetMode mode = JetMode::explicit_group;
  /// p[i][j] = order of s_i s_j (0-based indices), p[i][i] = 1.
  std::array<std::array<std::uint64_t, 4>, 4> p{};

  std::uint64_t order(int i, int j) const { return p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

/// Throws BuildError unless all four are non-identity involutions of one degree.
InvolutionQuadruple make_quadruple(std::array<Perm, 4> s, JetMode mode = JetMode::explicit_group);

/// Flags G x {0,1,2,3}; index = element * 4 + slot.
FlagMap jet_map(const InvolutionQuadruple& q, const PermGroup& g);
FlagMap jet_map(const InvolutionQuadruple& q);

struct AlgebraicJetReport {
  std::string group;  // "A<n>" or "S<n>"
  std::size_t degree = 0;
  std::optional<std::uint64_t> order;  // when it fits in 64 bits
  std::array<std::uint64_t, 2> valencies{};  // 2 p12, 2 p34
  std::array<std::uint64_t, 2> faces{};      // 2 p14, 2 p23
  std::array<std::uint64_t, 2> petrie{};     // 2 p13, 2 p24
  int cr = 0;
  std::array<int, 4> class_of{};  // class index of each s_i
  bool orientable = false;
  std::optional<long long> euler_characteristic;  // degree <= 20
};

/// Identifies <s_i> as A_n or S_n (transitive, primitive, and some power of
/// some s_i s_j is a single cycle with at least three fixed points) and
/// reports the map invariants without building flags. Throws BuildError when
/// the identification fails.
AlgebraicJetReport algebraic_jet_report(const InvolutionQuadruple& q);

/// Same quantities computed from an explicit group.
AlgebraicJetReport explicit_jet_report(const InvolutionQuadruple& q, const PermGroup& g);

/// |G| (1/(2p12) + 1/(2p34) + 1/(2p14) + 1/(2p23) - 1); nullopt on overflow.
std::optional<long long> jet_euler_characteristic(std::uint64_t group_order,
                                                  const InvolutionQuadruple& q);

/// Symmetry group of the cube on its 8 vertices (x + 2y + 4z).
PermGroup cube_symmetry_group();

struct Example52 {
  InvolutionQuadruple quadruple;
  FlagMap map;
  VerificationRecord record;
};

/// Lexicographically least generating quadruple of cube symmetries with
/// p12 = 2, p23 = p24 = p34 = 3, p13 = p14 = 4, and its map.
Example52 example52_cube(std::size_t search_cap = 1'000'000);

struct PathFamily {
  int k = 0, m = 0;
  std::size_t n = 0;
  std::array<int, 4> parts{};    // m_1..m_4
  int l = 0;                     // m_3 + m_4 - 1
  std::vector<int> assignment;   // t_j (j = 1..4m, stored 0-based) -> s index 0..3
  InvolutionQuadruple quadruple;
  AlgebraicJetReport report;
  VerificationRecord record;
};

class NonPrime : public BuildError {
 public:
  explicit NonPrime(std::size_t n) : BuildError("n = " + std::to_string(n) + " is not prime") {}
};

class PartEmpty : public BuildError {
 public:
  using BuildError::BuildError;
};

/// Transpositions t_j = (j-1 j) on n = 4m + 1 points distributed over
/// s_1..s_4 with m_1..m_4 transpositions each.
PathFamily thm51_family(int k, int m);

}  // namespace mapref
