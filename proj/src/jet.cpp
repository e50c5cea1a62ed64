#include <algorithm>
#include <numeric>
#include <set>

#include "mapref/builders.hpp"
#include "mapref/symmetry.hpp"
#include "mapref/taxonomy.hpp"

namespace mapref {

namespace {

// 0-based slot -> generator used by r1 in that slot
constexpr std::array<int, 4> kSlotGenerator{0, 3, 1, 2};

std::optional<std::uint64_t> factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > UINT64_MAX / i) return std::nullopt;
    f *= i;
  }
  return f;
}

// some power of some s_i s_j is one cycle with at least three fixed points
bool has_long_cycle_witness(const InvolutionQuadruple& q) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const Perm p = compose(q.s[static_cast<std::size_t>(i)], q.s[static_cast<std::size_t>(j)]);
      const auto o = order(p);
      for (std::uint64_t e = 1; e < o; ++e) {
        const auto cycles = power(p, static_cast<long long>(e)).cycles();
        if (cycles.size() != 1) continue;
        if (q.degree - cycles.front().size() >= 3) return true;
      }
    }
  }
  return false;
}

void fill_shape(AlgebraicJetReport& r, const InvolutionQuadruple& q) {
  r.degree = q.degree;
  r.valencies = {2 * q.order(0, 1), 2 * q.order(2, 3)};
  r.faces = {2 * q.order(0, 3), 2 * q.order(1, 2)};
  r.petrie = {2 * q.order(0, 2), 2 * q.order(1, 3)};
}

template <class Same>
void fill_classes(AlgebraicJetReport& r, const InvolutionQuadruple& q, Same same) {
  int next = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    r.class_of[i] = -1;
    for (std::size_t j = 0; j < i; ++j) {
      if (same(q.s[j], q.s[i])) {
        r.class_of[i] = r.class_of[j];
        break;
      }
    }
    if (r.class_of[i] < 0) r.class_of[i] = next++;
  }
  r.cr = next;
}

}  // namespace

InvolutionQuadruple make_quadruple(std::array<Perm, 4> s, JetMode mode) {
  InvolutionQuadruple q;
  q.degree = s[0].degree();
  for (std::size_t i = 0; i < 4; ++i) {
    if (s[i].degree() != q.degree) throw BuildError("quadruple degrees differ");
    if (!is_involution(s[i])) throw BuildError("s_" + std::to_string(i + 1) + " is not a non-identity involution");
  }
  q.s = std::move(s);
  q.mode = mode;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) q.p[i][j] = i == j ? 1 : order(compose(q.s[i], q.s[j]));
  }
  return q;
}

FlagMap jet_map(const InvolutionQuadruple& q, const PermGroup& g) {
  const auto& el = g.elements();
  const std::size_t n = 4 * el.size();
  std::vector<Point> r0(n), r1(n), r2(n);
  constexpr std::array<Point, 4> slot_r0{1, 0, 3, 2};
  constexpr std::array<Point, 4> slot_r2{2, 3, 0, 1};
  for (std::size_t e = 0; e < el.size(); ++e) {
    for (std::size_t t = 0; t < 4; ++t) {
      const auto f = static_cast<Point>(4 * e + t);
      r0[f] = static_cast<Point>(4 * e + slot_r0[t]);
      r2[f] = static_cast<Point>(4 * e + slot_r2[t]);
      const auto& s = q.s[static_cast<std::size_t>(kSlotGenerator[t])];
      const auto idx = g.index_of(compose(el[e], s));
      if (!idx) throw BuildError("quadruple element outside the given group");
      r1[f] = static_cast<Point>(4 * *idx + t);
    }
  }
  Meta meta{{"name", "jet_map"}, {"group_order", el.size()}};
  return FlagMap::validate(Perm(std::move(r0)), Perm(std::move(r1)), Perm(std::move(r2)), meta);
}

FlagMap jet_map(const InvolutionQuadruple& q) {
  if (q.mode == JetMode::algebraic) throw BuildError("jet_map needs explicit mode");
  return jet_map(q, closure(q.s));
}

std::optional<long long> jet_euler_characteristic(std::uint64_t group_order, const InvolutionQuadruple& q) {
  using Wide = __int128;
  const std::array<std::uint64_t, 4> p{q.order(0, 1), q.order(2, 3), q.order(0, 3), q.order(1, 2)};
  Wide lcm = 1;
  for (auto x : p) lcm = std::lcm(static_cast<long long>(lcm), static_cast<long long>(2 * x));
  const Wide g = group_order;
  Wide num = -g * lcm;
  for (auto x : p) num += g * (lcm / (2 * static_cast<Wide>(x)));
  if (num % lcm != 0) return std::nullopt;
  const Wide chi = num / lcm;
  if (chi > INT64_MAX || chi < INT64_MIN) return std::nullopt;
  return static_cast<long long>(chi);
}

AlgebraicJetReport algebraic_jet_report(const InvolutionQuadruple& q) {
  const std::size_t n = q.degree;
  if (!is_transitive(q.s, n)) throw BuildError("quadruple is not transitive");
  if (!is_primitive(q.s, n)) throw BuildError("quadruple is not primitive");
  if (!has_long_cycle_witness(q)) throw BuildError("no cycle with three fixed points: cannot identify A_n or S_n");
  AlgebraicJetReport r;
  fill_shape(r, q);
  const bool any_odd = std::any_of(q.s.begin(), q.s.end(), [](const Perm& s) { return parity(s) == Parity::odd; });
  const bool all_odd = std::all_of(q.s.begin(), q.s.end(), [](const Perm& s) { return parity(s) == Parity::odd; });
  r.group = (any_odd ? "S" : "A") + std::to_string(n);
  if (const auto f = factorial(n)) r.order = any_odd ? *f : *f / 2;
  fill_classes(r, q, [any_odd](const Perm& a, const Perm& b) { return same_class_in_alt_or_sym(a, b, !any_odd); });
  r.orientable = all_odd;
  if (r.order && n <= 20) r.euler_characteristic = jet_euler_characteristic(*r.order, q);
  return r;
}

AlgebraicJetReport explicit_jet_report(const InvolutionQuadruple& q, const PermGroup& g) {
  AlgebraicJetReport r;
  fill_shape(r, q);
  r.order = g.elements().size();
  r.group = "order " + std::to_string(*r.order);
  fill_classes(r, q, [&](const Perm& a, const Perm& b) {
    const auto cls = conjugacy_class(a, g.generators());
    return std::find(cls.begin(), cls.end(), b) != cls.end();
  });
  const std::array<Perm, 3> even{compose(q.s[0], q.s[1]), compose(q.s[0], q.s[2]), compose(q.s[0], q.s[3])};
  r.orientable = !closure(even).contains(q.s[0]);
  r.euler_characteristic = jet_euler_characteristic(*r.order, q);
  return r;
}

PermGroup cube_symmetry_group() {
  auto coords = [](Point v) { return std::array<Point, 3>{v & 1u, (v >> 1) & 1u, (v >> 2) & 1u}; };
  auto vertex = [](const std::array<Point, 3>& c) { return c[0] + 2 * c[1] + 4 * c[2]; };
  std::vector<Point> swap_xy(8), cycle(8), flip_x(8);
  for (Point v = 0; v < 8; ++v) {
    const auto c = coords(v);
    swap_xy[v] = vertex({c[1], c[0], c[2]});
    cycle[v] = vertex({c[2], c[0], c[1]});
    flip_x[v] = vertex({1 - c[0], c[1], c[2]});
  }
  return closure(std::vector<Perm>{Perm(swap_xy), Perm(cycle), Perm(flip_x)});
}

Example52 example52_cube(std::size_t search_cap) {
  const PermGroup g = cube_symmetry_group();
  std::vector<Perm> inv;
  for (const auto& e : g.elements()) {
    if (is_involution(e)) inv.push_back(e);
  }
  std::sort(inv.begin(), inv.end());
  const std::size_t k = inv.size();
  std::vector<std::uint64_t> ord(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) ord[i * k + j] = order(compose(inv[i], inv[j]));
  }
  auto p = [&](std::size_t a, std::size_t b) { return ord[a * k + b]; };
  std::size_t examined = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (p(a, b) != 2) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (p(b, c) != 3 || p(a, c) != 4) continue;
        for (std::size_t d = 0; d < k; ++d) {
          if (++examined > search_cap) throw BuildError("quadruple search exceeded its cap");
          if (p(b, d) != 3 || p(c, d) != 3 || p(a, d) != 4) continue;
          const std::array<Perm, 4> s{inv[a], inv[b], inv[c], inv[d]};
          if (closure(s).elements().size() != g.elements().size()) continue;

          Example52 ex{make_quadruple(s), jet_map(make_quadruple(s), g), VerificationRecord("example52_cube")};
          ex.map = ex.map.with_meta(Meta{{"name", "example52"}});
          auto& rec = ex.record;
          const FlagMap& m = ex.map;
          const auto cc = cells(m);
          const auto surf = orientability_and_boundary(m);
          const auto aut = automorphism_group(m);
          std::set<std::size_t> valencies, face_orbits;
          for (const auto& v : cc.vertices) valencies.insert(v.size() / 2);
          for (const auto& f : cc.faces) face_orbits.insert(f.size());
          const auto report = explicit_jet_report(ex.quadruple, g);
          rec.expect_eq("involutions in the cube group", std::size_t{19}, k);
          rec.expect_eq("flags", std::size_t{192}, m.n_flags());
          rec.expect_eq("vertices", std::size_t{20}, cc.n_vertices());
          rec.expect_eq("edges", std::size_t{48}, cc.n_edges());
          rec.expect_eq("faces", std::size_t{14}, cc.n_faces());
          rec.expect_eq("euler characteristic", -14LL, surf.euler_characteristic);
          rec.expect("orientable", surf.orientable);
          rec.expect_eq("genus", 8LL, surf.genus);
          rec.expect_eq("vertex valencies", std::vector<std::size_t>{4, 6},
                        std::vector<std::size_t>(valencies.begin(), valencies.end()));
          rec.expect_eq("face orbit sizes", std::vector<std::size_t>{12, 16},
                        std::vector<std::size_t>(face_orbits.begin(), face_orbits.end()));
          rec.expect_eq("|Aut|", std::size_t{48}, aut.elements().size());
          rec.expect_eq("type", std::string("3"), gw_type(m, aut).label);
          rec.expect_eq("cr", 2, reflections(m, aut).cr);
          rec.expect_eq("classes of s1..s4", std::array<int, 4>{0, 1, 1, 1}, report.class_of);
          return ex;
        }
      }
    }
  }
  throw BuildError("no quadruple in the cube group has the required orders");
}

PathFamily thm51_family(int k, int m) {
  if (k < 1 || k > 4) throw BuildError("k must be 1..4");
  if (m < 3) throw BuildError("m must be at least 3");
  PathFamily pf;
  pf.k = k;
  pf.m = m;
  pf.n = static_cast<std::size_t>(4 * m + 1);
  switch (k) {
    case 1: pf.parts = {m, m, m, m}; break;
    case 2: pf.parts = {m + 1, m + 1, m - 1, m - 1}; break;
    case 3: pf.parts = {m + 2, m, m, m - 2}; break;
    default: pf.parts = {m + 3, m + 1, m - 1, m - 3}; break;
  }
  if (std::any_of(pf.parts.begin(), pf.parts.end(), [](int x) { return x <= 0; })) {
    throw PartEmpty("k = " + std::to_string(k) + ", m = " + std::to_string(m) + " leaves some s_i empty");
  }
  if (!is_prime(pf.n)) throw NonPrime(pf.n);
  const auto [m1, m2, m3, m4] = pf.parts;
  pf.l = m3 + m4 - 1;
  const int t_count = 4 * m;
  auto& a = pf.assignment;
  a.assign(static_cast<std::size_t>(t_count), -1);
  // t_j stored at j - 1; s_i stored as i - 1
  a[0] = 2;
  a[1] = m1 == m2 + 2 ? 0 : 1;
  for (int j = 3; j <= pf.l + 1; ++j) a[static_cast<std::size_t>(j - 1)] = (j - 3) % 2 == 0 ? 2 : 3;
  for (int j = pf.l + 2; j <= t_count - 1; ++j) a[static_cast<std::size_t>(j - 1)] = (j - pf.l - 2) % 2 == 0 ? 0 : 1;
  a[static_cast<std::size_t>(t_count - 1)] = m3 == m4 + 2 ? 2 : 3;

  auto& rec = pf.record = VerificationRecord("thm51 k=" + std::to_string(k) + " m=" + std::to_string(m));
  std::array<std::vector<Point>, 4> img;
  for (auto& v : img) {
    v.resize(pf.n);
    std::iota(v.begin(), v.end(), Point{0});
  }
  std::array<int, 4> counts{0, 0, 0, 0};
  std::array<bool, 4> disjoint{true, true, true, true};
  for (int j = 0; j < t_count; ++j) {
    const auto i = static_cast<std::size_t>(a[static_cast<std::size_t>(j)]);
    const auto x = static_cast<Point>(j), y = static_cast<Point>(j + 1);
    if (img[i][x] != x || img[i][y] != y) disjoint[i] = false;
    img[i][x] = y;
    img[i][y] = x;
    ++counts[i];
  }
  rec.expect_eq("transpositions per s_i", pf.parts, counts);
  rec.expect_eq("sum of parts", t_count, m1 + m2 + m3 + m4);
  rec.expect("transpositions of each s_i disjoint", std::all_of(disjoint.begin(), disjoint.end(), [](bool b) { return b; }));
  if (!rec.all_passed()) return pf;

  pf.quadruple = make_quadruple({Perm(img[0]), Perm(img[1]), Perm(img[2]), Perm(img[3])}, JetMode::algebraic);
  const auto& s = pf.quadruple.s;
  rec.expect("transitive", is_transitive(s, pf.n));
  rec.expect("primitive", is_primitive(s, pf.n));
  const auto sq = power(compose(s[2], s[3]), 2);
  const auto cyc = sq.cycles();
  rec.expect_eq("(s3 s4)^2 cycle lengths", std::vector<std::size_t>{static_cast<std::size_t>(pf.l)},
                [&] {
                  std::vector<std::size_t> lens;
                  for (const auto& c : cyc) lens.push_back(c.size());
                  return lens;
                }());
  rec.expect("(s3 s4)^2 has at least 3 fixed points", pf.n >= static_cast<std::size_t>(pf.l) + 3);
  std::set<Parity> parities;
  for (const auto& si : s) parities.insert(parity(si));
  rec.expect_eq("parities", std::size_t{1}, parities.size());
  std::set<std::vector<std::size_t>> types;
  for (const auto& si : s) types.insert(cycle_type(si));
  rec.expect_eq("distinct cycle types", static_cast<std::size_t>(k), types.size());

  // reversal t_j -> t_{4m+1-j} as a relabelling of s_1..s_4
  std::array<int, 4> pi{-1, -1, -1, -1};
  bool consistent = true;
  for (int j = 0; j < t_count; ++j) {
    const auto from = static_cast<std::size_t>(a[static_cast<std::size_t>(j)]);
    const int to = a[static_cast<std::size_t>(t_count - 1 - j)];
    if (pi[from] < 0) pi[from] = to;
    else if (pi[from] != to) consistent = false;
  }
  std::set<int> targets(pi.begin(), pi.end());
  consistent = consistent && targets.size() == 4 && !targets.count(-1);
  int moved = 0;
  for (std::size_t i = 0; i < 4; ++i) moved += pi[i] != static_cast<int>(i);
  bool double_transposition = consistent && moved == 4;
  for (std::size_t i = 0; i < 4 && double_transposition; ++i) {
    double_transposition = pi[static_cast<std::size_t>(pi[i])] == static_cast<int>(i);
  }
  rec.expect("path reversal induces no double transposition of labels", !double_transposition);

  pf.report = algebraic_jet_report(pf.quadruple);
  const bool all_odd = std::all_of(pf.parts.begin(), pf.parts.end(), [](int x) { return x % 2 == 1; });
  rec.expect_eq("cr", k, pf.report.cr);
  rec.expect_eq("orientable", all_odd, pf.report.orientable);
  return pf;
}

}  // namespace mapref
