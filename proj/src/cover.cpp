#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

#include "mapref/builders.hpp"
#include "mapref/gf2.hpp"
#include "mapref/symmetry.hpp"
#include "mapref/taxonomy.hpp"

namespace mapref {

namespace {

constexpr int kEdgeWalk[4] = {0, 2, 0, 2};

using CoverIndex = std::map<std::pair<Point, std::uint64_t>, Point>;

CoverIndex index_cover(const VoltageCover& c) {
  CoverIndex idx;
  for (Point f = 0; f < c.map.n_flags(); ++f) idx[{c.projection[f], c.fibre[f]}] = f;
  return idx;
}

// Wall ids: one per 2-cycle or fixed point of each r_i.
struct Walls {
  std::vector<std::array<std::int64_t, 3>> id;  // [flag][i]
  std::vector<std::pair<Point, int>> rep;       // wall -> (least flag, i)
};

Walls number_walls(const FlagMap& m) {
  Walls w;
  w.id.assign(m.n_flags(), {-1, -1, -1});
  for (Point x = 0; x < m.n_flags(); ++x) {
    for (int i = 0; i < 3; ++i) {
      const Point y = m.apply(x, i);
      if (y < x) continue;
      const auto k = static_cast<std::int64_t>(w.rep.size());
      w.rep.emplace_back(x, i);
      w.id[x][static_cast<std::size_t>(i)] = k;
      w.id[y][static_cast<std::size_t>(i)] = k;
    }
  }
  return w;
}

std::size_t wall_of(const Walls& w, Point x, int i) {
  return static_cast<std::size_t>(w.id[x][static_cast<std::size_t>(i)]);
}

}  // namespace

VoltageCover voltage_cover(const FlagMap& base, std::size_t dimension, const Voltage& omega) {
  const std::size_t n = base.n_flags();
  if (dimension > 64) throw BuildError("voltage group dimension exceeds 64");
  if (omega.size() != n) throw BuildError("voltage assignment has wrong size");
  const std::uint64_t mask = dimension == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dimension) - 1;
  for (Point x = 0; x < n; ++x) {
    for (int i = 0; i < 3; ++i) {
      const auto v = omega[x][static_cast<std::size_t>(i)];
      if ((v & ~mask) != 0) throw BuildError("voltage outside H");
      if (v != omega[base.apply(x, i)][static_cast<std::size_t>(i)]) {
        throw BuildError("voltage differs across a wall at flag " + std::to_string(x));
      }
    }
  }
  for (Point x = 0; x < n; ++x) {
    std::uint64_t sum = 0;
    Point y = x;
    for (int i : kEdgeWalk) {
      sum ^= omega[y][static_cast<std::size_t>(i)];
      y = base.apply(y, i);
    }
    if (sum != 0) throw EdgeOrbitBranching(x);
  }

  VoltageCover c{base, {}, {}, dimension, 0};
  CoverIndex idx;
  std::deque<Point> queue;
  auto visit = [&](Point x, std::uint64_t h) {
    auto [it, inserted] = idx.emplace(std::make_pair(x, h), static_cast<Point>(c.projection.size()));
    if (inserted) {
      c.projection.push_back(x);
      c.fibre.push_back(h);
      queue.push_back(it->second);
    }
    return it->second;
  };
  visit(0, 0);
  std::vector<std::array<Point, 3>> images;
  while (!queue.empty()) {
    const Point f = queue.front();
    queue.pop_front();
    if (images.size() <= f) images.resize(f + 1);
    for (int i = 0; i < 3; ++i) {
      const Point x = c.projection[f];
      images[f][static_cast<std::size_t>(i)] =
          visit(base.apply(x, i), c.fibre[f] ^ omega[x][static_cast<std::size_t>(i)]);
    }
  }
  const std::size_t size = c.projection.size();
  std::array<std::vector<Point>, 3> r;
  for (int i = 0; i < 3; ++i) {
    auto& ri = r[static_cast<std::size_t>(i)];
    ri.resize(size);
    for (Point f = 0; f < size; ++f) ri[f] = images[f][static_cast<std::size_t>(i)];
  }
  Meta meta{{"name", "voltage_cover"}, {"base", base.meta().value("name", std::string("map"))},
            {"dimension", dimension}};
  c.map = FlagMap::validate(Perm(std::move(r[0])), Perm(std::move(r[1])), Perm(std::move(r[2])), meta);
  c.deck_order = size / n;
  return c;
}

Cor43Result cor43_cover(const FlagMap& base) {
  const std::size_t n = base.n_flags();
  const Walls walls = number_walls(base);
  const std::size_t n_walls = walls.rep.size();

  // spanning tree of the flag graph
  std::vector<bool> tree(n_walls, false), seen(n, false);
  std::deque<Point> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const Point x = queue.front();
    queue.pop_front();
    for (int i = 0; i < 3; ++i) {
      const Point y = base.apply(x, i);
      if (!seen[y]) {
        seen[y] = true;
        tree[wall_of(walls, x, i)] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<std::int64_t> generator(n_walls, -1);
  std::size_t g = 0;
  for (std::size_t w = 0; w < n_walls; ++w) {
    if (!tree[w]) generator[w] = static_cast<std::int64_t>(g++);
  }

  Gf2System relations(g);
  for (const auto& edge : cells(base).edges) {
    BitVector row(g);
    Point y = edge.front();
    for (int i : kEdgeWalk) {
      const auto gen = generator[wall_of(walls, y, i)];
      if (gen >= 0) row.flip(static_cast<std::size_t>(gen));
      y = base.apply(y, i);
    }
    relations.add_equation(row, false);
  }
  const auto reduced = relations.reduce();
  std::vector<bool> is_pivot(g, false);
  for (auto p : reduced.pivots) is_pivot[p] = true;
  std::vector<std::int64_t> coord(g, -1);
  std::size_t dim = 0;
  for (std::size_t j = 0; j < g; ++j) {
    if (!is_pivot[j]) coord[j] = static_cast<std::int64_t>(dim++);
  }
  if (dim > 64) throw BuildError("mod-2 quotient has rank above 64");

  std::vector<std::uint64_t> image(g, 0);
  for (std::size_t j = 0; j < g; ++j) {
    if (!is_pivot[j]) image[j] = std::uint64_t{1} << coord[j];
  }
  for (std::size_t r = 0; r < reduced.rows.size(); ++r) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < g; ++j) {
      if (j != reduced.pivots[r] && reduced.rows[r].get(j)) v ^= image[j];
    }
    image[reduced.pivots[r]] = v;
  }

  Voltage omega(n, {0, 0, 0});
  for (Point x = 0; x < n; ++x) {
    for (int i = 0; i < 3; ++i) {
      const auto gen = generator[wall_of(walls, x, i)];
      if (gen >= 0) omega[x][static_cast<std::size_t>(i)] = image[static_cast<std::size_t>(gen)];
    }
  }

  Cor43Result res{voltage_cover(base, dim, omega), g, reduced.rank(), VerificationRecord("cor43_cover")};
  auto& rec = res.record;
  const FlagMap& cover = res.cover.map;
  rec.expect_eq("generators (non-tree walls + fixed walls)", g, res.generators);
  rec.expect_eq("deck group rank", g - reduced.rank(), dim);
  rec.expect_eq("deck order", std::size_t{1} << dim, res.cover.deck_order);
  rec.expect("closed", is_closed(cover));

  // deck translations by basis vectors act freely and commute with r_i
  const auto idx = index_cover(res.cover);
  bool free_action = true;
  for (std::size_t b = 0; b < dim; ++b) {
    std::vector<Point> t(cover.n_flags());
    for (Point f = 0; f < cover.n_flags(); ++f) {
      const auto it = idx.find({res.cover.projection[f], res.cover.fibre[f] ^ (std::uint64_t{1} << b)});
      if (it == idx.end()) {
        free_action = false;
        break;
      }
      t[f] = it->second;
      free_action = free_action && t[f] != f;
    }
    if (!free_action) break;
    const Perm tp(t);
    for (int i = 0; i < 3; ++i) {
      free_action = free_action && compose(tp, cover.r(i)) == compose(cover.r(i), tp);
    }
  }
  rec.expect("deck group acts freely by automorphisms", free_action);
  bool projects = true;
  for (Point f = 0; f < cover.n_flags(); ++f) {
    for (int i = 0; i < 3; ++i) {
      projects = projects && res.cover.projection[cover.apply(f, i)] == base.apply(res.cover.projection[f], i);
    }
  }
  rec.expect("quotient by the deck group is the base map", projects);

  const auto aut = automorphism_group(cover);
  const auto refl = reflections(cover, aut);
  const auto bound = prop41_counts(base);
  const std::size_t aut_order = aut.elements().size();
  if (aut_order == res.cover.deck_order) {
    rec.expect("normaliser certificate |Aut| = deck order", true,
               "|Aut|=" + std::to_string(aut_order));
    rec.expect_eq("cr_i of cover equal the coset counts", bound, refl.cr_by_type);
  } else {
    rec.warn("normaliser certificate failed: |Aut| = " + std::to_string(aut_order) + " but deck order = " +
             std::to_string(res.cover.deck_order) + "; cr_i of cover = " +
             detail::display(refl.cr_by_type) + ", coset counts = " + detail::display(bound));
  }
  return res;
}

DoubleCoverResult branched_double_cover(int b) {
  if (b < 2 || b % 2 != 0) throw BuildError("branched double cover needs even b >= 2");
  const FlagMap torus = torus44(b, 0);
  const TorusLayout layout = torus_layout(b, 0);
  const Walls walls = number_walls(torus);
  const std::size_t nw = walls.rep.size();
  const auto c = cells(torus);

  Gf2System base(nw);
  auto cycle_equation = [&](const std::vector<Point>& orbit, int i, int j, bool rhs) {
    std::set<std::size_t> ws;
    for (Point x : orbit) {
      ws.insert(wall_of(walls, x, i));
      ws.insert(wall_of(walls, x, j));
    }
    base.add_equation(std::vector<std::size_t>(ws.begin(), ws.end()), rhs);
  };
  for (const auto& v : c.vertices) {
    const std::size_t vid = v.front() / 2 / 4;
    const auto x = static_cast<long long>(vid) / layout.d;
    const auto y = static_cast<long long>(vid) % layout.d;
    cycle_equation(v, 1, 2, (x + y) % 2 == 0);
  }
  const auto face_label = orbit_labels(std::array{torus.r(0), torus.r(1)}, torus.n_flags());
  std::vector<int> dark(c.faces.size(), -1);
  for (long long x = 0; x < b; ++x) {
    for (long long y = 0; y < b; ++y) dark[face_label[layout.flag(x, y, 0)]] = (x + y) % 2 == 0;
  }
  for (std::size_t f = 0; f < c.faces.size(); ++f) cycle_equation(c.faces[f], 0, 1, dark[f] == 1);
  for (const auto& e : c.edges) cycle_equation(e, 0, 2, false);

  // straight walks along a row and a column
  auto straight_walk = [&](Point start) {
    std::vector<std::size_t> used;
    Point y = start;
    for (int step = 0; step < b; ++step) {
      for (int i : {0, 2, 1, 2, 1, 2}) {
        used.push_back(wall_of(walls, y, i));
        y = torus.apply(y, i);
      }
    }
    if (y != start) throw std::logic_error("straight walk did not close");
    return used;
  };
  const auto row = straight_walk(layout.flag(0, 0, 0));
  const auto column = straight_walk(layout.flag(0, 0, 1));

  // take the first homology class whose cover is edge-transitive, else the first one built
  std::optional<std::pair<VoltageCover, std::array<int, 2>>> chosen;
  std::optional<PermGroup> chosen_aut;
  for (const auto& h : std::array<std::array<int, 2>, 4>{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}}) {
    Gf2System sys = base;
    sys.add_equation(row, h[0] == 1);
    sys.add_equation(column, h[1] == 1);
    const auto sol = sys.solve();
    if (!sol) continue;
    Voltage omega(torus.n_flags(), {0, 0, 0});
    for (Point x = 0; x < torus.n_flags(); ++x) {
      for (int i = 0; i < 3; ++i) omega[x][static_cast<std::size_t>(i)] = sol->get(wall_of(walls, x, i)) ? 1 : 0;
    }
    VoltageCover cov = voltage_cover(torus, 1, omega);
    auto aut = automorphism_group(cov.map);
    const bool et = is_edge_transitive(cov.map, aut);
    if (!chosen || et) {
      chosen.emplace(std::move(cov), h);
      chosen_aut.emplace(std::move(aut));
    }
    if (et) break;
  }
  if (!chosen) throw BuildError("ramification constraints are inconsistent");

  Meta meta{{"name", "double_cover"}, {"b", b}};
  chosen->first.map = chosen->first.map.with_meta(meta);
  DoubleCoverResult out{std::move(chosen->first), chosen->second, VerificationRecord("branched_double_cover")};
  const PermGroup& aut = *chosen_aut;
  auto& rec = out.record;
  const FlagMap& m = out.cover.map;
  const auto cc = cells(m);
  const auto s = orientability_and_boundary(m);
  const auto t = transitivity(m, aut);
  const long long b2 = static_cast<long long>(b) * b;
  rec.expect_eq("deck order", std::size_t{2}, out.cover.deck_order);
  rec.expect_eq("vertices", static_cast<std::size_t>(3 * b2 / 2), cc.n_vertices());
  rec.expect_eq("edges", static_cast<std::size_t>(4 * b2), cc.n_edges());
  rec.expect_eq("faces", static_cast<std::size_t>(3 * b2 / 2), cc.n_faces());
  rec.expect_eq("euler characteristic", -b2, s.euler_characteristic);
  rec.expect("orientable", s.orientable);
  rec.expect_eq("genus", 1 + b2 / 2, s.genus);
  rec.expect("edge-transitive", t.edge);
  rec.expect("not vertex-transitive", !t.vertex);
  rec.expect("not face-transitive", !t.face);
  const std::string type = t.edge ? classify_quotient(quotient_map(m, aut)).label : "not edge-transitive";
  rec.expect_eq("type", std::string("3"), type);
  rec.expect_eq("cr", 4, reflections(m, aut).cr);
  rec.expect_eq("|Aut| = edges", cc.n_edges(), aut.elements().size());
  if (!t.edge) {
    rec.warn("no homology class is invariant under the colour-preserving automorphisms of the torus "
             "(a half-turn about a black vertex shifts a row walk by b/2 black vertex loops)");
  }
  return out;
}

}  // namespace mapref
