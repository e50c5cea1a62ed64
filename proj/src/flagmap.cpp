#include "mapref/flagmap.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace mapref {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t count_blocks(std::vector<std::size_t> roots) {
  std::sort(roots.begin(), roots.end());
  return static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

}  // namespace

FlagMap FlagMap::validate(Perm r0, Perm r1, Perm r2, Meta meta) {
  if (r0.degree() != r1.degree() || r0.degree() != r2.degree()) {
    throw MapAxiomError(Axiom::degree_mismatch, -1, "generators have different degrees");
  }
  if (r0.degree() == 0) throw MapAxiomError(Axiom::empty, -1, "map has no flags");
  std::array<Perm, 3> r{std::move(r0), std::move(r1), std::move(r2)};
  for (int i = 0; i < 3; ++i) {
    if (!squares_to_identity(r[static_cast<std::size_t>(i)])) {
      throw MapAxiomError(Axiom::not_involution, i,
                          "r" + std::to_string(i) + " is not an involution");
    }
  }
  if (!squares_to_identity(compose(r[0], r[2]))) {
    throw MapAxiomError(Axiom::edge_relation, -1, "(r0 r2)^2 is not the identity");
  }
  if (!is_transitive(r, r[0].degree())) {
    throw MapAxiomError(Axiom::disconnected, -1, "flag graph is disconnected");
  }
  if (meta.is_null()) meta = Meta::object();
  return FlagMap(std::move(r), std::move(meta));
}

FlagMap FlagMap::with_meta(Meta meta) const { return FlagMap(r_, std::move(meta)); }

CellStructure cells(const FlagMap& m) {
  const std::size_t n = m.n_flags();
  const Perm r02 = compose(m.r(0), m.r(2));
  CellStructure c;
  c.vertices = orbits(std::array{m.r(1), m.r(2)}, n);
  c.edges = orbits(std::array{m.r(0), m.r(2)}, n);
  c.faces = orbits(std::array{m.r(0), m.r(1)}, n);
  c.petrie = orbits(std::array{m.r(1), r02}, n);
  return c;
}

std::size_t wall_count(const FlagMap& m, int i) {
  std::size_t fixed = 0;
  for (Point x = 0; x < m.n_flags(); ++x) fixed += m.apply(x, i) == x;
  return fixed + (m.n_flags() - fixed) / 2;
}

long long euler_characteristic(const FlagMap& m) {
  const auto c = cells(m);
  const long long points = static_cast<long long>(c.n_vertices() + c.n_edges() + c.n_faces());
  long long walls = 0;
  for (int i = 0; i < 3; ++i) walls += static_cast<long long>(wall_count(m, i));
  return points - walls + static_cast<long long>(m.n_flags());
}

bool is_closed(const FlagMap& m) {
  for (int i = 0; i < 3; ++i) {
    for (Point x = 0; x < m.n_flags(); ++x) {
      if (m.apply(x, i) == x) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::int8_t>> orientation_classes(const FlagMap& m) {
  const std::size_t n = m.n_flags();
  std::vector<std::int8_t> colour(n, 0);
  std::deque<Point> queue{0};
  colour[0] = 1;
  while (!queue.empty()) {
    Point x = queue.front();
    queue.pop_front();
    for (int i = 0; i < 3; ++i) {
      Point y = m.apply(x, i);
      if (y == x) continue;
      if (colour[y] == 0) {
        colour[y] = static_cast<std::int8_t>(-colour[x]);
        queue.push_back(y);
      } else if (colour[y] == colour[x]) {
        return std::nullopt;
      }
    }
  }
  return colour;
}

namespace {

// Boundary walls are the fixed pairs (flag, i). Around the barycentric point
// opposite generator j the boundary continues by alternately crossing walls j
// and i until the next wall to cross is itself a boundary wall.
std::size_t count_boundary_components(const FlagMap& m) {
  const std::size_t n = m.n_flags();
  std::vector<std::int64_t> id(3 * n, -1);
  std::size_t count = 0;
  for (Point x = 0; x < n; ++x) {
    for (int i = 0; i < 3; ++i) {
      if (m.apply(x, i) == x) id[3 * x + static_cast<std::size_t>(i)] = static_cast<std::int64_t>(count++);
    }
  }
  if (count == 0) return 0;
  DisjointSets sets(count);
  for (Point x = 0; x < n; ++x) {
    for (int i = 0; i < 3; ++i) {
      const auto here = id[3 * x + static_cast<std::size_t>(i)];
      if (here < 0) continue;
      for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        Point y = x;
        int next = j;
        // The dihedral corner orbit is finite, so the walk terminates.
        for (std::size_t steps = 0; steps <= 2 * n; ++steps) {
          if (m.apply(y, next) == y) break;
          y = m.apply(y, next);
          next = next == j ? i : j;
        }
        const auto there = id[3 * y + static_cast<std::size_t>(next)];
        sets.unite(static_cast<std::size_t>(here), static_cast<std::size_t>(there));
      }
    }
  }
  std::vector<std::size_t> roots(count);
  for (std::size_t k = 0; k < count; ++k) roots[k] = sets.find(k);
  return count_blocks(std::move(roots));
}

}  // namespace

SurfaceReport orientability_and_boundary(const FlagMap& m) {
  SurfaceReport s;
  s.euler_characteristic = euler_characteristic(m);
  s.orientable = orientation_classes(m).has_value();
  s.boundary_components = count_boundary_components(m);
  s.closed = s.boundary_components == 0;
  const long long capped = s.euler_characteristic + static_cast<long long>(s.boundary_components);
  s.genus = s.orientable ? (2 - capped) / 2 : 2 - capped;
  return s;
}

FlagMap dual(const FlagMap& m) { return FlagMap::validate(m.r(2), m.r(1), m.r(0), m.meta()); }

FlagMap petrie_dual(const FlagMap& m) {
  return FlagMap::validate(compose(m.r(0), m.r(2)), m.r(1), m.r(2), m.meta());
}

FlagMap relabel(const FlagMap& m, const Perm& sigma) {
  return FlagMap::validate(conjugate(m.r(0), sigma), conjugate(m.r(1), sigma),
                           conjugate(m.r(2), sigma), m.meta());
}

std::optional<Perm> find_isomorphism(const FlagMap& a, const FlagMap& b) {
  const std::size_t n = a.n_flags();
  if (b.n_flags() != n) return std::nullopt;
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> img(n);
  std::vector<bool> used(n);
  for (Point target = 0; target < n; ++target) {
    std::fill(img.begin(), img.end(), kUnset);
    std::fill(used.begin(), used.end(), false);
    img[0] = target;
    used[target] = true;
    std::deque<Point> queue{0};
    bool ok = true;
    while (ok && !queue.empty()) {
      Point x = queue.front();
      queue.pop_front();
      for (int i = 0; i < 3 && ok; ++i) {
        Point y = a.apply(x, i);
        Point want = b.apply(img[x], i);
        if (img[y] == kUnset) {
          if (used[want]) {
            ok = false;
          } else {
            img[y] = want;
            used[want] = true;
            queue.push_back(y);
          }
        } else if (img[y] != want) {
          ok = false;
        }
      }
    }
    if (ok) return Perm(img);
  }
  return std::nullopt;
}

}  // namespace mapref
