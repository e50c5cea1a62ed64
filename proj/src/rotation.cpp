#include <map>
#include <numeric>

#include "mapref/builders.hpp"

namespace mapref {

void SignedRotationSystem::validate() const {
  const std::size_t n = darts();
  if (n == 0) throw BuildError("rotation system has no darts");
  if (edge_inv.degree() != n || sign.size() != n) throw BuildError("rotation system sizes differ");
  for (Point d = 0; d < n; ++d) {
    const Point e = edge_inv[d];
    if (e == d) throw BuildError("dart " + std::to_string(d) + " has no partner");
    if (edge_inv[e] != d) throw BuildError("edge_inv is not an involution");
    if (sign[d] != 1 && sign[d] != -1) throw BuildError("sign must be +1 or -1");
    if (sign[d] != sign[e]) throw BuildError("sign differs across edge at dart " + std::to_string(d));
  }
}

FlagMap oriented_to_flags(const SignedRotationSystem& rs, Meta meta) {
  rs.validate();
  const std::size_t n = rs.darts();
  const Perm rot_inv = rs.rotation.inverse();
  std::vector<Point> r0(2 * n), r1(2 * n), r2(2 * n);
  auto flag = [](Point d, int eps) { return static_cast<Point>(2 * d + (eps < 0 ? 1 : 0)); };
  for (Point d = 0; d < n; ++d) {
    for (int eps : {1, -1}) {
      const Point f = flag(d, eps);
      r1[f] = flag(eps > 0 ? rs.rotation[d] : rot_inv[d], -eps);
      r2[f] = flag(d, -eps);
      r0[f] = flag(rs.edge_inv[d], -rs.sign[d] * eps);
    }
  }
  return FlagMap::validate(Perm(std::move(r0)), Perm(std::move(r1)), Perm(std::move(r2)),
                           std::move(meta));
}

std::vector<std::pair<Point, Point>> face_darts(const std::vector<std::vector<Point>>& faces) {
  std::vector<std::pair<Point, Point>> darts;
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) darts.emplace_back(f[i], f[(i + 1) % f.size()]);
  }
  return darts;
}

SignedRotationSystem rotation_from_faces(std::size_t n_vertices,
                                         const std::vector<std::vector<Point>>& faces) {
  const auto darts = face_darts(faces);
  std::map<std::pair<Point, Point>, Point> index;
  for (Point d = 0; d < darts.size(); ++d) {
    const auto [u, v] = darts[d];
    if (u >= n_vertices || v >= n_vertices) throw BuildError("face vertex out of range");
    if (!index.emplace(darts[d], d).second) throw BuildError("directed edge used twice");
  }
  std::vector<Point> rot(darts.size()), inv(darts.size());
  Point d = 0;
  for (const auto& f : faces) {
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i, ++d) {
      const Point prev = f[(i + k - 1) % k];
      const auto back = index.find({f[i], prev});
      const auto rev = index.find({darts[d].second, darts[d].first});
      if (back == index.end() || rev == index.end()) throw BuildError("surface is not closed");
      rot[d] = back->second;
      inv[d] = rev->second;
    }
  }
  return {Perm(std::move(rot)), Perm(std::move(inv)), std::vector<std::int8_t>(darts.size(), 1)};
}

FlagMap disc_n3() {
  return FlagMap::validate(Perm::parse_cycles(4, "(0 1)(2 3)"), Perm(4), Perm::parse_cycles(4, "(0 2)(1 3)"),
                           Meta{{"name", "disc_n3"}});
}

FlagMap tetrahedron() {
  const std::vector<std::vector<Point>> faces{{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  return oriented_to_flags(rotation_from_faces(4, faces), Meta{{"name", "tetrahedron"}});
}

FlagMap cube() {
  // vertex x + 2y + 4z
  const std::vector<std::vector<Point>> faces{{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 4, 6, 2},
                                              {1, 3, 7, 5}, {0, 1, 5, 4}, {2, 6, 7, 3}};
  return oriented_to_flags(rotation_from_faces(8, faces), Meta{{"name", "cube"}});
}

namespace {

long long floor_mod(long long a, long long m) { return ((a % m) + m) % m; }

// g = u a + v b with g = gcd(a, b), for a, b >= 0
long long ext_gcd(long long a, long long b, long long& u, long long& v) {
  if (b == 0) {
    u = 1;
    v = 0;
    return a;
  }
  long long u1, v1;
  const long long g = ext_gcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

}  // namespace

TorusLayout torus_layout(int b, int c) {
  if (b < 0 || c < 0 || (b == 0 && c == 0)) {
    throw BuildError("torus44 needs b, c >= 0, not both zero");
  }
  long long u, v;
  const long long a = ext_gcd(b, c, u, v);
  const long long w = -v;  // u b - w c = a
  const long long norm = static_cast<long long>(b) * b + static_cast<long long>(c) * c;
  TorusLayout t;
  t.b = b;
  t.c = c;
  t.a = static_cast<int>(a);
  t.d = static_cast<int>(norm / a);
  t.shift = static_cast<int>(floor_mod(u * c + w * b, t.d));
  return t;
}

std::size_t TorusLayout::vertex(long long x, long long y) const {
  const long long xr = floor_mod(x, a);
  const long long q = (x - xr) / a;
  const long long yr = floor_mod(y - q * shift, d);
  return static_cast<std::size_t>(xr * d + yr);
}

Point TorusLayout::flag(long long x, long long y, int dir) const {
  return static_cast<Point>(2 * (vertex(x, y) * 4 + static_cast<std::size_t>(dir)));
}

FlagMap torus44(int b, int c) {
  const TorusLayout t = torus_layout(b, c);
  const std::size_t nv = t.n_vertices();
  std::vector<Point> rot(4 * nv), inv(4 * nv);
  for (long long x = 0; x < t.a; ++x) {
    for (long long y = 0; y < t.d; ++y) {
      const auto v = static_cast<Point>(t.vertex(x, y));
      for (Point dir = 0; dir < 4; ++dir) rot[4 * v + dir] = 4 * v + (dir + 1) % 4;
      const auto east = static_cast<Point>(t.vertex(x + 1, y));
      const auto north = static_cast<Point>(t.vertex(x, y + 1));
      inv[4 * v + 0] = 4 * east + 2;
      inv[4 * east + 2] = 4 * v + 0;
      inv[4 * v + 1] = 4 * north + 3;
      inv[4 * north + 3] = 4 * v + 1;
    }
  }
  SignedRotationSystem rs{Perm(std::move(rot)), Perm(std::move(inv)),
                          std::vector<std::int8_t>(4 * nv, 1)};
  return oriented_to_flags(rs, Meta{{"name", "torus44"}, {"b", b}, {"c", c}});
}

FlagMap catalog(const std::string& name, int b, int c) {
  if (name == "disc_n3") return disc_n3();
  if (name == "tetrahedron") return tetrahedron();
  if (name == "cube") return cube();
  if (name == "torus44") return torus44(b, c);
  throw BuildError("unknown catalog map: " + name);
}

}  // namespace mapref
