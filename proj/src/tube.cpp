#include <algorithm>
#include <set>

#include "mapref/builders.hpp"
#include "mapref/symmetry.hpp"

namespace mapref {

namespace {

std::size_t factor_points(int c) {
  if (c == 1) return 2;
  return static_cast<std::size_t>(c % 2 == 1 ? c : 2 * c);
}

Perm embed(std::size_t degree, std::size_t offset, const std::vector<Point>& local) {
  std::vector<Point> img(degree);
  for (Point x = 0; x < degree; ++x) img[x] = x;
  for (std::size_t i = 0; i < local.size(); ++i) img[offset + i] = static_cast<Point>(offset + local[i]);
  return Perm(std::move(img));
}

}  // namespace

bool DihedralProduct::in_gplus(const Perm& g) const {
  std::size_t reflecting = 0;
  for (std::size_t f = 0; f < offsets.size(); ++f) {
    const auto o = static_cast<Point>(offsets[f]);
    const auto n = static_cast<long long>(sizes[f]);
    if (n == 2) {
      reflecting += g[o] != o;
    } else {
      const long long step = (static_cast<long long>(g[o + 1]) - static_cast<long long>(g[o]) + n) % n;
      reflecting += step != 1;
    }
  }
  return reflecting % 2 == 0;
}

DihedralProduct dihedral_product(const std::vector<int>& c) {
  if (c.empty()) throw BuildError("dihedral product needs at least one factor");
  std::size_t degree = 0;
  std::vector<std::size_t> offsets, sizes;
  for (int ci : c) {
    if (ci < 1) throw BuildError("dihedral factor sizes must be positive");
    offsets.push_back(degree);
    sizes.push_back(factor_points(ci));
    degree += sizes.back();
  }
  std::vector<Perm> gens, reps;
  for (std::size_t f = 0; f < c.size(); ++f) {
    const std::size_t n = sizes[f];
    std::vector<Point> rotation(n), reflection(n);
    for (Point x = 0; x < n; ++x) {
      rotation[x] = static_cast<Point>((x + 1) % n);
      reflection[x] = static_cast<Point>((n - x) % n);
    }
    if (c[f] == 1) {
      reps.push_back(embed(degree, offsets[f], {1, 0}));
      gens.push_back(reps.back());
    } else {
      gens.push_back(embed(degree, offsets[f], rotation));
      reps.push_back(embed(degree, offsets[f], reflection));
      gens.push_back(reps.back());
    }
  }
  DihedralProduct d{closure(gens), c, offsets, sizes, reps, {}, VerificationRecord("dihedral_product")};
  std::size_t expected_order = 1;
  for (int ci : c) expected_order *= static_cast<std::size_t>(ci % 2 == 1 ? 2 * ci : 4 * ci);
  d.record.expect_eq("order", expected_order, d.group.elements().size());
  std::set<Perm> seen;
  for (std::size_t f = 0; f < c.size(); ++f) {
    auto cls = conjugacy_class(reps[f], d.group.generators());
    std::sort(cls.begin(), cls.end());
    const std::string tag = "K" + std::to_string(f + 1);
    d.record.expect_eq(tag + " size", static_cast<std::size_t>(c[f]), cls.size());
    d.record.expect(tag + " outside G+", std::none_of(cls.begin(), cls.end(), [&](const Perm& p) { return d.in_gplus(p); }));
    bool disjoint = true;
    for (const auto& p : cls) disjoint = seen.insert(p).second && disjoint;
    d.record.expect(tag + " not conjugate to earlier classes", disjoint);
    d.classes.push_back(std::move(cls));
  }
  return d;
}

std::vector<Perm> complete_generators(const PermGroup& g, const GPlusTest& gplus, std::vector<Perm> gens) {
  std::vector<Perm> sorted = g.elements();
  std::sort(sorted.begin(), sorted.end());
  const std::size_t target = sorted.size();
  while (true) {
    const auto sub = gens.empty() ? PermGroup(g.degree(), {}, {Perm(g.degree())}) : closure(gens);
    if (sub.elements().size() == target) return gens;
    auto next = std::find_if(sorted.begin(), sorted.end(), [&](const Perm& p) {
      return !p.is_identity() && gplus(p) && !sub.contains(p);
    });
    if (next == sorted.end()) throw BuildError("G+ together with the given generators does not generate G");
    gens.push_back(*next);
  }
}

TubeResult cayley_tube(const TubeInput& in) {
  if (in.group == nullptr) throw BuildError("cayley_tube needs a group");
  const PermGroup& g = *in.group;
  const auto& el = g.elements();
  const std::size_t l = in.gens.size();
  const std::size_t k = in.k;
  if (k > l) throw BuildError("k exceeds the number of generators");
  if (l == 0) throw BuildError("cayley_tube needs generators");

  for (std::size_t i = 0; i < l; ++i) {
    const Perm& gi = in.gens[i];
    if (!g.contains(gi)) throw BuildError("generator " + std::to_string(i + 1) + " is not in G");
    if (i < k) {
      if (!is_involution(gi) || in.gplus(gi)) {
        throw BuildError("g_" + std::to_string(i + 1) + " must be an involution outside G+");
      }
      const auto cls = conjugacy_class(gi, g.generators());
      for (std::size_t j = 0; j < i; ++j) {
        if (std::find(cls.begin(), cls.end(), in.gens[j]) != cls.end()) {
          throw BuildError("g_" + std::to_string(j + 1) + " and g_" + std::to_string(i + 1) + " are conjugate");
        }
      }
    } else if (gi.is_identity() || !in.gplus(gi)) {
      throw BuildError("g_" + std::to_string(i + 1) + " must be a non-identity element of G+");
    }
  }
  if (closure(in.gens).elements().size() != el.size()) throw BuildError("generators do not generate G");

  const std::size_t m = 2 * l - k;
  // local dart layout: slot s = (l+, e, l-) followed by its gadget
  std::vector<std::size_t> slot_base(m);
  std::size_t per_vertex = 0;
  for (std::size_t s = 0; s < m; ++s) {
    slot_base[s] = per_vertex;
    per_vertex += 3;
    if (in.rigidify) per_vertex += 2 * (s + 3);
  }
  const std::size_t nv = el.size();
  const std::size_t n_darts = nv * per_vertex;
  std::vector<Point> rot(n_darts), inv(n_darts);
  std::vector<std::int8_t> sign(n_darts, 1);
  auto dart = [&](std::size_t v, std::size_t local) { return static_cast<Point>(v * per_vertex + local); };
  auto index = [&](const Perm& p) { return *g.index_of(p); };
  std::vector<Perm> inverses;
  for (const auto& gi : in.gens) inverses.push_back(gi.inverse());

  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t local = 0; local < per_vertex; ++local) rot[dart(v, local)] = dart(v, (local + 1) % per_vertex);
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t b = slot_base[s];
      inv[dart(v, b)] = dart(v, b + 2);
      inv[dart(v, b + 2)] = dart(v, b);
      std::size_t partner_slot;
      std::size_t w;
      if (s < k) {
        partner_slot = s;
        w = index(compose(el[v], in.gens[s]));
        sign[dart(v, b + 1)] = -1;
      } else if (s < l) {
        partner_slot = s + (l - k);
        w = index(compose(el[v], in.gens[s]));
      } else {
        partner_slot = s - (l - k);
        w = index(compose(el[v], inverses[partner_slot]));
      }
      inv[dart(v, b + 1)] = dart(w, slot_base[partner_slot] + 1);
      if (in.rigidify) {
        // s + 2 nested loops, then one more loop beside them
        const std::size_t nested = s + 2;
        const std::size_t g0 = b + 3;
        for (std::size_t j = 0; j < nested; ++j) {
          inv[dart(v, g0 + j)] = dart(v, g0 + 2 * nested - 1 - j);
          inv[dart(v, g0 + 2 * nested - 1 - j)] = dart(v, g0 + j);
        }
        inv[dart(v, g0 + 2 * nested)] = dart(v, g0 + 2 * nested + 1);
        inv[dart(v, g0 + 2 * nested + 1)] = dart(v, g0 + 2 * nested);
      }
    }
  }

  Meta meta{{"name", "cayley_tube"}, {"group_order", nv}, {"k", k}, {"l", l}, {"rigidify", in.rigidify}};
  TubeResult result{oriented_to_flags({Perm(std::move(rot)), Perm(std::move(inv)), std::move(sign)}, meta),
                    VerificationRecord("cayley_tube"), m};
  auto& rec = result.record;
  const FlagMap& map = result.map;
  const auto surface = orientability_and_boundary(map);
  const auto c = cells(map);
  const long long order = static_cast<long long>(nv);
  rec.expect("orientable", surface.orientable);
  rec.expect("closed", surface.closed);
  rec.expect_eq("euler characteristic |G|(2-m)", order * (2 - static_cast<long long>(m)),
                surface.euler_characteristic);
  rec.expect_eq("vertices", nv, c.n_vertices());
  if (!in.rigidify) {
    rec.expect_eq("edges", 3 * nv * m / 2, c.n_edges());
    rec.expect_eq("faces", nv * (2 + m) / 2, c.n_faces());
  }
  const auto aut = automorphism_group(map);
  rec.expect("vertex-transitive", transitivity(map, aut).vertex);
  const std::size_t aut_order = aut.elements().size();
  if (in.rigidify) rec.expect_eq("|Aut| = |G|", nv, aut_order);
  if (aut_order != nv) {
    rec.warn("|Aut| = " + std::to_string(aut_order) + " exceeds |G| = " + std::to_string(nv) +
             "; reflection classes not compared with the K_i");
    return result;
  }

  // a(flag at vertex 1) lies at vertex h
  const std::size_t id = index(Perm(g.degree()));
  const Point base_flag = 2 * dart(id, 0);
  std::vector<std::set<Perm>> expected;
  for (std::size_t i = 0; i < k; ++i) {
    const auto cls = conjugacy_class(in.gens[i], g.generators());
    expected.emplace_back(cls.begin(), cls.end());
  }
  std::vector<std::set<Perm>> found;
  for (const auto& cls : reflections(map, aut).classes) {
    std::set<Perm> hs;
    for (const auto& a : cls.members) hs.insert(el[a[base_flag] / 2 / per_vertex]);
    found.push_back(std::move(hs));
  }
  std::sort(expected.begin(), expected.end());
  std::sort(found.begin(), found.end());
  std::vector<std::size_t> expected_sizes, found_sizes;
  for (const auto& s : expected) expected_sizes.push_back(s.size());
  for (const auto& s : found) found_sizes.push_back(s.size());
  std::sort(expected_sizes.begin(), expected_sizes.end());
  std::sort(found_sizes.begin(), found_sizes.end());
  rec.expect_eq("reflection class sizes", expected_sizes, found_sizes);
  rec.expect("reflection classes are the classes of g_1..g_k", expected == found);
  return result;
}

TubeResult example21_tube(bool rigidify) {
  const std::vector<Perm> gens{Perm::parse_cycles(4, "(0 1)"), Perm::parse_cycles(4, "(0 2 3)")};
  const PermGroup g = closure(gens);
  TubeInput in{&g, [](const Perm& p) { return parity(p) == Parity::even; }, gens, 1, rigidify};
  TubeResult out = cayley_tube(in);
  out.map = out.map.with_meta({{"name", "example21_tube"}, {"rigidify", rigidify}});
  return out;
}

TubeResult dihedral_tube(const std::vector<int>& c, bool rigidify) {
  const DihedralProduct d = dihedral_product(c);
  GPlusTest gplus = [&d](const Perm& p) { return d.in_gplus(p); };
  TubeInput in{&d.group, gplus, complete_generators(d.group, gplus, d.class_representatives), c.size(), rigidify};
  TubeResult out = cayley_tube(in);
  VerificationRecord rec("dihedral_tube");
  rec.merge(d.record, "group: ");
  rec.merge(out.record, "tube: ");
  out.record = std::move(rec);
  out.map = out.map.with_meta({{"name", "dihedral_tube"}, {"c", c}, {"rigidify", rigidify}});
  return out;
}

}  // namespace mapref
