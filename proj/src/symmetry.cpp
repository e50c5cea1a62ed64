#include "mapref/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace mapref {

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, unsigned>;

std::vector<Signature> flag_signatures(const FlagMap& m) {
  const auto c = cells(m);
  const std::size_t n = m.n_flags();
  std::vector<Signature> sig(n);
  auto sizes = [n](const Partition& p) {
    std::vector<std::size_t> s(n);
    for (const auto& b : p) {
      for (Point x : b) s[x] = b.size();
    }
    return s;
  };
  const auto v = sizes(c.vertices), e = sizes(c.edges), f = sizes(c.faces), p = sizes(c.petrie);
  for (Point x = 0; x < n; ++x) {
    unsigned fixed = 0;
    for (int i = 0; i < 3; ++i) fixed |= (m.apply(x, i) == x ? 1u : 0u) << i;
    sig[x] = {v[x], e[x], f[x], p[x], fixed};
  }
  return sig;
}

// Extends 0 -> target along the flag graph; nullopt if inconsistent.
std::optional<Perm> extend_from_base(const FlagMap& m, Point target,
                                     std::vector<Point>& img, std::vector<bool>& used) {
  constexpr Point kUnset = ~Point{0};
  std::fill(img.begin(), img.end(), kUnset);
  std::fill(used.begin(), used.end(), false);
  img[0] = target;
  used[target] = true;
  std::deque<Point> queue{0};
  while (!queue.empty()) {
    Point x = queue.front();
    queue.pop_front();
    for (int i = 0; i < 3; ++i) {
      Point y = m.apply(x, i);
      Point want = m.apply(img[x], i);
      if (img[y] == kUnset) {
        if (used[want]) return std::nullopt;
        img[y] = want;
        used[want] = true;
        queue.push_back(y);
      } else if (img[y] != want) {
        return std::nullopt;
      }
    }
  }
  return Perm(img);
}

// Aut acts freely, so an element is identified by the image of flag 0.
std::vector<std::int64_t> index_by_base_image(const PermGroup& aut, std::size_t n) {
  std::vector<std::int64_t> idx(n, -1);
  const auto& el = aut.elements();
  for (std::size_t k = 0; k < el.size(); ++k) idx[el[k][0]] = static_cast<std::int64_t>(k);
  return idx;
}

}  // namespace

PermGroup automorphism_group(const FlagMap& m) {
  const std::size_t n = m.n_flags();
  const auto sig = flag_signatures(m);
  std::vector<Point> img(n);
  std::vector<bool> used(n);
  std::vector<Perm> elements;
  for (Point target = 0; target < n; ++target) {
    if (sig[target] != sig[0]) continue;
    if (auto a = extend_from_base(m, target, img, used)) elements.push_back(std::move(*a));
  }

  // Greedy generating set: the subgroup generated so far is determined by
  // the orbit of flag 0 under the chosen generators.
  std::vector<Perm> gens;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (const auto& a : elements) {
    if (reached[a[0]]) continue;
    gens.push_back(a);
    std::fill(reached.begin(), reached.end(), false);
    std::deque<Point> queue{0};
    reached[0] = true;
    while (!queue.empty()) {
      Point x = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        if (!reached[g[x]]) {
          reached[g[x]] = true;
          queue.push_back(g[x]);
        }
      }
    }
  }
  return PermGroup(n, std::move(gens), std::move(elements));
}

TransitivityProfile transitivity(const FlagMap& m, const PermGroup& aut) {
  const std::size_t n = m.n_flags();
  std::vector<bool> in_orbit(n, false);
  for (const auto& a : aut.elements()) in_orbit[a[0]] = true;
  auto transitive_on = [&](const Partition& p) {
    return std::all_of(p.begin(), p.end(), [&](const auto& block) {
      return std::any_of(block.begin(), block.end(), [&](Point x) { return in_orbit[x]; });
    });
  };
  const auto c = cells(m);
  TransitivityProfile t;
  t.vertex = transitive_on(c.vertices);
  t.edge = transitive_on(c.edges);
  t.face = transitive_on(c.faces);
  t.petrie = transitive_on(c.petrie);
  t.flag = aut.elements().size() == n;
  return t;
}

TransitivityProfile transitivity(const FlagMap& m) { return transitivity(m, automorphism_group(m)); }

TypeMask reflection_types(const FlagMap& m, const Perm& a) {
  TypeMask mask = 0;
  for (Point x = 0; x < m.n_flags(); ++x) {
    const Point ax = a[x];
    if (ax == x) continue;
    for (int i = 0; i < 3; ++i) {
      if (m.apply(x, i) == ax) mask |= static_cast<TypeMask>(1u << i);
    }
    if (mask == 7) break;
  }
  return mask;
}

ReflectionReport reflections(const FlagMap& m, const PermGroup& aut) {
  const std::size_t n = m.n_flags();
  const auto& el = aut.elements();
  const auto idx = index_by_base_image(aut, n);
  std::vector<Perm> inv_gens;
  for (const auto& g : aut.generators()) inv_gens.push_back(g.inverse());

  std::vector<TypeMask> types(el.size(), 0);
  for (std::size_t k = 0; k < el.size(); ++k) {
    if (is_involution(el[k])) types[k] = reflection_types(m, el[k]);
  }

  ReflectionReport report;
  std::vector<bool> assigned(el.size(), false);
  for (std::size_t k = 0; k < el.size(); ++k) {
    if (types[k] == 0 || assigned[k]) continue;
    std::vector<std::size_t> members{k};
    assigned[k] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Perm& a = el[members[head]];
      for (std::size_t g = 0; g < inv_gens.size(); ++g) {
        // (g^-1 a g)(0) = g(a(g^-1(0)))
        const Point base = aut.generators()[g][a[inv_gens[g][0]]];
        const auto j = static_cast<std::size_t>(idx[base]);
        if (!assigned[j]) {
          assigned[j] = true;
          members.push_back(j);
        }
      }
    }
    ReflectionClass cls;
    std::sort(members.begin(), members.end(),
              [&](std::size_t x, std::size_t y) { return el[x] < el[y]; });
    for (auto j : members) cls.members.push_back(el[j]);
    cls.representative = cls.members.front();
    cls.size = members.size();
    cls.types = types[k];
    report.classes.push_back(std::move(cls));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const auto& a, const auto& b) { return a.representative < b.representative; });
  report.cr = static_cast<int>(report.classes.size());
  for (const auto& c : report.classes) {
    for (int i = 0; i < 3; ++i) report.cr_by_type[static_cast<std::size_t>(i)] += c.has_type(i);
  }
  return report;
}

ReflectionReport reflections(const FlagMap& m) { return reflections(m, automorphism_group(m)); }

FlagMap quotient_map(const FlagMap& m, const PermGroup& aut) {
  const std::size_t n = m.n_flags();
  const auto label = orbit_labels(aut.generators(), n);
  std::size_t count = 0;
  for (auto l : label) count = std::max<std::size_t>(count, l + 1);
  std::array<std::vector<Point>, 3> q;
  for (int i = 0; i < 3; ++i) {
    auto& qi = q[static_cast<std::size_t>(i)];
    qi.assign(count, 0);
    for (Point x = 0; x < n; ++x) qi[label[x]] = label[m.apply(x, i)];
  }
  Meta meta = Meta::object();
  meta["quotient_of"] = m.meta().value("name", std::string("map"));
  return FlagMap::validate(Perm(q[0]), Perm(q[1]), Perm(q[2]), meta);
}

FlagMap quotient_map(const FlagMap& m) { return quotient_map(m, automorphism_group(m)); }

std::array<int, 3> prop41_counts(const FlagMap& q) {
  std::array<int, 3> c{0, 0, 0};
  for (Point x = 0; x < q.n_flags(); ++x) {
    if (q.apply(x, 0) == x && q.apply(x, 2) >= x) ++c[0];
    if (q.apply(x, 1) == x) ++c[1];
    if (q.apply(x, 2) == x && q.apply(x, 0) >= x) ++c[2];
  }
  return c;
}

bool Cor42Report::holds() const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (cr_by_type[i] > bound[i]) return false;
  }
  return true;
}

Cor42Report cor42_report(const FlagMap& m, const PermGroup& aut) {
  Cor42Report r;
  r.cr_by_type = reflections(m, aut).cr_by_type;
  r.bound = prop41_counts(quotient_map(m, aut));
  return r;
}

Cor42Report check_cor42(const FlagMap& m, const PermGroup& aut) {
  const Cor42Report r = cor42_report(m, aut);
  for (std::size_t i = 0; i < 3; ++i) {
    if (r.cr_by_type[i] > r.bound[i]) {
      throw std::logic_error("type-" + std::to_string(i) +
                             " reflection classes exceed the coset bound");
    }
  }
  return r;
}

Cor42Report check_cor42(const FlagMap& m) { return check_cor42(m, automorphism_group(m)); }

}  // namespace mapref
