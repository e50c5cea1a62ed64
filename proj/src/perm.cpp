#include "mapref/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace mapref {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Point{0});
  }
  Point find(Point x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Point> parent_;
};

void require_same_degree(std::span<const Perm> gens, std::size_t degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator degree mismatch");
    }
  }
}

}  // namespace

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point x = c[i];
      if (x >= degree || used[x]) {
        throw std::invalid_argument("cycles are not disjoint within degree");
      }
      used[x] = true;
      img[x] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::parse_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle text");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      while (i < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
        ++i;
      }
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("unexpected character in cycle text");
      }
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        ++i;
      }
      cycle.push_back(static_cast<Point>(v));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

std::vector<std::vector<Point>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> c;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<Point> img(a.degree());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = b[a[static_cast<Point>(x)]];
  return Perm(std::move(img));
}

Perm power(const Perm& p, long long e) {
  Perm base = e < 0 ? p.inverse() : p;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  Perm result(p.degree());
  while (n) {
    if (n & 1) result = compose(result, base);
    base = compose(base, base);
    n >>= 1;
  }
  return result;
}

Perm conjugate(const Perm& x, const Perm& by) {
  return compose(compose(by.inverse(), x), by);
}

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> t;
  for (const auto& c : p.cycles(true)) t.push_back(c.size());
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

std::uint64_t order(const Perm& p) {
  std::uint64_t o = 1;
  for (const auto& c : p.cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
  return o;
}

Parity parity(const Perm& p) {
  std::size_t transpositions = 0;
  for (const auto& c : p.cycles()) transpositions += c.size() - 1;
  return transpositions % 2 ? Parity::odd : Parity::even;
}

bool squares_to_identity(const Perm& p) {
  for (Point x = 0; x < p.degree(); ++x) {
    if (p[p[x]] != x) return false;
  }
  return true;
}

bool is_involution(const Perm& p) { return !p.is_identity() && squares_to_identity(p); }

std::vector<std::uint32_t> orbit_labels(std::span<const Perm> gens, std::size_t degree) {
  require_same_degree(gens, degree);
  UnionFind uf(degree);
  for (const auto& g : gens) {
    for (Point x = 0; x < degree; ++x) uf.unite(x, g[x]);
  }
  std::vector<std::uint32_t> label(degree);
  std::vector<std::int64_t> root_label(degree, -1);
  std::uint32_t next = 0;
  for (Point x = 0; x < degree; ++x) {
    Point r = uf.find(x);
    if (root_label[r] < 0) root_label[r] = next++;
    label[x] = static_cast<std::uint32_t>(root_label[r]);
  }
  return label;
}

Partition orbits(std::span<const Perm> gens, std::size_t degree) {
  auto label = orbit_labels(gens, degree);
  std::uint32_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  Partition blocks(count);
  for (Point x = 0; x < degree; ++x) blocks[label[x]].push_back(x);
  return blocks;
}

bool is_transitive(std::span<const Perm> gens, std::size_t degree) {
  if (degree <= 1) return true;
  return orbits(gens, degree).size() == 1;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_primitive(std::span<const Perm> gens, std::size_t degree) {
  if (!is_transitive(gens, degree)) return false;
  if (degree <= 2 || is_prime(degree)) return true;
  if (degree > kPrimitivityDegreeCap) {
    throw std::invalid_argument("primitivity test limited to composite degree <= 64");
  }
  // Minimal block containing {0, b}: merge, then close under the generators.
  for (Point b = 1; b < degree; ++b) {
    UnionFind uf(degree);
    std::deque<std::pair<Point, Point>> queue;
    uf.unite(0, b);
    queue.emplace_back(0, b);
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        if (uf.unite(g[x], g[y])) queue.emplace_back(g[x], g[y]);
      }
    }
    std::size_t block_size = 0;
    for (Point x = 0; x < degree; ++x) block_size += uf.find(x) == uf.find(0);
    if (block_size < degree) return false;
  }
  return true;
}

CapExceeded::CapExceeded(std::size_t cap)
    : std::runtime_error("group closure exceeded cap of " + std::to_string(cap) +
                         " elements"),
      cap_(cap) {}

std::size_t default_closure_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("MAPREF_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1'000'000};
  }();
  return cap;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  require_same_degree(generators_, degree_);
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators,
                     std::vector<Perm> elements)
    : degree_(degree), generators_(std::move(generators)) {
  require_same_degree(generators_, degree_);
  require_same_degree(elements, degree_);
  index_.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) index_.emplace(elements[i], i);
  order_ = elements.size();
  elements_ = std::move(elements);
}

const std::vector<Perm>& PermGroup::elements() const {
  if (!elements_) throw std::logic_error("group has no explicit element list");
  return *elements_;
}

bool PermGroup::contains(const Perm& p) const { return index_of(p).has_value(); }

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  if (!elements_) throw std::logic_error("group has no explicit element list");
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PermGroup closure(std::span<const Perm> gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  const std::size_t degree = gens.front().degree();
  require_same_degree(gens, degree);
  std::vector<Perm> elements{Perm(degree)};
  std::unordered_set<Perm, PermHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = compose(elements[head], g);
      if (seen.insert(next).second) {
        if (elements.size() >= cap) throw CapExceeded(cap);
        elements.push_back(std::move(next));
      }
    }
  }
  return PermGroup(degree, std::vector<Perm>(gens.begin(), gens.end()), std::move(elements));
}

PermGroup closure(std::span<const Perm> gens) { return closure(gens, default_closure_cap()); }

std::vector<Perm> conjugacy_class(const Perm& x, std::span<const Perm> gens) {
  std::vector<Perm> members{x};
  std::unordered_set<Perm, PermHash> seen{x};
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& g : gens) {
      Perm y = conjugate(members[head], g);
      if (seen.insert(y).second) members.push_back(std::move(y));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ConjugacyClass> involution_conjugacy_classes(const PermGroup& g) {
  std::vector<Perm> involutions;
  for (const auto& e : g.elements()) {
    if (is_involution(e)) involutions.push_back(e);
  }
  std::sort(involutions.begin(), involutions.end());
  std::unordered_set<Perm, PermHash> assigned;
  std::vector<ConjugacyClass> classes;
  for (const auto& inv : involutions) {
    if (assigned.count(inv)) continue;
    auto members = conjugacy_class(inv, g.generators());
    for (const auto& m : members) assigned.insert(m);
    classes.push_back({members.front(), std::move(members)});
  }
  return classes;
}

bool same_class_in_alt_or_sym(const Perm& a, const Perm& b, bool in_alternating) {
  (void)in_alternating;
  if (a.is_identity() || b.is_identity()) {
    throw std::invalid_argument("class comparison needs non-identity involutions");
  }
  if (!is_involution(a) || !is_involution(b)) {
    throw std::invalid_argument("class comparison needs involutions");
  }
  return cycle_type(a) == cycle_type(b);
}

}  // namespace mapref
