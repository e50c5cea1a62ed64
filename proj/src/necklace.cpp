#include <algorithm>

#include "mapref/builders.hpp"
#include "mapref/symmetry.hpp"

namespace mapref {

namespace {

struct Placed {
  Point first = 0;   // attachment joined to the previous bead
  Point second = 0;  // attachment joined to the next bead
};

class NecklaceAssembler {
 public:
  Placed add(Bead bead) {
    switch (bead) {
      case Bead::sigma2_0: {
        // r0 fixes both points, r2 swaps them
        const Point p = grow(2);
        swap(2, p, p + 1);
        return {p, p + 1};
      }
      case Bead::sigma2_2: {
        const Point p = grow(2);
        swap(0, p, p + 1);
        return {p, p + 1};
      }
      case Bead::sigma2_minus: {
        const Point p = grow(2);
        swap(0, p, p + 1);
        swap(2, p, p + 1);
        return {p, p + 1};
      }
      case Bead::sigma4:
      case Bead::sigma4_star: {
        // (a b c d): r0 = (a b)(c d), r2 = (a d)(b c)
        const Point a = grow(4);
        swap(0, a, a + 1);
        swap(0, a + 2, a + 3);
        swap(2, a, a + 3);
        swap(2, a + 1, a + 2);
        if (bead == Bead::sigma4) {
          spare_ = a + 1;
          return {a, a + 2};
        }
        swap(1, a, a + 2);
        return {a + 1, a + 3};
      }
      case Bead::sigma1:
        return {grow(1), 0};
    }
    throw BuildError("unknown bead");
  }

  void join(Point x, Point y) { swap(1, x, y); }
  Point spare() const { return spare_; }

  FlagMap finish(Meta meta) const {
    return FlagMap::validate(Perm(r_[0]), Perm(r_[1]), Perm(r_[2]), std::move(meta));
  }

 private:
  Point grow(std::size_t k) {
    const auto start = static_cast<Point>(r_[0].size());
    for (auto& r : r_) {
      for (std::size_t i = 0; i < k; ++i) r.push_back(static_cast<Point>(start + i));
    }
    return start;
  }
  void swap(int i, Point x, Point y) {
    auto& r = r_[static_cast<std::size_t>(i)];
    r[x] = y;
    r[y] = x;
  }

  std::array<std::vector<Point>, 3> r_;
  Point spare_ = 0;
};

}  // namespace

std::vector<Bead> necklace_beads(const NecklaceSpec& spec) {
  const bool odd = spec.c1 % 2 != 0;
  const int n20 = odd ? spec.c0 - 1 : spec.c0;
  const int n4 = odd ? (spec.c1 + 1) / 2 : spec.c1 / 2;
  const int n22 = odd ? spec.c2 - 1 : spec.c2;
  std::vector<Bead> beads;
  beads.insert(beads.end(), static_cast<std::size_t>(n20), Bead::sigma2_0);
  beads.insert(beads.end(), static_cast<std::size_t>(n4), Bead::sigma4);
  beads.insert(beads.end(), static_cast<std::size_t>(n22), Bead::sigma2_2);
  beads.insert(beads.end(), static_cast<std::size_t>(spec.sigma2_minus), Bead::sigma2_minus);
  beads.insert(beads.end(), static_cast<std::size_t>(spec.sigma4_star), Bead::sigma4_star);
  return beads;
}

BuildResult necklace(const NecklaceSpec& spec) {
  if (spec.c0 < 0 || spec.c1 < 0 || spec.c2 < 0 || spec.sigma2_minus < 0 || spec.sigma4_star < 0) {
    throw BuildError("necklace counts must be non-negative");
  }
  const bool odd = spec.c1 % 2 != 0;
  if (odd && (spec.c0 < 1 || spec.c2 < 1)) throw BuildError("odd c1 needs c0, c2 >= 1");
  if (spec.c0 + spec.c1 + spec.c2 == 0) throw BuildError("necklace needs c0 + c1 + c2 >= 1");

  const std::vector<Bead> beads = spec.arrangement.empty() ? necklace_beads(spec) : spec.arrangement;
  {
    auto expected = necklace_beads(spec);
    auto given = beads;
    std::sort(expected.begin(), expected.end());
    std::sort(given.begin(), given.end());
    if (expected != given) throw BuildError("arrangement does not match the requested counts");
  }

  NecklaceAssembler as;
  std::vector<Placed> placed;
  Point first_sigma4_spare = 0;
  bool have_sigma4 = false;
  for (Bead b : beads) {
    placed.push_back(as.add(b));
    if (b == Bead::sigma4 && !have_sigma4) {
      have_sigma4 = true;
      first_sigma4_spare = as.spare();
    }
  }
  for (std::size_t t = 0; t < placed.size(); ++t) {
    as.join(placed[t].second, placed[(t + 1) % placed.size()].first);
  }
  if (odd) {
    const Point z = as.add(Bead::sigma1).first;
    as.join(z, first_sigma4_spare);
  }

  Meta meta{{"name", "necklace"}, {"c", {spec.c0, spec.c1, spec.c2}},
            {"fillers", {spec.sigma2_minus, spec.sigma4_star}}};
  BuildResult out{as.finish(meta), VerificationRecord("necklace")};
  const std::size_t expected_flags =
      static_cast<std::size_t>(2 * (spec.c0 + spec.c1 + spec.c2) - (odd ? 1 : 0) + 2 * spec.sigma2_minus +
                               4 * spec.sigma4_star);
  out.record.expect_eq("degree", expected_flags, out.map.n_flags());
  out.record.expect_eq("prop41 counts", std::array<int, 3>{spec.c0, spec.c1, spec.c2}, prop41_counts(out.map));
  return out;
}

}  // namespace mapref
