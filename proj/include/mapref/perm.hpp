#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mapref {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image array.
///
/// Composition follows the right-action convention used throughout the
/// library: `compose(a, b)` applies `a` first, then `b`, so
/// `compose(a, b)[x] == b[a[x]]`.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<Point>>& cycles);
  /// Parses "(0 1)(2 3)"; "()" or the empty string is the identity.
  static Perm parse_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Cycles of length >= 2 (or all cycles when include_fixed), each starting
  /// at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;
  std::string to_cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

Perm compose(const Perm& a, const Perm& b);
inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }
Perm power(const Perm& p, long long e);
/// by^-1 * x * by, i.e. the image of x under conjugation by `by`.
Perm conjugate(const Perm& x, const Perm& by);

/// Cycle lengths in non-increasing order; fixed points appear as 1s.
std::vector<std::size_t> cycle_type(const Perm& p);
std::uint64_t order(const Perm& p);

enum class Parity { even, odd };
Parity parity(const Perm& p);

bool squares_to_identity(const Perm& p);
/// Non-identity permutation of order two.
bool is_involution(const Perm& p);

/// Blocks sorted internally and ordered by their least point.
using Partition = std::vector<std::vector<Point>>;

Partition orbits(std::span<const Perm> gens, std::size_t degree);
/// label[x] = index of the block of `orbits(gens, degree)` containing x.
std::vector<std::uint32_t> orbit_labels(std::span<const Perm> gens,
                                        std::size_t degree);

bool is_transitive(std::span<const Perm> gens, std::size_t degree);

inline constexpr std::size_t kPrimitivityDegreeCap = 64;
/// Prime degree short-circuits to transitivity; composite degree is decided
/// by minimal-block search and is limited to kPrimitivityDegreeCap points.
bool is_primitive(std::span<const Perm> gens, std::size_t degree);

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// Element cap for closure(); MAPREF_CAP overrides the 10^6 default.
std::size_t default_closure_cap();

class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::vector<Perm> elements);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  bool has_elements() const { return elements_.has_value(); }
  /// Throws std::logic_error when the element list is absent.
  const std::vector<Perm>& elements() const;
  std::optional<std::uint64_t> order() const { return order_; }
  void set_order(std::uint64_t order) { order_ = order; }

  bool contains(const Perm& p) const;
  std::optional<std::size_t> index_of(const Perm& p) const;

 private:
  std::size_t degree_;
  std::vector<Perm> generators_;
  std::optional<std::vector<Perm>> elements_;
  std::optional<std::uint64_t> order_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// Breadth-first closure of <gens>. Throws CapExceeded once more than `cap`
/// elements have been found.
PermGroup closure(std::span<const Perm> gens, std::size_t cap);
PermGroup closure(std::span<const Perm> gens);

struct ConjugacyClass {
  Perm representative;  // least member
  std::vector<Perm> members;
};

/// Non-identity involutions of an explicit group, split into classes.
std::vector<ConjugacyClass> involution_conjugacy_classes(const PermGroup& g);

/// Conjugacy class of x under the group generated by `gens`.
std::vector<Perm> conjugacy_class(const Perm& x, std::span<const Perm> gens);

/// Involutions are conjugate in A_n iff they are conjugate in S_n, so both
/// cases reduce to comparing cycle types. Throws on identity input.
bool same_class_in_alt_or_sym(const Perm& a, const Perm& b,
                              bool in_alternating);

bool is_prime(std::uint64_t n);

}  // namespace mapref
