#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace mapref {

/// Dense bit vector over GF(2), packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const auto bit = std::uint64_t{1} << (i % 64);
    if (v) words_[i / 64] |= bit;
    else words_[i / 64] &= ~bit;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& o);
  bool any() const;
  /// Lowest set index, or size() when empty.
  std::size_t first_set() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Linear system A x = b over GF(2), reduced to row echelon form.
class Gf2System {
 public:
  explicit Gf2System(std::size_t n_vars) : n_vars_(n_vars) {}

  std::size_t n_vars() const { return n_vars_; }
  void add_equation(const BitVector& coeffs, bool rhs);
  /// Convenience: x[i1] + x[i2] + ... = rhs.
  void add_equation(const std::vector<std::size_t>& vars, bool rhs);

  struct Reduced {
    std::vector<BitVector> rows;       // reduced row echelon form, one pivot per row
    std::vector<bool> rhs;
    std::vector<std::size_t> pivots;   // pivot column of each row
    bool consistent = true;
    std::size_t rank() const { return rows.size(); }
  };

  Reduced reduce() const;

  /// A solution with every free variable set to zero, if consistent.
  std::optional<BitVector> solve() const;

 private:
  std::size_t n_vars_;
  std::vector<BitVector> rows_;
  std::vector<bool> rhs_;
};

}  // namespace mapref
