#include "mapref/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mapref {

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.size_ != size_) throw std::invalid_argument("bit vector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
}

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

void Gf2System::add_equation(const BitVector& coeffs, bool rhs) {
  if (coeffs.size() != n_vars_) throw std::invalid_argument("equation has wrong width");
  rows_.push_back(coeffs);
  rhs_.push_back(rhs);
}

void Gf2System::add_equation(const std::vector<std::size_t>& vars, bool rhs) {
  BitVector row(n_vars_);
  for (auto v : vars) row.flip(v);
  add_equation(row, rhs);
}

Gf2System::Reduced Gf2System::reduce() const {
  Reduced r;
  for (std::size_t e = 0; e < rows_.size(); ++e) {
    BitVector row = rows_[e];
    bool rhs = rhs_[e];
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      if (row.get(r.pivots[k])) {
        row ^= r.rows[k];
        rhs = rhs != r.rhs[k];
      }
    }
    if (!row.any()) {
      if (rhs) r.consistent = false;
      continue;
    }
    const std::size_t p = row.first_set();
    // keep earlier rows reduced against the new pivot
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      if (r.rows[k].get(p)) {
        r.rows[k] ^= row;
        r.rhs[k] = r.rhs[k] != rhs;
      }
    }
    r.rows.push_back(std::move(row));
    r.rhs.push_back(rhs);
    r.pivots.push_back(p);
  }
  return r;
}

std::optional<BitVector> Gf2System::solve() const {
  const auto r = reduce();
  if (!r.consistent) return std::nullopt;
  BitVector x(n_vars_);
  for (std::size_t k = 0; k < r.rows.size(); ++k) x.set(r.pivots[k], r.rhs[k]);
  return x;
}

}  // namespace mapref
