#include "systole/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace systole::gf2 {

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.bits_ != bits_) throw std::invalid_argument("GF(2) vector dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::none() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVector::lowest() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return bits_;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

// Basis rows are stored in insertion order; row i has its pivot cleared in
// every later row, so one forward pass eliminates all pivots.
void RowSpace::reduce(BitVector& v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.test(pivots_[i])) v ^= basis_[i];
  }
}

bool RowSpace::insert(BitVector v) {
  if (v.size() != columns_) throw std::invalid_argument("GF(2) vector dimension mismatch");
  reduce(v);
  if (v.none()) return false;
  pivots_.push_back(v.lowest());
  basis_.push_back(std::move(v));
  return true;
}

bool RowSpace::contains(BitVector v) const {
  if (v.size() != columns_) throw std::invalid_argument("GF(2) vector dimension mismatch");
  reduce(v);
  return v.none();
}

}  // namespace systole::gf2
