#pragma once

#include <cstdint>
#include <vector>

namespace systole::gf2 {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& o);
  bool none() const;
  // Index of the lowest set bit, or size() when empty.
  std::size_t lowest() const;
  std::size_t count() const;
  bool operator==(const BitVector&) const = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Incrementally built row space over GF(2).
class RowSpace {
 public:
  explicit RowSpace(std::size_t columns) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return basis_.size(); }

  // Returns true when v was independent of the rows inserted so far.
  bool insert(BitVector v);
  bool contains(BitVector v) const;

 private:
  void reduce(BitVector& v) const;

  std::size_t columns_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace systole::gf2
