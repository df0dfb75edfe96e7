#pragma once

// Words in the two parabolic generators L = [[1,1],[0,1]] and
// R = [[1,0],[1,1]] of SL(2,Z), their equivalence classes under cyclic
// shift and reverse-swap, and the tables A_k of classes of a given trace.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "systole/bigint.hpp"

namespace systole {

enum class Letter : std::uint8_t { L = 0, R = 1 };

constexpr Letter swapped(Letter x) { return x == Letter::L ? Letter::R : Letter::L; }

template <typename T>
struct Matrix2 {
  T a{1}, b{0}, c{0}, d{1};

  Matrix2 operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  T trace() const { return a + d; }
  T determinant() const { return a * d - b * c; }
  bool operator==(const Matrix2&) const = default;
};

// A non-empty finite string over {L, R}. Ordering is lexicographic with L < R.
class Word {
 public:
  explicit Word(std::vector<Letter> letters);
  // Parses a string over 'L'/'R'; throws std::invalid_argument otherwise.
  explicit Word(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  bool is_pure() const;  // L^j or R^j
  std::string str() const;

  Word rotated(std::size_t shift) const;
  // Reverse the word and exchange L and R; corresponds to transposing the matrix.
  Word reverse_swapped() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Matrix2<BigInt> word_matrix(const Word& w);
BigInt word_trace(const Word& w);

struct WordClass {
  Word canonical;         // lexicographic minimum of the orbit
  std::size_t size = 0;   // number of distinct words in the orbit
  std::size_t length = 0;
  BigInt trace;
  Rational poisson_mean;  // size / (2 length)
};

WordClass canonicalize(const Word& w);

// Minimum trace of a word of length j using both letters (attained by L^{j-1}R).
std::uint64_t min_trace_for_length(std::uint64_t j);

struct TraceClassTable {
  std::uint64_t max_trace = 0;
  // k -> classes of trace k, ordered by (length, canonical word).
  std::map<std::uint64_t, std::vector<WordClass>> classes;
  std::map<std::uint64_t, Rational> lambda_sum;

  const std::vector<WordClass>& at(std::uint64_t k) const;
  Rational lambda(std::uint64_t k) const;
  std::string to_csv() const;
};

// All classes [w] with 3 <= tr(w) <= max_trace. Throws std::invalid_argument
// for max_trace < 3.
TraceClassTable enumerate_trace_classes(std::uint64_t max_trace);

}  // namespace systole
