#include "systole/word.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace systole {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("word must have at least one letter");
}

namespace {

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch == 'L' || ch == 'l') {
      out.push_back(Letter::L);
    } else if (ch == 'R' || ch == 'r') {
      out.push_back(Letter::R);
    } else {
      throw std::invalid_argument("word letters must be L or R, got '" + std::string(1, ch) + "'");
    }
  }
  return out;
}

}  // namespace

Word::Word(std::string_view text) : Word(parse_letters(text)) {}

bool Word::is_pure() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [&](Letter x) { return x == letters_.front(); });
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(x == Letter::L ? 'L' : 'R');
  return s;
}

Word Word::rotated(std::size_t shift) const {
  std::vector<Letter> out(letters_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return Word(std::move(out));
}

Word Word::reverse_swapped() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(swapped(*it));
  return Word(std::move(out));
}

namespace {

template <typename T>
Matrix2<T> generator(Letter x) {
  if (x == Letter::L) return {1, 1, 0, 1};
  return {1, 0, 1, 1};
}

}  // namespace

Matrix2<BigInt> word_matrix(const Word& w) {
  Matrix2<BigInt> m;
  for (Letter x : w.letters()) m = m * generator<BigInt>(x);
  return m;
}

BigInt word_trace(const Word& w) { return word_matrix(w).trace(); }

WordClass canonicalize(const Word& w) {
  std::set<Word> orbit;
  const Word star = w.reverse_swapped();
  for (std::size_t i = 0; i < w.length(); ++i) {
    orbit.insert(w.rotated(i));
    orbit.insert(star.rotated(i));
  }
  WordClass cls{*orbit.begin(), orbit.size(), w.length(), word_trace(w), Rational(0)};
  cls.poisson_mean = Rational(BigInt(cls.size), BigInt(2 * cls.length));
  return cls;
}

std::uint64_t min_trace_for_length(std::uint64_t j) {
  if (j < 2) throw std::invalid_argument("min_trace_for_length requires j >= 2");
  return j + 1;
}

const std::vector<WordClass>& TraceClassTable::at(std::uint64_t k) const {
  auto it = classes.find(k);
  if (it == classes.end()) throw std::out_of_range("trace " + std::to_string(k) + " not in table");
  return it->second;
}

Rational TraceClassTable::lambda(std::uint64_t k) const {
  auto it = lambda_sum.find(k);
  if (it == lambda_sum.end()) throw std::out_of_range("trace " + std::to_string(k) + " not in table");
  return it->second;
}

std::string TraceClassTable::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "trace,canonical,size,length,lambda,lambda_decimal\n";
  for (const auto& [k, list] : classes) {
    for (const WordClass& c : list) {
      out << k << ',' << c.canonical.str() << ',' << c.size << ',' << c.length << ','
          << to_fraction_string(c.poisson_mean) << ',' << to_double(c.poisson_mean) << '\n';
    }
  }
  return out.str();
}

namespace {

constexpr std::uint64_t kMaxEnumerableTrace = 1u << 20;

// Depth-first over prefixes. Appending letters never lowers the trace of a
// word with nonnegative matrix, so a prefix above the cap can be dropped.
struct ClassCollector {
  std::uint64_t max_trace;
  std::vector<Letter> prefix;
  std::map<std::uint64_t, std::set<Word>> seen;

  void visit(const Matrix2<std::uint64_t>& m, bool has_l, bool has_r) {
    if (has_l && has_r) {
      const std::uint64_t t = m.trace();
      if (t > max_trace) return;
      Word w(prefix);
      WordClass c = canonicalize(w);
      if (c.canonical == w) seen[t].insert(w);
    }
    // A mixed word of length j has trace >= j + 1.
    if (prefix.size() + 1 > max_trace - 1) return;
    for (Letter x : {Letter::L, Letter::R}) {
      prefix.push_back(x);
      visit(m * generator<std::uint64_t>(x), has_l || x == Letter::L, has_r || x == Letter::R);
      prefix.pop_back();
    }
  }
};

}  // namespace

TraceClassTable enumerate_trace_classes(std::uint64_t max_trace) {
  if (max_trace < 3) throw std::invalid_argument("max_trace must be at least 3");
  if (max_trace > kMaxEnumerableTrace) throw std::invalid_argument("max_trace too large");

  ClassCollector collector{max_trace, {}, {}};
  for (Letter first : {Letter::L, Letter::R}) {
    collector.prefix = {first};
    collector.visit(generator<std::uint64_t>(first), first == Letter::L, first == Letter::R);
  }

  TraceClassTable table;
  table.max_trace = max_trace;
  for (std::uint64_t k = 3; k <= max_trace; ++k) {
    auto& list = table.classes[k];
    Rational total = 0;
    for (const Word& w : collector.seen[k]) {
      list.push_back(canonicalize(w));
      total += list.back().poisson_mean;
    }
    std::stable_sort(list.begin(), list.end(), [](const WordClass& x, const WordClass& y) {
      if (x.length != y.length) return x.length < y.length;
      return x.canonical < y.canonical;
    });
    table.lambda_sum[k] = total;
  }
  return table;
}

}  // namespace systole
