#pragma once

// Random surfaces glued from 2N oriented triangles, encoded as pairings of
// the 6N half-edge labels of a cubic ribbon graph.
//
// Internally half-edges are 0-based: h in [0, 6N), vertex(h) = h / 3, and the
// rotation at a vertex is 3v -> 3v+1 -> 3v+2 -> 3v. Every external surface
// (pairing_from_pairs, text files, CLI) uses the 1-based labels 1..6N, under
// which the rotation reads (3v-2, 3v-1, 3v).

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace systole {

using HalfEdge = std::uint32_t;
using Vertex = std::uint32_t;

constexpr Vertex vertex_of(HalfEdge h) { return h / 3; }
constexpr HalfEdge rotate(HalfEdge h) { return h % 3 == 2 ? h - 2 : h + 1; }

class PairingError : public std::invalid_argument {
 public:
  enum class Kind { kOutOfRange, kSelfPair, kDuplicateLabel, kMissingLabel, kBadInput };
  PairingError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A fixed-point-free involution on the 6N half-edges.
class Pairing {
 public:
  Pairing(std::uint32_t n, std::vector<HalfEdge> mate);

  std::uint32_t n() const { return n_; }
  std::uint32_t half_edge_count() const { return 6 * n_; }
  std::uint32_t vertex_count() const { return 2 * n_; }
  std::uint32_t edge_count() const { return 3 * n_; }

  HalfEdge mate(HalfEdge h) const { return mate_[h]; }
  const std::vector<HalfEdge>& mates() const { return mate_; }

  // 1-based pairs (a, b) with a < b, sorted by a.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const;

  bool operator==(const Pairing&) const = default;

 private:
  std::uint32_t n_;
  std::vector<HalfEdge> mate_;
};

// Validates 1-based pairs. Each failure mode raises PairingError with its own kind.
Pairing pairing_from_pairs(std::uint32_t n,
                           const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

// Text format: "N" then 3N lines "a b" (1 <= a < b <= 6N) sorted by a.
std::string to_text(const Pairing& p);
Pairing pairing_from_text(const std::string& text);
Pairing read_pairing(std::istream& in);

// Uniform over the (6N-1)!! pairings; deterministic in (seed, stream).
Pairing sample_uniform(std::uint32_t n, std::uint64_t seed, std::uint64_t stream);

class RibbonGraph {
 public:
  explicit RibbonGraph(Pairing pairing);

  const Pairing& pairing() const { return pairing_; }
  std::uint32_t n() const { return pairing_.n(); }
  std::uint32_t vertex_count() const { return pairing_.vertex_count(); }
  std::uint32_t edge_count() const { return pairing_.edge_count(); }
  HalfEdge mate(HalfEdge h) const { return pairing_.mate(h); }

  // Edges are numbered by increasing smaller half-edge.
  std::uint32_t edge_of(HalfEdge h) const { return edge_of_[h]; }

  // Orbits of h -> rotate(mate(h)); each lists the half-edges the boundary
  // walk departs from, starting at the smallest one.
  const std::vector<std::vector<HalfEdge>>& faces() const { return faces_; }
  std::uint32_t face_of(HalfEdge h) const { return face_of_[h]; }

  std::uint32_t component_count() const { return static_cast<std::uint32_t>(component_genus_.size()); }
  std::uint32_t component_of(Vertex v) const { return component_of_[v]; }
  std::uint32_t component_size(std::uint32_t c) const { return component_vertices_[c]; }
  const std::vector<int>& genus_per_component() const { return component_genus_; }
  int total_genus() const { return total_genus_; }

 private:
  Pairing pairing_;
  std::vector<std::uint32_t> edge_of_;
  std::vector<std::vector<HalfEdge>> faces_;
  std::vector<std::uint32_t> face_of_;
  std::vector<std::uint32_t> component_of_;
  std::vector<std::uint32_t> component_vertices_;
  std::vector<int> component_genus_;
  int total_genus_ = 0;
};

}  // namespace systole
