#pragma once

// Vertex-simple cycles ("circuits") on a cubic ribbon graph, their L/R words,
// mod-2 homology against the face boundaries, and the statistics built on
// them: m_ell, the hyperbolic systole estimate and short separating cycles.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "systole/gf2.hpp"
#include "systole/ribbon_graph.hpp"
#include "systole/word.hpp"

namespace systole {

// Step i leaves vertices[i] through departures[i] and enters
// vertices[(i+1) % k] through arrivals[i] = mate(departures[i]).
struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<HalfEdge> departures;
  std::vector<HalfEdge> arrivals;
  std::vector<std::uint32_t> edges;  // edge id of step i

  std::size_t length() const { return vertices.size(); }
  // Sorted edge ids; a vertex-simple cycle is determined by its edge set.
  std::vector<std::uint32_t> canonical_key() const;
  // Same closed path walked backwards.
  Cycle reversed() const;
};

// Each cycle with at most max_len edges is reported exactly once, with its
// smallest vertex first and oriented so departures[0] < arrivals.back().
// The callback's Cycle is reused between calls.
void for_each_cycle(const RibbonGraph& g, std::size_t max_len,
                    const std::function<void(const Cycle&)>& visit);
std::vector<Cycle> enumerate_cycles(const RibbonGraph& g, std::size_t max_len);

// Letter at vertices[i] is L when departures[i] == rotate(arrival into vertices[i]).
Word cycle_word(const Cycle& c);

// Word read along a closed walk given by its departure half-edges.
Word closed_walk_word(const RibbonGraph& g, const std::vector<HalfEdge>& departures);

bool is_graph_separating(const RibbonGraph& g, const Cycle& c);

class HomologyBasis {
 public:
  explicit HomologyBasis(const RibbonGraph& g);

  std::size_t edge_count() const { return edges_; }
  std::size_t rank() const { return space_.rank(); }
  // Row f: parity of the number of times face f runs along each edge.
  const std::vector<gf2::BitVector>& face_edge_matrix() const { return rows_; }
  bool contains(const gf2::BitVector& v) const { return space_.contains(v); }

 private:
  std::size_t edges_;
  std::vector<gf2::BitVector> rows_;
  gf2::RowSpace space_;
};

// Throws std::invalid_argument when the cycle references edges outside the basis.
bool is_null_homologous(const HomologyBasis& basis, const Cycle& c);

// A cycle counts as non-trivial on the closed surface when its word is not
// L^j / R^j and it is not null-homologous mod 2.
struct MellResult {
  int value = 0;
  // Some shorter mixed-word cycle was discarded only for being null-homologous.
  bool proxy_rejected_shorter = false;
};
MellResult m_ell_detailed(const RibbonGraph& g);
int m_ell(const RibbonGraph& g);

struct SystoleResult {
  std::optional<double> length;  // 2 acosh(trace / 2); absent for genus 0
  BigInt trace = 0;
  std::size_t cycle_length = 0;
  // A null-homologous mixed-word cycle beat the returned trace.
  bool proxy_rejected_candidate = false;
};
SystoleResult systole_estimate_detailed(const RibbonGraph& g);
std::optional<double> systole_estimate(const RibbonGraph& g);

// Throws for bound < 2.
bool has_short_separating_cycle(const RibbonGraph& g, std::size_t bound);

}  // namespace systole
