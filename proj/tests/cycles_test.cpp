#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "oracles.hpp"
#include "systole/cycles.hpp"
#include "systole/exact.hpp"
#include "systole/series.hpp"

using namespace systole;

namespace {

const oracle::Pairs kTheta{{1, 4}, {2, 5}, {3, 6}};

// Vertex v (0-based) owns labels 3v+1..3v+3. Vertices 0, 1 carry a double
// edge, 0-2 and 1-5 attach the two pieces {2,3,4} and {5,6,7}.
Pairing dumbbell() {
  auto h = [](std::uint32_t v, std::uint32_t slot) { return 3 * v + slot + 1; };
  oracle::Pairs pairs{
      {h(0, 0), h(1, 0)}, {h(0, 1), h(1, 1)}, {h(0, 2), h(2, 0)}, {h(1, 2), h(5, 0)},
      {h(2, 1), h(3, 0)}, {h(2, 2), h(4, 0)}, {h(3, 1), h(4, 1)}, {h(3, 2), h(4, 2)},
      {h(5, 1), h(6, 0)}, {h(5, 2), h(7, 0)}, {h(6, 1), h(7, 1)}, {h(6, 2), h(7, 2)},
  };
  return pairing_from_pairs(4, pairs);
}

// Least qualifying cycle length and trace over every cycle in the graph.
std::pair<std::size_t, BigInt> brute_essential(const RibbonGraph& g) {
  const HomologyBasis basis(g);
  std::size_t best_len = SIZE_MAX;
  BigInt best_trace = -1;
  for (const Cycle& c : enumerate_cycles(g, g.vertex_count())) {
    const Word w = cycle_word(c);
    if (w.is_pure() || is_null_homologous(basis, c)) continue;
    best_len = std::min(best_len, c.length());
    const BigInt t = word_trace(w);
    if (best_trace < 0 || t < best_trace) best_trace = t;
  }
  return {best_len, best_trace};
}

}  // namespace

TEST(Cycles, Theta) {
  const RibbonGraph g(pairing_from_pairs(1, kTheta));
  const auto cycles = enumerate_cycles(g, 3);
  ASSERT_EQ(cycles.size(), 3u);
  std::set<std::vector<std::uint32_t>> keys;
  for (const auto& c : cycles) {
    EXPECT_EQ(c.length(), 2u);
    keys.insert(c.canonical_key());
    EXPECT_EQ(canonicalize(cycle_word(c)).canonical.str(), "LR");
  }
  EXPECT_EQ(keys.size(), 3u);
  EXPECT_TRUE(enumerate_cycles(g, 0).empty());
  EXPECT_TRUE(enumerate_cycles(g, 1).empty());
}

TEST(Cycles, LoopsAreSingleLetterCycles) {
  const RibbonGraph g(pairing_from_pairs(1, {{1, 2}, {3, 6}, {4, 5}}));
  const auto cycles = enumerate_cycles(g, 2);
  ASSERT_EQ(cycles.size(), 2u);
  for (const auto& c : cycles) {
    EXPECT_EQ(c.length(), 1u);
    EXPECT_EQ(cycle_word(c).length(), 1u);
  }
}

TEST(Cycles, CountsMatchClosedWalkOracleOnOmegaOneAndTwo) {
  for (std::uint32_t n : {1u, 2u}) {
    enumerate_all_pairings(n, [&](const Pairing& p) {
      const RibbonGraph g(p);
      std::map<std::size_t, std::uint64_t> by_length;
      std::set<std::vector<std::uint32_t>> keys;
      for (const auto& c : enumerate_cycles(g, 2 * n)) {
        ++by_length[c.length()];
        keys.insert(c.canonical_key());
      }
      std::size_t total = 0;
      for (std::uint32_t k = 1; k <= 2 * n; ++k) {
        const auto expected = oracle::cycle_count(n, oracle::mate_table(n, p.pairs()), k);
        ASSERT_EQ(by_length[k], expected) << "k=" << k;
        total += expected;
      }
      // Distinct cycles have distinct edge sets.
      ASSERT_EQ(keys.size(), total);
    });
  }
}

TEST(Cycles, CountsMatchOracleOnSampledGraphs) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const RibbonGraph g(sample_uniform(12, 404, s));
    const auto mate = oracle::mate_table(12, g.pairing().pairs());
    std::map<std::size_t, std::uint64_t> by_length;
    for (const auto& c : enumerate_cycles(g, 7)) ++by_length[c.length()];
    for (std::uint32_t k = 1; k <= 7; ++k) ASSERT_EQ(by_length[k], oracle::cycle_count(12, mate, k)) << k;
  }
}

TEST(Cycles, StepsAreConsistent) {
  const RibbonGraph g(sample_uniform(40, 1, 1));
  for (const auto& c : enumerate_cycles(g, 9)) {
    const std::size_t k = c.length();
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_EQ(vertex_of(c.departures[i]), c.vertices[i]);
      EXPECT_EQ(c.arrivals[i], g.mate(c.departures[i]));
      EXPECT_EQ(vertex_of(c.arrivals[i]), c.vertices[(i + 1) % k]);
      EXPECT_EQ(c.edges[i], g.edge_of(c.departures[i]));
    }
    EXPECT_EQ(c.vertices.front(), *std::min_element(c.vertices.begin(), c.vertices.end()));
  }
}

TEST(Cycles, ReversalPreservesWordClass) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const RibbonGraph g(sample_uniform(30, 8, s));
    for (const auto& c : enumerate_cycles(g, 8)) {
      const Cycle r = c.reversed();
      EXPECT_EQ(r.canonical_key(), c.canonical_key());
      const Word w = cycle_word(c), wr = cycle_word(r);
      EXPECT_EQ(canonicalize(w).canonical, canonicalize(wr).canonical);
      EXPECT_EQ(word_trace(w), word_trace(wr));
      EXPECT_EQ(closed_walk_word(g, c.departures), w);
    }
  }
}

TEST(Cycles, FacesReadAsPureLeftWords) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const RibbonGraph g(sample_uniform(20, 3, s));
    for (const auto& face : g.faces()) {
      const Word w = closed_walk_word(g, face);
      EXPECT_EQ(w.str(), std::string(face.size(), 'L'));
    }
  }
  const RibbonGraph g(pairing_from_pairs(1, kTheta));
  EXPECT_THROW(closed_walk_word(g, {0, 1}), std::invalid_argument);
}

TEST(Cycles, EdgeCycleBound) {
  // At most 2^floor(k/2) k-cycles through any edge.
  for (std::uint32_t n : {8u, 16u, 32u, 64u}) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const RibbonGraph g(sample_uniform(n, 4444, s));
      std::vector<std::map<std::size_t, int>> through(g.edge_count());
      for (const auto& c : enumerate_cycles(g, 10)) {
        for (std::uint32_t e : c.edges) ++through[e][c.length()];
      }
      for (const auto& m : through) {
        for (const auto& [k, count] : m) ASSERT_LE(count, 1 << (k / 2)) << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Homology, FaceMatrixProperties) {
  int connected = 0;
  for (std::uint32_t n : {1u, 2u, 5u, 20u, 100u}) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const RibbonGraph g(sample_uniform(n, 99, s));
      const HomologyBasis basis(g);
      gf2::BitVector sum(g.edge_count());
      for (const auto& row : basis.face_edge_matrix()) sum ^= row;
      EXPECT_TRUE(sum.none());
      for (const auto& face : g.faces()) {
        gf2::BitVector v(g.edge_count());
        for (HalfEdge h : face) v.flip(g.edge_of(h));
        EXPECT_TRUE(basis.contains(v));
      }
      if (g.component_count() == 1) {
        ++connected;
        EXPECT_EQ(basis.rank(), g.faces().size() - 1);
      } else {
        EXPECT_EQ(basis.rank(), g.faces().size() - g.component_count());
      }
    }
  }
  EXPECT_GT(connected, 50);
}

TEST(Homology, ThetaTorus) {
  const RibbonGraph g(pairing_from_pairs(1, kTheta));
  const HomologyBasis basis(g);
  EXPECT_EQ(basis.rank(), 0u);
  for (const auto& c : enumerate_cycles(g, 2)) EXPECT_FALSE(is_null_homologous(basis, c));
  Cycle bad;
  bad.vertices = {0};
  bad.edges = {7};
  EXPECT_THROW(is_null_homologous(basis, bad), std::invalid_argument);
}

TEST(Separating, ThetaAndDumbbell) {
  const RibbonGraph theta(pairing_from_pairs(1, kTheta));
  for (const auto& c : enumerate_cycles(theta, 2)) EXPECT_FALSE(is_graph_separating(theta, c));
  EXPECT_FALSE(has_short_separating_cycle(theta, 3));
  EXPECT_THROW(has_short_separating_cycle(theta, 1), std::invalid_argument);

  const RibbonGraph g(dumbbell());
  EXPECT_EQ(g.component_count(), 1u);
  bool bridge_found = false;
  for (const auto& c : enumerate_cycles(g, 2)) {
    if (c.vertices == std::vector<Vertex>{0, 1}) {
      bridge_found = true;
      EXPECT_TRUE(is_graph_separating(g, c));
    }
  }
  EXPECT_TRUE(bridge_found);
  EXPECT_TRUE(has_short_separating_cycle(g, 2));
}

TEST(Separating, MatchesComponentRecount) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const RibbonGraph g(sample_uniform(10, 123, s));
    for (const auto& c : enumerate_cycles(g, 6)) {
      std::set<std::uint32_t> removed(c.edges.begin(), c.edges.end());
      oracle::Pairs kept;
      auto pairs = g.pairing().pairs();
      // Edge ids follow increasing smaller label, which is the order of pairs().
      for (std::uint32_t e = 0; e < pairs.size(); ++e) {
        if (!removed.count(e)) kept.push_back(pairs[e]);
      }
      std::vector<std::uint32_t> label(2 * 10 + 1);
      std::iota(label.begin(), label.end(), 0u);
      for (bool changed = true; changed;) {
        changed = false;
        for (auto [a, b] : kept) {
          const auto u = oracle::vertex(a), v = oracle::vertex(b);
          const auto m = std::min(label[u], label[v]);
          if (label[u] != m || label[v] != m) {
            label[u] = label[v] = m;
            changed = true;
          }
        }
      }
      const std::uint32_t root = c.vertices.front();
      const auto comp = g.component_of(root);
      bool split = false;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.component_of(v) == comp && label[v + 1] != label[root + 1]) split = true;
      }
      ASSERT_EQ(is_graph_separating(g, c), split);
    }
  }
}

TEST(Mell, ThetaAndOmegaOne) {
  const RibbonGraph theta(pairing_from_pairs(1, kTheta));
  EXPECT_EQ(m_ell(theta), 2);
  const auto sys = systole_estimate_detailed(theta);
  ASSERT_TRUE(sys.length.has_value());
  EXPECT_NEAR(*sys.length, 2 * std::acosh(1.5), 1e-12);
  EXPECT_NEAR(*sys.length, 1.92485, 1e-5);
  EXPECT_EQ(sys.trace, 3);

  enumerate_all_pairings(1, [](const Pairing& p) {
    const RibbonGraph g(p);
    if (g.total_genus() == 0) {
      EXPECT_EQ(m_ell(g), 0);
      EXPECT_FALSE(systole_estimate(g).has_value());
    } else {
      const int m = m_ell(g);
      EXPECT_TRUE(m == 1 || m == 2);
    }
  });
}

TEST(Mell, SearchMatchesExhaustiveCycleScan) {
  int positive = 0;
  for (std::uint32_t n : {2u, 3u, 5u, 8u}) {
    for (std::uint64_t s = 0; s < 40; ++s) {
      const RibbonGraph g(sample_uniform(n, 31337, s));
      const auto [len, trace] = brute_essential(g);
      if (g.total_genus() == 0) {
        EXPECT_EQ(m_ell(g), 0);
        EXPECT_FALSE(systole_estimate(g).has_value());
        continue;
      }
      // Pure words are face boundaries, so some mixed cycle is essential.
      ASSERT_NE(len, SIZE_MAX);
      ++positive;
      EXPECT_EQ(static_cast<std::size_t>(m_ell(g)), len);
      const auto sys = systole_estimate_detailed(g);
      EXPECT_EQ(sys.trace, trace);
      EXPECT_NEAR(*sys.length, 2 * std::acosh(trace.convert_to<double>() / 2), 1e-12);
    }
  }
  EXPECT_GT(positive, 80);
}
