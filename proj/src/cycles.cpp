#include "systole/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "systole/series.hpp"

namespace systole {

std::vector<std::uint32_t> Cycle::canonical_key() const {
  std::vector<std::uint32_t> key(edges);
  std::sort(key.begin(), key.end());
  return key;
}

Cycle Cycle::reversed() const {
  const std::size_t k = length();
  Cycle out;
  out.vertices.reserve(k);
  // Walking backwards from vertices[0]: leave through the half-edge we
  // arrived on, which is arrivals[k-1], and so on.
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t step = (2 * k - 1 - i) % k;
    out.vertices.push_back(vertices[(step + 1) % k]);
    out.departures.push_back(arrivals[step]);
    out.arrivals.push_back(departures[step]);
    out.edges.push_back(edges[step]);
  }
  return out;
}

namespace {

class CycleSearch {
 public:
  CycleSearch(const RibbonGraph& g, std::size_t max_len, const std::function<void(const Cycle&)>& visit)
      : g_(g), max_len_(max_len), visit_(visit), on_path_(g.vertex_count(), 0) {}

  void run() {
    if (max_len_ == 0) return;
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      start_ = s;
      on_path_[s] = 1;
      path_.vertices.push_back(s);
      extend(s, 0, 0);
      path_.vertices.pop_back();
      on_path_[s] = 0;
    }
  }

 private:
  void extend(Vertex v, HalfEdge arrived, std::size_t depth) {
    for (HalfEdge d = 3 * v; d < 3 * v + 3; ++d) {
      if (depth > 0 && d == arrived) continue;
      const HalfEdge a = g_.mate(d);
      const Vertex u = vertex_of(a);
      if (u == start_) {
        const HalfEdge first = depth == 0 ? d : path_.departures.front();
        if (first < a) emit(d, a);
        continue;
      }
      if (depth + 1 >= max_len_ || u < start_ || on_path_[u]) continue;
      push_step(d, a);
      on_path_[u] = 1;
      path_.vertices.push_back(u);
      extend(u, a, depth + 1);
      path_.vertices.pop_back();
      on_path_[u] = 0;
      pop_step();
    }
  }

  void push_step(HalfEdge d, HalfEdge a) {
    path_.departures.push_back(d);
    path_.arrivals.push_back(a);
    path_.edges.push_back(g_.edge_of(d));
  }
  void pop_step() {
    path_.departures.pop_back();
    path_.arrivals.pop_back();
    path_.edges.pop_back();
  }
  void emit(HalfEdge d, HalfEdge a) {
    push_step(d, a);
    visit_(path_);
    pop_step();
  }

  const RibbonGraph& g_;
  std::size_t max_len_;
  const std::function<void(const Cycle&)>& visit_;
  std::vector<char> on_path_;
  Vertex start_ = 0;
  Cycle path_;
};

}  // namespace

void for_each_cycle(const RibbonGraph& g, std::size_t max_len,
                    const std::function<void(const Cycle&)>& visit) {
  CycleSearch(g, max_len, visit).run();
}

std::vector<Cycle> enumerate_cycles(const RibbonGraph& g, std::size_t max_len) {
  std::vector<Cycle> out;
  for_each_cycle(g, max_len, [&](const Cycle& c) { out.push_back(c); });
  return out;
}

Word cycle_word(const Cycle& c) {
  const std::size_t k = c.length();
  std::vector<Letter> letters(k);
  for (std::size_t i = 0; i < k; ++i) {
    const HalfEdge in = c.arrivals[(i + k - 1) % k];
    letters[i] = c.departures[i] == rotate(in) ? Letter::L : Letter::R;
  }
  return Word(std::move(letters));
}

Word closed_walk_word(const RibbonGraph& g, const std::vector<HalfEdge>& departures) {
  const std::size_t k = departures.size();
  std::vector<Letter> letters(k);
  for (std::size_t i = 0; i < k; ++i) {
    const HalfEdge in = g.mate(departures[(i + k - 1) % k]);
    if (vertex_of(in) != vertex_of(departures[i])) throw std::invalid_argument("not a closed walk");
    letters[i] = departures[i] == rotate(in) ? Letter::L : Letter::R;
  }
  return Word(std::move(letters));
}

bool is_graph_separating(const RibbonGraph& g, const Cycle& c) {
  std::vector<char> removed(g.edge_count(), 0);
  for (std::uint32_t e : c.edges) removed[e] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{c.vertices.front()};
  seen[c.vertices.front()] = 1;
  std::uint32_t reached = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (HalfEdge h = 3 * v; h < 3 * v + 3; ++h) {
      if (removed[g.edge_of(h)]) continue;
      const Vertex u = vertex_of(g.mate(h));
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return reached < g.component_size(g.component_of(c.vertices.front()));
}

HomologyBasis::HomologyBasis(const RibbonGraph& g) : edges_(g.edge_count()), space_(g.edge_count()) {
  rows_.reserve(g.faces().size());
  for (const auto& face : g.faces()) {
    gf2::BitVector row(edges_);
    for (HalfEdge h : face) row.flip(g.edge_of(h));
    space_.insert(row);
    rows_.push_back(std::move(row));
  }
}

bool is_null_homologous(const HomologyBasis& basis, const Cycle& c) {
  gf2::BitVector v(basis.edge_count());
  for (std::uint32_t e : c.edges) {
    if (e >= basis.edge_count()) throw std::invalid_argument("cycle edge outside homology basis");
    v.flip(e);
  }
  return basis.contains(v);
}

namespace {

constexpr std::size_t kInitialSearchLength = 4;

}  // namespace

MellResult m_ell_detailed(const RibbonGraph& g) {
  if (g.total_genus() == 0) return {};
  const HomologyBasis basis(g);
  const std::size_t cap = g.vertex_count();
  for (std::size_t bound = std::min(kInitialSearchLength, cap);; bound = std::min(2 * bound, cap)) {
    std::size_t best = SIZE_MAX;
    std::size_t rejected = SIZE_MAX;
    for_each_cycle(g, bound, [&](const Cycle& c) {
      if (c.length() >= best || cycle_word(c).is_pure()) return;
      if (is_null_homologous(basis, c)) {
        rejected = std::min(rejected, c.length());
      } else {
        best = c.length();
      }
    });
    if (best != SIZE_MAX) return {static_cast<int>(best), rejected < best};
    if (bound == cap) throw std::logic_error("positive genus graph without an essential cycle");
  }
}

int m_ell(const RibbonGraph& g) { return m_ell_detailed(g).value; }

SystoleResult systole_estimate_detailed(const RibbonGraph& g) {
  SystoleResult out;
  if (g.total_genus() == 0) return out;
  const HomologyBasis basis(g);
  const std::size_t cap = g.vertex_count();
  std::size_t bound = std::min(kInitialSearchLength, cap);
  for (;;) {
    std::optional<BigInt> best;
    std::size_t best_len = 0;
    std::optional<BigInt> rejected;
    for_each_cycle(g, bound, [&](const Cycle& c) {
      const Word w = cycle_word(c);
      if (w.is_pure()) return;
      BigInt t = word_trace(w);
      if (best && t > *best) return;
      if (is_null_homologous(basis, c)) {
        if (!rejected || t < *rejected) rejected = t;
        return;
      }
      if (!best || t < *best || (t == *best && c.length() < best_len)) {
        best = t;
        best_len = c.length();
      }
    });
    // Cycles longer than bound have trace >= bound + 2.
    if (best && (*best <= bound + 2 || bound == cap)) {
      out.trace = *best;
      out.cycle_length = best_len;
      out.length = 2.0 * arccosh(best->convert_to<double>() / 2.0);
      out.proxy_rejected_candidate = rejected && *rejected < *best;
      return out;
    }
    if (!best && bound == cap) throw std::logic_error("positive genus graph without an essential cycle");
    const std::size_t next = best ? (*best - 2).convert_to<std::size_t>() : 2 * bound;
    bound = std::min(std::max(next, bound + 1), cap);
  }
}

std::optional<double> systole_estimate(const RibbonGraph& g) { return systole_estimate_detailed(g).length; }

bool has_short_separating_cycle(const RibbonGraph& g, std::size_t bound) {
  if (bound < 2) throw std::invalid_argument("separating search bound must be >= 2");
  bool found = false;
  for_each_cycle(g, bound, [&](const Cycle& c) {
    if (!found && c.length() >= 2 && is_graph_separating(g, c)) found = true;
  });
  return found;
}

}  // namespace systole
