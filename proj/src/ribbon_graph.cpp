#include "systole/ribbon_graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "systole/rng.hpp"

namespace systole {

Pairing::Pairing(std::uint32_t n, std::vector<HalfEdge> mate) : n_(n), mate_(std::move(mate)) {
  if (n_ == 0) throw PairingError(PairingError::Kind::kBadInput, "pairing needs N >= 1");
  if (mate_.size() != 6ull * n_) {
    throw PairingError(PairingError::Kind::kBadInput, "pairing must cover exactly 6N half-edges");
  }
  for (HalfEdge h = 0; h < mate_.size(); ++h) {
    if (mate_[h] >= mate_.size()) throw PairingError(PairingError::Kind::kOutOfRange, "mate out of range");
    if (mate_[h] == h) throw PairingError(PairingError::Kind::kSelfPair, "half-edge paired with itself");
    if (mate_[mate_[h]] != h) throw PairingError(PairingError::Kind::kBadInput, "mate map is not an involution");
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Pairing::pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count());
  for (HalfEdge h = 0; h < mate_.size(); ++h) {
    if (h < mate_[h]) out.emplace_back(h + 1, mate_[h] + 1);
  }
  return out;
}

Pairing pairing_from_pairs(std::uint32_t n,
                           const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  using Kind = PairingError::Kind;
  if (n == 0) throw PairingError(Kind::kBadInput, "N must be positive");
  const std::uint32_t labels = 6 * n;
  constexpr HalfEdge kUnset = UINT32_MAX;
  std::vector<HalfEdge> mate(labels, kUnset);
  for (const auto& [a, b] : pairs) {
    if (a < 1 || a > labels || b < 1 || b > labels) {
      throw PairingError(Kind::kOutOfRange, "label out of range 1.." + std::to_string(labels) + ": (" +
                                                std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (a == b) throw PairingError(Kind::kSelfPair, "label " + std::to_string(a) + " paired with itself");
    for (std::uint32_t x : {a, b}) {
      if (mate[x - 1] != kUnset) {
        throw PairingError(Kind::kDuplicateLabel, "label " + std::to_string(x) + " appears twice");
      }
    }
    mate[a - 1] = b - 1;
    mate[b - 1] = a - 1;
  }
  for (HalfEdge h = 0; h < labels; ++h) {
    if (mate[h] == kUnset) {
      throw PairingError(Kind::kMissingLabel, "label " + std::to_string(h + 1) + " is not paired");
    }
  }
  return Pairing(n, std::move(mate));
}

std::string to_text(const Pairing& p) {
  std::ostringstream out;
  out << p.n() << '\n';
  for (const auto& [a, b] : p.pairs()) out << a << ' ' << b << '\n';
  return out.str();
}

Pairing read_pairing(std::istream& in) {
  using Kind = PairingError::Kind;
  long long n = 0;
  if (!(in >> n) || n < 1 || n > (1ll << 26)) throw PairingError(Kind::kBadInput, "expected N >= 1 on the first line");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  long long a = 0, b = 0;
  while (in >> a) {
    if (!(in >> b)) throw PairingError(Kind::kBadInput, "odd number of labels");
    if (a < 0 || b < 0 || a > UINT32_MAX || b > UINT32_MAX) throw PairingError(Kind::kOutOfRange, "label out of range");
    pairs.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  }
  if (!in.eof()) throw PairingError(Kind::kBadInput, "non-numeric token in pairing file");
  return pairing_from_pairs(static_cast<std::uint32_t>(n), pairs);
}

Pairing pairing_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_pairing(in);
}

Pairing sample_uniform(std::uint32_t n, std::uint64_t seed, std::uint64_t stream) {
  if (n == 0) throw std::invalid_argument("sample_uniform requires N >= 1");
  const std::uint32_t labels = 6 * n;
  std::vector<HalfEdge> order(labels);
  std::iota(order.begin(), order.end(), 0);
  auto rng = stream_engine(seed, stream);
  for (std::uint32_t i = labels - 1; i > 0; --i) {
    const auto j = static_cast<std::uint32_t>(uniform_below(rng, i + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<HalfEdge> mate(labels);
  for (std::uint32_t i = 0; i < labels; i += 2) {
    mate[order[i]] = order[i + 1];
    mate[order[i + 1]] = order[i];
  }
  return Pairing(n, std::move(mate));
}

RibbonGraph::RibbonGraph(Pairing pairing) : pairing_(std::move(pairing)) {
  const std::uint32_t labels = pairing_.half_edge_count();

  edge_of_.assign(labels, 0);
  std::uint32_t next_edge = 0;
  for (HalfEdge h = 0; h < labels; ++h) {
    if (h < mate(h)) {
      edge_of_[h] = next_edge;
      edge_of_[mate(h)] = next_edge;
      ++next_edge;
    }
  }

  constexpr std::uint32_t kUnset = UINT32_MAX;
  face_of_.assign(labels, kUnset);
  for (HalfEdge start = 0; start < labels; ++start) {
    if (face_of_[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(faces_.size());
    std::vector<HalfEdge> orbit;
    HalfEdge h = start;
    do {
      face_of_[h] = id;
      orbit.push_back(h);
      h = rotate(mate(h));
    } while (h != start);
    faces_.push_back(std::move(orbit));
  }

  const std::uint32_t vertices = vertex_count();
  component_of_.assign(vertices, kUnset);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < vertices; ++root) {
    if (component_of_[root] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(component_vertices_.size());
    component_vertices_.push_back(0);
    component_of_[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++component_vertices_[id];
      for (HalfEdge h = 3 * v; h < 3 * v + 3; ++h) {
        const Vertex u = vertex_of(mate(h));
        if (component_of_[u] == kUnset) {
          component_of_[u] = id;
          stack.push_back(u);
        }
      }
    }
  }

  const std::size_t components = component_vertices_.size();
  std::vector<long long> face_count(components, 0);
  for (const auto& face : faces_) ++face_count[component_of_[vertex_of(face.front())]];
  component_genus_.resize(components);
  for (std::size_t c = 0; c < components; ++c) {
    // Cubic: E_c = 3 V_c / 2, so chi = V - E + F = F - V/2.
    const long long v = component_vertices_[c];
    const long long chi = v - 3 * v / 2 + face_count[c];
    component_genus_[c] = static_cast<int>((2 - chi) / 2);
    total_genus_ += component_genus_[c];
  }
}

}  // namespace systole
