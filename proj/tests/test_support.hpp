#pragma once

// Fixtures and brute-force reference implementations shared by the test
// binaries. Nothing here calls into the algorithms it is used to check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gpends/document.hpp"
#include "gpends/graph.hpp"
#include "gpends/labels.hpp"
#include "gpends/normal_form.hpp"

namespace gpends::testing {

inline std::string data_path(const std::string& file) { return std::string(GPENDS_DATA_DIR) + "/" + file; }

inline GraphDocument load_fixture(const std::string& file) {
  std::ifstream f(data_path(file));
  std::string text{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  return parse_graph_document(text);
}

inline SimplicialGraph cycle(int n) {
  SimplicialGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline SimplicialGraph path(int n) {
  SimplicialGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline SimplicialGraph complete(int n) {
  SimplicialGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline SimplicialGraph star(int leaves) {
  SimplicialGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline SimplicialGraph petersen() {
  SimplicialGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

inline LabelledGraph uniform(SimplicialGraph g, GroupLabel l) {
  std::vector<GroupLabel> labels(static_cast<std::size_t>(g.vertex_count()), l);
  return LabelledGraph(std::move(g), std::move(labels));
}

inline LabelledGraph cyclic_labels(SimplicialGraph g, std::vector<std::int64_t> orders) {
  std::vector<GroupLabel> labels;
  for (auto n : orders) labels.push_back(GroupLabel::cyclic(n));
  return LabelledGraph(std::move(g), std::move(labels));
}

inline SimplicialGraph graph_from_mask(int n, std::uint64_t mask) {
  SimplicialGraph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) g.add_edge(i, j);
  return g;
}

inline SimplicialGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  SimplicialGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// ---- brute-force graph oracles (bitmask subsets) ----

inline bool mask_connected(const SimplicialGraph& g, std::uint32_t mask) {
  if (mask == 0) return true;
  std::uint32_t seen = mask & (~mask + 1), frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (frontier >> v & 1)
        for (int w = 0; w < g.vertex_count(); ++w)
          if ((mask >> w & 1) && !(seen >> w & 1) && g.adjacent(v, w)) next |= 1U << w;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

inline int mask_components(const SimplicialGraph& g, std::uint32_t mask) {
  int count = 0;
  std::uint32_t left = mask;
  while (left) {
    std::uint32_t comp = left & (~left + 1), frontier = comp;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (frontier >> v & 1)
          for (int w = 0; w < g.vertex_count(); ++w)
            if ((left >> w & 1) && !(comp >> w & 1) && g.adjacent(v, w)) next |= 1U << w;
      comp |= next;
      frontier = next;
    }
    left &= ~comp;
    ++count;
  }
  return count;
}

/// Does the subset induce a cycle (connected, 2-regular)?
inline bool mask_induces_cycle(const SimplicialGraph& g, std::uint32_t mask) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!(mask >> v & 1)) continue;
    int deg = 0;
    for (int w = 0; w < g.vertex_count(); ++w)
      if ((mask >> w & 1) && g.adjacent(v, w)) ++deg;
    if (deg != 2) return false;
  }
  return mask_connected(g, mask);
}

inline bool brute_has_induced_cycle(const SimplicialGraph& g, int min_len, int max_len) {
  const std::uint32_t full = 1U << g.vertex_count();
  for (std::uint32_t m = 0; m < full; ++m) {
    const int k = __builtin_popcount(m);
    if (k >= min_len && k <= max_len && mask_induces_cycle(g, m)) return true;
  }
  return false;
}

inline bool mask_is_clique(const SimplicialGraph& g, std::uint32_t mask) {
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w = v + 1; w < g.vertex_count(); ++w)
      if ((mask >> v & 1) && (mask >> w & 1) && !g.adjacent(v, w)) return false;
  return true;
}

inline VertexSet mask_to_set(std::uint32_t mask) {
  std::vector<Vertex> ids;
  for (int v = 0; v < 32; ++v)
    if (mask >> v & 1) ids.push_back(v);
  return VertexSet(std::move(ids));
}

/// Every complete separating subset of `allowed`.
inline std::vector<VertexSet> brute_clique_separators(const SimplicialGraph& g, const VertexSet& allowed) {
  std::uint32_t allowed_mask = 0;
  for (Vertex v : allowed) allowed_mask |= 1U << v;
  const std::uint32_t full = (1U << g.vertex_count()) - 1;
  std::vector<VertexSet> out;
  for (std::uint32_t m = allowed_mask;; m = (m - 1) & allowed_mask) {
    if (mask_is_clique(g, m) && mask_components(g, full & ~m) >= 2) out.push_back(mask_to_set(m));
    if (m == 0) break;
  }
  return out;
}

/// Inclusion-minimal, then lexicographically least, complete separator.
inline std::optional<VertexSet> brute_preferred_separator(const SimplicialGraph& g, const VertexSet& allowed) {
  const auto all = brute_clique_separators(g, allowed);
  std::optional<VertexSet> best;
  for (const auto& s : all) {
    bool minimal = std::none_of(all.begin(), all.end(), [&](const VertexSet& o) { return o != s && o.is_subset_of(s); });
    if (minimal && (!best || s < *best)) best = s;
  }
  return best;
}

// ---- brute-force word rewriting ----

/// Closure of `word` under commuting swaps of adjacent syllables and merges
/// of neighbouring same-vertex syllables; returns the lexicographically
/// least word among the shortest reachable ones.
inline std::vector<Syllable> brute_normal_form(const std::vector<Syllable>& word, const LabelledGraph& lg) {
  std::set<std::vector<Syllable>> seen{word};
  std::queue<std::vector<Syllable>> todo;
  todo.push(word);
  while (!todo.empty()) {
    auto w = todo.front();
    todo.pop();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const Vertex a = w[i].vertex, b = w[i + 1].vertex;
      std::vector<Syllable> next;
      if (a == b) {
        next = w;
        const auto e = (w[i].exponent + w[i + 1].exponent) % lg.label(a).order();
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        if (e == 0) {
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          next[i].exponent = e;
        }
      } else if (lg.graph().adjacent(a, b)) {
        next = w;
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) todo.push(next);
    }
  }
  std::optional<std::vector<Syllable>> best;
  auto vertex_seq = [](const std::vector<Syllable>& w) {
    std::vector<Vertex> out;
    for (const auto& s : w) out.push_back(s.vertex);
    return out;
  };
  for (const auto& w : seen) {
    if (!best || w.size() < best->size() || (w.size() == best->size() && vertex_seq(w) < vertex_seq(*best)))
      best = w;
  }
  return *best;
}

inline std::vector<Syllable> random_word(std::mt19937_64& rng, const LabelledGraph& lg, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<Vertex> vert(0, lg.vertex_count() - 1);
  std::vector<Syllable> w;
  const int n = lg.vertex_count() ? len(rng) : 0;
  for (int i = 0; i < n; ++i) {
    Vertex v = vert(rng);
    std::uniform_int_distribution<std::int64_t> ex(1, lg.label(v).order() - 1);
    w.push_back({v, ex(rng)});
  }
  return w;
}

// ---- Tits representation of right-angled Coxeter groups ----

/// Faithful integer representation for all-Z2 labels: s acts by
/// v -> v - 2 B(e_s, v) e_s with B(e_s,e_s)=1, B=0 on edges, B=-1 otherwise.
class TitsRepresentation {
 public:
  using Matrix = std::vector<std::int64_t>;

  explicit TitsRepresentation(const SimplicialGraph& g) : n_(g.vertex_count()), g_(g) {}

  Matrix identity() const {
    Matrix m(static_cast<std::size_t>(n_ * n_), 0);
    for (int i = 0; i < n_; ++i) m[static_cast<std::size_t>(i * n_ + i)] = 1;
    return m;
  }

  /// m * sigma_s.
  Matrix times_reflection(const Matrix& m, Vertex s) const {
    Matrix r = m;
    // sigma_s(e_t) = e_t - 2 B(s,t) e_s, so column t of m*sigma_s is
    // col_t(m) - 2 B(s,t) col_s(m).
    for (int t = 0; t < n_; ++t) {
      const std::int64_t b = bilinear(s, t);
      if (b == 0) continue;
      for (int row = 0; row < n_; ++row)
        r[static_cast<std::size_t>(row * n_ + t)] -= 2 * b * m[static_cast<std::size_t>(row * n_ + s)];
    }
    return r;
  }

  Matrix evaluate(const std::vector<Syllable>& w) const {
    Matrix m = identity();
    for (const auto& s : w) m = times_reflection(m, s.vertex);
    return m;
  }

 private:
  std::int64_t bilinear(Vertex s, Vertex t) const {
    if (s == t) return 1;
    return g_.adjacent(s, t) ? 0 : -1;
  }

  int n_;
  SimplicialGraph g_;
};

}  // namespace gpends::testing
