#pragma once

// Finite simplicial graphs on dense vertex ids 0..n-1 and the combinatorial
// queries the end-count criteria reduce to.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gpends/errors.hpp"

namespace gpends {

using Vertex = int;

/// Sorted, duplicate-free set of vertex ids. Comparison is lexicographic on
/// the sorted id sequence, which is the tie-break order used throughout.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) { normalize(); }

  static VertexSet range(int n) {
    VertexSet s;
    s.ids_.resize(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) s.ids_[static_cast<std::size_t>(i)] = i;
    return s;
  }

  bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
  bool empty() const noexcept { return ids_.empty(); }
  std::size_t size() const noexcept { return ids_.size(); }
  Vertex front() const { return ids_.front(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<Vertex>& ids() const noexcept { return ids_; }

  void insert(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }
  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.ids_ <=> b.ids_; }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<Vertex> ids_;
};

/// Undirected graph without loops or multi-edges on vertices 0..n-1.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  explicit SimplicialGraph(int n) : n_(n) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    nbrs_.resize(static_cast<std::size_t>(n));
  }

  SimplicialGraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : SimplicialGraph(n) {
    for (auto [u, w] : edges) add_edge(u, w);
  }

  int vertex_count() const noexcept { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

  /// Adds {u,w}; a repeated edge is a no-op, a loop or unknown endpoint throws.
  void add_edge(Vertex u, Vertex w) {
    if (!has_vertex(u) || !has_vertex(w)) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(w) +
                       "} references an unknown vertex");
    }
    if (u == w) throw InputError("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, w)) return;
    adj_[index(u, w)] = adj_[index(w, u)] = 1;
    insert_sorted(nbrs_[static_cast<std::size_t>(u)], w);
    insert_sorted(nbrs_[static_cast<std::size_t>(w)], u);
    ++edge_count_;
  }

  bool adjacent(Vertex u, Vertex w) const { return adj_[index(u, w)] != 0; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int edge_count() const noexcept { return edge_count_; }

  /// Edges as (u,w) with u < w, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex w : neighbors(u))
        if (u < w) out.emplace_back(u, w);
    return out;
  }

  friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t index(Vertex u, Vertex w) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(w);
  }
  static void insert_sorted(std::vector<Vertex>& v, Vertex x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  }

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
};

inline void require_subset(const SimplicialGraph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
}

inline void require_vertex(const SimplicialGraph& g, Vertex v) {
  if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
}

/// True iff the vertices of `s` are pairwise adjacent.
inline bool is_clique(const SimplicialGraph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

inline bool is_complete(const SimplicialGraph& g) {
  const auto n = static_cast<long long>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

/// Full subgraph on `s`, re-indexed so that new vertex i is s[i].
inline SimplicialGraph induced_subgraph(const SimplicialGraph& g, const VertexSet& s) {
  require_subset(g, s);
  SimplicialGraph h(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h;
}

/// Connected components of the full subgraph on `within`, in host ids,
/// ordered by smallest member.
inline std::vector<VertexSet> components_within(const SimplicialGraph& g, const VertexSet& within) {
  require_subset(g, within);
  std::vector<char> inside(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : within) inside[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(inside.size(), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex start : within) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Vertex> comp;
    stack.push_back(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        auto wi = static_cast<std::size_t>(w);
        if (inside[wi] && !seen[wi]) {
          seen[wi] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const SimplicialGraph& g) {
  return components_within(g, g.vertices());
}

inline bool is_separating(const SimplicialGraph& g, const VertexSet& s) {
  require_subset(g, s);
  return components_within(g, set_difference(g.vertices(), s)).size() >= 2;
}

inline VertexSet link(const SimplicialGraph& g, Vertex v) {
  require_vertex(g, v);
  return VertexSet(g.neighbors(v));
}

/// Vertices adjacent to every other vertex: the Γ1 side of the join split.
inline VertexSet universal_vertices(const SimplicialGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == g.vertex_count() - 1) out.push_back(v);
  return VertexSet(std::move(out));
}

/// An induced 4-cycle a-b-c-d exists iff some non-adjacent pair (a,c) has
/// two non-adjacent common neighbours b,d.
inline bool has_induced_c4(const SimplicialGraph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> common;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      if (g.adjacent(a, c)) continue;
      common.clear();
      std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(c).begin(),
                            g.neighbors(c).end(), std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          if (!g.adjacent(common[i], common[j])) return true;
    }
  }
  return false;
}

/// Maximum cardinality search order; the reverse is a perfect elimination
/// ordering iff the graph is chordal.
inline std::vector<Vertex> maximum_cardinality_search(const SimplicialGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> numbered(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!numbered[static_cast<std::size_t>(v)] &&
          (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
        best = v;
    numbered[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!numbered[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
  }
  return order;
}

/// Chordal iff no induced cycle of length >= 4. Checked by testing whether
/// the reversed MCS order is a perfect elimination ordering: for each vertex,
/// its neighbours visited earlier must be adjacent to the latest of them.
inline bool is_chordal(const SimplicialGraph& g) {
  const int n = g.vertex_count();
  const auto order = maximum_cardinality_search(g);
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  for (Vertex v : order) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)] &&
          (parent < 0 || pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(parent)]))
        parent = w;
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v))
      if (w != parent && pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)] &&
          !g.adjacent(w, parent))
        return false;
  }
  return true;
}

/// Open neighbourhood of a vertex set, excluding the set itself.
inline VertexSet neighborhood(const SimplicialGraph& g, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!s.contains(w)) out.push_back(w);
  return VertexSet(std::move(out));
}

/// All minimal separators of a connected graph: sets N(C) where C is a
/// full component of G - N(C). Generated by closing neighbourhoods of
/// vertices and of separator-plus-neighbourhood sets until no new set appears.
inline std::set<VertexSet> minimal_separators(const SimplicialGraph& g) {
  std::set<VertexSet> found;
  std::vector<VertexSet> work;
  const VertexSet all = g.vertices();
  auto harvest = [&](const VertexSet& removed) {
    for (const auto& comp : components_within(g, set_difference(all, removed))) {
      VertexSet sep = neighborhood(g, comp);
      if (sep.empty()) continue;
      if (found.insert(sep).second) work.push_back(sep);
    }
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    VertexSet closed(g.neighbors(v));
    closed.insert(v);
    harvest(closed);
  }
  while (!work.empty()) {
    VertexSet sep = std::move(work.back());
    work.pop_back();
    for (Vertex x : sep) harvest(set_union(sep, VertexSet(g.neighbors(x))));
  }
  std::erase_if(found, [&](const VertexSet& s) { return !is_separating(g, s); });
  return found;
}

/// A complete separating subset of `allowed`, minimal under inclusion and
/// lexicographically least among the minimal ones. The empty set is
/// returned for a disconnected graph.
inline std::optional<VertexSet> clique_separator_exists(const SimplicialGraph& g,
                                                        const VertexSet& allowed) {
  require_subset(g, allowed);
  if (connected_components(g).size() >= 2) return VertexSet{};
  // Every inclusion-minimal complete separating set inside `allowed` is an
  // inclusion-minimal separating set of g, hence a minimal separator.
  std::vector<VertexSet> candidates;
  for (const auto& sep : minimal_separators(g))
    if (sep.is_subset_of(allowed) && is_clique(g, sep)) candidates.push_back(sep);
  std::optional<VertexSet> best;
  for (const auto& c : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](const VertexSet& o) {
      return o != c && o.is_subset_of(c);
    });
    if (minimal && (!best || c < *best)) best = c;
  }
  return best;
}

}  // namespace gpends
