#pragma once

// Amalgam witnesses G_Γ = G_left *_{G_sep} G_right over finite clique
// separators, and the tree of groups obtained by splitting until no piece
// admits a further finite clique separator.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gpends/classifier.hpp"
#include "gpends/graph.hpp"
#include "gpends/labels.hpp"

namespace gpends {

struct AmalgamSplit {
  VertexSet separator;
  VertexSet left;
  VertexSet right;

  friend bool operator==(const AmalgamSplit&, const AmalgamSplit&) = default;
};

namespace detail {

inline AmalgamSplit split_on(const SimplicialGraph& g, const VertexSet& sep) {
  auto comps = components_within(g, set_difference(g.vertices(), sep));
  AmalgamSplit out{sep, set_union(sep, comps.front()), sep};
  for (std::size_t i = 1; i < comps.size(); ++i) out.right = set_union(out.right, comps[i]);
  return out;
}

}  // namespace detail

/// Splits along the preferred finite clique separator: the smallest-id
/// component of Γ - S goes left, all other components go right.
inline std::optional<AmalgamSplit> amalgam_split(const LabelledGraph& lg) {
  auto sep = clique_separator_exists(lg.graph(), lg.finite_vertices());
  if (!sep) return std::nullopt;
  return detail::split_on(lg.graph(), *sep);
}

/// Checks the split invariants: covering, intersection equal to separator,
/// proper pieces, finite clique separator, and no edge across the split.
inline bool is_valid_split(const LabelledGraph& lg, const AmalgamSplit& s) {
  const auto& g = lg.graph();
  if (set_union(s.left, s.right) != g.vertices()) return false;
  if (set_intersection(s.left, s.right) != s.separator) return false;
  if (s.left.is_subset_of(s.right) || s.right.is_subset_of(s.left)) return false;
  if (!special_subgroup_is_finite(lg, s.separator)) return false;
  const VertexSet l_only = set_difference(s.left, s.separator);
  const VertexSet r_only = set_difference(s.right, s.separator);
  for (Vertex u : l_only)
    for (Vertex w : r_only)
      if (g.adjacent(u, w)) return false;
  return true;
}

struct TreeEdge {
  std::size_t a;
  std::size_t b;
  VertexSet label;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Tree of special subgroups: nodes are vertex sets of full subgraphs, edges
/// carry the finite clique along which neighbouring nodes are amalgamated.
struct GroupTree {
  std::vector<VertexSet> nodes;
  std::vector<TreeEdge> edges;
};

namespace detail {

/// Removes node `victim` by merging it into `keep` (victim ⊆ keep), moving
/// its other edges to `keep` and renumbering.
inline void merge_node(GroupTree& t, std::size_t victim, std::size_t keep) {
  std::vector<TreeEdge> kept;
  for (auto& e : t.edges) {
    if ((e.a == victim && e.b == keep) || (e.a == keep && e.b == victim)) continue;
    if (e.a == victim) e.a = keep;
    if (e.b == victim) e.b = keep;
    kept.push_back(std::move(e));
  }
  for (auto& e : kept) {
    if (e.a > victim) --e.a;
    if (e.b > victim) --e.b;
  }
  t.edges = std::move(kept);
  t.nodes.erase(t.nodes.begin() + static_cast<std::ptrdiff_t>(victim));
}

inline bool collapse_one(GroupTree& t) {
  for (const auto& e : t.edges) {
    if (e.label == t.nodes[e.a]) {
      merge_node(t, e.a, e.b);
      return true;
    }
    if (e.label == t.nodes[e.b]) {
      merge_node(t, e.b, e.a);
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Repeatedly splits nodes along finite clique separators of their own full
/// subgraph. Existing edge labels are cliques, so each lies inside the left
/// or right piece and is reattached there.
inline GroupTree tree_of_groups(const LabelledGraph& lg) {
  GroupTree t;
  t.nodes.push_back(lg.graph().vertices());
  std::size_t i = 0;
  while (i < t.nodes.size()) {
    const VertexSet node = t.nodes[i];
    auto local = amalgam_split(lg.restrict_to(node));
    if (!local) {
      ++i;
      continue;
    }
    auto lift = [&](const VertexSet& s) {
      std::vector<Vertex> ids;
      for (Vertex v : s) ids.push_back(node[static_cast<std::size_t>(v)]);
      return VertexSet(std::move(ids));
    };
    VertexSet left = lift(local->left), right = lift(local->right), sep = lift(local->separator);
    t.nodes[i] = left;
    const std::size_t r = t.nodes.size();
    t.nodes.push_back(right);
    for (auto& e : t.edges) {
      if ((e.a == i || e.b == i) && !e.label.is_subset_of(left)) {
        if (e.a == i) e.a = r;
        if (e.b == i) e.b = r;
      }
    }
    t.edges.push_back({i, r, std::move(sep)});
  }
  while (detail::collapse_one(t)) {
  }
  return t;
}

/// Ids of tree nodes containing `v`.
inline std::vector<std::size_t> nodes_containing(const GroupTree& t, Vertex v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    if (t.nodes[i].contains(v)) out.push_back(i);
  return out;
}

/// Tree-shape and coherence invariants; `lg` is the host graph.
inline bool is_valid_tree(const GroupTree& t, const LabelledGraph& lg) {
  const std::size_t n = t.nodes.size();
  if (n == 0 || t.edges.size() != n - 1) return false;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  VertexSet covered;
  for (const auto& node : t.nodes) covered = set_union(covered, node);
  if (covered != lg.graph().vertices()) return false;
  for (const auto& e : t.edges) {
    if (e.a >= n || e.b >= n) return false;
    if (!e.label.is_subset_of(t.nodes[e.a]) || !e.label.is_subset_of(t.nodes[e.b])) return false;
    if (!special_subgroup_is_finite(lg, e.label)) return false;
    auto ra = find(e.a), rb = find(e.b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  // Nodes containing a vertex must form a connected subtree: k nodes need
  // exactly k-1 tree edges among them.
  for (Vertex v = 0; v < lg.vertex_count(); ++v) {
    const auto holders = nodes_containing(t, v);
    std::size_t internal = 0;
    for (const auto& e : t.edges)
      if (t.nodes[e.a].contains(v) && t.nodes[e.b].contains(v)) ++internal;
    if (holders.empty() || internal + 1 != holders.size()) return false;
  }
  // Every edge of Γ lives inside some node.
  for (auto [u, w] : lg.graph().edges()) {
    bool inside = std::any_of(t.nodes.begin(), t.nodes.end(),
                              [&](const VertexSet& s) { return s.contains(u) && s.contains(w); });
    if (!inside) return false;
  }
  return true;
}

namespace detail {

inline std::string group_name(const LabelledGraph& lg, const VertexSet& s) {
  if (s.empty()) return "trivial";
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += " x ";
    out += to_string(lg.label(v));
  }
  return out;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Graphviz rendering. `names` maps vertex ids to display names; when empty,
/// vertices are shown as v0, v1, ...
inline std::string render_dot(const GroupTree& t, const LabelledGraph& lg,
                              const std::vector<std::string>& names = {}) {
  auto name = [&](Vertex v) {
    return names.empty() ? "v" + std::to_string(v) : names.at(static_cast<std::size_t>(v));
  };
  auto set_text = [&](const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + name(s[i]);
    return out + "}";
  };
  std::ostringstream os;
  os << "digraph group_tree {\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    std::string text;
    if (node.empty()) {
      text = "trivial";
    } else {
      for (Vertex v : node) text += (text.empty() ? "" : "\\n") + detail::dot_escape(name(v)) + ": " + to_string(lg.label(v));
    }
    os << "  n" << i << " [label=\"" << text << "\"];\n";
  }
  for (const auto& e : t.edges) {
    auto order = special_subgroup_order(lg, e.label);
    os << "  n" << e.a << " -> n" << e.b << " [label=\"" << detail::dot_escape(set_text(e.label)) << " "
       << detail::group_name(lg, e.label) << " (order " << (order ? std::to_string(*order) : "?")
       << ")\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gpends
