#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpends/errors.hpp"
#include "gpends/graph.hpp"

namespace gpends {

/// Number of ends of a finitely generated group. The ordering exists only
/// for reporting.
enum class EndsClass { Zero, One, Two, InfinitelyMany };

inline std::string to_string(EndsClass e) {
  switch (e) {
    case EndsClass::Zero: return "0";
    case EndsClass::One: return "1";
    case EndsClass::Two: return "2";
    case EndsClass::InfinitelyMany: return "infinity";
  }
  return "?";
}

/// Abstract vertex-group descriptor. Only finiteness, the order of finite
/// groups, and the end count are recorded; `cyclic` additionally marks a
/// finite label as the concrete group Z/n so the Cayley oracle can realize it.
class GroupLabel {
 public:
  enum class Kind { Finite, TwoEnded, OneEnded, InfiniteEnded };

  static GroupLabel finite(std::int64_t order) { return GroupLabel(Kind::Finite, checked(order), false); }
  static GroupLabel cyclic(std::int64_t order) { return GroupLabel(Kind::Finite, checked(order), true); }
  static GroupLabel two_ended() { return GroupLabel(Kind::TwoEnded, 0, false); }
  static GroupLabel one_ended() { return GroupLabel(Kind::OneEnded, 0, false); }
  static GroupLabel infinite_ended() { return GroupLabel(Kind::InfiniteEnded, 0, false); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_concrete_cyclic() const noexcept { return concrete_; }
  /// Group order; meaningful only for finite labels.
  std::int64_t order() const noexcept { return order_; }

  friend bool operator==(const GroupLabel&, const GroupLabel&) = default;

 private:
  GroupLabel(Kind k, std::int64_t order, bool concrete) : kind_(k), order_(order), concrete_(concrete) {}

  static std::int64_t checked(std::int64_t order) {
    if (order < 2) throw InputError("vertex groups must be non-trivial (order >= 2), got " + std::to_string(order));
    return order;
  }

  Kind kind_;
  std::int64_t order_;
  bool concrete_;
};

/// Short human-readable name: Z3 for cyclic, F6 for an abstract finite group.
inline std::string to_string(const GroupLabel& l) {
  switch (l.kind()) {
    case GroupLabel::Kind::Finite:
      return (l.is_concrete_cyclic() ? "Z" : "F") + std::to_string(l.order());
    case GroupLabel::Kind::TwoEnded: return "two_ended";
    case GroupLabel::Kind::OneEnded: return "one_ended";
    case GroupLabel::Kind::InfiniteEnded: return "infinite_ended";
  }
  return "?";
}

/// A simplicial graph with one group label per vertex.
class LabelledGraph {
 public:
  LabelledGraph() = default;
  LabelledGraph(SimplicialGraph g, std::vector<GroupLabel> labels)
      : graph_(std::move(g)), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != graph_.vertex_count())
      throw InputError("expected " + std::to_string(graph_.vertex_count()) + " labels, got " +
                       std::to_string(labels_.size()));
  }

  const SimplicialGraph& graph() const noexcept { return graph_; }
  const std::vector<GroupLabel>& labels() const noexcept { return labels_; }
  const GroupLabel& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
  int vertex_count() const noexcept { return graph_.vertex_count(); }

  bool all_finite() const {
    for (const auto& l : labels_)
      if (!l.is_finite()) return false;
    return true;
  }
  bool all_concrete_cyclic() const {
    for (const auto& l : labels_)
      if (!l.is_concrete_cyclic()) return false;
    return true;
  }

  /// Vertices carrying finite labels.
  VertexSet finite_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count(); ++v)
      if (label(v).is_finite()) out.push_back(v);
    return VertexSet(std::move(out));
  }

  /// The labelled full subgraph on `s`, re-indexed as in induced_subgraph.
  LabelledGraph restrict_to(const VertexSet& s) const {
    std::vector<GroupLabel> ls;
    ls.reserve(s.size());
    auto g = induced_subgraph(graph_, s);
    for (Vertex v : s) ls.push_back(label(v));
    return LabelledGraph(std::move(g), std::move(ls));
  }

  friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;

 private:
  SimplicialGraph graph_;
  std::vector<GroupLabel> labels_;
};

inline EndsClass ends_of_label(const GroupLabel& l) {
  switch (l.kind()) {
    case GroupLabel::Kind::Finite: return EndsClass::Zero;
    case GroupLabel::Kind::OneEnded: return EndsClass::One;
    case GroupLabel::Kind::TwoEnded: return EndsClass::Two;
    case GroupLabel::Kind::InfiniteEnded: return EndsClass::InfinitelyMany;
  }
  return EndsClass::Zero;
}

/// A special subgroup is finite iff its full subgraph is complete and every
/// vertex group in it is finite.
inline bool special_subgroup_is_finite(const LabelledGraph& lg, const VertexSet& s) {
  require_subset(lg.graph(), s);
  for (Vertex v : s)
    if (!lg.label(v).is_finite()) return false;
  return is_clique(lg.graph(), s);
}

/// Product of the vertex-group orders when the special subgroup is finite.
inline std::optional<std::int64_t> special_subgroup_order(const LabelledGraph& lg, const VertexSet& s) {
  if (!special_subgroup_is_finite(lg, s)) return std::nullopt;
  std::int64_t order = 1;
  for (Vertex v : s)
    if (__builtin_mul_overflow(order, lg.label(v).order(), &order))
      throw std::overflow_error("special subgroup order overflows 64 bits");
  return order;
}

/// Ends of G * H for non-trivial G, H: two exactly for Z2 * Z2 (the infinite
/// dihedral group), infinitely many otherwise.
inline EndsClass free_product_ends(const GroupLabel& a, const GroupLabel& b) {
  const bool a_z2 = a.is_finite() && a.order() == 2;
  const bool b_z2 = b.is_finite() && b.order() == 2;
  return a_z2 && b_z2 ? EndsClass::Two : EndsClass::InfinitelyMany;
}

}  // namespace gpends
