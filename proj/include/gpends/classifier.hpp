#pragma once

// Exact end count of a graph product from its labelled defining graph.
//
// Resolution order is fixed: finite (0 ends), then two-ended, then more than
// one end (which is then infinitely many), else one end. Two-ended must be
// tested before the finite-clique-separator case because the Z2 * Z2 join
// configuration also has a finite clique separator.

#include <optional>
#include <string>
#include <variant>

#include "gpends/graph.hpp"
#include "gpends/labels.hpp"

namespace gpends {

namespace witness {

/// Complete graph, every vertex group finite: a finite direct product.
struct CompleteAllFinite {
  friend bool operator==(const CompleteAllFinite&, const CompleteAllFinite&) = default;
};
/// Complete graph with exactly one multi-ended vertex group, rest finite.
struct CompleteOneMultiEnded {
  Vertex vertex;
  friend bool operator==(const CompleteOneMultiEnded&, const CompleteOneMultiEnded&) = default;
};
/// Universal vertices span a finite direct product and the remaining two
/// vertices are non-adjacent Z2's.
struct JoinTwoZ2 {
  VertexSet universal;
  VertexSet pair;
  friend bool operator==(const JoinTwoZ2&, const JoinTwoZ2&) = default;
};
/// A separating clique whose vertex groups are all finite.
struct FiniteCliqueSeparator {
  VertexSet separator;
  friend bool operator==(const FiniteCliqueSeparator&, const FiniteCliqueSeparator&) = default;
};
/// Connected, not complete, no finite clique separator.
struct OneEndedNoSeparator {
  friend bool operator==(const OneEndedNoSeparator&, const OneEndedNoSeparator&) = default;
};
/// Complete graph with exactly one one-ended vertex group, rest finite.
struct CompleteOneOneEnded {
  Vertex vertex;
  friend bool operator==(const CompleteOneOneEnded&, const CompleteOneOneEnded&) = default;
};
/// Complete graph with at least two infinite vertex groups.
struct CompleteManyInfinite {
  friend bool operator==(const CompleteManyInfinite&, const CompleteManyInfinite&) = default;
};

}  // namespace witness

using EndsWitness =
    std::variant<witness::CompleteAllFinite, witness::CompleteOneMultiEnded, witness::JoinTwoZ2,
                 witness::FiniteCliqueSeparator, witness::OneEndedNoSeparator,
                 witness::CompleteOneOneEnded, witness::CompleteManyInfinite>;

struct EndsVerdict {
  EndsClass ends;
  EndsWitness witness;

  friend bool operator==(const EndsVerdict&, const EndsVerdict&) = default;
};

/// Stable snake_case name of the witness variant.
inline std::string witness_kind(const EndsWitness& w) {
  struct Namer {
    std::string operator()(const witness::CompleteAllFinite&) const { return "complete_all_finite"; }
    std::string operator()(const witness::CompleteOneMultiEnded&) const {
      return "complete_one_multi_ended";
    }
    std::string operator()(const witness::JoinTwoZ2&) const { return "join_two_z2"; }
    std::string operator()(const witness::FiniteCliqueSeparator&) const {
      return "finite_clique_separator";
    }
    std::string operator()(const witness::OneEndedNoSeparator&) const { return "one_ended_no_separator"; }
    std::string operator()(const witness::CompleteOneOneEnded&) const { return "complete_one_one_ended"; }
    std::string operator()(const witness::CompleteManyInfinite&) const { return "complete_many_infinite"; }
  };
  return std::visit(Namer{}, w);
}

inline bool is_finite_group(const LabelledGraph& lg) {
  return special_subgroup_is_finite(lg, lg.graph().vertices());
}

namespace detail {

/// The unique non-finite vertex of a complete graph whose other labels are
/// all finite, if there is exactly one.
inline std::optional<Vertex> sole_infinite_vertex(const LabelledGraph& lg) {
  std::optional<Vertex> found;
  for (Vertex v = 0; v < lg.vertex_count(); ++v) {
    if (lg.label(v).is_finite()) continue;
    if (found) return std::nullopt;
    found = v;
  }
  return found;
}

}  // namespace detail

/// Witness that G_Γ has more than one end, if it does.
inline std::optional<EndsWitness> has_more_than_one_end(const LabelledGraph& lg) {
  const auto& g = lg.graph();
  if (is_complete(g)) {
    if (auto v = detail::sole_infinite_vertex(lg)) {
      const auto kind = lg.label(*v).kind();
      if (kind == GroupLabel::Kind::TwoEnded || kind == GroupLabel::Kind::InfiniteEnded)
        return witness::CompleteOneMultiEnded{*v};
    }
    return std::nullopt;
  }
  if (auto sep = clique_separator_exists(g, lg.finite_vertices()))
    return witness::FiniteCliqueSeparator{std::move(*sep)};
  return std::nullopt;
}

/// Witness that G_Γ is two-ended (virtually Z), if it is.
inline std::optional<EndsWitness> is_two_ended(const LabelledGraph& lg) {
  const auto& g = lg.graph();
  if (is_complete(g)) {
    if (auto v = detail::sole_infinite_vertex(lg); v && lg.label(*v).kind() == GroupLabel::Kind::TwoEnded)
      return witness::CompleteOneMultiEnded{*v};
    return std::nullopt;
  }
  VertexSet universal = universal_vertices(g);
  VertexSet rest = set_difference(g.vertices(), universal);
  if (rest.size() != 2 || !special_subgroup_is_finite(lg, universal)) return std::nullopt;
  for (Vertex v : rest) {
    const auto& l = lg.label(v);
    if (!l.is_finite() || l.order() != 2) return std::nullopt;
  }
  // `rest` is non-adjacent: otherwise both would be universal.
  return witness::JoinTwoZ2{std::move(universal), std::move(rest)};
}

inline EndsVerdict ends(const LabelledGraph& lg) {
  if (is_finite_group(lg)) return {EndsClass::Zero, witness::CompleteAllFinite{}};
  if (auto w = is_two_ended(lg)) return {EndsClass::Two, std::move(*w)};
  if (auto w = has_more_than_one_end(lg)) return {EndsClass::InfinitelyMany, std::move(*w)};
  if (is_complete(lg.graph())) {
    if (auto v = detail::sole_infinite_vertex(lg)) return {EndsClass::One, witness::CompleteOneOneEnded{*v}};
    return {EndsClass::One, witness::CompleteManyInfinite{}};
  }
  return {EndsClass::One, witness::OneEndedNoSeparator{}};
}

namespace detail {
inline void require_all_finite(const LabelledGraph& lg, const char* what) {
  if (!lg.all_finite())
    throw UnsupportedLabelError(std::string(what) + " is only characterized for finite vertex groups");
}
}  // namespace detail

/// Hyperbolicity for finite vertex groups: no induced square.
inline bool is_hyperbolic(const LabelledGraph& lg) {
  detail::require_all_finite(lg, "hyperbolicity");
  return !has_induced_c4(lg.graph());
}

/// Virtual freeness for finite vertex groups: the graph is chordal.
inline bool is_virtually_free(const LabelledGraph& lg) {
  detail::require_all_finite(lg, "virtual freeness");
  return is_chordal(lg.graph());
}

}  // namespace gpends
