#pragma once

// Small-graph enumeration, isomorphism dedup and seeded random graphs.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gpends/errors.hpp"
#include "gpends/labels.hpp"

namespace gpends {

/// Relabels vertex v as perm[v].
inline LabelledGraph permute(const LabelledGraph& lg, const std::vector<Vertex>& perm) {
  const int n = lg.vertex_count();
  SimplicialGraph g(n);
  for (auto [u, w] : lg.graph().edges()) g.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(w)]);
  std::vector<GroupLabel> labels(static_cast<std::size_t>(n), GroupLabel::two_ended());
  for (Vertex v = 0; v < n; ++v) labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = lg.label(v);
  return LabelledGraph(std::move(g), std::move(labels));
}

namespace detail {

inline std::string label_code(const GroupLabel& l) {
  return to_string(l) + ";";
}

/// Labels then upper-triangle adjacency bits, after applying `perm`.
inline std::string encode(const LabelledGraph& lg, const std::vector<Vertex>& inv) {
  const int n = lg.vertex_count();
  std::string key = std::to_string(n) + "|";
  for (int i = 0; i < n; ++i) key += label_code(lg.label(inv[static_cast<std::size_t>(i)]));
  key += "|";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      key += lg.graph().adjacent(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]) ? '1' : '0';
  return key;
}

}  // namespace detail

/// Isomorphism-invariant key: the least encoding over all vertex
/// permutations. Factorial cost; intended for n <= 8.
inline std::string canonical_key(const LabelledGraph& lg) {
  std::vector<Vertex> inv(static_cast<std::size_t>(lg.vertex_count()));
  std::iota(inv.begin(), inv.end(), 0);
  std::string best = detail::encode(lg, inv);
  while (std::next_permutation(inv.begin(), inv.end())) best = std::min(best, detail::encode(lg, inv));
  return best;
}

inline std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Every labelled graph on 0..n_max vertices with labels from `pool`, one
/// per isomorphism class, ordered by canonical key.
inline std::vector<LabelledGraph> enumerate_labelled_graphs(int n_max, const std::vector<GroupLabel>& pool) {
  if (n_max < 0) throw InputError("n_max must be non-negative");
  if (pool.empty()) throw InputError("label pool is empty");
  std::map<std::string, LabelledGraph> classes;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::uint64_t edge_masks = 1ULL << pairs.size();
    std::uint64_t label_assignments = 1;
    for (int i = 0; i < n; ++i) label_assignments *= pool.size();
    for (std::uint64_t em = 0; em < edge_masks; ++em) {
      SimplicialGraph g(n);
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (em >> b & 1) g.add_edge(pairs[b].first, pairs[b].second);
      for (std::uint64_t la = 0; la < label_assignments; ++la) {
        std::vector<GroupLabel> labels;
        std::uint64_t code = la;
        for (int i = 0; i < n; ++i) {
          labels.push_back(pool[code % pool.size()]);
          code /= pool.size();
        }
        LabelledGraph lg(g, std::move(labels));
        auto key = canonical_key(lg);
        classes.try_emplace(std::move(key), std::move(lg));
      }
    }
  }
  std::vector<LabelledGraph> out;
  out.reserve(classes.size());
  for (auto& [key, lg] : classes) out.push_back(std::move(lg));
  return out;
}

/// Uniform double in [0, 1) from the top 53 bits; portable across
/// standard libraries, unlike std::uniform_real_distribution.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[uniform_index(rng, i)]);
  return perm;
}

/// Erdos-Renyi graph with labels drawn uniformly from `pool`.
inline LabelledGraph random_labelled_graph(std::mt19937_64& rng, int n, double edge_prob,
                                           const std::vector<GroupLabel>& pool) {
  if (edge_prob < 0.0 || edge_prob > 1.0) throw InputError("edge probability must lie in [0, 1]");
  SimplicialGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit_double(rng) < edge_prob) g.add_edge(i, j);
  std::vector<GroupLabel> labels;
  for (int i = 0; i < n; ++i) labels.push_back(pool[uniform_index(rng, pool.size())]);
  return LabelledGraph(std::move(g), std::move(labels));
}

/// Default mix for fuzzing: concrete, abstract finite and infinite labels.
inline std::vector<GroupLabel> default_fuzz_pool() {
  return {GroupLabel::cyclic(2),   GroupLabel::cyclic(3),     GroupLabel::cyclic(5),
          GroupLabel::finite(6),   GroupLabel::two_ended(),   GroupLabel::one_ended(),
          GroupLabel::infinite_ended()};
}

}  // namespace gpends
