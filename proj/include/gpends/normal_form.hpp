#pragma once

// Normal forms for graph products of finite cyclic groups.
//
// An element is a sequence of syllables (v, e) with 0 < e < |G_v|. Syllables
// of adjacent vertices commute. A word is reduced when no two syllables of
// the same vertex can be shuffled together; among the shuffle-equivalent
// reduced words the canonical one is lexicographically least by vertex id.
// Reduced length is the word length for the generating set of all
// non-trivial vertex-group elements.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gpends/errors.hpp"
#include "gpends/labels.hpp"

namespace gpends {

struct Syllable {
  Vertex vertex;
  std::int64_t exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

struct CanonicalWord {
  std::vector<Syllable> syllables;

  std::size_t length() const noexcept { return syllables.size(); }
  bool is_identity() const noexcept { return syllables.empty(); }

  friend bool operator==(const CanonicalWord&, const CanonicalWord&) = default;
  friend auto operator<=>(const CanonicalWord&, const CanonicalWord&) = default;
};

struct CanonicalWordHash {
  std::size_t operator()(const CanonicalWord& w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& s : w.syllables) {
      h = (h ^ static_cast<std::uint64_t>(s.vertex)) * 1099511628211ULL;
      h = (h ^ static_cast<std::uint64_t>(s.exponent)) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Word arithmetic in G_Γ for a labelled graph whose labels are all
/// concrete cyclic groups.
class GraphProductArithmetic {
 public:
  explicit GraphProductArithmetic(const LabelledGraph& lg) : graph_(lg.graph()) {
    if (!lg.all_concrete_cyclic())
      throw UnsupportedLabelError("word arithmetic needs concrete cyclic vertex groups");
    orders_.reserve(lg.labels().size());
    for (const auto& l : lg.labels()) orders_.push_back(l.order());
  }

  std::int64_t order(Vertex v) const { return orders_[static_cast<std::size_t>(v)]; }
  int vertex_count() const noexcept { return graph_.vertex_count(); }

  /// Distinct vertices that commute.
  bool commute(Vertex a, Vertex b) const { return a != b && graph_.adjacent(a, b); }

  void check(const Syllable& s) const {
    if (!graph_.has_vertex(s.vertex)) throw InputError("syllable references unknown vertex");
    if (s.exponent <= 0 || s.exponent >= order(s.vertex))
      throw InputError("syllable exponent out of range for vertex " + std::to_string(s.vertex));
  }

  CanonicalWord canonicalize(std::span<const Syllable> word) const {
    CanonicalWord w;
    for (const auto& s : word) {
      check(s);
      absorb(w.syllables, s);
    }
    return w;
  }

  /// Right multiplication by one syllable.
  CanonicalWord times(const CanonicalWord& a, const Syllable& s) const {
    check(s);
    CanonicalWord w = a;
    absorb(w.syllables, s);
    return w;
  }

  CanonicalWord multiply(const CanonicalWord& a, const CanonicalWord& b) const {
    CanonicalWord w = a;
    for (const auto& s : b.syllables) absorb(w.syllables, s);
    return w;
  }

  CanonicalWord inverse(const CanonicalWord& a) const {
    std::vector<Syllable> rev(a.syllables.rbegin(), a.syllables.rend());
    for (auto& s : rev) s.exponent = order(s.vertex) - s.exponent;
    return canonicalize(rev);
  }

  /// Every non-trivial vertex-group element, by vertex then exponent.
  std::vector<Syllable> generators() const {
    std::vector<Syllable> out;
    for (Vertex v = 0; v < vertex_count(); ++v)
      for (std::int64_t e = 1; e < order(v); ++e) out.push_back({v, e});
    return out;
  }

 private:
  // Multiplies a canonical word by s on the right, keeping it canonical.
  // If a syllable of the same vertex can be shuffled to the end past
  // commuting syllables, merge into it; changing or dropping that syllable
  // leaves the rest in lex order since nothing after it depends on it.
  // Otherwise s goes to the first slot after its last non-commuting
  // syllable where the next vertex is larger.
  void absorb(std::vector<Syllable>& w, const Syllable& s) const {
    std::size_t i = w.size();
    for (; i-- > 0;) {
      if (w[i].vertex == s.vertex) {
        const std::int64_t e = (w[i].exponent + s.exponent) % order(s.vertex);
        if (e == 0) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          w[i].exponent = e;
        }
        return;
      }
      if (!commute(w[i].vertex, s.vertex)) break;
    }
    std::size_t t = i + 1;  // i wrapped to SIZE_MAX when every syllable commutes
    while (t < w.size() && w[t].vertex < s.vertex) ++t;
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(t), s);
  }

  SimplicialGraph graph_;
  std::vector<std::int64_t> orders_;
};

inline CanonicalWord canonicalize(std::span<const Syllable> word, const LabelledGraph& lg) {
  return GraphProductArithmetic(lg).canonicalize(word);
}

inline CanonicalWord multiply(const CanonicalWord& a, const CanonicalWord& b, const LabelledGraph& lg) {
  return GraphProductArithmetic(lg).multiply(a, b);
}

}  // namespace gpends
