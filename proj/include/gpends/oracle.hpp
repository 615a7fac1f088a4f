#pragma once

// Empirical end counts from finite Cayley balls.
//
// For concrete cyclic labels the ball of radius R around the identity is
// enumerated with respect to all non-trivial vertex-group elements. For each
// inner radius r the closed r-ball is removed and the components of what
// remains that reach the outer sphere S(R) are counted; these stand in for
// the unbounded components of the Cayley graph minus a finite set.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gpends/errors.hpp"
#include "gpends/labels.hpp"
#include "gpends/normal_form.hpp"

namespace gpends {

inline constexpr std::size_t kDefaultBallCap = 2'000'000;
inline constexpr int kDefaultRMax = 4;
inline constexpr int kDefaultMargin = 3;

/// Enumerated ball with its Cayley-graph edges. Element 0 is the identity;
/// elements are stored layer by layer in BFS order.
class CayleyBall {
 public:
  static constexpr std::uint32_t kOutside = std::numeric_limits<std::uint32_t>::max();

  std::size_t size() const noexcept { return words_.size(); }
  const CanonicalWord& element(std::size_t i) const { return *words_[i]; }
  int distance(std::size_t i) const { return distance_[i]; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::vector<Syllable>& generators() const noexcept { return generators_; }

  /// Index of element(i) * generators()[j], or kOutside when beyond the ball.
  std::uint32_t neighbor(std::size_t i, std::size_t j) const { return neighbors_[i * generators_.size() + j]; }

  std::optional<std::uint32_t> find(const CanonicalWord& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Number of elements at each distance 0..radius().
  const std::vector<std::size_t>& sphere_sizes() const noexcept { return spheres_; }
  /// Largest radius that was completely enumerated.
  int radius() const noexcept { return static_cast<int>(spheres_.size()) - 1; }
  /// True when the whole (finite) group fits inside the ball.
  bool saturated() const noexcept { return saturated_; }
  /// True when enumeration stopped at the element cap before the target radius.
  bool capped() const noexcept { return capped_; }

 private:
  friend CayleyBall grow_ball(const GraphProductArithmetic&, int, std::size_t);

  std::vector<Syllable> generators_;
  std::unordered_map<CanonicalWord, std::uint32_t, CanonicalWordHash> index_;
  std::vector<const CanonicalWord*> words_;
  std::vector<int> distance_;
  std::vector<std::uint32_t> neighbors_;
  std::vector<std::size_t> spheres_;
  bool saturated_ = false;
  bool capped_ = false;
};

/// Breadth-first enumeration up to `radius` (or saturation). Stops at the
/// last complete layer when the element count would exceed `cap`; the
/// result is then marked capped.
inline CayleyBall grow_ball(const GraphProductArithmetic& arith, int radius, std::size_t cap) {
  CayleyBall b;
  b.generators_ = arith.generators();
  const std::size_t k = b.generators_.size();
  auto add = [&](CanonicalWord w, int d) {
    auto [it, fresh] = b.index_.emplace(std::move(w), static_cast<std::uint32_t>(b.words_.size()));
    if (fresh) {
      b.words_.push_back(&it->first);
      b.distance_.push_back(d);
    }
    return it->second;
  };
  add(CanonicalWord{}, 0);
  b.spheres_.push_back(1);
  std::size_t layer_begin = 0;
  int d = 0;
  bool escaped = false;
  while (true) {
    const std::size_t layer_end = b.words_.size();
    if (layer_begin == layer_end) {
      b.spheres_.pop_back();
      b.saturated_ = true;
      break;
    }
    const bool last = d == radius;
    b.neighbors_.resize(layer_end * k, CayleyBall::kOutside);
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        CanonicalWord next = arith.times(*b.words_[i], b.generators_[j]);
        if (last) {
          if (auto it = b.index_.find(next); it != b.index_.end()) {
            b.neighbors_[i * k + j] = it->second;
          } else {
            escaped = true;
          }
        } else {
          b.neighbors_[i * k + j] = add(std::move(next), d + 1);
        }
      }
      if (!last && b.words_.size() > cap) {
        // Roll back the partial layer so the ball is exactly B(d).
        for (std::size_t x = layer_end; x < b.words_.size(); ++x) {
          const CanonicalWord key = *b.words_[x];
          b.index_.erase(key);
        }
        b.words_.resize(layer_end);
        b.distance_.resize(layer_end);
        for (auto& nb : b.neighbors_)
          if (nb != CayleyBall::kOutside && nb >= layer_end) nb = CayleyBall::kOutside;
        b.neighbors_.resize(layer_end * k);
        for (std::size_t x = layer_begin; x < layer_end; ++x)
          for (std::size_t j = 0; j < k; ++j)
            if (auto it = b.index_.find(arith.times(*b.words_[x], b.generators_[j])); it != b.index_.end())
              b.neighbors_[x * k + j] = it->second;
        b.capped_ = true;
        return b;
      }
    }
    if (last) {
      b.saturated_ = !escaped;
      break;
    }
    layer_begin = layer_end;
    ++d;
    b.spheres_.push_back(b.words_.size() - layer_end);
  }
  return b;
}

/// The ball of the given radius; throws ResourceError past `cap` elements.
inline CayleyBall ball(const LabelledGraph& lg, int radius, std::size_t cap = kDefaultBallCap) {
  if (radius < 0) throw InputError("radius must be non-negative");
  CayleyBall b = grow_ball(GraphProductArithmetic(lg), radius, cap);
  if (b.capped())
    throw ResourceError("Cayley ball exceeds cap of " + std::to_string(cap) + " elements", b.radius());
  return b;
}

/// Group order when the group is finite and fits within `cap` elements.
inline std::optional<std::int64_t> exact_order_if_finite(const LabelledGraph& lg,
                                                         std::size_t cap = kDefaultBallCap) {
  CayleyBall b = grow_ball(GraphProductArithmetic(lg), std::numeric_limits<int>::max(), cap);
  if (!b.saturated()) return std::nullopt;
  return static_cast<std::int64_t>(b.size());
}

enum class OracleVerdict { Zero, One, Two, InfinitelyMany, Inconclusive };

inline std::string to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Zero: return "0";
    case OracleVerdict::One: return "1";
    case OracleVerdict::Two: return "2";
    case OracleVerdict::InfinitelyMany: return "infinity";
    case OracleVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

inline std::optional<EndsClass> as_ends(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Zero: return EndsClass::Zero;
    case OracleVerdict::One: return EndsClass::One;
    case OracleVerdict::Two: return EndsClass::Two;
    case OracleVerdict::InfinitelyMany: return EndsClass::InfinitelyMany;
    case OracleVerdict::Inconclusive: return std::nullopt;
  }
  return std::nullopt;
}

struct EstimateReport {
  int inner_radius = 0;
  int outer_radius = 0;
  /// Elements at each distance 0..outer_radius (shorter when capped or saturated).
  std::vector<std::size_t> sphere_sizes;
  /// Components reaching S(R) after removing B(r), for r = 1..inner_radius.
  std::vector<std::size_t> shell_component_counts;
  OracleVerdict verdict = OracleVerdict::Inconclusive;
  std::optional<std::int64_t> element_count;
  /// Set when the element cap stopped enumeration early.
  bool capped = false;
};

/// Components of B(R) - B(r) that meet the sphere S(R).
inline std::size_t shell_components(const CayleyBall& b, int inner, int outer) {
  std::vector<std::uint32_t> parent(b.size());
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.distance(i) <= inner) continue;
    for (std::size_t j = 0; j < b.generator_count(); ++j) {
      const std::uint32_t nb = b.neighbor(i, j);
      if (nb == CayleyBall::kOutside || b.distance(nb) <= inner) continue;
      auto ra = find(static_cast<std::uint32_t>(i)), rb = find(nb);
      if (ra != rb) parent[ra] = rb;
    }
  }
  std::vector<char> seen(b.size(), 0);
  std::size_t count = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.distance(i) != outer) continue;
    auto r = find(static_cast<std::uint32_t>(i));
    if (!seen[r]) {
      seen[r] = 1;
      ++count;
    }
  }
  return count;
}

/// Verdict from per-radius counts. Only the upper half of the window
/// (r > r_max / 2) is trusted: there the removed ball is large enough for
/// the ends to have separated.
inline OracleVerdict verdict_from_counts(const std::vector<std::size_t>& counts) {
  const std::size_t r_max = counts.size();
  if (r_max == 0) return OracleVerdict::Inconclusive;
  const std::size_t first = r_max / 2;  // index of r = r_max/2 + 1
  bool all1 = true, all2 = true, any_ge3 = false, increasing = r_max - first >= 2;
  for (std::size_t i = first; i < r_max; ++i) {
    all1 = all1 && counts[i] == 1;
    all2 = all2 && counts[i] == 2;
    any_ge3 = any_ge3 || counts[i] >= 3;
    if (i > first && counts[i] <= counts[i - 1]) increasing = false;
  }
  if (all1) return OracleVerdict::One;
  if (all2) return OracleVerdict::Two;
  if (any_ge3 || increasing) return OracleVerdict::InfinitelyMany;
  return OracleVerdict::Inconclusive;
}

inline EstimateReport ends_estimate(const LabelledGraph& lg, int r_max = kDefaultRMax,
                                    int margin = kDefaultMargin, std::size_t cap = kDefaultBallCap) {
  if (r_max < 2) throw InputError("r_max must be at least 2");
  if (margin < 2) throw InputError("margin must be at least 2");
  EstimateReport rep;
  rep.inner_radius = r_max;
  rep.outer_radius = r_max + margin;
  const CayleyBall b = grow_ball(GraphProductArithmetic(lg), rep.outer_radius, cap);
  rep.sphere_sizes = b.sphere_sizes();
  if (b.saturated()) {
    rep.verdict = OracleVerdict::Zero;
    rep.element_count = static_cast<std::int64_t>(b.size());
    return rep;
  }
  if (b.capped()) {
    rep.capped = true;
    rep.verdict = OracleVerdict::Inconclusive;
    return rep;
  }
  for (int r = 1; r <= r_max; ++r) rep.shell_component_counts.push_back(shell_components(b, r, rep.outer_radius));
  rep.verdict = verdict_from_counts(rep.shell_component_counts);
  return rep;
}

}  // namespace gpends
