#pragma once

// Finite strict partial orders on [d] and their comparability graphs.
//
// Element indices are 1-based wherever they appear as plain integers
// (covers, index sets, printed output). Subsets are also passed around as
// bit masks, where bit i-1 stands for element i.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace twinchain {

using Mask = std::uint32_t;

/// Largest ground set a Poset or Graph can hold.
inline constexpr std::size_t kMaxGround = 32;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t d) {
  return d >= 32 ? ~Mask{0} : static_cast<Mask>((Mask{1} << d) - 1);
}

constexpr int popcount(Mask m) { return std::popcount(m); }

/// Ascending 1-based indices of the members of m.
std::vector<int> mask_to_indices(Mask m);

/// Throws IndexError if an index is outside [1, d].
Mask indices_to_mask(std::span<const int> indices, std::size_t d);

/// Lexicographic order of the ascending index lists of a and b.
bool lex_less(Mask a, Mask b);

/// (i, j) with i, j 1-based, meaning p_i < p_j.
using Cover = std::pair<int, int>;

class Poset {
 public:
  /// The empty poset.
  Poset() = default;

  /// Transitive closure of `covers`. Throws IndexError for indices outside
  /// [1, d] and CycleError when the closure is not antisymmetric.
  static Poset from_covers(std::size_t d, std::span<const Cover> covers);

  /// below[j] is the set of elements strictly below element j (0-based bits).
  /// The relation is closed transitively before validation.
  static Poset from_below_masks(std::vector<Mask> below);

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const noexcept { return below_.size(); }
  bool empty() const noexcept { return below_.empty(); }

  // 0-based element access.
  bool less(std::size_t i, std::size_t j) const noexcept { return (below_[j] >> i) & 1U; }
  Mask below(std::size_t i) const noexcept { return below_[i]; }
  Mask above(std::size_t i) const noexcept { return above_[i]; }
  Mask comparable(std::size_t i) const noexcept { return below_[i] | above_[i]; }
  Mask incomparable(std::size_t i) const noexcept {
    return full_mask(size()) & ~comparable(i) & ~bit(i);
  }
  const std::vector<Mask>& below_masks() const noexcept { return below_; }

  bool is_chain(Mask s) const noexcept;
  bool is_antichain(Mask s) const noexcept;

  /// All strict relations (i, j), 1-based, sorted.
  std::vector<Cover> relation() const;
  /// Cover relations of the Hasse diagram, 1-based, sorted.
  std::vector<Cover> covers() const;

  /// Poset in which element perm[i] plays the role of element i (0-based).
  Poset relabeled(std::span<const std::size_t> perm) const;

  /// Re-checks irreflexivity, transitivity and antisymmetry.
  bool satisfies_order_axioms() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  explicit Poset(std::vector<Mask> below);

  std::vector<Mask> below_;
  std::vector<Mask> above_;
};

/// Induced subposet relabeled 1..|W| in increasing original order.
struct InducedSubposet {
  Poset poset;
  std::vector<int> original;  // original[k] is the 1-based index of new element k+1
};

InducedSubposet induced_subposet(const Poset& p, std::span<const int> w);
Poset restrict_to(const Poset& p, Mask w);

/// Every element of a below every element of b; b is shifted by |a|.
Poset ordinal_sum(const Poset& a, const Poset& b);
Poset disjoint_union(const Poset& a, const Poset& b);

/// Simple undirected graph on [d].
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Mask> adjacency);
  static Graph from_edges(std::size_t d, std::span<const Cover> edges);

  std::size_t size() const noexcept { return adj_.size(); }
  Mask neighbors(std::size_t i) const noexcept { return adj_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const noexcept { return (adj_[i] >> j) & 1U; }
  std::size_t degree(std::size_t i) const noexcept { return popcount(adj_[i]); }
  const std::vector<Mask>& adjacency() const noexcept { return adj_; }

  /// Edges {i, j} as 1-based pairs with i < j, sorted.
  std::vector<Cover> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Mask> adj_;
};

Graph comparability_graph(const Poset& p);

/// Disjoint union of a and b plus every edge between them.
Graph graph_join(const Graph& a, const Graph& b);

/// True iff p_i -> q_i maps G_P onto G_Q edge for edge.
bool labeled_graph_iso_by_identity(const Poset& p, const Poset& q);

}  // namespace twinchain
