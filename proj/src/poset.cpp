#include "twinchain/poset.hpp"

#include <algorithm>
#include <string>

#include "twinchain/error.hpp"

namespace twinchain {

std::vector<int> mask_to_indices(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

Mask indices_to_mask(std::span<const int> indices, std::size_t d) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || static_cast<std::size_t>(i) > d) {
      throw IndexError("index " + std::to_string(i) + " outside [1, " + std::to_string(d) + "]");
    }
    m |= bit(static_cast<std::size_t>(i - 1));
  }
  return m;
}

bool lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    int x = std::countr_zero(a);
    int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

namespace {

void check_ground(std::size_t d) {
  if (d > kMaxGround) {
    throw SizeError("ground set of size " + std::to_string(d) + " exceeds " +
                    std::to_string(kMaxGround));
  }
}

// Warshall closure on below-masks.
void close_transitively(std::vector<Mask>& below) {
  const std::size_t d = below.size();
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      if ((below[j] >> k) & 1U) below[j] |= below[k];
    }
  }
}

}  // namespace

Poset::Poset(std::vector<Mask> below) : below_(std::move(below)), above_(below_.size(), 0) {
  for (std::size_t j = 0; j < below_.size(); ++j) {
    for (Mask m = below_[j]; m != 0; m &= m - 1) above_[std::countr_zero(m)] |= bit(j);
  }
}

Poset Poset::from_below_masks(std::vector<Mask> below) {
  check_ground(below.size());
  const Mask all = full_mask(below.size());
  for (std::size_t j = 0; j < below.size(); ++j) {
    if ((below[j] & ~all) != 0) {
      throw IndexError("relation mentions an element outside [1, " + std::to_string(below.size()) +
                       "]");
    }
  }
  close_transitively(below);
  for (std::size_t j = 0; j < below.size(); ++j) {
    if ((below[j] >> j) & 1U) {
      throw CycleError("relation closes into a cycle through element " + std::to_string(j + 1));
    }
  }
  return Poset(std::move(below));
}

Poset Poset::from_covers(std::size_t d, std::span<const Cover> covers) {
  check_ground(d);
  std::vector<Mask> below(d, 0);
  for (const auto& [i, j] : covers) {
    for (int x : {i, j}) {
      if (x < 1 || static_cast<std::size_t>(x) > d) {
        throw IndexError("index " + std::to_string(x) + " outside [1, " + std::to_string(d) + "]");
      }
    }
    if (i == j) throw CycleError("element " + std::to_string(i) + " is related to itself");
    below[static_cast<std::size_t>(j - 1)] |= bit(static_cast<std::size_t>(i - 1));
  }
  return from_below_masks(std::move(below));
}

Poset Poset::chain(std::size_t n) {
  check_ground(n);
  std::vector<Mask> below(n);
  for (std::size_t j = 0; j < n; ++j) below[j] = full_mask(j);
  return Poset(std::move(below));
}

Poset Poset::antichain(std::size_t n) {
  check_ground(n);
  return Poset(std::vector<Mask>(n, 0));
}

bool Poset::is_chain(Mask s) const noexcept {
  for (Mask m = s; m != 0; m &= m - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    if ((s & ~bit(i) & ~comparable(i)) != 0) return false;
  }
  return true;
}

bool Poset::is_antichain(Mask s) const noexcept {
  for (Mask m = s; m != 0; m &= m - 1) {
    if ((s & comparable(static_cast<std::size_t>(std::countr_zero(m)))) != 0) return false;
  }
  return true;
}

std::vector<Cover> Poset::relation() const {
  std::vector<Cover> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (Mask m = above_[i]; m != 0; m &= m - 1) {
      out.emplace_back(static_cast<int>(i + 1), std::countr_zero(m) + 1);
    }
  }
  return out;
}

std::vector<Cover> Poset::covers() const {
  std::vector<Cover> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (Mask m = above_[i]; m != 0; m &= m - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(m));
      // i is covered by j unless some k sits strictly between them.
      if ((above_[i] & below_[j]) == 0) out.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
  }
  return out;
}

Poset Poset::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != size()) throw DimensionMismatch("permutation length differs from poset size");
  std::vector<Mask> below(size(), 0);
  for (std::size_t j = 0; j < size(); ++j) {
    Mask img = 0;
    for (Mask m = below_[j]; m != 0; m &= m - 1) img |= bit(perm[std::countr_zero(m)]);
    below[perm[j]] = img;
  }
  return Poset(std::move(below));
}

bool Poset::satisfies_order_axioms() const {
  const std::size_t d = size();
  if (above_.size() != d) return false;
  for (std::size_t i = 0; i < d; ++i) {
    if ((below_[i] >> i) & 1U) return false;
    if ((below_[i] & ~full_mask(d)) != 0) return false;
    for (std::size_t j = 0; j < d; ++j) {
      if (less(i, j) && less(j, i)) return false;
      if (less(i, j) != (((above_[i] >> j) & 1U) != 0)) return false;
      if (less(i, j) && (below_[i] & ~below_[j]) != 0) return false;
    }
  }
  return true;
}

Poset restrict_to(const Poset& p, Mask w) {
  std::vector<std::size_t> position(p.size(), 0);
  std::size_t k = 0;
  for (Mask m = w; m != 0; m &= m - 1) position[std::countr_zero(m)] = k++;
  std::vector<Mask> below(k, 0);
  for (Mask m = w; m != 0; m &= m - 1) {
    const auto j = static_cast<std::size_t>(std::countr_zero(m));
    for (Mask b = p.below(j) & w; b != 0; b &= b - 1) {
      below[position[j]] |= bit(position[std::countr_zero(b)]);
    }
  }
  return Poset::from_below_masks(std::move(below));
}

InducedSubposet induced_subposet(const Poset& p, std::span<const int> w) {
  const Mask m = indices_to_mask(w, p.size());
  return {restrict_to(p, m), mask_to_indices(m)};
}

Poset ordinal_sum(const Poset& a, const Poset& b) {
  const std::size_t na = a.size();
  check_ground(na + b.size());
  std::vector<Mask> below(a.below_masks());
  for (Mask m : b.below_masks()) below.push_back(full_mask(na) | (m << na));
  return Poset::from_below_masks(std::move(below));
}

Poset disjoint_union(const Poset& a, const Poset& b) {
  const std::size_t na = a.size();
  check_ground(na + b.size());
  std::vector<Mask> below(a.below_masks());
  for (Mask m : b.below_masks()) below.push_back(m << na);
  return Poset::from_below_masks(std::move(below));
}

Graph::Graph(std::vector<Mask> adjacency) : adj_(std::move(adjacency)) {
  check_ground(adj_.size());
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    if ((adj_[i] >> i) & 1U) throw DegenerateInput("graph has a loop at vertex " + std::to_string(i + 1));
    for (Mask m = adj_[i]; m != 0; m &= m - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(m));
      if (j >= adj_.size() || !((adj_[j] >> i) & 1U)) {
        throw DegenerateInput("adjacency is not symmetric at vertex " + std::to_string(i + 1));
      }
    }
  }
}

Graph Graph::from_edges(std::size_t d, std::span<const Cover> edges) {
  check_ground(d);
  std::vector<Mask> adj(d, 0);
  for (const auto& [i, j] : edges) {
    for (int x : {i, j}) {
      if (x < 1 || static_cast<std::size_t>(x) > d) {
        throw IndexError("index " + std::to_string(x) + " outside [1, " + std::to_string(d) + "]");
      }
    }
    if (i == j) throw DegenerateInput("loop at vertex " + std::to_string(i));
    adj[i - 1] |= bit(j - 1);
    adj[j - 1] |= bit(i - 1);
  }
  return Graph(std::move(adj));
}

std::vector<Cover> Graph::edges() const {
  std::vector<Cover> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (Mask m = adj_[i] & ~full_mask(i + 1); m != 0; m &= m - 1) {
      out.emplace_back(static_cast<int>(i + 1), std::countr_zero(m) + 1);
    }
  }
  return out;
}

Graph comparability_graph(const Poset& p) {
  std::vector<Mask> adj(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) adj[i] = p.comparable(i);
  return Graph(std::move(adj));
}

Graph graph_join(const Graph& a, const Graph& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  check_ground(na + nb);
  std::vector<Mask> adj;
  adj.reserve(na + nb);
  for (Mask m : a.adjacency()) adj.push_back(m | (full_mask(nb) << na));
  for (Mask m : b.adjacency()) adj.push_back((m << na) | full_mask(na));
  return Graph(std::move(adj));
}

bool labeled_graph_iso_by_identity(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("posets have sizes " + std::to_string(p.size()) + " and " +
                            std::to_string(q.size()));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.comparable(i) != q.comparable(i)) return false;
  }
  return true;
}

}  // namespace twinchain
