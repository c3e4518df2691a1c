#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "twinchain/poset.hpp"

namespace twinchain {

/// A family of subsets of [d], stored as masks in lexicographic order of
/// their index lists, without duplicates.
struct SubsetFamily {
  std::size_t d = 0;
  std::vector<Mask> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Mask s) const;
  /// Members as ascending 1-based index lists, in family order.
  std::vector<std::vector<int>> as_indices() const;

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;
};

/// Sorts and deduplicates into a SubsetFamily.
SubsetFamily make_family(std::size_t d, std::vector<Mask> members);

SubsetFamily antichains(const Poset& p);

/// Maximal chains, enumerated as maximal cliques of the comparability graph
/// with Tomita-style pivoting. For the empty poset the family is {∅}.
SubsetFamily maximal_chains(const Poset& p);

/// Same family by plain Bron-Kerbosch recursion without pivoting.
SubsetFamily maximal_chains_plain(const Poset& p);

/// Number of chains of p, the empty chain included.
std::uint64_t chain_count(const Poset& p);

/// All chains containing element i (1-based).
SubsetFamily chains_through(const Poset& p, int i);

// Mask-level variants on the induced subposet p|within, reported in the
// original labels of p. Used by the facet enumerators.
void maximal_chains_within(const Poset& p, Mask within, std::vector<Mask>& out);
std::uint64_t chain_count_within(const Poset& p, Mask within);

/// ⌊3^{d/3}⌋, the Moon-Moser cap on the number of maximal chains.
std::uint64_t moon_moser_cap(std::size_t d);

}  // namespace twinchain
