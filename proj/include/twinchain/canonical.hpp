#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "twinchain/poset.hpp"

namespace twinchain {

/// Canonicalization is guaranteed for ground sets up to this size.
inline constexpr std::size_t kMaxCanonicalSize = 8;

/// Opaque isomorphism-class identifier. Two codes of the same kind compare
/// equal iff the underlying structures are isomorphic.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

/// Code of the poset up to order isomorphism. Uses color refinement with
/// individualization; the code is the least relation encoding among the
/// labelings reached by the search. Throws SizeError above kMaxCanonicalSize.
CanonicalCode canonical_code(const Poset& p);

/// Code of the graph up to graph isomorphism (same search as above).
CanonicalCode graph_canonical_code(const Graph& g);

/// Least relation encoding over all d! relabelings, with no pruning at all.
/// The byte strings differ from canonical_code, but induce the same
/// equivalence. Intended as a reference.
CanonicalCode canonical_code_exhaustive(const Poset& p);
CanonicalCode graph_canonical_code_exhaustive(const Graph& g);

/// All permutations perm (perm[i] = image of vertex i, 0-based) that map g
/// onto itself, in lexicographic order.
std::vector<std::vector<std::size_t>> graph_automorphisms(const Graph& g);

}  // namespace twinchain
