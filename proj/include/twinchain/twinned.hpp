#pragma once

// Facet counts of twinned chain polytopes Γ(P, Q) = conv(C(P) ∪ −C(Q)).
//
// Facets are labeled by signed chains: a maximal chain of the ordinal sum
// Δ_W = P_W ⊕ Q_{[d]∖W} for some W ⊆ [d], recorded as the pair of index sets
// it takes from P and from Q. The facet count is the number of distinct
// signed chains over all 2^d choices of W.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twinchain/poset.hpp"

namespace twinchain {

/// Facet ops enumerate all 2^d subsets W; larger ground sets are refused.
inline constexpr std::size_t kMaxFacetGround = 24;

struct SignedChain {
  Mask p = 0;  // indices taken from P
  Mask q = 0;  // indices taken from Q

  friend auto operator<=>(const SignedChain&, const SignedChain&) = default;
};

/// Output order: by total size, then P part, then Q part (lexicographic
/// on index lists).
bool output_order(const SignedChain& a, const SignedChain& b);

struct FacetFamily {
  std::size_t d = 0;
  std::vector<SignedChain> members;  // distinct, in output_order

  std::size_t size() const noexcept { return members.size(); }
  bool contains(const SignedChain& c) const;
};

enum class Side { kP, kQ };

struct ElementTag {
  Side side;
  int index;  // 1-based index in P or Q

  friend bool operator==(const ElementTag&, const ElementTag&) = default;
};

/// Δ_W(P, Q): P_W below Q on the complement of W. Elements of P_W come
/// first, then those of Q, each in increasing original index.
struct TaggedPoset {
  Poset order;
  std::vector<ElementTag> tags;

  /// Splits a subset of the tagged poset back into a signed chain.
  SignedChain to_signed(Mask s) const;
};

TaggedPoset delta_poset(const Poset& p, const Poset& q, Mask w);

/// Maximal chains of Δ_W(P, Q) in signed form.
std::vector<SignedChain> delta_maximal_chains(const Poset& p, const Poset& q, Mask w);

/// Union over all W of the maximal chains of Δ_W(P, Q), deduplicated.
FacetFamily facet_chains(const Poset& p, const Poset& q);

/// |facet_chains(p, q)|; equals 1 for d = 0.
std::uint64_t facet_count(const Poset& p, const Poset& q);

/// Facet count with P a d-element chain: the sum over W of |M(Q_W)|.
std::uint64_t facet_count_chain_P(const Poset& q);

/// Maximal chains of every induced subposet p|W, indexed by the mask W.
/// Built once per poset and shared when counting many pairs.
class ChainTable {
 public:
  explicit ChainTable(const Poset& p);

  std::size_t ground_size() const noexcept { return d_; }
  /// Maximal chains of p restricted to w, in p's labels.
  std::span<const Mask> chains(Mask w) const noexcept {
    return {chains_.data() + offsets_[w], chains_.data() + offsets_[w + 1]};
  }

 private:
  std::size_t d_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Mask> chains_;
};

/// Counts signed chains for tabulated posets of equal size. Reuses a scratch
/// bitmap, so one counter must not be shared between threads.
class FacetCounter {
 public:
  explicit FacetCounter(std::size_t d);

  std::uint64_t count(const ChainTable& p, const ChainTable& q);

 private:
  std::size_t d_;
  std::vector<std::uint64_t> seen_;
  std::vector<std::uint32_t> touched_;
};

enum class ClosedForm { kCC, kII, kIC };

/// 2^d for two chains, d^2 + d for two antichains, d·2^{d-1} + 1 for an
/// antichain against a chain.
std::uint64_t closed_form(ClosedForm kind, std::size_t d);

/// Exact rational value of the facet bound for dimension d:
/// 6^{d/2} for even d, 14·6^{(d-3)/2} for odd d (7/3 at d = 1).
struct BoundValue {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  bool is_integer() const noexcept { return denominator == 1; }
  /// n <= value
  bool admits(std::uint64_t n) const noexcept;
  /// n == value
  bool attained_by(std::uint64_t n) const noexcept { return is_integer() && n == numerator; }
  std::string to_string() const;

  friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

BoundValue bound(std::size_t d);

/// Equality characterization for even d: both posets are ordinal sums of
/// 2-element antichains and p_i -> q_i is a comparability graph isomorphism.
/// Throws OddDimension for odd d.
bool is_equality_case(const Poset& p, const Poset& q);

/// True iff every element is incomparable with exactly one other element,
/// which characterizes I_2 ⊕ ... ⊕ I_2 up to isomorphism.
bool is_stacked_antichain_pairs(const Poset& p);

/// (P1 ⊕ P2, Q1 ⊕ Q2) with the second blocks shifted by |P1|.
std::pair<Poset, Poset> direct_sum_pair(const Poset& p1, const Poset& q1, const Poset& p2,
                                        const Poset& q2);

enum class LemmaKind {
  /// Signed chains through p_k versus c(Q_I) · N(Γ(P_R, Q_R)), where I is the
  /// set of elements incomparable with p_k and R = [d] ∖ ({k} ∪ I).
  kL31,
  /// N(Γ(P, Q)) versus the three-term bound obtained by removing index k.
  kL32,
};

struct LemmaReport {
  LemmaKind kind;
  int k = 0;                          // 1-based
  std::vector<int> incomparable_p;    // incomparable with p_k in P
  std::vector<int> incomparable_q;    // incomparable with q_k in Q
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool pass = false;
};

LemmaReport lemma_inequality_check(const Poset& p, const Poset& q, LemmaKind kind, int k);

}  // namespace twinchain
