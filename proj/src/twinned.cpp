#include "twinchain/twinned.hpp"

#include <algorithm>

#include "twinchain/chains.hpp"
#include "twinchain/error.hpp"

namespace twinchain {

namespace {

// Tabulated counting is used up to this size; the dedup bitmap has 2^{2d} bits.
constexpr std::size_t kMaxTabulated = 12;

void check_pair(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("P has " + std::to_string(p.size()) + " elements but Q has " +
                            std::to_string(q.size()));
  }
  if (p.size() > kMaxFacetGround) {
    throw SizeError("facet enumeration supports d <= " + std::to_string(kMaxFacetGround) + ", got " +
                    std::to_string(p.size()));
  }
}

std::uint64_t key_of(Mask p, Mask q) { return static_cast<std::uint64_t>(p) | (static_cast<std::uint64_t>(q) << 32); }

std::vector<std::uint64_t> signed_chain_keys(const Poset& p, const Poset& q) {
  const std::size_t d = p.size();
  const Mask all = full_mask(d);
  std::vector<std::uint64_t> keys;
  std::vector<Mask> from_p;
  std::vector<Mask> from_q;
  for (std::uint64_t w = 0; w <= all; ++w) {
    const auto wm = static_cast<Mask>(w);
    from_p.clear();
    from_q.clear();
    maximal_chains_within(p, wm, from_p);
    maximal_chains_within(q, all & ~wm, from_q);
    for (Mask a : from_p) {
      for (Mask b : from_q) keys.push_back(key_of(a, b));
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw OverflowError("integer power overflows 64 bits");
  }
  return r;
}

}  // namespace

bool output_order(const SignedChain& a, const SignedChain& b) {
  const int sa = popcount(a.p) + popcount(a.q);
  const int sb = popcount(b.p) + popcount(b.q);
  if (sa != sb) return sa < sb;
  if (a.p != b.p) return lex_less(a.p, b.p);
  return lex_less(a.q, b.q);
}

bool FacetFamily::contains(const SignedChain& c) const {
  return std::find(members.begin(), members.end(), c) != members.end();
}

SignedChain TaggedPoset::to_signed(Mask s) const {
  SignedChain c;
  for (Mask m = s; m != 0; m &= m - 1) {
    const ElementTag& t = tags[static_cast<std::size_t>(std::countr_zero(m))];
    const Mask b = bit(static_cast<std::size_t>(t.index - 1));
    (t.side == Side::kP ? c.p : c.q) |= b;
  }
  return c;
}

TaggedPoset delta_poset(const Poset& p, const Poset& q, Mask w) {
  check_pair(p, q);
  const Mask all = full_mask(p.size());
  if ((w & ~all) != 0) throw IndexError("W mentions an index outside [1, " + std::to_string(p.size()) + "]");
  TaggedPoset out{ordinal_sum(restrict_to(p, w), restrict_to(q, all & ~w)), {}};
  for (int i : mask_to_indices(w)) out.tags.push_back({Side::kP, i});
  for (int i : mask_to_indices(all & ~w)) out.tags.push_back({Side::kQ, i});
  return out;
}

std::vector<SignedChain> delta_maximal_chains(const Poset& p, const Poset& q, Mask w) {
  const TaggedPoset delta = delta_poset(p, q, w);
  std::vector<SignedChain> out;
  for (Mask m : maximal_chains(delta.order).members) out.push_back(delta.to_signed(m));
  return out;
}

FacetFamily facet_chains(const Poset& p, const Poset& q) {
  check_pair(p, q);
  FacetFamily family{p.size(), {}};
  for (std::uint64_t key : signed_chain_keys(p, q)) {
    family.members.push_back({static_cast<Mask>(key), static_cast<Mask>(key >> 32)});
  }
  std::sort(family.members.begin(), family.members.end(), output_order);
  return family;
}

std::uint64_t facet_count(const Poset& p, const Poset& q) {
  check_pair(p, q);
  if (p.size() <= kMaxTabulated) {
    FacetCounter counter(p.size());
    return counter.count(ChainTable(p), ChainTable(q));
  }
  return signed_chain_keys(p, q).size();
}

std::uint64_t facet_count_chain_P(const Poset& q) {
  if (q.size() > kMaxFacetGround) throw SizeError("facet enumeration supports d <= " + std::to_string(kMaxFacetGround));
  const Mask all = full_mask(q.size());
  std::uint64_t total = 0;
  std::vector<Mask> chains;
  for (std::uint64_t w = 0; w <= all; ++w) {
    chains.clear();
    maximal_chains_within(q, static_cast<Mask>(w), chains);
    total += chains.size();
  }
  return total;
}

ChainTable::ChainTable(const Poset& p) : d_(p.size()) {
  if (d_ > kMaxTabulated) throw SizeError("chain tables support d <= " + std::to_string(kMaxTabulated));
  const std::size_t subsets = std::size_t{1} << d_;
  offsets_.reserve(subsets + 1);
  offsets_.push_back(0);
  for (std::size_t w = 0; w < subsets; ++w) {
    maximal_chains_within(p, static_cast<Mask>(w), chains_);
    offsets_.push_back(static_cast<std::uint32_t>(chains_.size()));
  }
}

FacetCounter::FacetCounter(std::size_t d) : d_(d) {
  if (d_ > kMaxTabulated) throw SizeError("facet counter supports d <= " + std::to_string(kMaxTabulated));
  const std::size_t bits = std::size_t{1} << (2 * d_);
  seen_.assign((bits + 63) / 64, 0);
}

std::uint64_t FacetCounter::count(const ChainTable& p, const ChainTable& q) {
  if (p.ground_size() != d_ || q.ground_size() != d_) {
    throw DimensionMismatch("chain tables do not match the counter size " + std::to_string(d_));
  }
  const Mask all = full_mask(d_);
  std::uint64_t distinct = 0;
  touched_.clear();
  for (std::uint64_t w = 0; w <= all; ++w) {
    const auto wm = static_cast<Mask>(w);
    const auto from_q = q.chains(all & ~wm);
    for (Mask a : p.chains(wm)) {
      for (Mask b : from_q) {
        const std::uint32_t key = a | (b << d_);
        std::uint64_t& word = seen_[key >> 6];
        const std::uint64_t flag = std::uint64_t{1} << (key & 63);
        if ((word & flag) == 0) {
          if (word == 0) touched_.push_back(key >> 6);
          word |= flag;
          ++distinct;
        }
      }
    }
  }
  for (std::uint32_t idx : touched_) seen_[idx] = 0;
  return distinct;
}

std::uint64_t closed_form(ClosedForm kind, std::size_t d) {
  if (d == 0) throw SizeError("closed forms are defined for d >= 1");
  switch (kind) {
    case ClosedForm::kCC:
      return checked_pow(2, d);
    case ClosedForm::kII: {
      std::uint64_t r = 0;
      if (__builtin_mul_overflow(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(d + 1), &r)) {
        throw OverflowError("d^2 + d overflows 64 bits");
      }
      return r;
    }
    case ClosedForm::kIC: {
      std::uint64_t r = 0;
      if (__builtin_mul_overflow(static_cast<std::uint64_t>(d), checked_pow(2, d - 1), &r)) {
        throw OverflowError("d * 2^(d-1) overflows 64 bits");
      }
      return r + 1;
    }
  }
  return 0;
}

bool BoundValue::admits(std::uint64_t n) const noexcept {
  return static_cast<unsigned __int128>(n) * denominator <= numerator;
}

std::string BoundValue::to_string() const {
  if (is_integer()) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

BoundValue bound(std::size_t d) {
  if (d == 0) throw SizeError("the facet bound is defined for d >= 1");
  if (d > 49) throw SizeError("the facet bound for d = " + std::to_string(d) + " overflows 64 bits");
  if (d % 2 == 0) return {checked_pow(6, d / 2), 1};
  if (d == 1) return {7, 3};
  return {14 * checked_pow(6, (d - 3) / 2), 1};
}

bool is_stacked_antichain_pairs(const Poset& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (popcount(p.incomparable(i)) != 1) return false;
  }
  return true;
}

bool is_equality_case(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw DimensionMismatch("P and Q differ in size");
  if (p.size() % 2 != 0) {
    throw OddDimension("the equality characterization applies to even d, got d = " + std::to_string(p.size()));
  }
  return is_stacked_antichain_pairs(p) && is_stacked_antichain_pairs(q) && labeled_graph_iso_by_identity(p, q);
}

std::pair<Poset, Poset> direct_sum_pair(const Poset& p1, const Poset& q1, const Poset& p2, const Poset& q2) {
  if (p1.size() != q1.size()) throw DimensionMismatch("first block: |P1| != |Q1|");
  if (p2.size() != q2.size()) throw DimensionMismatch("second block: |P2| != |Q2|");
  return {ordinal_sum(p1, p2), ordinal_sum(q1, q2)};
}

LemmaReport lemma_inequality_check(const Poset& p, const Poset& q, LemmaKind kind, int k) {
  check_pair(p, q);
  const std::size_t d = p.size();
  if (k < 1 || static_cast<std::size_t>(k) > d) {
    throw IndexError("k = " + std::to_string(k) + " outside [1, " + std::to_string(d) + "]");
  }
  const auto v = static_cast<std::size_t>(k - 1);
  const Mask all = full_mask(d);
  const Mask inc_p = p.incomparable(v);
  const Mask inc_q = q.incomparable(v);

  // c(other side on the incomparable set) · N(Γ) on what is left.
  auto removal_term = [&](Mask removed, const Poset& counted_side) {
    const Mask rest = all & ~bit(v) & ~removed;
    return chain_count_within(counted_side, removed) * facet_count(restrict_to(p, rest), restrict_to(q, rest));
  };

  LemmaReport report{kind, k, mask_to_indices(inc_p), mask_to_indices(inc_q), 0, 0, false};
  if (kind == LemmaKind::kL31) {
    for (const SignedChain& c : facet_chains(p, q).members) {
      if ((c.p & bit(v)) != 0) ++report.lhs;
    }
    report.rhs = removal_term(inc_p, q);
  } else {
    const Mask rest = all & ~bit(v);
    report.lhs = facet_count(p, q);
    report.rhs = facet_count(restrict_to(p, rest), restrict_to(q, rest)) + removal_term(inc_p, q) +
                 removal_term(inc_q, p);
  }
  report.pass = report.lhs <= report.rhs;
  return report;
}

}  // namespace twinchain
