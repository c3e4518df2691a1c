#include "twinchain/chains.hpp"

#include <algorithm>
#include <string>

#include "twinchain/error.hpp"

namespace twinchain {

bool SubsetFamily::contains(Mask s) const {
  return std::find(members.begin(), members.end(), s) != members.end();
}

std::vector<std::vector<int>> SubsetFamily::as_indices() const {
  std::vector<std::vector<int>> out;
  out.reserve(members.size());
  for (Mask m : members) out.push_back(mask_to_indices(m));
  return out;
}

SubsetFamily make_family(std::size_t d, std::vector<Mask> members) {
  std::sort(members.begin(), members.end(), lex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SubsetFamily{d, std::move(members)};
}

namespace {

void independent_sets(const Poset& p, Mask chosen, Mask candidates, std::vector<Mask>& out) {
  out.push_back(chosen);
  for (Mask m = candidates; m != 0; m &= m - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(m));
    // Only candidates after v keep the enumeration duplicate-free.
    const Mask later = m & ~bit(v);
    independent_sets(p, chosen | bit(v), later & ~p.comparable(v), out);
  }
}

void bron_kerbosch_pivot(const Poset& p, Mask clique, Mask cand, Mask excluded, std::vector<Mask>& out) {
  if (cand == 0) {
    if (excluded == 0) out.push_back(clique);
    return;
  }
  // Pivot on the vertex of cand ∪ excluded with most neighbours in cand.
  Mask pool = cand | excluded;
  std::size_t pivot = static_cast<std::size_t>(std::countr_zero(pool));
  int best = -1;
  for (Mask m = pool; m != 0; m &= m - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(m));
    const int score = popcount(cand & p.comparable(u));
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (Mask m = cand & ~p.comparable(pivot); m != 0; m &= m - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(m));
    const Mask nbrs = p.comparable(v);
    bron_kerbosch_pivot(p, clique | bit(v), cand & nbrs, excluded & nbrs, out);
    cand &= ~bit(v);
    excluded |= bit(v);
  }
}

void bron_kerbosch_plain(const Poset& p, Mask clique, Mask cand, Mask excluded, std::vector<Mask>& out) {
  if (cand == 0) {
    if (excluded == 0) out.push_back(clique);
    return;
  }
  while (cand != 0) {
    const auto v = static_cast<std::size_t>(std::countr_zero(cand));
    const Mask nbrs = p.comparable(v);
    bron_kerbosch_plain(p, clique | bit(v), cand & nbrs, excluded & nbrs, out);
    cand &= ~bit(v);
    excluded |= bit(v);
  }
}

std::uint64_t count_cliques(const Poset& p, Mask candidates) {
  std::uint64_t total = 1;
  for (Mask m = candidates; m != 0; m &= m - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(m));
    total += count_cliques(p, (m & ~bit(v)) & p.comparable(v));
  }
  return total;
}

void cliques(const Poset& p, Mask chosen, Mask candidates, std::vector<Mask>& out) {
  out.push_back(chosen);
  for (Mask m = candidates; m != 0; m &= m - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(m));
    cliques(p, chosen | bit(v), (m & ~bit(v)) & p.comparable(v), out);
  }
}

}  // namespace

SubsetFamily antichains(const Poset& p) {
  std::vector<Mask> out;
  independent_sets(p, 0, full_mask(p.size()), out);
  return make_family(p.size(), std::move(out));
}

void maximal_chains_within(const Poset& p, Mask within, std::vector<Mask>& out) {
  bron_kerbosch_pivot(p, 0, within & full_mask(p.size()), 0, out);
}

SubsetFamily maximal_chains(const Poset& p) {
  std::vector<Mask> out;
  maximal_chains_within(p, full_mask(p.size()), out);
  return make_family(p.size(), std::move(out));
}

SubsetFamily maximal_chains_plain(const Poset& p) {
  std::vector<Mask> out;
  bron_kerbosch_plain(p, 0, full_mask(p.size()), 0, out);
  return make_family(p.size(), std::move(out));
}

std::uint64_t chain_count_within(const Poset& p, Mask within) {
  return count_cliques(p, within & full_mask(p.size()));
}

std::uint64_t chain_count(const Poset& p) { return chain_count_within(p, full_mask(p.size())); }

SubsetFamily chains_through(const Poset& p, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > p.size()) {
    throw IndexError("index " + std::to_string(i) + " outside [1, " + std::to_string(p.size()) + "]");
  }
  const auto v = static_cast<std::size_t>(i - 1);
  std::vector<Mask> out;
  cliques(p, bit(v), p.comparable(v), out);
  return make_family(p.size(), std::move(out));
}

std::uint64_t moon_moser_cap(std::size_t d) {
  if (d > 60) throw SizeError("Moon-Moser cap requested for d = " + std::to_string(d));
  // Largest m with m^3 <= 3^d, found without floating point.
  unsigned __int128 power = 1;
  for (std::size_t i = 0; i < d; ++i) power *= 3;
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  while (static_cast<unsigned __int128>(hi) * hi * hi <= power) hi *= 2;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (static_cast<unsigned __int128>(mid) * mid * mid <= power) lo = mid; else hi = mid;
  }
  return lo;
}

}  // namespace twinchain
