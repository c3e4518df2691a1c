#pragma once

// Random generators and brute-force reference implementations shared by the
// test suites and the acceptance runner. The references only use
// Poset::less / Poset::size and plain subset loops, never the library's
// enumerators.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "twinchain/poset.hpp"
#include "twinchain/twinned.hpp"

namespace oracle {

using twinchain::Cover;
using twinchain::Mask;
using twinchain::Poset;
using twinchain::SignedChain;
using Rng = std::mt19937_64;

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t d) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Random poset: pick a hidden linear order, then keep each forward pair with
// probability `density`. Density itself is drawn per call when negative.
inline Poset random_poset(Rng& rng, std::size_t d, double density = -1.0) {
  if (density < 0) density = std::uniform_real_distribution<double>(0.05, 0.8)(rng);
  std::bernoulli_distribution keep(density);
  const auto order = random_permutation(rng, d);
  std::vector<Cover> covers;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      if (keep(rng)) covers.emplace_back(static_cast<int>(order[a] + 1), static_cast<int>(order[b] + 1));
    }
  }
  return Poset::from_covers(d, covers);
}

inline std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool comparable(const Poset& p, std::size_t i, std::size_t j) { return p.less(i, j) || p.less(j, i); }

inline bool brute_is_chain(const Poset& p, Mask s) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if ((s >> i & 1) && (s >> j & 1) && !comparable(p, i, j)) return false;
    }
  }
  return true;
}

inline bool brute_is_antichain(const Poset& p, Mask s) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if ((s >> i & 1) && (s >> j & 1) && comparable(p, i, j)) return false;
    }
  }
  return true;
}

inline std::vector<Mask> brute_antichains(const Poset& p) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << p.size()); ++s) {
    if (brute_is_antichain(p, s)) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> brute_chains(const Poset& p) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << p.size()); ++s) {
    if (brute_is_chain(p, s)) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> brute_maximal_chains(const Poset& p) {
  const auto chains = brute_chains(p);
  std::vector<Mask> out;
  for (Mask s : chains) {
    bool maximal = true;
    for (Mask t : chains) {
      if (t != s && (t & s) == s) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

// Facet labels straight from the definition: for each W, the maximal chains
// of the ordinal sum of P on W below Q on the complement, found by testing
// every subset of the d available elements.
inline std::set<std::pair<Mask, Mask>> brute_facets(const Poset& p, const Poset& q) {
  const std::size_t d = p.size();
  std::set<std::pair<Mask, Mask>> out;
  for (Mask w = 0; w < (Mask{1} << d); ++w) {
    auto is_chain = [&](Mask s) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
          if (!(s >> i & 1) || !(s >> j & 1)) continue;
          const bool pi = w >> i & 1;
          const bool pj = w >> j & 1;
          if (pi != pj) continue;  // one from P, one from Q: always comparable
          if (!comparable(pi ? p : q, i, j)) return false;
        }
      }
      return true;
    };
    for (Mask s = 0; s < (Mask{1} << d); ++s) {
      if (!is_chain(s)) continue;
      bool maximal = true;
      for (std::size_t k = 0; k < d && maximal; ++k) {
        if (!(s >> k & 1) && is_chain(s | Mask{1} << k)) maximal = false;
      }
      if (maximal) out.insert({s & w, s & ~w});
    }
  }
  return out;
}

// Isomorphism-invariant form: the smallest relation matrix over all d!
// relabelings.
inline std::vector<bool> brute_canonical(const Poset& p) {
  const std::size_t d = p.size();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> m(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m[perm[i] * d + perm[j]] = p.less(i, j);
    }
    if (best.empty() || m < best) best = std::move(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every naturally labeled poset on [d] (i < j in the order implies i < j as
// integers): all transitive subsets of the pairs i < j.
inline std::vector<Poset> brute_natural_posets(std::size_t d) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  std::vector<Poset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::vector<std::vector<bool>> rel(d, std::vector<bool>(d, false));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (bits >> k & 1) rel[pairs[k].first][pairs[k].second] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < d && transitive; ++a) {
      for (std::size_t b = 0; b < d && transitive; ++b) {
        for (std::size_t c = 0; c < d && transitive; ++c) {
          if (rel[a][b] && rel[b][c] && !rel[a][c]) transitive = false;
        }
      }
    }
    if (!transitive) continue;
    std::vector<Cover> covers;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        if (rel[a][b]) covers.emplace_back(static_cast<int>(a + 1), static_cast<int>(b + 1));
      }
    }
    out.push_back(Poset::from_covers(d, covers));
  }
  return out;
}

inline std::size_t brute_class_count(std::size_t d) {
  std::set<std::vector<bool>> seen;
  for (const Poset& p : brute_natural_posets(d)) seen.insert(brute_canonical(p));
  return seen.size();
}

inline Poset poset(std::size_t d, std::vector<Cover> covers) { return Poset::from_covers(d, covers); }

// Named posets used across suites.
inline Poset wedge() { return poset(3, {{3, 1}, {3, 2}}); }  // 3 below 1 and 2
inline Poset wedge_b() { return poset(3, {{2, 1}, {2, 3}}); }
inline Poset stacked_pairs(std::size_t layers) {
  Poset out;
  for (std::size_t k = 0; k < layers; ++k) out = twinchain::ordinal_sum(out, Poset::antichain(2));
  return out;
}
inline Poset figure_q() {
  return poset(6, {{6, 1}, {6, 2}, {5, 1}, {5, 2}, {1, 4}, {1, 3}, {2, 4}, {2, 3}});
}

inline twinchain::SignedChain chain(std::vector<int> p_side, std::vector<int> q_side) {
  twinchain::SignedChain c;
  for (int i : p_side) c.p |= Mask{1} << (i - 1);
  for (int i : q_side) c.q |= Mask{1} << (i - 1);
  return c;
}

// Tables of the two worked examples on the wedge 3 < 1, 3 < 2, listed per W
// in the order W = {}, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}.
inline const std::vector<std::vector<SignedChain>> kWedgeA{
    {chain({}, {1, 3}), chain({}, {2, 3})},
    {chain({1}, {2, 3})},
    {chain({2}, {1, 3})},
    {chain({3}, {1}), chain({3}, {2})},
    {chain({1}, {3}), chain({2}, {3})},
    {chain({1, 3}, {2})},
    {chain({2, 3}, {1})},
    {chain({1, 3}, {}), chain({2, 3}, {})},
};
inline const std::vector<std::vector<SignedChain>> kWedgeB{
    {chain({}, {1, 2}), chain({}, {2, 3})},
    {chain({1}, {2, 3})},
    {chain({2}, {1}), chain({2}, {3})},
    {chain({3}, {1, 2})},
    {chain({1}, {3}), chain({2}, {3})},
    {chain({1, 3}, {2})},
    {chain({2, 3}, {1})},
    {chain({1, 3}, {}), chain({2, 3}, {})},
};
inline const std::vector<Mask> kColumnOrder{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};

}  // namespace oracle
