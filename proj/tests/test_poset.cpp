#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "support.hpp"
#include "twinchain/error.hpp"
#include "twinchain/poset.hpp"

using namespace twinchain;
using support::for_all;
using support::Rng;

namespace {

// Transitive closure by repeated squaring on a boolean matrix.
std::vector<std::vector<bool>> closure(std::size_t d, const std::vector<Cover>& covers) {
  std::vector<std::vector<bool>> r(d, std::vector<bool>(d, false));
  for (auto [i, j] : covers) r[i - 1][j - 1] = true;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

}  // namespace

TEST(Poset, ClosesCoversTransitively) {
  const Poset p = Poset::from_covers(4, std::vector<Cover>{{1, 2}, {2, 3}, {3, 4}});
  EXPECT_TRUE(p.less(0, 3));
  EXPECT_TRUE(p.less(1, 3));
  EXPECT_FALSE(p.less(3, 0));
  EXPECT_EQ(p, Poset::chain(4));
  EXPECT_EQ(p.relation().size(), 6u);
  EXPECT_EQ(p.covers(), (std::vector<Cover>{{1, 2}, {2, 3}, {3, 4}}));
}

TEST(Poset, ClosureMatchesMatrixClosure) {
  for_all(11, 300, [](Rng& rng, int) {
    const std::size_t d = support::random_size(rng, 1, 9);
    const Poset base = support::random_poset(rng, d);
    // Feed a random subset of the relation plus all covers, so the closure
    // has work to do.
    std::vector<Cover> given = base.covers();
    for (const Cover& c : base.relation()) {
      if (rng() % 3 == 0) given.push_back(c);
    }
    std::shuffle(given.begin(), given.end(), rng);
    const Poset p = Poset::from_covers(d, given);
    const auto r = closure(d, given);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) ASSERT_EQ(p.less(i, j), r[i][j]) << i << " " << j;
    }
    EXPECT_EQ(p, base);
    EXPECT_TRUE(p.satisfies_order_axioms());
  });
}

TEST(Poset, CoversRegenerateThePoset) {
  for_all(12, 200, [](Rng& rng, int) {
    const std::size_t d = support::random_size(rng, 0, 10);
    const Poset p = support::random_poset(rng, d);
    const auto covers = p.covers();
    EXPECT_EQ(Poset::from_covers(d, covers), p);
    // A cover has nothing strictly between its ends.
    for (auto [i, j] : covers) {
      for (std::size_t k = 0; k < d; ++k) {
        EXPECT_FALSE(p.less(i - 1, k) && p.less(k, j - 1));
      }
    }
  });
}

TEST(Poset, RejectsCyclesAndBadIndices) {
  EXPECT_THROW(Poset::from_covers(3, std::vector<Cover>{{1, 2}, {2, 3}, {3, 1}}), CycleError);
  EXPECT_THROW(Poset::from_covers(2, std::vector<Cover>{{1, 1}}), CycleError);
  EXPECT_THROW(Poset::from_covers(3, std::vector<Cover>{{0, 1}}), IndexError);
  EXPECT_THROW(Poset::from_covers(3, std::vector<Cover>{{1, 4}}), IndexError);
  EXPECT_THROW(Poset::from_covers(33, std::vector<Cover>{}), SizeError);
  EXPECT_THROW(Poset::from_below_masks({0b10, 0b01}), CycleError);
}

TEST(Poset, ChainAndAntichainPredicates) {
  for_all(13, 150, [](Rng& rng, int) {
    const std::size_t d = support::random_size(rng, 1, 8);
    const Poset p = support::random_poset(rng, d);
    for (Mask s = 0; s < (Mask{1} << d); ++s) {
      ASSERT_EQ(p.is_chain(s), oracle::brute_is_chain(p, s));
      ASSERT_EQ(p.is_antichain(s), oracle::brute_is_antichain(p, s));
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (i == j) continue;
        const bool inc = !oracle::comparable(p, i, j);
        EXPECT_EQ((p.incomparable(i) >> j & 1) != 0, inc);
      }
    }
  });
}

TEST(Poset, RelabelingMovesRelations) {
  for_all(14, 150, [](Rng& rng, int) {
    const std::size_t d = support::random_size(rng, 1, 8);
    const Poset p = support::random_poset(rng, d);
    const auto perm = oracle::random_permutation(rng, d);
    const Poset r = p.relabeled(perm);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) ASSERT_EQ(r.less(perm[i], perm[j]), p.less(i, j));
    }
    std::vector<std::size_t> inverse(d);
    for (std::size_t i = 0; i < d; ++i) inverse[perm[i]] = i;
    EXPECT_EQ(r.relabeled(inverse), p);
  });
}

TEST(Poset, InducedSubposetKeepsOrderAndLabels) {
  const Poset p = Poset::from_covers(5, std::vector<Cover>{{1, 3}, {2, 3}, {3, 5}, {4, 5}});
  const std::vector<int> w{2, 3, 5};
  const auto sub = induced_subposet(p, w);
  EXPECT_EQ(sub.original, w);
  EXPECT_EQ(sub.poset, Poset::chain(3));
  EXPECT_EQ(restrict_to(p, indices_to_mask(w, 5)), Poset::chain(3));
  EXPECT_THROW(induced_subposet(p, std::vector<int>{6}), IndexError);

  for_all(15, 100, [](Rng& rng, int) {
    const std::size_t d = support::random_size(rng, 1, 8);
    const Poset q = support::random_poset(rng, d);
    const Mask m = static_cast<Mask>(rng()) & full_mask(d);
    const Poset r = restrict_to(q, m);
    const auto idx = mask_to_indices(m);
    ASSERT_EQ(r.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b < idx.size(); ++b) {
        ASSERT_EQ(r.less(a, b), q.less(idx[a] - 1, idx[b] - 1));
      }
    }
  });
}

TEST(Poset, OrdinalSumAndDisjointUnion) {
  for_all(16, 100, [](Rng& rng, int) {
    const std::size_t na = support::random_size(rng, 0, 5);
    const std::size_t nb = support::random_size(rng, 0, 5);
    const Poset a = support::random_poset(rng, na);
    const Poset b = support::random_poset(rng, nb);
    const Poset s = ordinal_sum(a, b);
    const Poset u = disjoint_union(a, b);
    ASSERT_EQ(s.size(), na + nb);
    for (std::size_t i = 0; i < na + nb; ++i) {
      for (std::size_t j = 0; j < na + nb; ++j) {
        const bool ia = i < na;
        const bool ja = j < na;
        bool expected_sum = false;
        bool expected_union = false;
        if (ia && ja) expected_sum = expected_union = a.less(i, j);
        if (!ia && !ja) expected_sum = expected_union = b.less(i - na, j - na);
        if (ia && !ja) expected_sum = true;
        ASSERT_EQ(s.less(i, j), expected_sum);
        ASSERT_EQ(u.less(i, j), expected_union);
      }
    }
  });
}

TEST(Poset, ComparabilityGraph) {
  for_all(17, 100, [](Rng& rng, int) {
    const std::size_t d = support::random_size(rng, 1, 8);
    const Poset p = support::random_poset(rng, d);
    const Graph g = comparability_graph(p);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) ASSERT_EQ(g.adjacent(i, j), i != j && oracle::comparable(p, i, j));
    }
    // The dual order has the same comparability graph.
    std::vector<Mask> dual(d);
    for (std::size_t i = 0; i < d; ++i) dual[i] = p.above(i);
    const Poset up = Poset::from_below_masks(dual);
    EXPECT_TRUE(labeled_graph_iso_by_identity(p, up));
    EXPECT_EQ(comparability_graph(up), g);
  });
  const Graph joined = graph_join(Graph::from_edges(2, std::vector<Cover>{}), Graph::from_edges(1, std::vector<Cover>{}));
  EXPECT_EQ(joined.edges(), (std::vector<Cover>{{1, 3}, {2, 3}}));
}

TEST(Poset, MaskHelpers) {
  EXPECT_EQ(mask_to_indices(0b1011), (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(indices_to_mask(std::vector<int>{1, 2, 4}, 4), Mask{0b1011});
  EXPECT_THROW(indices_to_mask(std::vector<int>{5}, 4), IndexError);
  EXPECT_TRUE(lex_less(0b011, 0b101));   // [1,2] < [1,3]
  EXPECT_TRUE(lex_less(0b001, 0b011));   // [1] < [1,2]
  EXPECT_FALSE(lex_less(0b100, 0b011));  // [3] > [1,2]
  EXPECT_EQ(full_mask(0), Mask{0});
  EXPECT_EQ(full_mask(32), ~Mask{0});
}
