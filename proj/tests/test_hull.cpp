#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "exact.hpp"
#include "support.hpp"
#include "twinchain/error.hpp"
#include "twinchain/hull.hpp"
#include "twinchain/io.hpp"

using namespace twinchain;
using support::for_all;
using support::Rng;

namespace {

const std::filesystem::path kFixtures = TWINCHAIN_FIXTURE_DIR;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::set<HalfSpace> normalized_rows(const HRep& h) {
  std::set<HalfSpace> out;
  for (const auto& row : h.rows) out.insert(row.normalized());
  return out;
}

std::vector<std::filesystem::path> pair_fixtures() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(kFixtures)) {
    if (e.is_regular_file() && (e.path().extension() == ".txt" || e.path().extension() == ".json")) {
      out.push_back(e.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Points that violate nothing in `rows`, from the cube [-1, 1]^d; a brute
// replacement for vertex enumeration on 0/±1 polytopes.
std::size_t lattice_points_inside(const HRep& h) {
  const std::size_t d = h.d;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= 3;
  std::size_t inside = 0;
  for (std::size_t code = 0; code < total; ++code) {
    LatticePoint x{std::vector<std::int64_t>(d)};
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i, c /= 3) x.coords[i] = static_cast<std::int64_t>(c % 3) - 1;
    bool ok = true;
    for (const auto& row : h.rows) ok = ok && row.satisfied_by(x);
    inside += ok;
  }
  return inside;
}

}  // namespace

TEST(Exact, DeterminantAndRank) {
  using detail::IntMatrix;
  EXPECT_EQ(detail::determinant(IntMatrix{{2, 0}, {0, 3}}), 6);
  EXPECT_EQ(detail::determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(detail::determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0);
  EXPECT_EQ(detail::determinant(IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), 4);
  EXPECT_EQ(detail::rank(IntMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}), 2u);
  EXPECT_EQ(detail::rank(IntMatrix{{0, 0}, {0, 0}}), 0u);
  EXPECT_THROW(detail::determinant(IntMatrix{{1LL << 40, 0}, {0, 1LL << 40}}), OverflowError);

  // Cofactor expansion as the reference.
  std::function<std::int64_t(const IntMatrix&)> cofactor = [&](const IntMatrix& m) -> std::int64_t {
    if (m.size() == 1) return m[0][0];
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < m.size(); ++c) {
      IntMatrix minor;
      for (std::size_t r = 1; r < m.size(); ++r) {
        std::vector<std::int64_t> row;
        for (std::size_t k = 0; k < m.size(); ++k) {
          if (k != c) row.push_back(m[r][k]);
        }
        minor.push_back(row);
      }
      sum += (c % 2 ? -1 : 1) * m[0][c] * cofactor(minor);
    }
    return sum;
  };
  for_all(51, 200, [&](Rng& rng, int) {
    const std::size_t n = support::random_size(rng, 1, 5);
    IntMatrix m(n, std::vector<std::int64_t>(n));
    for (auto& row : m) {
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 7) - 3;
    }
    EXPECT_EQ(detail::determinant(m), cofactor(m));
    EXPECT_EQ(detail::rank(m) == n, cofactor(m) != 0);
  });
}

TEST(Exact, SolveAndHyperplane) {
  const auto x = detail::solve({{2, 1}, {1, 3}}, {3, 5});
  ASSERT_TRUE(x.has_value());
  // 2a + b = 3, a + 3b = 5 -> a = 4/5, b = 7/5
  EXPECT_EQ(x->denominator, 5);
  EXPECT_EQ(x->numerators, (std::vector<std::int64_t>{4, 7}));
  EXPECT_FALSE(detail::solve({{1, 2}, {2, 4}}, {1, 2}).has_value());

  const std::vector<std::int64_t> a{1, 0};
  const std::vector<std::int64_t> b{0, 1};
  const auto h = detail::hyperplane_through({&a, &b});
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->normal[0] * 1 + h->normal[1] * 0, h->offset);
  EXPECT_EQ(h->normal[0] * 0 + h->normal[1] * 1, h->offset);
  EXPECT_FALSE(detail::hyperplane_through({&a, &a}).has_value());
}

TEST(Exact, HullAndConeMembership) {
  const std::vector<std::int64_t> o{0, 0};
  const std::vector<std::int64_t> e1{1, 0};
  const std::vector<std::int64_t> e2{0, 1};
  const std::vector<std::int64_t> f{-1, -1};
  EXPECT_TRUE(detail::in_convex_hull({0, 0}, {&e1, &e2, &f}));
  EXPECT_FALSE(detail::in_convex_hull({1, 1}, {&e1, &e2, &f}));
  EXPECT_TRUE(detail::in_convex_hull({1, 0}, {&e1, &o}));
  EXPECT_TRUE(detail::in_cone({3, 5}, {&e1, &e2}));
  EXPECT_FALSE(detail::in_cone({-1, 0}, {&e1, &e2}));
  EXPECT_TRUE(detail::in_cone({-1, 0}, {&e1, &e2, &f}));
  EXPECT_EQ(detail::gcd_of({4, -6, 10}), 2);
}

TEST(Hull, PointCloudIsSignedAntichains) {
  for_all(52, 100, [](Rng& rng, int) {
    const std::size_t d = support::random_size(rng, 1, 6);
    const Poset p = support::random_poset(rng, d);
    const Poset q = support::random_poset(rng, d);
    std::set<LatticePoint> expected;
    for (Mask a : oracle::brute_antichains(p)) {
      LatticePoint x{std::vector<std::int64_t>(d)};
      for (std::size_t i = 0; i < d; ++i) x.coords[i] = a >> i & 1;
      expected.insert(x);
    }
    for (Mask a : oracle::brute_antichains(q)) {
      LatticePoint x{std::vector<std::int64_t>(d)};
      for (std::size_t i = 0; i < d; ++i) x.coords[i] = -static_cast<std::int64_t>(a >> i & 1);
      expected.insert(x);
    }
    const auto cloud = point_cloud(p, q);
    EXPECT_EQ(std::set<LatticePoint>(cloud.begin(), cloud.end()), expected);
    EXPECT_EQ(cloud.size(), expected.size());
  });
}

TEST(Hull, SmallPolygons) {
  const Poset c = Poset::chain(2);
  const Poset a = Poset::antichain(2);
  const std::vector<std::pair<Poset, Poset>> trio{{c, c}, {a, c}, {a, a}};
  for (std::size_t k = 0; k < trio.size(); ++k) {
    const auto& [p, q] = trio[k];
    const GeometryReport r = verify_geometry(p, q, CheckLevel::kComplete);
    EXPECT_TRUE(r.passed()) << format_geometry_report(r);
    EXPECT_EQ(r.hrep.rows.size(), 4 + k);
    EXPECT_EQ(r.vertex_count, 4 + k);
    EXPECT_EQ(r.brute_force_count, 4 + k);
    ASSERT_TRUE(r.reflexive.has_value());
    EXPECT_TRUE(*r.reflexive);
  }
}

TEST(Hull, GoldenDumps) {
  const std::vector<std::string> names{"square_c2_c2", "pentagon_i2_c2", "hexagon_i2_i2"};
  for (const auto& name : names) {
    SCOPED_TRACE(name);
    const PosetPair pair = read_pair_file(kFixtures / (name + ".txt"));
    const auto cloud = point_cloud(pair.p, pair.q);
    EXPECT_EQ(dump_hrep(hrep_from_chains(facet_chains(pair.p, pair.q))), slurp(kFixtures / "golden" / (name + ".hrep")));
    EXPECT_EQ(dump_points(vertices(cloud).points), slurp(kFixtures / "golden" / (name + ".vrep")));
  }
}

TEST(Hull, BruteForceFacetsMatchChainInequalities) {
  for_all(53, 50, [](Rng& rng, int) {
    const std::size_t d = support::random_size(rng, 1, 4);
    const Poset p = support::random_poset(rng, d);
    const Poset q = support::random_poset(rng, d);
    const auto cloud = point_cloud(p, q);
    const HRep chains = hrep_from_chains(facet_chains(p, q));
    const HRep brute = brute_force_facets(cloud);
    EXPECT_EQ(normalized_rows(chains), normalized_rows(brute));
    EXPECT_EQ(brute.rows.size(), oracle::brute_facets(p, q).size());
    const ValidationReport v = validate_hrep(cloud, chains);
    EXPECT_TRUE(v.passed());
    EXPECT_TRUE(is_reflexive(chains, v));
    // Mixed-sign points and non-antichain indicators are each cut off by
    // some chain row, so the lattice points are exactly the cloud.
    EXPECT_EQ(lattice_points_inside(chains), cloud.size());
  });
}

TEST(Hull, FixturesPassGeometry) {
  for (const auto& path : pair_fixtures()) {
    SCOPED_TRACE(path.filename().string());
    const PosetPair pair = read_pair_file(path);
    const std::size_t d = pair.p.size();
    if (d > kMaxGeometryDim) continue;
    const CheckLevel level = d <= kMaxBruteForceDim ? CheckLevel::kComplete : CheckLevel::kFacets;
    const GeometryReport r = verify_geometry(pair.p, pair.q, level);
    EXPECT_TRUE(r.passed()) << format_geometry_report(r);
    EXPECT_EQ(r.hrep.rows.size(), facet_count(pair.p, pair.q));
    ASSERT_TRUE(r.reflexive.has_value());
    EXPECT_TRUE(*r.reflexive);
  }
}

TEST(Hull, VertexCounts) {
  const Poset i3 = Poset::antichain(3);
  const GeometryReport r = verify_geometry(i3, i3, CheckLevel::kFacets);
  EXPECT_EQ(r.vertex_count, 14u);
  EXPECT_EQ(r.hrep.rows.size(), 12u);
  EXPECT_NE(format_geometry_report(r).find("12 facets, 14 vertices"), std::string::npos);
  // Every nonzero cloud point of two antichains is a vertex.
  EXPECT_EQ(r.points.size(), 15u);
}

TEST(Hull, ValidationCatchesBrokenRepresentations) {
  const Poset i3 = Poset::antichain(3);
  const auto cloud = point_cloud(i3, i3);
  HRep h = hrep_from_chains(facet_chains(i3, i3));

  HRep missing = h;
  missing.rows.pop_back();
  const ValidationReport m = validate_hrep(cloud, missing);
  EXPECT_TRUE(m.validity);
  EXPECT_TRUE(m.facet_support);
  EXPECT_FALSE(m.completeness);

  HRep tight = h;
  tight.rows.push_back(HalfSpace{{1, 1, 1}, 2});
  const ValidationReport t = validate_hrep(cloud, tight);
  EXPECT_FALSE(t.validity);
  EXPECT_FALSE(t.violations.empty());

  HRep loose = h;
  loose.rows.push_back(HalfSpace{{1, 0, 0}, 5});
  const ValidationReport l = validate_hrep(cloud, loose);
  EXPECT_TRUE(l.validity);
  EXPECT_FALSE(l.facet_support);
  EXPECT_EQ(l.unsupported_rows, std::vector<std::size_t>{h.rows.size()});
  EXPECT_THROW(is_reflexive(loose, l), UnvalidatedInput);

  // A report for a different representation does not count.
  const ValidationReport good = validate_hrep(cloud, h);
  EXPECT_TRUE(is_reflexive(h, good));
  EXPECT_THROW(is_reflexive(missing, good), UnvalidatedInput);
  EXPECT_THROW(is_reflexive(h, ValidationReport{}), UnvalidatedInput);
  EXPECT_THROW(is_reflexive(h, validate_hrep(cloud, h, {true, true, false})), UnvalidatedInput);

  // Scaling a row keeps it a valid facet; reflexivity looks at the
  // normalized form.
  HRep scaled = h;
  for (auto& x : scaled.rows[0].normal) x *= 2;
  scaled.rows[0].rhs = 2;
  EXPECT_TRUE(is_reflexive(scaled, validate_hrep(cloud, scaled)));
}

TEST(Hull, Guards) {
  const Poset c5 = Poset::chain(5);
  EXPECT_THROW(verify_geometry(c5, c5, CheckLevel::kComplete), SizeError);
  EXPECT_NO_THROW(verify_geometry(c5, c5, CheckLevel::kFacets));
  EXPECT_THROW(verify_geometry(Poset::chain(9), Poset::chain(9), CheckLevel::kValidity), SizeError);
  EXPECT_THROW(brute_force_facets(point_cloud(c5, c5)), SizeError);
  const std::vector<LatticePoint> flat{{{0, 0}}, {{1, 1}}, {{2, 2}}};
  EXPECT_THROW(vertices(flat), DegenerateInput);
  EXPECT_THROW(brute_force_facets(flat), DegenerateInput);
  EXPECT_THROW(verify_geometry(Poset::chain(2), Poset::chain(3), CheckLevel::kValidity), DimensionMismatch);
}

TEST(Hull, LargerPairsAtFacetLevel) {
  // Beyond the brute-force range: validity and facet support only.
  for_all(54, 4, [](Rng& rng, int) {
    const std::size_t d = support::random_size(rng, 5, 6);
    const Poset p = support::random_poset(rng, d);
    const Poset q = support::random_poset(rng, d);
    const GeometryReport r = verify_geometry(p, q, CheckLevel::kFacets);
    EXPECT_TRUE(r.passed()) << format_geometry_report(r);
    EXPECT_FALSE(r.brute_force_checked);
    ASSERT_TRUE(r.reflexive.has_value());
    EXPECT_TRUE(*r.reflexive);
  });
}
