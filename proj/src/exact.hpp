#pragma once

// Exact integer and rational linear algebra used by the hull oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace twinchain::detail {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. Throws OverflowError if an intermediate leaves 64 bits.
std::int64_t determinant(IntMatrix m);

/// Rank of an integer matrix by fraction-free elimination.
std::size_t rank(IntMatrix m);

/// Integer normal vector and offset (a, b) of the hyperplane a·x = b through
/// the given d points in R^d, via signed maximal minors of [x_i | -1].
/// Returns nullopt if the points are affinely dependent.
struct Hyperplane {
  std::vector<std::int64_t> normal;
  std::int64_t offset;
};
std::optional<Hyperplane> hyperplane_through(const std::vector<const std::vector<std::int64_t>*>& points);

/// Solution of the square system a x = b as (numerators, common denominator
/// > 0) by Cramer's rule, or nullopt when a is singular.
struct RationalVector {
  std::vector<std::int64_t> numerators;
  std::int64_t denominator;
};
std::optional<RationalVector> solve(const IntMatrix& a, const std::vector<std::int64_t>& b);

/// Whether target is a convex combination of the given points, decided by
/// phase-one simplex over exact rationals with Bland's rule.
bool in_convex_hull(const std::vector<std::int64_t>& target, const std::vector<const std::vector<std::int64_t>*>& points);

/// Whether target is a nonnegative combination of the given vectors.
bool in_cone(const std::vector<std::int64_t>& target, const std::vector<const std::vector<std::int64_t>*>& generators);

std::int64_t gcd_of(const std::vector<std::int64_t>& values);

}  // namespace twinchain::detail
