#pragma once

// Exact geometric cross-check of facet counts. Everything here works on
// integer points and integer half-spaces; no floating point is involved.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twinchain/poset.hpp"
#include "twinchain/twinned.hpp"

namespace twinchain {

/// Brute-force facet enumeration and completeness checks are limited to d <= 4.
inline constexpr std::size_t kMaxBruteForceDim = 4;

struct LatticePoint {
  std::vector<std::int64_t> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// normal · x <= rhs
struct HalfSpace {
  std::vector<std::int64_t> normal;
  std::int64_t rhs = 0;

  std::size_t dim() const noexcept { return normal.size(); }
  /// Divides by the gcd of all entries of (normal, rhs).
  HalfSpace normalized() const;
  bool satisfied_by(const LatticePoint& x) const;
  bool tight_at(const LatticePoint& x) const;

  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

struct HRep {
  std::size_t d = 0;
  std::vector<HalfSpace> rows;
};

struct VRep {
  std::size_t d = 0;
  std::vector<LatticePoint> points;
};

/// ρ(A) for antichains A of P and −ρ(B) for antichains B of Q, deduplicated
/// and sorted.
std::vector<LatticePoint> point_cloud(const Poset& p, const Poset& q);

/// Points not in the convex hull of the others, decided by an exact
/// rational feasibility test. Throws DegenerateInput if the points do not
/// affinely span their ambient space.
VRep vertices(std::span<const LatticePoint> points);

/// Every hyperplane through d affinely independent points that leaves all
/// points on one side, normalized and sorted. Throws SizeError for d > 4.
HRep brute_force_facets(std::span<const LatticePoint> points);

/// For a signed chain (S_P, S_Q): Σ_{i∈S_P} x_i − Σ_{j∈S_Q} x_j <= 1.
HRep hrep_from_chains(const FacetFamily& family);

struct ValidationChecks {
  bool validity = true;
  bool facet_support = true;
  bool completeness = true;
};

struct ValidationReport {
  /// Number of rows in the H-representation that was validated.
  std::size_t rows_checked = 0;

  bool validity_checked = false;
  bool validity = true;
  /// (row, point) pairs where a point violates a row.
  std::vector<std::pair<std::size_t, std::size_t>> violations;

  bool facet_support_checked = false;
  bool facet_support = true;
  /// Rows whose tight points do not span a hyperplane.
  std::vector<std::size_t> unsupported_rows;

  bool completeness_checked = false;
  bool completeness = true;
  /// Vertices of the H-polytope, when completeness was checked.
  std::vector<LatticePoint> hrep_vertices;

  bool passed() const noexcept { return validity && facet_support && completeness; }
};

/// Throws SizeError if completeness is requested with d > 4.
ValidationReport validate_hrep(std::span<const LatticePoint> points, const HRep& hrep,
                               ValidationChecks checks = {});

/// True iff every row, normalized, has rhs 1. Requires a report in which
/// validity and facet support were checked and passed, and completeness
/// too whenever d <= 4; throws UnvalidatedInput otherwise.
bool is_reflexive(const HRep& hrep, const ValidationReport& report);

/// Full geometric checks are limited to d <= 8.
inline constexpr std::size_t kMaxGeometryDim = 8;

enum class CheckLevel {
  kValidity,  // every point satisfies every chain inequality
  kFacets,    // plus facet support, plus brute-force agreement for d <= 4
  kComplete,  // plus completeness; d <= 4 only
};

struct GeometryReport {
  CheckLevel level = CheckLevel::kValidity;
  std::size_t d = 0;
  std::vector<LatticePoint> points;
  HRep hrep;
  ValidationReport validation;
  std::size_t vertex_count = 0;

  bool brute_force_checked = false;
  std::size_t brute_force_count = 0;
  std::vector<HalfSpace> missing_rows;  // brute-force facets absent from hrep
  std::vector<HalfSpace> extra_rows;    // hrep rows that are not brute-force facets

  std::optional<bool> reflexive;

  bool passed() const noexcept;
};

/// point_cloud, hrep_from_chains(facet_chains) and validate_hrep at the given
/// level. Throws SizeError for d > 8, or for kComplete with d > 4.
GeometryReport verify_geometry(const Poset& p, const Poset& q, CheckLevel level);
std::string format_geometry_report(const GeometryReport& report);

/// One row per half-space: "a_1 ... a_d | b".
std::string dump_hrep(const HRep& hrep);
/// One row per point: "x_1 ... x_d".
std::string dump_points(std::span<const LatticePoint> points);

}  // namespace twinchain
