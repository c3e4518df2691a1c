#include "twinchain/hull.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <set>
#include <sstream>

#include "exact.hpp"
#include "twinchain/chains.hpp"
#include "twinchain/error.hpp"

namespace twinchain {

namespace {

using detail::IntMatrix;

using Coords = std::vector<std::int64_t>;

std::int64_t dot(const Coords& a, const Coords& x) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * x[i];
  if (s > INT64_MAX || s < INT64_MIN) throw OverflowError("inner product leaves the 64-bit range");
  return static_cast<std::int64_t>(s);
}

std::size_t common_dim(std::span<const LatticePoint> points) {
  if (points.empty()) throw DegenerateInput("empty point set");
  const std::size_t d = points.front().dim();
  for (const auto& x : points) {
    if (x.dim() != d) throw DimensionMismatch("points have different dimensions");
  }
  return d;
}

// Affine rank of a point set: rank of the differences to the first point.
std::size_t affine_rank(const std::vector<const Coords*>& points) {
  if (points.size() <= 1) return 0;
  IntMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Coords row(points[i]->size());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = (*points[i])[j] - (*points[0])[j];
    diffs.push_back(std::move(row));
  }
  return detail::rank(std::move(diffs));
}

void require_full_span(std::span<const LatticePoint> points, std::size_t d) {
  std::vector<const Coords*> all;
  for (const auto& x : points) all.push_back(&x.coords);
  if (affine_rank(all) != d) {
    throw DegenerateInput("points do not affinely span R^" + std::to_string(d));
  }
}

}  // namespace

HalfSpace HalfSpace::normalized() const {
  Coords all(normal);
  all.push_back(rhs);
  const std::int64_t g = detail::gcd_of(all);
  HalfSpace h = *this;
  for (auto& a : h.normal) a /= g;
  h.rhs /= g;
  return h;
}

bool HalfSpace::satisfied_by(const LatticePoint& x) const { return dot(normal, x.coords) <= rhs; }

bool HalfSpace::tight_at(const LatticePoint& x) const { return dot(normal, x.coords) == rhs; }

std::vector<LatticePoint> point_cloud(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw DimensionMismatch("P and Q differ in size");
  const std::size_t d = p.size();
  std::set<LatticePoint> cloud;
  auto add = [&](const Poset& side, std::int64_t sign) {
    for (Mask a : antichains(side).members) {
      LatticePoint x{Coords(d, 0)};
      for (Mask m = a; m != 0; m &= m - 1) x.coords[static_cast<std::size_t>(std::countr_zero(m))] = sign;
      cloud.insert(std::move(x));
    }
  };
  add(p, 1);
  add(q, -1);
  return {cloud.begin(), cloud.end()};
}

VRep vertices(std::span<const LatticePoint> points) {
  const std::size_t d = common_dim(points);
  require_full_span(points, d);
  std::set<LatticePoint> distinct(points.begin(), points.end());
  VRep out{d, {}};
  for (const auto& x : distinct) {
    std::vector<const Coords*> others;
    for (const auto& y : distinct) {
      if (&y != &x) others.push_back(&y.coords);
    }
    if (!detail::in_convex_hull(x.coords, others)) out.points.push_back(x);
  }
  return out;
}

HRep brute_force_facets(std::span<const LatticePoint> points) {
  const std::size_t d = common_dim(points);
  if (d > kMaxBruteForceDim) {
    throw SizeError("brute-force facet enumeration supports d <= " + std::to_string(kMaxBruteForceDim) +
                    ", got " + std::to_string(d));
  }
  require_full_span(points, d);
  const std::set<LatticePoint> distinct(points.begin(), points.end());
  const std::vector<LatticePoint> pts(distinct.begin(), distinct.end());
  const std::size_t n = pts.size();
  std::set<HalfSpace> facets;
  // Walk all d-subsets of points in lexicographic order.
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  std::vector<const Coords*> chosen(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) chosen[i] = &pts[pick[i]].coords;
    if (auto h = detail::hyperplane_through(chosen)) {
      bool below = true;
      bool above = true;
      for (const auto& x : pts) {
        const std::int64_t v = dot(h->normal, x.coords);
        below = below && v <= h->offset;
        above = above && v >= h->offset;
      }
      if (below || above) {
        HalfSpace row{h->normal, h->offset};
        if (!below) {
          for (auto& a : row.normal) a = -a;
          row.rhs = -row.rhs;
        }
        facets.insert(row.normalized());
      }
    }
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return HRep{d, {facets.begin(), facets.end()}};
}

HRep hrep_from_chains(const FacetFamily& family) {
  HRep out{family.d, {}};
  out.rows.reserve(family.size());
  for (const SignedChain& c : family.members) {
    HalfSpace h{Coords(family.d, 0), 1};
    for (Mask m = c.p; m != 0; m &= m - 1) h.normal[static_cast<std::size_t>(std::countr_zero(m))] = 1;
    for (Mask m = c.q; m != 0; m &= m - 1) h.normal[static_cast<std::size_t>(std::countr_zero(m))] = -1;
    out.rows.push_back(std::move(h));
  }
  return out;
}

ValidationReport validate_hrep(std::span<const LatticePoint> points, const HRep& hrep, ValidationChecks checks) {
  const std::size_t d = hrep.d;
  for (const auto& x : points) {
    if (x.dim() != d) throw DimensionMismatch("point dimension differs from the H-representation");
  }
  for (const auto& h : hrep.rows) {
    if (h.dim() != d) throw DimensionMismatch("half-space dimension differs from the H-representation");
  }
  if (checks.completeness && d > kMaxBruteForceDim) {
    throw SizeError("completeness checking supports d <= " + std::to_string(kMaxBruteForceDim) + ", got " +
                    std::to_string(d));
  }

  ValidationReport report;
  report.rows_checked = hrep.rows.size();
  if (checks.validity) {
    report.validity_checked = true;
    for (std::size_t r = 0; r < hrep.rows.size(); ++r) {
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (!hrep.rows[r].satisfied_by(points[i])) report.violations.emplace_back(r, i);
      }
    }
    report.validity = report.violations.empty();
  }

  if (checks.facet_support) {
    report.facet_support_checked = true;
    for (std::size_t r = 0; r < hrep.rows.size(); ++r) {
      std::vector<const Coords*> tight;
      for (const auto& x : points) {
        if (hrep.rows[r].tight_at(x)) tight.push_back(&x.coords);
      }
      const bool spans = !tight.empty() && affine_rank(tight) + 1 == d;
      if (!spans) report.unsupported_rows.push_back(r);
    }
    report.facet_support = report.unsupported_rows.empty();
  }

  if (checks.completeness) {
    report.completeness_checked = true;
    // Bounded iff the normals positively span R^d.
    std::vector<const Coords*> normals;
    for (const auto& h : hrep.rows) normals.push_back(&h.normal);
    bool bounded = true;
    for (std::size_t j = 0; j < d && bounded; ++j) {
      for (std::int64_t s : {1, -1}) {
        Coords e(d, 0);
        e[j] = s;
        bounded = bounded && detail::in_cone(e, normals);
      }
    }

    std::set<LatticePoint> h_vertices;
    bool integral = true;
    const std::size_t n = hrep.rows.size();
    if (bounded && n >= d) {
      std::vector<std::size_t> pick(d);
      for (std::size_t i = 0; i < d; ++i) pick[i] = i;
      IntMatrix a(d);
      Coords b(d);
      while (true) {
        for (std::size_t i = 0; i < d; ++i) {
          a[i] = hrep.rows[pick[i]].normal;
          b[i] = hrep.rows[pick[i]].rhs;
        }
        if (auto x = detail::solve(a, b)) {
          bool feasible = true;
          for (const auto& h : hrep.rows) {
            const __int128 lhs = dot(h.normal, x->numerators);
            if (lhs > static_cast<__int128>(h.rhs) * x->denominator) {
              feasible = false;
              break;
            }
          }
          if (feasible) {
            if (x->denominator != 1) integral = false;
            h_vertices.insert(LatticePoint{x->numerators});
          }
        }
        std::size_t i = d;
        while (i > 0 && pick[i - 1] == n - d + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    report.hrep_vertices.assign(h_vertices.begin(), h_vertices.end());
    const VRep v = vertices(points);
    report.completeness = bounded && integral && report.hrep_vertices == v.points;
  }
  return report;
}

bool is_reflexive(const HRep& hrep, const ValidationReport& report) {
  const bool complete_enough =
      hrep.d > kMaxBruteForceDim || (report.completeness_checked && report.completeness);
  if (report.rows_checked != hrep.rows.size() || !report.validity_checked || !report.validity ||
      !report.facet_support_checked || !report.facet_support || !complete_enough) {
    throw UnvalidatedInput("reflexivity needs an H-representation that passed validation");
  }
  return std::all_of(hrep.rows.begin(), hrep.rows.end(), [](const HalfSpace& h) { return h.normalized().rhs == 1; });
}

std::string dump_hrep(const HRep& hrep) {
  std::ostringstream out;
  for (const auto& h : hrep.rows) {
    for (std::int64_t a : h.normal) out << a << ' ';
    out << "| " << h.rhs << '\n';
  }
  return out.str();
}

std::string dump_points(std::span<const LatticePoint> points) {
  std::ostringstream out;
  for (const auto& x : points) {
    for (std::size_t i = 0; i < x.coords.size(); ++i) out << (i ? " " : "") << x.coords[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace twinchain

namespace twinchain {

namespace {

std::string row_text(const HalfSpace& h) {
  HRep one{h.dim(), {h}};
  std::string s = dump_hrep(one);
  s.pop_back();
  return s;
}

std::string point_text(const LatticePoint& x) {
  std::string s = dump_points(std::span<const LatticePoint>(&x, 1));
  s.pop_back();
  return s;
}

}  // namespace

bool GeometryReport::passed() const noexcept {
  if (!validation.passed()) return false;
  if (brute_force_checked && (!missing_rows.empty() || !extra_rows.empty())) return false;
  return !reflexive.has_value() || *reflexive;
}

GeometryReport verify_geometry(const Poset& p, const Poset& q, CheckLevel level) {
  if (p.size() != q.size()) throw DimensionMismatch("P and Q differ in size");
  const std::size_t d = p.size();
  if (d == 0) throw DegenerateInput("geometry checks need d >= 1");
  if (d > kMaxGeometryDim) {
    throw SizeError("geometry checks support d <= " + std::to_string(kMaxGeometryDim) + ", got " + std::to_string(d));
  }
  if (level == CheckLevel::kComplete && d > kMaxBruteForceDim) {
    throw SizeError("level complete supports d <= " + std::to_string(kMaxBruteForceDim) + ", got " +
                    std::to_string(d));
  }
  GeometryReport r;
  r.level = level;
  r.d = d;
  r.points = point_cloud(p, q);
  r.hrep = hrep_from_chains(facet_chains(p, q));
  r.vertex_count = vertices(r.points).points.size();

  ValidationChecks checks{true, level != CheckLevel::kValidity, level == CheckLevel::kComplete};
  r.validation = validate_hrep(r.points, r.hrep, checks);

  if (level != CheckLevel::kValidity && d <= kMaxBruteForceDim) {
    r.brute_force_checked = true;
    const HRep brute = brute_force_facets(r.points);
    r.brute_force_count = brute.rows.size();
    std::set<HalfSpace> chain_rows;
    for (const auto& h : r.hrep.rows) chain_rows.insert(h.normalized());
    const std::set<HalfSpace> brute_rows(brute.rows.begin(), brute.rows.end());
    std::set_difference(brute_rows.begin(), brute_rows.end(), chain_rows.begin(), chain_rows.end(),
                        std::back_inserter(r.missing_rows));
    std::set_difference(chain_rows.begin(), chain_rows.end(), brute_rows.begin(), brute_rows.end(),
                        std::back_inserter(r.extra_rows));
  }

  const bool reflexivity_decidable =
      r.validation.validity && r.validation.facet_support_checked && r.validation.facet_support &&
      (d > kMaxBruteForceDim || (r.validation.completeness_checked && r.validation.completeness));
  if (reflexivity_decidable) r.reflexive = is_reflexive(r.hrep, r.validation);
  return r;
}

std::string format_geometry_report(const GeometryReport& r) {
  std::ostringstream out;
  auto verdict = [](bool ok) { return ok ? "pass" : "FAIL"; };
  out << "d = " << r.d << '\n';
  out << "points: " << r.points.size() << '\n';
  out << "vertices: " << r.vertex_count << '\n';
  out << "chain inequalities: " << r.hrep.rows.size() << '\n';
  const ValidationReport& v = r.validation;
  if (v.validity_checked) {
    out << "validity: " << verdict(v.validity) << '\n';
    for (auto [row, pt] : v.violations) {
      out << "  violated: " << row_text(r.hrep.rows[row]) << " at point " << point_text(r.points[pt]) << '\n';
    }
  }
  if (v.facet_support_checked) {
    out << "facet support: " << verdict(v.facet_support) << '\n';
    for (std::size_t row : v.unsupported_rows) out << "  not a facet: " << row_text(r.hrep.rows[row]) << '\n';
  }
  if (v.completeness_checked) {
    out << "completeness: " << verdict(v.completeness) << '\n';
    if (!v.completeness) {
      for (const auto& x : v.hrep_vertices) out << "  H-vertex: " << point_text(x) << '\n';
    }
  }
  if (r.brute_force_checked) {
    const bool agree = r.missing_rows.empty() && r.extra_rows.empty();
    out << "brute force: " << r.brute_force_count << " facets, " << (agree ? "agrees" : "DISAGREES") << '\n';
    for (const auto& h : r.missing_rows) out << "  missing facet: " << row_text(h) << '\n';
    for (const auto& h : r.extra_rows) out << "  extra row: " << row_text(h) << '\n';
  }
  out << r.hrep.rows.size() << " facets, " << r.vertex_count << " vertices";
  if (r.reflexive) out << ", reflexive: " << (*r.reflexive ? "true" : "false");
  out << '\n' << (r.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace twinchain
