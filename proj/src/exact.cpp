#include "exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <utility>

#include "twinchain/error.hpp"

namespace twinchain::detail {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("exact elimination left the 64-bit range");
  return static_cast<std::int64_t>(v);
}

// (a·b − c·e) / divisor, which Sylvester's identity makes exact.
std::int64_t bareiss_step(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e, std::int64_t divisor) {
  const Wide num = static_cast<Wide>(a) * b - static_cast<Wide>(c) * e;
  if (num % divisor != 0) throw OverflowError("fraction-free elimination produced an inexact quotient");
  return narrow(num / divisor);
}

}  // namespace

std::int64_t determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = bareiss_step(m[i][j], m[k][k], m[i][k], m[k][j], prev);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank(IntMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = bareiss_step(m[i][j], m[r][c], m[i][c], m[r][j], prev);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::optional<Hyperplane> hyperplane_through(const std::vector<const std::vector<std::int64_t>*>& points) {
  const std::size_t d = points.size();
  std::vector<std::int64_t> cofactor(d + 1);
  for (std::size_t skip = 0; skip <= d; ++skip) {
    IntMatrix minor(d, std::vector<std::int64_t>());
    for (std::size_t r = 0; r < d; ++r) {
      minor[r].reserve(d);
      for (std::size_t c = 0; c <= d; ++c) {
        if (c == skip) continue;
        minor[r].push_back(c < d ? (*points[r])[c] : -1);
      }
    }
    const std::int64_t det = determinant(std::move(minor));
    cofactor[skip] = (skip % 2 == 0) ? det : -det;
  }
  Hyperplane h{std::vector<std::int64_t>(cofactor.begin(), cofactor.end() - 1), cofactor[d]};
  bool nonzero = false;
  for (std::int64_t a : h.normal) nonzero = nonzero || a != 0;
  if (!nonzero) return std::nullopt;
  return h;
}

std::optional<RationalVector> solve(const IntMatrix& a, const std::vector<std::int64_t>& b) {
  const std::size_t n = a.size();
  const std::int64_t det = determinant(a);
  if (det == 0) return std::nullopt;
  RationalVector x{std::vector<std::int64_t>(n), det};
  for (std::size_t col = 0; col < n; ++col) {
    IntMatrix replaced = a;
    for (std::size_t r = 0; r < n; ++r) replaced[r][col] = b[r];
    x.numerators[col] = determinant(std::move(replaced));
  }
  std::vector<std::int64_t> all(x.numerators);
  all.push_back(x.denominator);
  const std::int64_t g = gcd_of(all);
  for (auto& v : x.numerators) v /= g;
  x.denominator /= g;
  if (x.denominator < 0) {
    x.denominator = -x.denominator;
    for (auto& v : x.numerators) v = -v;
  }
  return x;
}

namespace {

// Phase one of the simplex method for {λ >= 0 : Σ λ_j v_j = target} and,
// when affine is set, Σ λ_j = 1.
bool nonnegative_combination(const std::vector<std::int64_t>& target,
                             const std::vector<const std::vector<std::int64_t>*>& points, bool affine) {
  using Rational = boost::multiprecision::cpp_rational;
  const std::size_t dim = target.size();
  const std::size_t m = affine ? dim + 1 : dim;
  const std::size_t n = points.size();
  if (n == 0) {
    for (std::int64_t v : target) {
      if (v != 0) return false;
    }
    return !affine;
  }
  // Columns: n convex weights, m artificials, then the right-hand side.
  const std::size_t cols = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, 0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) t[r][j] = r < dim ? (*points[j])[r] : 1;
    t[r][rhs] = r < dim ? target[r] : 1;
    if (t[r][rhs] < 0) {
      for (std::size_t j = 0; j < n; ++j) t[r][j] = -t[r][j];
      t[r][rhs] = -t[r][rhs];
    }
    t[r][n + r] = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;

  // Objective row: the sum of the artificials, expressed in nonbasic terms.
  std::vector<Rational> obj(cols, 0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) obj[j] += t[r][j];
    obj[rhs] += t[r][rhs];
  }

  while (obj[rhs] > 0) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][rhs] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      const Rational f = obj[enter];
      for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return obj[rhs] == 0;
}

}  // namespace

bool in_convex_hull(const std::vector<std::int64_t>& target, const std::vector<const std::vector<std::int64_t>*>& points) {
  return nonnegative_combination(target, points, true);
}

bool in_cone(const std::vector<std::int64_t>& target, const std::vector<const std::vector<std::int64_t>*>& generators) {
  return nonnegative_combination(target, generators, false);
}

std::int64_t gcd_of(const std::vector<std::int64_t>& values) {
  std::int64_t g = 0;
  for (std::int64_t v : values) g = std::gcd(g, v < 0 ? -v : v);
  return g == 0 ? 1 : g;
}

}  // namespace twinchain::detail
