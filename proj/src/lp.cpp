#include "pyramid/lp.hpp"

#include <algorithm>

namespace pyramid {

std::optional<std::vector<Rational>> nonnegative_solution(const Matrix& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  if (m == 0) return std::vector<Rational>(n, Rational(0));
  // Columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  Matrix t(m, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = flip ? -b[i] : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> obj(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) obj[j] -= t[i][j];
    obj[width - 1] -= t[i][width - 1];
  }
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width; ++j) {
      if (t[leave][j] != 0) nz.push_back(j);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j : nz) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (std::size_t j : nz) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (obj[width - 1] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  }
  return x;
}

std::optional<std::vector<Rational>> convex_domination(const std::vector<EdgeVector>& points,
                                                        const std::vector<Rational>& target) {
  if (points.empty()) return std::nullopt;
  const std::size_t p = points.size(), d = target.size();
  // Variables: lambda_1..lambda_p, then one slack per coordinate.
  Matrix a(d + 1, std::vector<Rational>(p + d, Rational(0)));
  std::vector<Rational> b(d + 1);
  for (std::size_t e = 0; e < d; ++e) {
    for (std::size_t i = 0; i < p; ++i) a[e][i] = points[i][e];
    a[e][p + e] = 1;
    b[e] = target[e];
  }
  for (std::size_t i = 0; i < p; ++i) a[d][i] = 1;
  b[d] = 1;
  auto x = nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  return std::vector<Rational>(x->begin(), x->begin() + p);
}

std::optional<std::pair<Rational, Rational>> pair_interval(const EdgeVector& y1, const EdgeVector& y2,
                                                           const EdgeVector& target) {
  Rational lo = 0, hi = 1;
  for (std::size_t e = 0; e < target.size(); ++e) {
    // lambda * (y1 - y2) <= target - y2
    std::int64_t slope = y1[e] - y2[e], room = target[e] - y2[e];
    if (slope == 0) {
      if (room < 0) return std::nullopt;
    } else if (slope > 0) {
      hi = std::min(hi, Rational(room) / slope);
    } else {
      lo = std::max(lo, Rational(room) / slope);
    }
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

}  // namespace pyramid
