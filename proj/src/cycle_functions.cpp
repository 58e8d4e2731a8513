#include <algorithm>

#include "pyramid/dominators.hpp"

namespace pyramid {

CycleCoordinates cycle_coordinates(const Instance& inst) {
  const Graph& g = inst.graph;
  if (g.num_vertices() < 3 || g.max_degree() != 2 || g.num_edges() != g.num_vertices() || !g.is_connected()) {
    throw StructuralError("cycle coordinates need a cycle");
  }
  CycleCoordinates c;
  Vertex prev = inst.root, cur = g.neighbors(inst.root).front();
  c.vertex_order.push_back(inst.root);
  while (cur != inst.root) {
    c.vertex_order.push_back(cur);
    const auto& nb = g.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  std::size_t m = c.vertex_order.size() - 1;
  std::int64_t s = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    c.edge_order.push_back(make_edge(c.vertex_order[i], c.vertex_order[(i + 1) % (m + 1)]));
    if (i > 0) s += inst.demand(c.vertex_order[i]);
    c.breakpoints.push_back(s);
  }
  return c;
}

Rational PiecewiseLinearFn::operator()(const Rational& t) const {
  if (breakpoints.empty() || t < breakpoints.front().first || t > breakpoints.back().first) {
    throw InputError("argument outside the domain");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const auto& [t0, v0] = breakpoints[i];
    const auto& [t1, v1] = breakpoints[i + 1];
    if (t <= t1) {
      if (t1 == t0) return v1;
      return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
    }
  }
  return breakpoints.back().second;
}

PiecewiseLinearFn PiecewiseLinearFn::y_function(std::int64_t k) const {
  auto p = [k](const Rational& v) { return std::min(v, Rational(k) - v); };
  Rational half = make_rational(k, 2);
  PiecewiseLinearFn out;
  out.dissolved = dissolved;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const auto& [t0, v0] = breakpoints[i];
    out.breakpoints.push_back({t0, p(v0)});
    if (i + 1 < breakpoints.size()) {
      const auto& [t1, v1] = breakpoints[i + 1];
      if ((v0 - half) * (v1 - half) < 0) {
        out.breakpoints.push_back({t0 + (half - v0) * (t1 - t0) / (v1 - v0), half});
      }
    }
  }
  return out;
}

PiecewiseLinearFn n_function(const CycleCoordinates& coords, const Instance& inst, const Routing& rt) {
  auto n = n_vector(inst, rt);
  PiecewiseLinearFn f;
  for (std::size_t i = 0; i < coords.edge_order.size(); ++i) {
    Rational t = coords.breakpoints[i];
    Rational v = n[inst.graph.index_of(coords.edge_order[i])];
    if (!f.breakpoints.empty() && f.breakpoints.back().first == t) {
      f.breakpoints.back().second = v;
      f.dissolved.push_back(coords.vertex_order[i]);
    } else {
      f.breakpoints.push_back({t, v});
    }
  }
  return f;
}

PiecewiseLinearFn reflect_segment(const PiecewiseLinearFn& fn, std::int64_t t1, std::int64_t t2) {
  if (fn.breakpoints.empty()) throw InputError("empty function");
  Rational a(t1), b(t2);
  if (!(a < b) || a < fn.breakpoints.front().first || b > fn.breakpoints.back().first) {
    throw InputError("reflection interval outside the domain");
  }
  Rational h = fn(a);
  if (fn(b) != h) throw InputError("reflection needs f(t1) = f(t2)");
  std::vector<std::pair<Rational, Rational>> pts = fn.breakpoints;
  for (const Rational& t : {a, b}) {
    bool present = std::any_of(pts.begin(), pts.end(), [&](const auto& p) { return p.first == t; });
    if (!present) pts.push_back({t, fn(t)});
  }
  std::sort(pts.begin(), pts.end());
  for (auto& [t, v] : pts) {
    if (a <= t && t <= b) v = 2 * h - v;
  }
  PiecewiseLinearFn out;
  out.dissolved = fn.dissolved;
  out.breakpoints = pts;
  return out;
}

std::vector<std::int64_t> UnitProfile::values() const {
  std::vector<std::int64_t> v{start};
  for (int s : slopes) v.push_back(v.back() + s);
  return v;
}

namespace {

bool is_clockwise(const CycleCoordinates& coords, const RoutePath& p) {
  return p.size() > 1 && p[1] == coords.vertex_order[1];
}

RoutePath arc(const CycleCoordinates& coords, std::size_t i, bool clockwise) {
  std::size_t m = coords.vertex_order.size() - 1;
  RoutePath p{coords.vertex_order[0]};
  if (clockwise) {
    for (std::size_t l = 1; l <= i; ++l) p.push_back(coords.vertex_order[l]);
  } else {
    for (std::size_t l = m; l >= i && l >= 1; --l) p.push_back(coords.vertex_order[l]);
  }
  return p;
}

}  // namespace

UnitProfile unit_profile(const CycleCoordinates& coords, const Instance& inst, const Routing& rt) {
  auto n = n_vector(inst, rt);
  UnitProfile prof;
  prof.start = n[inst.graph.index_of(coords.edge_order[0])];
  std::map<Vertex, std::int64_t> cw;
  for (const auto& p : rt.paths) {
    if (is_clockwise(coords, p)) ++cw[p.back()];
  }
  for (std::size_t i = 1; i < coords.vertex_order.size(); ++i) {
    Vertex w = coords.vertex_order[i];
    std::int64_t c = cw.count(w) ? cw[w] : 0;
    for (std::int64_t u = 0; u < c; ++u) prof.slopes.push_back(-1);
    for (std::int64_t u = c; u < inst.demand(w); ++u) prof.slopes.push_back(+1);
  }
  return prof;
}

Routing routing_from_profile(const CycleCoordinates& coords, const Instance& inst, const UnitProfile& prof) {
  Routing rt;
  for (std::int64_t i = 0; i < inst.demand(inst.root); ++i) rt.paths.push_back({inst.root});
  std::size_t pos = 0;
  std::int64_t total_cw = 0;
  for (std::size_t i = 1; i < coords.vertex_order.size(); ++i) {
    std::int64_t b = inst.demand(coords.vertex_order[i]);
    for (std::int64_t u = 0; u < b; ++u, ++pos) {
      bool cw = prof.slopes.at(pos) < 0;
      total_cw += cw;
      rt.paths.push_back(arc(coords, i, cw));
    }
  }
  if (pos != prof.slopes.size() || total_cw != prof.start) {
    throw ConstructionError("unit profile inconsistent with the instance");
  }
  rt.canonicalize();
  return rt;
}

Routing reflect_routing(const CycleCoordinates& coords, const Instance& inst, const Routing& rt, std::int64_t t1,
                        std::int64_t t2) {
  auto prof = unit_profile(coords, inst, rt);
  auto vals = prof.values();
  auto len = static_cast<std::int64_t>(prof.slopes.size());
  if (t1 < 0 || t2 > len || t1 >= t2) throw InputError("reflection interval outside the domain");
  if (vals[t1] != vals[t2]) throw InputError("reflection needs f(t1) = f(t2)");
  for (std::int64_t t = t1; t < t2; ++t) prof.slopes[t] = -prof.slopes[t];
  return routing_from_profile(coords, inst, prof);
}

Shape shape_of(const std::vector<std::int64_t>& values, std::int64_t k) {
  std::vector<std::int64_t> v;
  for (auto x : values) {
    if (v.empty() || v.back() != x) v.push_back(x);
  }
  Shape s;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i - 1] < v[i] && v[i] > v[i + 1]) {
      ++s.peaks;
      if (2 * v[i] <= k) s.peaks_above = false;
    }
    if (v[i - 1] > v[i] && v[i] < v[i + 1]) {
      ++s.valleys;
      if (2 * v[i] >= k) s.valleys_below = false;
    }
  }
  int last = 0;
  for (auto x : v) {
    int sign = 2 * x > k ? 1 : (2 * x < k ? -1 : 0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++s.crossings;
    last = sign;
  }
  return s;
}

namespace {

// Crossing positions in doubled coordinates: odd = between units, even = at a unit point.
std::vector<std::int64_t> unit_crossings(const std::vector<std::int64_t>& f, std::int64_t k) {
  std::vector<std::int64_t> cr;
  for (std::size_t t = 0; t + 1 < f.size(); ++t) {
    std::int64_t a = 2 * f[t], b = 2 * f[t + 1];
    if ((a < k && k < b) || (a > k && k > b)) cr.push_back(2 * static_cast<std::int64_t>(t) + 1);
  }
  for (std::size_t t = 1; t + 1 < f.size(); ++t) {
    if (2 * f[t] == k && (f[t - 1] - f[t]) * (f[t + 1] - f[t]) < 0) cr.push_back(2 * static_cast<std::int64_t>(t));
  }
  std::sort(cr.begin(), cr.end());
  return cr;
}

void flip(std::vector<int>& slopes, std::size_t t1, std::size_t t2) {
  for (std::size_t t = t1; t < t2; ++t) slopes[t] = -slopes[t];
}

}  // namespace

UnitProfile smooth_profile(const UnitProfile& input, std::int64_t k) {
  UnitProfile prof = input;
  const std::size_t len = prof.slopes.size();
  std::size_t guard = 4 * (len + 1) * (len + 1) + 16;
  while (guard-- > 0) {
    auto f = prof.values();
    std::vector<std::size_t> peaks, valleys;
    for (std::size_t t = 1; t < len; ++t) {
      if (f[t - 1] < f[t] && f[t] > f[t + 1]) peaks.push_back(t);
      if (f[t - 1] > f[t] && f[t] < f[t + 1]) valleys.push_back(t);
    }
    auto flank_left = [](const std::vector<std::size_t>& xs, std::size_t t) {
      std::size_t best = 0;
      for (auto x : xs) {
        if (x < t) best = x;
      }
      return best;
    };
    auto flank_right = [len](const std::vector<std::size_t>& xs, std::size_t t) {
      for (auto x : xs) {
        if (x > t) return x;
      }
      return len;
    };
    bool acted = false;
    for (auto v : valleys) {
      if (2 * f[v] < k) continue;
      std::size_t lp = flank_left(peaks, v), rp = flank_right(peaks, v);
      std::int64_t h = std::min(f[lp], f[rp]);
      std::size_t t1 = v, t2 = v;
      while (f[t1] != h) --t1;
      while (f[t2] != h) ++t2;
      flip(prof.slopes, t1, t2);
      acted = true;
      break;
    }
    if (acted) continue;
    for (auto p : peaks) {
      if (2 * f[p] > k) continue;
      std::size_t lv = flank_left(valleys, p), rv = flank_right(valleys, p);
      std::int64_t h = std::max(f[lv], f[rv]);
      std::size_t t1 = p, t2 = p;
      while (f[t1] != h) --t1;
      while (f[t2] != h) ++t2;
      flip(prof.slopes, t1, t2);
      acted = true;
      break;
    }
    if (acted) continue;
    auto cr = unit_crossings(f, k);
    if (cr.size() < 2) return prof;
    std::size_t t1, t2;
    if (k % 2 == 0) {
      t1 = static_cast<std::size_t>(cr[0] / 2);
      t2 = static_cast<std::size_t>(cr[1] / 2);
    } else {
      t1 = static_cast<std::size_t>(cr[0] / 2);
      t2 = static_cast<std::size_t>(cr[1] / 2 + 1);
    }
    if (f[t1] != f[t2]) throw ConstructionError("crossing pair endpoints at different heights");
    flip(prof.slopes, t1, t2);
  }
  throw ConstructionError("smoothing did not terminate");
}

Routing smooth(const Instance& inst, const CycleCoordinates& coords, const Routing& rt) {
  auto prof = smooth_profile(unit_profile(coords, inst, rt), inst.k);
  Routing out = routing_from_profile(coords, inst, prof);
  if (!dominates(y_vector(inst, out), y_vector(inst, rt))) {
    throw ConstructionError("smoothing increased the y-vector");
  }
  return out;
}

Routing cycle_tree(const CycleCoordinates& coords, const Instance& inst, std::size_t j) {
  Routing rt;
  for (std::int64_t i = 0; i < inst.demand(inst.root); ++i) rt.paths.push_back({inst.root});
  for (std::size_t i = 1; i < coords.vertex_order.size(); ++i) {
    for (std::int64_t u = 0; u < inst.demand(coords.vertex_order[i]); ++u) {
      rt.paths.push_back(arc(coords, i, i <= j));
    }
  }
  rt.canonicalize();
  return rt;
}

}  // namespace pyramid
