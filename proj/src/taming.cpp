#include <algorithm>
#include <set>

#include "pyramid/dominators.hpp"

namespace pyramid {

namespace {

std::string show(const RoutePath& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

bool meet_only_at(const RoutePath& x, const RoutePath& y, Vertex v) {
  std::set<Vertex> xs(x.begin(), x.end());
  for (Vertex w : y) {
    if (w != v && xs.count(w)) return false;
  }
  return true;
}

std::set<std::pair<Vertex, Vertex>> edge_set(const RoutePath& p) {
  std::set<std::pair<Vertex, Vertex>> s;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) s.insert({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
  return s;
}

std::int64_t potential(const Routing& rt) {
  std::vector<std::set<std::pair<Vertex, Vertex>>> es;
  for (const auto& p : rt.paths) es.push_back(edge_set(p));
  std::int64_t total = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      std::size_t common = 0;
      for (const auto& e : es[i]) common += es[j].count(e);
      total += static_cast<std::int64_t>(es[i].size() + es[j].size() - 2 * common);
    }
  }
  return total;
}

}  // namespace

std::optional<std::string> taming_precondition(const Routing& rt, std::size_t i1, std::size_t i2, Vertex v) {
  if (i1 >= rt.paths.size() || i2 >= rt.paths.size()) return "path index out of range";
  const auto& p1 = rt.paths[i1];
  const auto& p2 = rt.paths[i2];
  if (!path_contains(p1, v) || !path_contains(p2, v)) return "vertex " + std::to_string(v) + " not on both paths";
  if (i1 == i2) return std::nullopt;
  if (!meet_only_at(prefix_to(p1, v), suffix_from(p2, v), v)) {
    return "P1^{rv} " + show(prefix_to(p1, v)) + " meets P2^{v-} " + show(suffix_from(p2, v));
  }
  if (!meet_only_at(prefix_to(p2, v), suffix_from(p1, v), v)) {
    return "P2^{rv} " + show(prefix_to(p2, v)) + " meets P1^{v-} " + show(suffix_from(p1, v));
  }
  return std::nullopt;
}

TameResult tame(const Instance& inst, const Routing& rt, std::size_t i1, std::size_t i2, Vertex v) {
  if (auto err = taming_precondition(rt, i1, i2, v)) throw InputError("taming refused: " + *err);
  if (i1 == i2) return {rt, rt};
  const auto& p1 = rt.paths[i1];
  const auto& p2 = rt.paths[i2];
  RoutePath p3 = prefix_to(p1, v), p4 = prefix_to(p2, v);
  auto s1 = suffix_from(p1, v), s2 = suffix_from(p2, v);
  p3.insert(p3.end(), s2.begin() + 1, s2.end());
  p4.insert(p4.end(), s1.begin() + 1, s1.end());
  TameResult res{rt, rt};
  res.a.paths[i1] = p4;
  res.b.paths[i2] = p3;
  auto y = y_vector(inst, rt), ya = y_vector(inst, res.a), yb = y_vector(inst, res.b);
  for (std::size_t e = 0; e < y.size(); ++e) {
    if (ya[e] + yb[e] > 2 * y[e]) {
      throw ConstructionError("taming inequality fails at edge " + inst.edge_name(inst.graph.edges()[e]));
    }
  }
  return res;
}

bool is_coincident(const Routing& rt) {
  for (std::size_t i = 0; i < rt.paths.size(); ++i) {
    for (std::size_t j = i + 1; j < rt.paths.size(); ++j) {
      for (Vertex w : rt.paths[i]) {
        if (path_contains(rt.paths[j], w) && prefix_to(rt.paths[i], w) != prefix_to(rt.paths[j], w)) return false;
      }
    }
  }
  return true;
}

Routing canonicalize(const Instance& inst, const Routing& input) {
  if (auto err = validate_routing(inst, input)) throw ValidationError("invalid routing: " + *err);
  Routing rt = input.canonical();
  EdgeVector y = y_vector(inst, rt);
  std::int64_t phi = potential(rt);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rt.paths.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < rt.paths.size() && !changed; ++j) {
        for (Vertex w : rt.paths[i]) {
          if (w == inst.root || !path_contains(rt.paths[j], w)) continue;
          if (prefix_to(rt.paths[i], w) == prefix_to(rt.paths[j], w)) continue;
          if (taming_precondition(rt, i, j, w)) continue;
          auto res = tame(inst, rt, i, j, w);
          for (Routing* cand : {&res.a, &res.b}) {
            auto yc = y_vector(inst, *cand);
            std::int64_t pc = potential(*cand);
            if (dominates(yc, y) && pc < phi) {
              rt = cand->canonical();
              y = yc;
              phi = pc;
              changed = true;
              break;
            }
          }
          if (changed) break;
        }
      }
    }
  }
  return rt;
}

}  // namespace pyramid
