#include <algorithm>
#include <functional>
#include <numeric>

#include "pyramid/graph.hpp"
#include "pyramid/rational.hpp"

namespace pyramid {

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Cycle: return "cycle";
    case GraphClass::Ladder: return "ladder";
    case GraphClass::OuterplanarOther: return "outerplanar-other";
    case GraphClass::NonOuterplanar: return "non-outerplanar";
  }
  return "unknown";
}

namespace {

bool chords_cross(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  if (i > j) std::swap(i, j);
  if (k > l) std::swap(k, l);
  return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

bool chords_non_crossing(const Graph& g, const std::vector<Vertex>& cyc) {
  std::map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < cyc.size(); ++i) pos[cyc[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> chords;
  std::size_t n = cyc.size();
  for (const auto& e : g.edges()) {
    std::size_t i = pos[e.a], j = pos[e.b];
    std::size_t d = i > j ? i - j : j - i;
    if (d == 1 || d == n - 1) continue;
    chords.emplace_back(i, j);
  }
  for (std::size_t x = 0; x < chords.size(); ++x) {
    for (std::size_t y = x + 1; y < chords.size(); ++y) {
      if (chords_cross(chords[x].first, chords[x].second, chords[y].first, chords[y].second)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Vertex>> outer_cycle(const Graph& g) {
  std::size_t n = g.num_vertices();
  if (n < 3 || g.num_edges() > 2 * n - 3) return std::nullopt;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  Vertex start = g.vertices().front();
  std::vector<Vertex> path{start};
  std::set<Vertex> used{start};
  std::optional<std::vector<Vertex>> found;
  std::function<void()> extend = [&]() {
    if (found) return;
    if (path.size() == n) {
      if (g.has_edge(path.back(), start) && path[1] < path.back() && chords_non_crossing(g, path)) {
        found = path;
      }
      return;
    }
    for (Vertex y : g.neighbors(path.back())) {
      if (used.count(y)) continue;
      path.push_back(y);
      used.insert(y);
      extend();
      used.erase(y);
      path.pop_back();
      if (found) return;
    }
  };
  extend();
  return found;
}

bool is_outerplanar(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  if (!g.is_connected()) throw StructuralError("outerplanarity test needs a connected graph");
  for (const auto& b : blocks(g).blocks) {
    if (b.num_vertices() <= 2) continue;
    if (!outer_cycle(b)) return false;
  }
  return true;
}

GraphClass classify(const Graph& g) {
  if (!g.is_connected()) throw StructuralError("classify needs a connected graph");
  if (!is_outerplanar(g)) return GraphClass::NonOuterplanar;
  if (g.is_two_connected()) {
    if (g.max_degree() == 2) return GraphClass::Cycle;
    if (g.max_degree() <= 3 && build_ladder_model(g)) return GraphClass::Ladder;
  }
  return GraphClass::OuterplanarOther;
}

namespace {

// Is there a K4 (complete) or K2,3 model with branch sets given by `label`?
bool model_exists(const Graph& g, const std::vector<Vertex>& vs, const std::vector<int>& label, int h,
                  const std::vector<std::pair<int, int>>& needed) {
  std::vector<std::vector<Vertex>> sets(h);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (label[i] >= 0) sets[label[i]].push_back(vs[i]);
  }
  std::map<Vertex, int> lab;
  for (std::size_t i = 0; i < vs.size(); ++i) lab[vs[i]] = label[i];
  for (int s = 0; s < h; ++s) {
    if (sets[s].empty()) return false;
    std::set<Vertex> seen{sets[s][0]};
    std::vector<Vertex> stack{sets[s][0]};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (lab[y] == s && seen.insert(y).second) stack.push_back(y);
      }
    }
    if (seen.size() != sets[s].size()) return false;
  }
  std::set<std::pair<int, int>> adj;
  for (const auto& e : g.edges()) {
    int x = lab[e.a], y = lab[e.b];
    if (x >= 0 && y >= 0 && x != y) adj.insert({std::min(x, y), std::max(x, y)});
  }
  for (const auto& p : needed) {
    if (!adj.count(p)) return false;
  }
  return true;
}

bool has_minor(const Graph& g, int h, const std::vector<std::pair<int, int>>& needed) {
  const auto& vs = g.vertices();
  if (static_cast<int>(vs.size()) < h) return false;
  std::vector<int> label(vs.size(), -1);
  // Branch sets are opened in order, so set s only appears after set s-1: removes label symmetry.
  std::function<bool(std::size_t, int)> go = [&](std::size_t i, int opened) -> bool {
    if (i == vs.size()) return opened == h && model_exists(g, vs, label, h, needed);
    if (h - opened > static_cast<int>(vs.size() - i)) return false;
    for (int s = -1; s <= std::min(opened, h - 1); ++s) {
      label[i] = s;
      if (go(i + 1, s == opened ? opened + 1 : opened)) return true;
    }
    label[i] = -1;
    return false;
  };
  return go(0, 0);
}

}  // namespace

bool has_forbidden_minor(const Graph& g) {
  std::vector<std::pair<int, int>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  if (has_minor(g, 4, k4)) return true;
  // K2,3 with sides {0,1} and {2,3,4}; label symmetry breaking is only over opening order,
  // so try every assignment of the two big-side roles among the five sets.
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      std::vector<std::pair<int, int>> need;
      for (int c = 0; c < 5; ++c) {
        if (c == a || c == b) continue;
        need.push_back({std::min(a, c), std::max(a, c)});
        need.push_back({std::min(b, c), std::max(b, c)});
      }
      if (has_minor(g, 5, need)) return true;
    }
  }
  return false;
}

namespace {

void split_faces(const std::vector<Vertex>& poly, const std::vector<Edge>& chords,
                 std::vector<std::vector<Vertex>>& out) {
  std::map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < poly.size(); ++i) pos[poly[i]] = i;
  for (const auto& c : chords) {
    auto ia = pos.find(c.a), ib = pos.find(c.b);
    if (ia == pos.end() || ib == pos.end()) continue;
    std::size_t i = std::min(ia->second, ib->second), j = std::max(ia->second, ib->second);
    if (j - i == 1 || (i == 0 && j == poly.size() - 1)) continue;
    std::vector<Vertex> inner(poly.begin() + i, poly.begin() + j + 1);
    std::vector<Vertex> outer(poly.begin(), poly.begin() + i + 1);
    outer.insert(outer.end(), poly.begin() + j, poly.end());
    split_faces(inner, chords, out);
    split_faces(outer, chords, out);
    return;
  }
  out.push_back(poly);
}

}  // namespace

std::optional<LadderModel> build_ladder_model(const Graph& g) {
  if (!g.is_two_connected() || g.max_degree() > 3 || g.max_degree() < 3) return std::nullopt;
  auto cyc = outer_cycle(g);
  if (!cyc) return std::nullopt;
  LadderModel m;
  m.outer_cycle = *cyc;
  std::size_t n = cyc->size();
  std::map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[(*cyc)[i]] = i;
  std::vector<Edge> chords;
  for (const auto& e : g.edges()) {
    std::size_t d = pos[e.a] > pos[e.b] ? pos[e.a] - pos[e.b] : pos[e.b] - pos[e.a];
    if (d != 1 && d != n - 1) chords.push_back(e);
  }
  std::vector<std::vector<Vertex>> faces;
  split_faces(*cyc, chords, faces);
  std::vector<std::vector<Edge>> fchords(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& poly = faces[f];
    for (std::size_t i = 0; i < poly.size(); ++i) {
      Edge e = make_edge(poly[i], poly[(i + 1) % poly.size()]);
      if (std::binary_search(chords.begin(), chords.end(), e)) fchords[f].push_back(e);
    }
    std::sort(fchords[f].begin(), fchords[f].end());
  }
  // Walk the weak dual from the leaf face with the smallest chord.
  std::size_t first = faces.size();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (fchords[f].size() == 1 && (first == faces.size() || fchords[f][0] < fchords[first][0])) first = f;
  }
  std::vector<std::size_t> order;
  std::vector<bool> seen(faces.size(), false);
  std::vector<Edge> rungs;
  std::function<void(std::size_t)> walk = [&](std::size_t f) {
    seen[f] = true;
    order.push_back(f);
    for (const auto& c : fchords[f]) {
      for (std::size_t h = 0; h < faces.size(); ++h) {
        if (seen[h] || !std::binary_search(fchords[h].begin(), fchords[h].end(), c)) continue;
        rungs.push_back(c);
        walk(h);
      }
    }
  };
  walk(first);
  for (std::size_t f : order) {
    m.faces.push_back(faces[f]);
    m.face_chords.push_back(fchords[f]);
  }
  m.rungs = rungs;
  m.lowest_face = 0;
  m.top_edge = m.face_chords[0][0];

  std::set<Vertex> ends;
  for (const auto& c : chords) {
    ends.insert(c.a);
    ends.insert(c.b);
  }
  std::size_t s0 = 0;
  while (!ends.count((*cyc)[s0])) ++s0;
  VertexPath rail{(*cyc)[s0]};
  for (std::size_t i = 1; i <= n; ++i) {
    Vertex v = (*cyc)[(s0 + i) % n];
    rail.push_back(v);
    if (ends.count(v)) {
      m.rails.push_back(rail);
      rail = {v};
    }
  }
  return m;
}

LadderEmbedding embed_in_ladder(const Graph& g) {
  if (!g.is_two_connected() || !outer_cycle(g)) {
    throw StructuralError("embed_in_ladder needs a 2-connected outerplanar graph");
  }
  struct Split {
    Vertex x;
    std::vector<Vertex> copies;  // copies[0] == x
  };
  std::vector<Split> splits;
  Graph cur = g;
  while (cur.max_degree() > 3) {
    Vertex x = -1;
    for (Vertex v : cur.vertices()) {
      if (cur.degree(v) > 3) {
        x = v;
        break;
      }
    }
    auto cyc = *outer_cycle(cur);
    std::size_t n = cyc.size();
    std::size_t px = std::find(cyc.begin(), cyc.end(), x) - cyc.begin();
    Vertex prev = cyc[(px + n - 1) % n];
    Vertex next = cyc[(px + 1) % n];
    std::vector<std::pair<std::size_t, Vertex>> chords;
    for (Vertex y : cur.neighbors(x)) {
      if (y == prev || y == next) continue;
      std::size_t py = std::find(cyc.begin(), cyc.end(), y) - cyc.begin();
      chords.push_back({(py + n - px) % n, y});
    }
    // Nearest to prev first: larger forward offset from x.
    std::sort(chords.begin(), chords.end(), std::greater<>());
    std::size_t j = chords.size();
    Split sp{x, {x}};
    Vertex fresh = cur.max_label();
    for (std::size_t i = 1; i < j; ++i) sp.copies.push_back(++fresh);
    std::vector<Vertex> vs = cur.vertices();
    for (std::size_t i = 1; i < j; ++i) vs.push_back(sp.copies[i]);
    std::vector<Edge> es;
    for (const auto& e : cur.edges()) {
      if (!e.has(x)) es.push_back(e);
    }
    es.push_back(make_edge(prev, sp.copies[0]));
    for (std::size_t i = 0; i < j; ++i) {
      es.push_back(make_edge(sp.copies[i], chords[i].second));
      if (i + 1 < j) es.push_back(make_edge(sp.copies[i], sp.copies[i + 1]));
    }
    es.push_back(make_edge(sp.copies[j - 1], next));
    cur = Graph(vs, es);
    splits.push_back(sp);
  }
  LadderEmbedding out;
  out.ladder = cur;
  out.stages.push_back(cur);
  for (auto it = splits.rbegin(); it != splits.rend(); ++it) {
    for (std::size_t i = 1; i < it->copies.size(); ++i) {
      auto res = apply_minor_op(out.stages.back(), MinorKind::ContractEdge,
                                make_edge(it->copies[0], it->copies[i]), it->copies[0]);
      out.ops.push_back(res.op);
      out.stages.push_back(res.graph);
    }
  }
  if (!(out.stages.back() == g)) throw ConstructionError("ladder embedding does not contract back to g");
  return out;
}

}  // namespace pyramid
