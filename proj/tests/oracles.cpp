#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

bool same_edge(Vertex x, Vertex y, const Edge& e) { return (e.a == x && e.b == y) || (e.a == y && e.b == x); }

std::vector<std::vector<Vertex>> simple_paths(const Graph& g, Vertex s, Vertex t) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{s};
  std::function<void()> go = [&] {
    Vertex x = path.back();
    if (x == t) {
      out.push_back(path);
      return;
    }
    for (const auto& e : g.edges()) {
      if (!e.has(x)) continue;
      Vertex y = e.other(x);
      if (std::find(path.begin(), path.end(), y) != path.end()) continue;
      path.push_back(y);
      go();
      path.pop_back();
    }
  };
  go();
  return out;
}

}  // namespace

EdgeVector n_of(const Graph& g, const Routing& rt) {
  EdgeVector n(g.edges().size(), 0);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    for (const auto& p : rt.paths) {
      for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        if (same_edge(p[j], p[j + 1], g.edges()[i])) ++n[i];
      }
    }
  }
  return n;
}

EdgeVector y_of(const Graph& g, const Routing& rt, std::int64_t k) {
  auto n = n_of(g, rt);
  for (auto& v : n) v = std::min(v, k - v);
  return n;
}

bool support_is_tree(const Graph& g, const EdgeVector& n) {
  std::set<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] > 0) {
      es.push_back(g.edges()[i]);
      vs.insert(g.edges()[i].a);
      vs.insert(g.edges()[i].b);
    }
  }
  if (es.empty()) return true;
  if (es.size() + 1 != vs.size()) return false;
  std::set<Vertex> seen{*vs.begin()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : es) {
      if (seen.count(e.a) != seen.count(e.b)) {
        seen.insert(e.a);
        seen.insert(e.b);
        grew = true;
      }
    }
  }
  return seen.size() == vs.size();
}

std::vector<Routing> all_routings(const Instance& inst, std::size_t cap) {
  std::vector<std::vector<std::vector<Vertex>>> options;
  std::vector<std::int64_t> counts;
  for (Vertex v : inst.graph.vertices()) {
    if (v == inst.root || inst.demands.at(v) == 0) continue;
    options.push_back(simple_paths(inst.graph, inst.root, v));
    counts.push_back(inst.demands.at(v));
  }
  std::set<std::vector<std::vector<Vertex>>> seen;
  std::vector<std::vector<Vertex>> cur;
  for (std::int64_t i = 0; i < inst.demands.at(inst.root); ++i) cur.push_back({inst.root});
  std::function<void(std::size_t, std::int64_t, std::size_t)> go = [&](std::size_t t, std::int64_t left,
                                                                        std::size_t from) {
    if (seen.size() >= cap) return;
    if (t == options.size()) {
      auto s = cur;
      std::sort(s.begin(), s.end());
      seen.insert(s);
      return;
    }
    if (left == 0) {
      go(t + 1, t + 1 < options.size() ? counts[t + 1] : 0, 0);
      return;
    }
    for (std::size_t o = from; o < options[t].size(); ++o) {
      cur.push_back(options[t][o]);
      go(t, left - 1, o);
      cur.pop_back();
    }
  };
  go(0, options.empty() ? 0 : counts[0], 0);
  std::vector<Routing> out;
  for (const auto& s : seen) out.push_back(Routing{s});
  return out;
}

std::set<EdgeVector> tree_ys(const Instance& inst) {
  const auto& es = inst.graph.edges();
  std::set<EdgeVector> out;
  std::vector<Vertex> terms;
  for (const auto& [v, b] : inst.demands) {
    if (b > 0) terms.push_back(v);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << es.size()); ++mask) {
    std::map<Vertex, int> deg{{inst.root, 0}};
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (mask >> i & 1) {
        chosen.push_back(i);
        ++deg[es[i].a];
        ++deg[es[i].b];
      }
    }
    if (chosen.size() + 1 != deg.size()) continue;
    bool ok = std::all_of(terms.begin(), terms.end(), [&](Vertex t) { return deg.count(t) > 0; });
    for (const auto& [v, d] : deg) {
      if (d == 1 && inst.demands.at(v) == 0) ok = false;
    }
    if (!ok) continue;
    std::set<Vertex> reach{inst.root};
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i : chosen) {
        if (reach.count(es[i].a) != reach.count(es[i].b)) {
          reach.insert(es[i].a);
          reach.insert(es[i].b);
          grew = true;
        }
      }
    }
    if (reach.size() != deg.size()) continue;
    // Per edge: demand on the far side from the root.
    EdgeVector y(es.size(), 0);
    bool connected = true;
    for (std::size_t i : chosen) {
      std::set<Vertex> side{es[i].a};
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t j : chosen) {
          if (j == i) continue;
          if (side.count(es[j].a) != side.count(es[j].b)) {
            side.insert(es[j].a);
            side.insert(es[j].b);
            grew = true;
          }
        }
      }
      if (side.count(inst.root)) {
        side = {es[i].b};
        grew = true;
        while (grew) {
          grew = false;
          for (std::size_t j : chosen) {
            if (j == i) continue;
            if (side.count(es[j].a) != side.count(es[j].b)) {
              side.insert(es[j].a);
              side.insert(es[j].b);
              grew = true;
            }
          }
        }
        if (side.count(inst.root)) connected = false;
      }
      std::int64_t far = 0;
      for (Vertex v : side) far += inst.demands.at(v);
      y[i] = std::min(far, inst.k - far);
    }
    if (connected) out.insert(y);
  }
  return out;
}

bool certificate_ok(const Instance& inst, const Routing& target,
                    const std::vector<std::pair<Routing, Rational>>& entries, std::string* why) {
  auto say = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  const Graph& g = inst.graph;
  Rational sum = 0;
  std::vector<Rational> comb(g.edges().size(), 0);
  for (const auto& [t, lam] : entries) {
    if (lam <= 0) return say("nonpositive coefficient");
    sum += lam;
    std::map<Vertex, std::int64_t> ends;
    for (const auto& p : t.paths) {
      if (p.empty() || p.front() != inst.root) return say("path not rooted");
      if (std::set<Vertex>(p.begin(), p.end()).size() != p.size()) return say("path not simple");
      for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        bool adj = std::any_of(g.edges().begin(), g.edges().end(),
                               [&](const Edge& e) { return same_edge(p[j], p[j + 1], e); });
        if (!adj) return say("non-edge in path");
      }
      ++ends[p.back()];
    }
    for (const auto& [v, b] : inst.demands) {
      if ((ends.count(v) ? ends[v] : 0) != b) return say("wrong terminal count");
    }
    auto n = n_of(g, t);
    if (!oracle::support_is_tree(g, n)) return say("entry is not a tree routing");
    auto y = y_of(g, t, inst.k);
    for (std::size_t i = 0; i < y.size(); ++i) comb[i] += lam * y[i];
  }
  if (sum != 1) return say("coefficients do not sum to 1");
  auto yt = y_of(g, target, inst.k);
  for (std::size_t i = 0; i < yt.size(); ++i) {
    if (comb[i] > yt[i]) return say("not dominated at edge " + std::to_string(i));
  }
  return true;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size()) return false;
  auto degs = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v : g.vertices()) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;
  std::vector<Vertex> perm = b.vertices();
  std::set<std::pair<Vertex, Vertex>> eb;
  for (const auto& e : b.edges()) eb.insert({e.a, e.b});
  do {
    std::map<Vertex, Vertex> f;
    for (std::size_t i = 0; i < perm.size(); ++i) f[a.vertices()[i]] = perm[i];
    bool ok = true;
    for (const auto& e : a.edges()) {
      Vertex x = f[e.a], y = f[e.b];
      if (!eb.count({std::min(x, y), std::max(x, y)})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_connected_graph(int n, int extra, std::mt19937_64& rng) {
  std::set<Edge> es;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> d(0, v - 1);
    es.insert(pyramid::make_edge(d(rng), v));
  }
  std::uniform_int_distribution<int> d(0, n - 1);
  for (int i = 0; i < extra * 4 && static_cast<int>(es.size()) < n - 1 + extra; ++i) {
    int x = d(rng), y = d(rng);
    if (x != y) es.insert(pyramid::make_edge(x, y));
  }
  std::vector<Vertex> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  return Graph(vs, std::vector<Edge>(es.begin(), es.end()));
}

Routing random_routing(const Instance& inst, std::mt19937_64& rng) {
  Routing rt;
  for (const auto& [v, b] : inst.demands) {
    for (std::int64_t i = 0; i < b; ++i) {
      std::vector<Vertex> path{inst.root};
      std::set<Vertex> on{inst.root};
      std::function<bool()> go = [&]() -> bool {
        if (path.back() == v) return true;
        std::vector<Vertex> nb = inst.graph.neighbors(path.back());
        std::shuffle(nb.begin(), nb.end(), rng);
        for (Vertex y : nb) {
          if (on.count(y)) continue;
          path.push_back(y);
          on.insert(y);
          if (go()) return true;
          on.erase(y);
          path.pop_back();
        }
        return false;
      };
      go();
      rt.paths.push_back(path);
    }
  }
  rt.canonicalize();
  return rt;
}

}  // namespace oracle
