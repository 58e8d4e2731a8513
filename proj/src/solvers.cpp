#include "pyramid/solvers.hpp"

#include <algorithm>

#include "pyramid/lp.hpp"

namespace pyramid {

RoutingSpace::RoutingSpace(const Instance& inst, std::size_t path_cap) : inst_(&inst) {
  for (Vertex v : inst.terminals()) {
    if (v == inst.root) continue;
    terminals_.push_back(v);
    counts_.push_back(inst.demand(v));
    auto pe = enumerate_simple_paths(inst.graph, inst.root, v, path_cap);
    paths_truncated_ = paths_truncated_ || pe.truncated;
    std::vector<std::vector<std::size_t>> edges;
    for (const auto& p : pe.paths) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) idx.push_back(*inst.graph.edge_index(p[i], p[i + 1]));
      edges.push_back(idx);
    }
    options_.push_back(pe.paths);
    option_edges_.push_back(edges);
  }
}

bool RoutingSpace::for_each(const std::function<bool(const std::vector<std::vector<std::size_t>>&)>& visit,
                            std::size_t cap) const {
  std::vector<std::vector<std::size_t>> choice(terminals_.size());
  for (std::size_t i = 0; i < terminals_.size(); ++i) choice[i].assign(counts_[i], 0);
  std::size_t visited = 0;
  if (std::any_of(options_.begin(), options_.end(), [](const auto& o) { return o.empty(); })) return true;
  while (true) {
    if (visited == cap) return false;
    ++visited;
    if (!visit(choice)) return true;
    // Advance the odometer from the last terminal; each digit is a nondecreasing multiset.
    std::size_t i = terminals_.size();
    bool advanced = false;
    while (i-- > 0) {
      auto& ms = choice[i];
      std::size_t top = options_[i].size() - 1;
      std::size_t j = ms.size();
      while (j-- > 0) {
        if (ms[j] < top) {
          ++ms[j];
          for (std::size_t l = j + 1; l < ms.size(); ++l) ms[l] = ms[j];
          advanced = true;
          break;
        }
      }
      if (advanced) break;
      std::fill(ms.begin(), ms.end(), 0);
    }
    if (!advanced) return true;
  }
}

Routing RoutingSpace::build(const std::vector<std::vector<std::size_t>>& choice) const {
  Routing rt;
  for (std::int64_t i = 0; i < inst_->demand(inst_->root); ++i) rt.paths.push_back({inst_->root});
  for (std::size_t t = 0; t < terminals_.size(); ++t) {
    for (std::size_t o : choice[t]) rt.paths.push_back(options_[t][o]);
  }
  rt.canonicalize();
  return rt;
}

EdgeVector RoutingSpace::n_of(const std::vector<std::vector<std::size_t>>& choice) const {
  EdgeVector n(inst_->graph.num_edges(), 0);
  for (std::size_t t = 0; t < terminals_.size(); ++t) {
    for (std::size_t o : choice[t]) {
      for (std::size_t e : option_edges_[t][o]) ++n[e];
    }
  }
  return n;
}

RoutingEnumeration enumerate_routings(const Instance& inst, std::size_t cap) {
  RoutingSpace space(inst);
  RoutingEnumeration out;
  bool complete = space.for_each(
      [&](const auto& choice) {
        out.routings.push_back(space.build(choice));
        return true;
      },
      cap);
  out.truncated = !complete || space.paths_truncated();
  return out;
}

SolveResult optimal_routing(const Instance& inst, std::size_t cap) {
  RoutingSpace space(inst);
  std::optional<Rational> best;
  std::vector<std::vector<std::size_t>> best_choice;
  bool complete = space.for_each(
      [&](const auto& choice) {
        Rational c = cost_of(inst, y_from_n(space.n_of(choice), inst.k));
        if (!best || c < *best) {
          best = c;
          best_choice = choice;
        }
        return true;
      },
      cap);
  SolveResult res;
  res.routing = space.build(best_choice);
  res.cost = *best;
  res.optimal = complete && !space.paths_truncated();
  return res;
}

namespace {

// Include/exclude branching over frontier edges: each subtree containing the root appears once.
void grow_subtrees(const Graph& g, std::vector<Edge>& tree, std::set<Vertex>& in_tree, std::vector<Edge> frontier,
                   std::set<Edge>& excluded, const std::function<void(const std::vector<Edge>&)>& emit) {
  // Drop frontier edges that would now close a cycle or were excluded.
  std::vector<Edge> live;
  for (const auto& e : frontier) {
    if (excluded.count(e)) continue;
    if (in_tree.count(e.a) && in_tree.count(e.b)) continue;
    live.push_back(e);
  }
  if (live.empty()) {
    emit(tree);
    return;
  }
  Edge e = live.front();
  std::vector<Edge> rest(live.begin() + 1, live.end());
  // Branch 1: exclude e.
  excluded.insert(e);
  grow_subtrees(g, tree, in_tree, rest, excluded, emit);
  excluded.erase(e);
  // Branch 2: include e.
  Vertex w = in_tree.count(e.a) ? e.b : e.a;
  tree.push_back(e);
  in_tree.insert(w);
  std::vector<Edge> next = rest;
  for (Vertex x : g.neighbors(w)) {
    if (!in_tree.count(x)) next.push_back(make_edge(w, x));
  }
  grow_subtrees(g, tree, in_tree, next, excluded, emit);
  in_tree.erase(w);
  tree.pop_back();
}

}  // namespace

Routing tree_routing_from_edges(const Instance& inst, const std::vector<Edge>& edges) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::map<Vertex, Vertex> parent{{inst.root, inst.root}};
  std::vector<Vertex> stack{inst.root};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[x]) {
      if (!parent.count(y)) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  Routing rt;
  for (Vertex v : inst.terminals()) {
    RoutePath p;
    for (Vertex x = v;; x = parent.at(x)) {
      p.push_back(x);
      if (x == inst.root) break;
    }
    std::reverse(p.begin(), p.end());
    for (std::int64_t i = 0; i < inst.demand(v); ++i) rt.paths.push_back(p);
  }
  rt.canonicalize();
  return rt;
}

std::vector<Routing> enumerate_tree_routings(const Instance& inst) {
  const Graph& g = inst.graph;
  auto terms = inst.terminals();
  std::vector<Routing> out;
  std::vector<Edge> tree;
  std::set<Vertex> in_tree{inst.root};
  std::set<Edge> excluded;
  std::vector<Edge> frontier;
  for (Vertex x : g.neighbors(inst.root)) frontier.push_back(make_edge(inst.root, x));
  grow_subtrees(g, tree, in_tree, frontier, excluded, [&](const std::vector<Edge>& t) {
    std::map<Vertex, int> deg;
    for (const auto& e : t) {
      ++deg[e.a];
      ++deg[e.b];
    }
    for (Vertex v : terms) {
      if (v != inst.root && !deg.count(v)) return;
    }
    for (const auto& [v, d] : deg) {
      if (d == 1 && inst.demand(v) == 0) return;  // not minimal
    }
    out.push_back(tree_routing_from_edges(inst, t));
  });
  std::sort(out.begin(), out.end(), [](const Routing& a, const Routing& b) { return a.paths < b.paths; });
  return out;
}

SolveResult optimal_tree_routing(const Instance& inst) {
  auto trees = enumerate_tree_routings(inst);
  SolveResult res;
  bool have = false;
  for (const auto& t : trees) {
    Rational c = routing_cost(inst, t);
    if (!have || c < res.cost) {
      res.routing = t;
      res.cost = c;
      have = true;
    }
  }
  return res;
}

std::optional<Certificate> find_dominating_combination(const Instance& inst, const Routing& target,
                                                       const std::vector<Routing>& trees) {
  if (trees.empty()) throw InputError("no candidate trees");
  auto y = y_vector(inst, target);
  std::vector<EdgeVector> points;
  std::vector<std::size_t> rep;
  std::map<EdgeVector, std::size_t> seen;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (!is_tree_routing(inst, trees[i])) throw InputError("candidate is not a tree routing");
    auto yt = y_vector(inst, trees[i]);
    if (seen.emplace(yt, points.size()).second) {
      points.push_back(yt);
      rep.push_back(i);
    }
  }
  std::vector<Rational> tgt(y.begin(), y.end());
  auto lam = convex_domination(points, tgt);
  if (!lam) return std::nullopt;
  Certificate cert;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if ((*lam)[i] > 0) cert.entries.push_back({trees[rep[i]].canonical(), (*lam)[i]});
  }
  if (auto err = verify_certificate(inst, target, cert)) {
    throw ConstructionError("LP certificate failed verification: " + *err);
  }
  return cert;
}

PRPolyhedronModel build_polyhedron_model(const Instance& inst, std::size_t cap) {
  RoutingSpace space(inst);
  std::set<EdgeVector> ys;
  bool complete = space.for_each(
      [&](const auto& choice) {
        ys.insert(y_from_n(space.n_of(choice), inst.k));
        return true;
      },
      cap);
  PRPolyhedronModel m;
  m.sample.assign(ys.begin(), ys.end());
  m.minimal = minimal_points(m.sample);
  m.truncated = !complete || space.paths_truncated();
  return m;
}

std::vector<EdgeVector> minimal_points(const std::vector<EdgeVector>& points) {
  std::vector<std::size_t> order(points.size());
  std::vector<std::int64_t> sum(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    order[i] = i;
    for (auto v : points[i]) sum[i] += v;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sum[a] < sum[b]; });
  std::vector<std::size_t> keep;
  for (std::size_t i : order) {
    bool dominated = false;
    for (std::size_t j : keep) {
      if (dominates(points[j], points[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(i);
  }
  std::sort(keep.begin(), keep.end());
  std::vector<EdgeVector> out;
  for (std::size_t i : keep) out.push_back(points[i]);
  return out;
}

bool is_extremal_y(const EdgeVector& y, const PRPolyhedronModel& model) {
  if (model.truncated) throw InputError("extremality test refuses a truncated model");
  std::vector<EdgeVector> others;
  for (const auto& z : model.minimal) {
    if (z == y) continue;
    if (dominates(z, y)) return false;
    // Where y is 0 every point in a dominating combination is 0 too.
    bool fits = true;
    for (std::size_t e = 0; e < y.size() && fits; ++e) fits = y[e] > 0 || z[e] == 0;
    if (fits) others.push_back(z);
  }
  if (others.empty()) return true;
  std::vector<Rational> tgt(y.begin(), y.end());
  return !convex_domination(others, tgt).has_value();
}

bool is_extremal(const Instance& inst, const Routing& rt, const PRPolyhedronModel& model) {
  return is_extremal_y(y_vector(inst, rt), model);
}

}  // namespace pyramid
