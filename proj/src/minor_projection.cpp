#include <algorithm>

#include "dominate_internal.hpp"
#include "pyramid/lp.hpp"
#include "pyramid/solvers.hpp"

namespace pyramid {

Instance lift_instance(const Instance& inst_minor, const Graph& g, const MinorOp& op) {
  if (op.kind == MinorKind::DeleteEdge) return rebase_instance(inst_minor, g);
  std::map<Vertex, std::int64_t> b;
  for (Vertex x : g.vertices()) b[x] = x == op.removed ? 0 : inst_minor.demand(x);
  std::map<Edge, Edge> back;
  for (const auto& [fp, f] : op.edge_map) back[f] = fp;
  std::vector<Rational> costs;
  for (const auto& f : g.edges()) {
    auto it = back.find(f);
    costs.push_back(it == back.end() ? Rational(0) : inst_minor.costs[inst_minor.graph.index_of(it->second)]);
  }
  return make_instance(g, inst_minor.root, b, costs, inst_minor.names);
}

Routing lift_routing(const Routing& rt_minor, const MinorOp& op) {
  if (op.kind == MinorKind::DeleteEdge) return rt_minor.canonical();
  const Vertex s = op.kept, t = op.removed;
  // Which of s, t carries the original edge behind an edge at the merged vertex.
  auto side = [&](Vertex w) {
    const Edge& f = op.edge_map.at(make_edge(w, s));
    return f.has(t) ? t : s;
  };
  Routing out;
  for (const auto& p : rt_minor.paths) {
    RoutePath q;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != s) {
        q.push_back(p[i]);
        continue;
      }
      Vertex in = i == 0 ? s : side(p[i - 1]);
      Vertex out_v = i + 1 == p.size() ? s : side(p[i + 1]);
      q.push_back(in);
      if (out_v != in) q.push_back(out_v);
    }
    out.paths.push_back(q);
  }
  out.canonicalize();
  return out;
}

namespace {

RoutePath contract_walk(const RoutePath& p, const MinorOp& op) {
  RoutePath q;
  for (Vertex x : p) {
    Vertex y = x == op.removed ? op.kept : x;
    if (q.empty() || q.back() != y) q.push_back(y);
  }
  return q;
}

}  // namespace

Routing contract_routing(const Routing& rt, const MinorOp& op) {
  Routing out;
  for (const auto& p : rt.paths) {
    if (op.kind == MinorKind::DeleteEdge) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (make_edge(p[i], p[i + 1]) == op.edge) throw ConstructionError("routing uses the deleted edge");
      }
      out.paths.push_back(p);
      continue;
    }
    RoutePath q = contract_walk(p, op);
    auto first = std::find(q.begin(), q.end(), op.kept);
    if (first != q.end()) {
      auto last = std::find(q.rbegin(), q.rend(), op.kept).base() - 1;
      if (last != first) q.erase(first + 1, last + 1);
    }
    out.paths.push_back(q);
  }
  out.canonicalize();
  return out;
}

namespace {

// A routing whose support is a tree plus edges, dominated on that support.
Certificate dominate_support(const Instance& inst, const Routing& t) {
  const Graph& g = inst.graph;
  auto n = n_vector(inst, t);
  std::vector<Edge> supp;
  for (std::size_t e = 0; e < n.size(); ++e) {
    if (n[e] > 0) supp.push_back(g.edges()[e]);
  }
  Graph sg = g.edge_subgraph(supp, {inst.root});
  std::map<Vertex, std::int64_t> b;
  for (Vertex x : sg.vertices()) b[x] = inst.demand(x);
  return dominate(rebase_instance(inst, sg, b), t);
}

}  // namespace

Certificate project_certificate_through_minor(const Certificate& cert, const MinorOp& op,
                                              const Instance& inst_minor, const Routing& target_minor) {
  const Graph& gm = inst_minor.graph;
  std::vector<std::pair<Rational, Certificate>> parts;
  std::optional<std::vector<Routing>> minor_trees;
  std::vector<EdgeVector> pts;
  auto tree_lp = [&](const std::vector<Rational>& target) -> std::optional<Certificate> {
    if (!minor_trees) {
      minor_trees = enumerate_tree_routings(inst_minor);
      for (const auto& tr : *minor_trees) pts.push_back(y_vector(inst_minor, tr));
    }
    auto lam = convex_domination(pts, target);
    if (!lam) return std::nullopt;
    Certificate c;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if ((*lam)[i] > 0) c.entries.push_back({(*minor_trees)[i], (*lam)[i]});
    }
    return c;
  };
  for (const auto& en : cert.entries) {
    Routing t = contract_routing(en.tree, op);
    if (auto err = validate_routing(inst_minor, t)) {
      throw ConstructionError("contracted tree is not a routing: " + *err);
    }
    bool shortcut = false;
    EdgeVector walk_n(gm.num_edges(), 0);
    if (op.kind == MinorKind::ContractEdge) {
      for (const auto& p : en.tree.paths) {
        RoutePath w = contract_walk(p, op);
        if (std::count(w.begin(), w.end(), op.kept) > 1) shortcut = true;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) ++walk_n[gm.index_of(make_edge(w[i], w[i + 1]))];
      }
    }
    const bool tree = is_tree_routing(inst_minor, t);
    if (tree && !shortcut) {
      parts.push_back({en.lambda, detail::single(t)});
      continue;
    }
    if (shortcut) {
      // The contracted walks keep y exactly; dominate that vector by trees of the minor.
      auto yw = y_from_n(walk_n, inst_minor.k);
      if (tree && dominates(y_vector(inst_minor, t), yw)) {
        parts.push_back({en.lambda, detail::single(t)});
      } else if (auto c = tree_lp(std::vector<Rational>(yw.begin(), yw.end()))) {
        parts.push_back({en.lambda, *c});
      } else {
        parts.push_back({en.lambda, dominate_support(inst_minor, t)});
      }
      continue;
    }
    parts.push_back({en.lambda, dominate_support(inst_minor, t)});
  }
  Certificate out = detail::mix(parts);
  if (auto err = verify_certificate(inst_minor, target_minor, out)) {
    throw ConstructionError("projected certificate failed verification: " + *err);
  }
  return out;
}

}  // namespace pyramid
