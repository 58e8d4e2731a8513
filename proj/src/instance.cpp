#include "pyramid/instance.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pyramid {

std::int64_t Instance::demand(Vertex v) const {
  auto it = demands.find(v);
  return it == demands.end() ? 0 : it->second;
}

std::string Instance::name(Vertex v) const {
  auto it = names.find(v);
  return it == names.end() ? std::to_string(v) : it->second;
}

std::string Instance::edge_name(const Edge& e) const { return name(e.a) + name(e.b); }

std::vector<Vertex> Instance::terminals() const {
  std::vector<Vertex> out;
  for (Vertex v : graph.vertices()) {
    if (demand(v) > 0) out.push_back(v);
  }
  return out;
}

Instance make_instance(Graph g, Vertex root, std::map<Vertex, std::int64_t> demands,
                       std::vector<Rational> costs, std::map<Vertex, std::string> names) {
  Instance inst;
  if (!g.has_vertex(root)) throw InputError("root is not a vertex");
  for (const auto& [v, b] : demands) {
    if (!g.has_vertex(v)) throw InputError("demand on unknown vertex " + std::to_string(v));
    if (b < 0) throw InputError("negative demand");
  }
  inst.k = 0;
  for (Vertex v : g.vertices()) {
    inst.demands[v] = demands.count(v) ? demands[v] : 0;
    inst.k += inst.demands[v];
  }
  if (inst.k < 1) throw InputError("k must be ≥ 1");
  if (inst.demands[root] < 1) throw InputError("root demand must be ≥ 1");
  if (costs.empty()) costs.assign(g.num_edges(), Rational(0));
  if (costs.size() != g.num_edges()) throw InputError("cost vector size mismatch");
  for (const auto& c : costs) {
    if (c < 0) throw InputError("negative cost");
  }
  inst.graph = std::move(g);
  inst.root = root;
  inst.costs = std::move(costs);
  inst.names = std::move(names);
  return inst;
}

Instance rebase_instance(const Instance& inst, Graph g,
                         std::optional<std::map<Vertex, std::int64_t>> demands) {
  std::map<Vertex, std::int64_t> b;
  if (demands) {
    b = *demands;
  } else {
    for (Vertex v : g.vertices()) b[v] = inst.demand(v);
  }
  std::vector<Rational> costs;
  for (const auto& e : g.edges()) {
    auto idx = inst.graph.edge_index(e.a, e.b);
    costs.push_back(idx ? inst.costs[*idx] : Rational(0));
  }
  std::map<Vertex, std::string> names;
  for (Vertex v : g.vertices()) {
    auto it = inst.names.find(v);
    if (it != inst.names.end()) names[v] = it->second;
  }
  return make_instance(std::move(g), inst.root, b, costs, names);
}

RoutePath prefix_to(const RoutePath& p, Vertex v) {
  auto it = std::find(p.begin(), p.end(), v);
  if (it == p.end()) throw InputError("vertex not on path");
  return RoutePath(p.begin(), it + 1);
}

RoutePath suffix_from(const RoutePath& p, Vertex v) {
  auto it = std::find(p.begin(), p.end(), v);
  if (it == p.end()) throw InputError("vertex not on path");
  return RoutePath(it, p.end());
}

bool path_contains(const RoutePath& p, Vertex v) { return std::find(p.begin(), p.end(), v) != p.end(); }

std::int64_t pyramidal(std::int64_t x, std::int64_t k) {
  if (x < 0 || x > k) throw InputError("pyramidal argument out of range");
  return std::min(x, k - x);
}

std::optional<std::string> validate_routing(const Instance& inst, const Routing& rt) {
  const Graph& g = inst.graph;
  for (const auto& p : rt.paths) {
    if (p.empty()) return "empty path";
    if (p.front() != inst.root) return "path does not start at root " + inst.name(inst.root);
    for (Vertex v : p) {
      if (!g.has_vertex(v)) return "unknown vertex " + std::to_string(v);
    }
    std::set<Vertex> seen(p.begin(), p.end());
    if (seen.size() != p.size()) return "path not simple";
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!g.has_edge(p[i], p[i + 1])) {
        return "vertices " + inst.name(p[i]) + " and " + inst.name(p[i + 1]) + " are not adjacent";
      }
    }
  }
  std::map<Vertex, std::int64_t> ends;
  for (const auto& p : rt.paths) ++ends[p.back()];
  for (Vertex v : g.vertices()) {
    std::int64_t want = inst.demand(v), got = ends.count(v) ? ends[v] : 0;
    if (want != got) {
      return "terminal " + inst.name(v) + " expects " + std::to_string(want) + " paths, found " +
             std::to_string(got);
    }
  }
  return std::nullopt;
}

EdgeVector n_vector_unchecked(const Graph& g, const Routing& rt) {
  EdgeVector n(g.num_edges(), 0);
  for (const auto& p : rt.paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) ++n[*g.edge_index(p[i], p[i + 1])];
  }
  return n;
}

EdgeVector n_vector(const Instance& inst, const Routing& rt) {
  if (auto err = validate_routing(inst, rt)) throw ValidationError("invalid routing: " + *err);
  return n_vector_unchecked(inst.graph, rt);
}

EdgeVector y_from_n(const EdgeVector& n, std::int64_t k) {
  EdgeVector y(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) y[i] = pyramidal(n[i], k);
  return y;
}

EdgeVector y_vector(const Instance& inst, const Routing& rt) { return y_from_n(n_vector(inst, rt), inst.k); }

Rational cost_of(const Instance& inst, const EdgeVector& y) {
  Rational c = 0;
  for (std::size_t i = 0; i < y.size(); ++i) c += inst.costs[i] * y[i];
  return c;
}

Rational routing_cost(const Instance& inst, const Routing& rt) { return cost_of(inst, y_vector(inst, rt)); }

bool support_is_tree(const Graph& g, const EdgeVector& n) {
  std::map<Vertex, Vertex> parent;
  std::function<Vertex(Vertex)> find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t used = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    const Edge& e = g.edges()[i];
    for (Vertex v : {e.a, e.b}) {
      if (!parent.count(v)) parent[v] = v;
    }
    Vertex x = find(e.a), y = find(e.b);
    if (x == y) return false;
    parent[x] = y;
    ++used;
  }
  // Acyclic with |E| = |V| - 1 on the touched vertices means connected.
  return used == 0 || used + 1 == parent.size();
}

bool is_tree_routing(const Instance& inst, const Routing& rt) {
  return support_is_tree(inst.graph, n_vector(inst, rt));
}

bool dominates(const EdgeVector& lower, const EdgeVector& upper) {
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) return false;
  }
  return true;
}

std::vector<Rational> combined_y(const Instance& inst, const Certificate& cert) {
  std::vector<Rational> acc(inst.graph.num_edges(), Rational(0));
  for (const auto& en : cert.entries) {
    auto y = y_vector(inst, en.tree);
    for (std::size_t i = 0; i < y.size(); ++i) acc[i] += en.lambda * y[i];
  }
  return acc;
}

std::optional<std::string> verify_certificate(const Instance& inst, const Routing& target,
                                              const Certificate& cert) {
  if (auto err = validate_routing(inst, target)) return "target routing invalid: " + *err;
  if (cert.entries.empty()) return "certificate has no entries";
  Rational sum = 0;
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    const auto& en = cert.entries[i];
    if (en.lambda <= 0) return "coefficient " + std::to_string(i + 1) + " is not positive";
    sum += en.lambda;
  }
  if (sum != 1) return "coefficients sum to " + format_rational(sum);
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    if (auto err = validate_routing(inst, cert.entries[i].tree)) {
      return "entry " + std::to_string(i + 1) + " invalid: " + *err;
    }
    if (!is_tree_routing(inst, cert.entries[i].tree)) {
      return "entry " + std::to_string(i + 1) + " is not a tree routing";
    }
  }
  auto y = y_vector(inst, target);
  auto acc = combined_y(inst, cert);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (acc[i] > y[i]) {
      return "domination fails at edge " + inst.edge_name(inst.graph.edges()[i]) + ": " +
             format_rational(acc[i]) + " > " + std::to_string(y[i]);
    }
  }
  return std::nullopt;
}

Certificate normalize_certificate(const Certificate& cert) {
  std::map<std::vector<RoutePath>, Rational> merged;
  for (const auto& en : cert.entries) merged[en.tree.canonical().paths] += en.lambda;
  Certificate out;
  for (auto& [paths, lam] : merged) {
    if (lam != 0) out.entries.push_back({Routing{paths}, lam});
  }
  return out;
}

}  // namespace pyramid
