#include "pyramid/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pyramid/rational.hpp"

namespace pyramid {

Edge make_edge(Vertex x, Vertex y) {
  if (x == y) throw InputError("loop at vertex " + std::to_string(x));
  return x < y ? Edge{x, y} : Edge{y, x};
}

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("duplicate vertex");
  }
  for (auto& e : edges_) e = make_edge(e.a, e.b);
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("parallel edge");
  }
  for (Vertex v : vertices_) adjacency_[v];
  for (const auto& e : edges_) {
    if (!has_vertex(e.a) || !has_vertex(e.b)) throw InputError("edge endpoint not a vertex");
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
  }
  for (auto& [v, nb] : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex x, Vertex y) const {
  if (x == y) return std::nullopt;
  Edge e = x < y ? Edge{x, y} : Edge{y, x};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::index_of(const Edge& e) const {
  auto idx = edge_index(e.a, e.b);
  if (!idx) {
    throw InputError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " not in graph");
  }
  return *idx;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw InputError("unknown vertex " + std::to_string(v));
  return it->second;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& [v, nb] : adjacency_) d = std::max(d, nb.size());
  return d;
}

Vertex Graph::max_label() const { return vertices_.empty() ? -1 : vertices_.back(); }

bool Graph::is_connected() const {
  if (vertices_.empty()) return false;
  std::set<Vertex> seen{vertices_.front()};
  std::vector<Vertex> stack{vertices_.front()};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : neighbors(x)) {
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen.size() == vertices_.size();
}

bool Graph::is_two_connected() const {
  if (vertices_.size() < 3 || !is_connected()) return false;
  auto bd = blocks(*this);
  return bd.blocks.size() == 1;
}

Graph Graph::without_edge(const Edge& e) const {
  std::vector<Edge> keep;
  keep.reserve(edges_.size());
  for (const auto& f : edges_) {
    if (f != e) keep.push_back(f);
  }
  return Graph(vertices_, keep);
}

Graph Graph::without_vertices(const std::set<Vertex>& drop) const {
  std::vector<Vertex> vs;
  for (Vertex v : vertices_) {
    if (!drop.count(v)) vs.push_back(v);
  }
  std::vector<Edge> es;
  for (const auto& e : edges_) {
    if (!drop.count(e.a) && !drop.count(e.b)) es.push_back(e);
  }
  return Graph(vs, es);
}

Graph Graph::edge_subgraph(const std::vector<Edge>& keep, const std::vector<Vertex>& extra) const {
  std::set<Vertex> vs(extra.begin(), extra.end());
  for (const auto& e : keep) {
    vs.insert(e.a);
    vs.insert(e.b);
  }
  return Graph(std::vector<Vertex>(vs.begin(), vs.end()), keep);
}

Graph cycle_graph(int n) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    vs.push_back(i);
    es.push_back(make_edge(i, (i + 1) % n));
  }
  return Graph(vs, es);
}

BlockDecomposition blocks(const Graph& g) {
  if (g.num_vertices() == 0 || !g.is_connected()) {
    throw StructuralError("block decomposition needs a connected nonempty graph");
  }
  BlockDecomposition out;
  std::map<Vertex, int> disc, low;
  std::vector<Edge> edge_stack;
  int timer = 0;
  Vertex start = g.vertices().front();

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex x, Vertex parent) {
    disc[x] = low[x] = ++timer;
    int children = 0;
    for (Vertex y : g.neighbors(x)) {
      if (y == parent) continue;
      if (!disc.count(y)) {
        ++children;
        edge_stack.push_back(make_edge(x, y));
        dfs(y, x);
        low[x] = std::min(low[x], low[y]);
        if (low[y] >= disc[x]) {
          if (parent != -1 || children > 1) out.cut_vertices.insert(x);
          std::vector<Edge> comp;
          Edge stop = make_edge(x, y);
          while (true) {
            Edge f = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(f);
            if (f == stop) break;
          }
          std::size_t id = out.blocks.size();
          for (const auto& f : comp) out.membership[f] = id;
          out.blocks.push_back(g.edge_subgraph(comp));
        }
      } else if (disc[y] < disc[x]) {
        low[x] = std::min(low[x], disc[y]);
        edge_stack.push_back(make_edge(x, y));
      }
    }
  };
  // Parent sentinel -1 is safe: labels are nonnegative.
  dfs(start, -1);
  if (out.blocks.empty()) out.blocks.push_back(Graph({start}, {}));
  return out;
}

MinorResult apply_minor_op(const Graph& g, MinorKind kind, const Edge& e, std::optional<Vertex> keep) {
  if (!g.has_edge(e.a, e.b)) {
    throw InputError("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " not in graph");
  }
  MinorResult res;
  res.op.kind = kind;
  res.op.edge = e;
  if (kind == MinorKind::DeleteEdge) {
    res.graph = g.without_edge(e);
    for (const auto& f : res.graph.edges()) res.op.edge_map[f] = f;
    return res;
  }
  Vertex s = keep.value_or(e.a);
  if (!e.has(s)) throw InputError("kept vertex is not an endpoint of the contracted edge");
  Vertex t = e.other(s);
  res.op.kept = s;
  res.op.removed = t;
  res.op.merged_vertex = s;

  const auto& ns = g.neighbors(s);
  std::vector<Vertex> vs;
  for (Vertex v : g.vertices()) {
    if (v != t) vs.push_back(v);
  }
  std::map<Edge, Edge> emap;
  for (const auto& f : g.edges()) {
    if (f == e) continue;
    if (!f.has(t)) {
      emap[f] = f;
      continue;
    }
    Vertex w = f.other(t);
    bool common = std::binary_search(ns.begin(), ns.end(), w);
    if (common) {
      res.op.discarded.push_back(f);
    } else {
      emap[make_edge(w, s)] = f;
    }
  }
  std::vector<Edge> es;
  for (const auto& [fp, f] : emap) es.push_back(fp);
  res.graph = Graph(vs, es);
  res.op.edge_map = std::move(emap);
  return res;
}

PathEnumeration enumerate_simple_paths(const Graph& g, Vertex s, Vertex t, std::size_t cap) {
  PathEnumeration out;
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw InputError("path endpoint not in graph");
  if (s == t) {
    out.paths.push_back({s});
    return out;
  }
  std::vector<Vertex> path{s};
  std::set<Vertex> on_path{s};
  std::function<bool(Vertex)> dfs = [&](Vertex x) -> bool {
    for (Vertex y : g.neighbors(x)) {
      if (on_path.count(y)) continue;
      path.push_back(y);
      if (y == t) {
        if (out.paths.size() == cap) {
          out.truncated = true;
          return false;
        }
        out.paths.push_back(path);
      } else {
        on_path.insert(y);
        bool go_on = dfs(y);
        on_path.erase(y);
        if (!go_on) return false;
      }
      path.pop_back();
    }
    return true;
  };
  dfs(s);
  return out;
}

}  // namespace pyramid
