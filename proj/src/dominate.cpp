#include <algorithm>
#include <deque>

#include "dominate_internal.hpp"
#include "pyramid/solvers.hpp"

namespace pyramid {

namespace detail {

Certificate single(const Routing& tree) { return {{{tree.canonical(), Rational(1)}}}; }

Certificate mix(const std::vector<std::pair<Rational, Certificate>>& parts) {
  Certificate c;
  for (const auto& [w, cert] : parts) {
    for (const auto& en : cert.entries) c.entries.push_back({en.tree, w * en.lambda});
  }
  return normalize_certificate(c);
}

namespace {

std::string memo_key(const Instance& inst, const Routing& rt) {
  std::string key = "r" + std::to_string(inst.root) + "|";
  for (const auto& e : inst.graph.edges()) key += std::to_string(e.a) + "-" + std::to_string(e.b) + ",";
  key += "|";
  for (const auto& [v, b] : inst.demands) {
    if (b) key += std::to_string(v) + ":" + std::to_string(b) + ",";
  }
  key += "|";
  for (const auto& p : rt.paths) {
    for (Vertex x : p) key += std::to_string(x) + ".";
    key += ";";
  }
  return key;
}

struct DepthGuard {
  Context& ctx;
  explicit DepthGuard(Context& c) : ctx(c) {
    if (++ctx.depth > 5000) throw ConstructionError("domination recursion too deep");
  }
  ~DepthGuard() { --ctx.depth; }
};

std::vector<Edge> support(const Instance& inst, const Routing& rt) {
  auto n = n_vector(inst, rt);
  std::vector<Edge> out;
  for (std::size_t e = 0; e < n.size(); ++e) {
    if (n[e] > 0) out.push_back(inst.graph.edges()[e]);
  }
  return out;
}

Certificate by_blocks(Context& ctx, const Instance& inst, const Routing& rt) {
  ctx.count("blocks");
  const Graph& g = inst.graph;
  std::map<Vertex, int> dist{{inst.root, 0}};
  std::deque<Vertex> queue{inst.root};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
    }
  }
  auto bd = blocks(g);
  // Per block: entries with their supports.
  std::vector<std::vector<std::pair<Rational, std::vector<Edge>>>> per_block;
  for (const auto& b : bd.blocks) {
    if (b.num_edges() == 0) continue;
    Vertex rb = *std::min_element(b.vertices().begin(), b.vertices().end(),
                                  [&](Vertex x, Vertex y) { return dist.at(x) < dist.at(y); });
    std::set<Edge> bedges(b.edges().begin(), b.edges().end());
    std::vector<Edge> rest;
    for (const auto& e : g.edges()) {
      if (!bedges.count(e)) rest.push_back(e);
    }
    Graph outside(g.vertices(), rest);
    std::map<Vertex, std::int64_t> demand;
    std::int64_t total = 0;
    for (Vertex x : b.vertices()) {
      if (x == rb) continue;
      std::set<Vertex> seen{x};
      std::vector<Vertex> stack{x};
      std::int64_t d = 0;
      while (!stack.empty()) {
        Vertex w = stack.back();
        stack.pop_back();
        d += inst.demand(w);
        for (Vertex z : outside.neighbors(w)) {
          if (seen.insert(z).second) stack.push_back(z);
        }
      }
      demand[x] = d;
      total += d;
    }
    demand[rb] = inst.k - total;
    Routing rb_rt;
    for (const auto& p : rt.paths) {
      std::size_t i = 0;
      while (i + 1 < p.size() && !bedges.count(make_edge(p[i], p[i + 1]))) ++i;
      if (i + 1 >= p.size()) {
        rb_rt.paths.push_back({rb});
        continue;
      }
      std::size_t j = i;
      while (j + 1 < p.size() && bedges.count(make_edge(p[j], p[j + 1]))) ++j;
      rb_rt.paths.push_back(RoutePath(p.begin() + i, p.begin() + j + 1));
    }
    rb_rt.canonicalize();
    std::vector<Rational> costs;
    for (const auto& e : b.edges()) costs.push_back(inst.costs[g.index_of(e)]);
    Instance ib = make_instance(b, rb, demand, costs, inst.names);
    Certificate cb = dominate_rec(ctx, ib, rb_rt);
    std::vector<std::pair<Rational, std::vector<Edge>>> entries;
    for (const auto& en : cb.entries) entries.push_back({en.lambda, support(ib, en.tree)});
    per_block.push_back(entries);
  }
  // Couple the blocks along cumulative coefficient intervals.
  std::set<Rational> cuts{Rational(0), Rational(1)};
  for (const auto& entries : per_block) {
    Rational acc = 0;
    for (const auto& [lam, s] : entries) cuts.insert(acc += lam);
  }
  Certificate out;
  std::vector<Rational> cv(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cv.size(); ++i) {
    std::vector<Edge> edges;
    for (const auto& entries : per_block) {
      Rational acc = 0;
      for (const auto& [lam, s] : entries) {
        acc += lam;
        if (cv[i] < acc) {
          edges.insert(edges.end(), s.begin(), s.end());
          break;
        }
      }
    }
    out.entries.push_back({tree_routing_from_edges(inst, edges), cv[i + 1] - cv[i]});
  }
  return out;
}

Certificate via_minors(Context& ctx, const Instance& inst, const Routing& rt) {
  ctx.count("minor");
  auto emb = embed_in_ladder(inst.graph);
  const std::size_t n = emb.ops.size();
  std::vector<Instance> insts(n + 1);
  std::vector<Routing> rts(n + 1);
  insts[n] = inst;
  rts[n] = rt;
  for (std::size_t i = n; i-- > 0;) {
    insts[i] = lift_instance(insts[i + 1], emb.stages[i], emb.ops[i]);
    rts[i] = lift_routing(rts[i + 1], emb.ops[i]);
  }
  Certificate cert = dominate_rec(ctx, insts[0], rts[0]);
  for (std::size_t i = 0; i < n; ++i) {
    cert = project_certificate_through_minor(cert, emb.ops[i], insts[i + 1], rts[i + 1]);
  }
  return cert;
}

}  // namespace

Certificate dominate_rec(Context& ctx, const Instance& inst, const Routing& input) {
  if (auto err = validate_routing(inst, input)) throw ValidationError("invalid routing: " + *err);
  Routing rt = input.canonical();
  if (is_tree_routing(inst, rt)) {
    ctx.count("tree");
    return single(rt);
  }
  std::string key = memo_key(inst, rt);
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
  DepthGuard guard(ctx);
  const Graph& g = inst.graph;
  Certificate cert;
  switch (classify(g)) {
    case GraphClass::NonOuterplanar:
      throw StructuralError("graph is not outerplanar; no construction is available");
    case GraphClass::Cycle:
      ctx.count("cycle");
      cert = dominate_on_cycle(inst, rt);
      break;
    case GraphClass::Ladder:
      ctx.count("ladder");
      cert = dominate_ladder_rec(ctx, inst, rt);
      break;
    case GraphClass::OuterplanarOther:
      cert = g.is_two_connected() ? via_minors(ctx, inst, rt) : by_blocks(ctx, inst, rt);
      break;
  }
  cert = normalize_certificate(cert);
  if (auto err = verify_certificate(inst, rt, cert)) {
    throw ConstructionError("certificate failed verification: " + *err);
  }
  ctx.memo.emplace(key, cert);
  return cert;
}

}  // namespace detail

Certificate dominate(const Instance& inst, const Routing& rt, DominationStats* stats) {
  if (!inst.graph.is_connected()) throw StructuralError("graph is not connected");
  detail::Context ctx;
  ctx.stats = stats;
  return detail::dominate_rec(ctx, inst, rt);
}

}  // namespace pyramid
