#include <algorithm>

#include "dominate_internal.hpp"
#include "pyramid/lp.hpp"
#include "pyramid/solvers.hpp"

namespace pyramid {

LowestCycleFrame lowest_cycle_frame(const Graph& g, Vertex root) {
  auto model = build_ladder_model(g);
  if (!model) throw StructuralError("lowest cycle frame needs a ladder");
  // Prefer a leaf face away from the root; otherwise the root may sit on the top edge.
  std::vector<std::size_t> order;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t f = 0; f < model->faces.size(); ++f) {
      if (model->face_chords[f].size() != 1) continue;
      const auto& face = model->faces[f];
      bool on_face = std::find(face.begin(), face.end(), root) != face.end();
      if (pass == 0 ? !on_face : model->face_chords[f].front().has(root)) order.push_back(f);
    }
  }
  for (std::size_t f : order) {
    const auto& face = model->faces[f];
    LowestCycleFrame fr;
    fr.top_edge = model->face_chords[f].front();
    fr.u = fr.top_edge.a;
    fr.v = fr.top_edge.b;
    fr.U_bar.insert(face.begin(), face.end());
    fr.U = fr.U_bar;
    fr.U.erase(fr.u);
    fr.U.erase(fr.v);
    fr.boundary.push_back(fr.u);
    Vertex prev = fr.v, cur = fr.u;
    while (cur != fr.v) {
      Vertex next = -1;
      for (Vertex x : g.neighbors(cur)) {
        if (x == prev || !fr.U_bar.count(x)) continue;
        if (cur == fr.u && x == fr.v) continue;
        next = x;
        break;
      }
      if (next < 0) throw StructuralError("face boundary is not a path");
      prev = cur;
      cur = next;
      fr.boundary.push_back(cur);
    }
    return fr;
  }
  throw StructuralError("no leaf face keeps the root off its lower part");
}

std::string to_string(PathPattern p) {
  switch (p) {
    case PathPattern::Outside: return "outside";
    case PathPattern::Thru: return "thru";
    case PathPattern::RUT: return "rut";
    case PathPattern::RVUT: return "rvut";
    case PathPattern::RVT: return "rvt";
    case PathPattern::RUVT: return "ruvt";
  }
  return "?";
}

namespace {

std::optional<std::size_t> first_in(const std::set<Vertex>& s, const RoutePath& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (s.count(p[i])) return i;
  }
  return std::nullopt;
}

bool ends_in_U(const LowestCycleFrame& fr, const RoutePath& p) { return fr.U.count(p.back()) > 0; }

// Start of the run of face vertices that leads a path into U (u or v).
std::size_t entry_index(const LowestCycleFrame& fr, const RoutePath& p) {
  std::size_t i = *first_in(fr.U, p);
  while (i > 0 && fr.U_bar.count(p[i - 1])) --i;
  return i;
}

// The vertex of {u, v} from which the path steps into U.
Vertex arrival(const LowestCycleFrame& fr, const RoutePath& p) { return p[*first_in(fr.U, p) - 1]; }

}  // namespace

PathPattern classify_pattern(const LowestCycleFrame& fr, const RoutePath& p) {
  auto i = first_in(fr.U_bar, p);
  if (!i) return PathPattern::Outside;
  if (ends_in_U(fr, p)) {
    std::size_t j = entry_index(fr, p);
    Vertex x = p[j], next = p[j + 1];
    if (x == fr.u) return next == fr.v ? PathPattern::RUVT : PathPattern::RUT;
    return next == fr.u ? PathPattern::RVUT : PathPattern::RVT;
  }
  return *i + 1 < p.size() && fr.U_bar.count(p[*i + 1]) ? PathPattern::Thru : PathPattern::Outside;
}

PatternCensus census(const LowestCycleFrame& fr, const Routing& rt) {
  PatternCensus c;
  for (const auto& p : rt.paths) {
    auto l = classify_pattern(fr, p);
    c.labels.push_back(l);
    if (l == PathPattern::Thru) ++c.q;
    if (l == PathPattern::RUVT) ++c.r_u;
    if (l == PathPattern::RVUT) ++c.r_v;
  }
  return c;
}

namespace {

using detail::Context;
using detail::dominate_rec;
using detail::mix;
using detail::single;

RoutePath concat(RoutePath head, const RoutePath& tail) {
  if (tail.empty()) return head;
  if (head.empty() || head.back() != tail.front()) throw ConstructionError("path pieces do not meet");
  head.insert(head.end(), tail.begin() + 1, tail.end());
  return head;
}

RoutePath reversed(RoutePath p) {
  std::reverse(p.begin(), p.end());
  return p;
}

struct Ladder {
  const Instance& inst;
  const Routing& rt;
  LowestCycleFrame fr;
  PatternCensus cen;
  EdgeVector y;

  // Arc of the face boundary between two of its vertices, in walking order.
  RoutePath arc(Vertex from, Vertex to) const {
    auto ia = std::find(fr.boundary.begin(), fr.boundary.end(), from) - fr.boundary.begin();
    auto ib = std::find(fr.boundary.begin(), fr.boundary.end(), to) - fr.boundary.begin();
    if (ia <= ib) return RoutePath(fr.boundary.begin() + ia, fr.boundary.begin() + ib + 1);
    return reversed(RoutePath(fr.boundary.begin() + ib, fr.boundary.begin() + ia + 1));
  }

  bool is_u_path(std::size_t i) const { return ends_in_U(fr, rt.paths[i]); }

  // Thru path pieces: before the face, the segment inside it, after it.
  struct ThruParts {
    RoutePath head, seg, tail;
  };
  ThruParts split_thru(const RoutePath& p) const {
    std::size_t i = *first_in(fr.U_bar, p), j = i;
    while (j + 1 < p.size() && fr.U_bar.count(p[j + 1])) ++j;
    return {RoutePath(p.begin(), p.begin() + i + 1), RoutePath(p.begin() + i, p.begin() + j + 1),
            RoutePath(p.begin() + j, p.end())};
  }

  RoutePath with_segment(const RoutePath& p, const RoutePath& seg) const {
    auto parts = split_thru(p);
    return concat(concat(parts.head, seg), parts.tail);
  }

  bool thru_over(const RoutePath& p) const { return split_thru(p).seg.size() == 2; }
};

Certificate verified(const Instance& inst, const Routing& rt, Certificate cert, const std::string& step) {
  cert = normalize_certificate(cert);
  if (auto err = verify_certificate(inst, rt, cert)) {
    throw ConstructionError("ladder step " + step + " failed: " + *err);
  }
  return cert;
}

std::optional<Certificate> uniformize(Context& ctx, const Ladder& L) {
  for (Vertex side : {L.fr.u, L.fr.v}) {
    std::vector<std::size_t> group;
    std::map<RoutePath, std::int64_t> prefixes;
    for (std::size_t i = 0; i < L.rt.paths.size(); ++i) {
      if (!L.is_u_path(i) || arrival(L.fr, L.rt.paths[i]) != side) continue;
      group.push_back(i);
      ++prefixes[prefix_to(L.rt.paths[i], side)];
    }
    if (prefixes.size() < 2) continue;
    ctx.count("ladder:uniformize");
    std::vector<std::pair<Rational, Certificate>> parts;
    for (const auto& [pre, cnt] : prefixes) {
      Routing r = L.rt;
      for (std::size_t i : group) r.paths[i] = concat(pre, suffix_from(L.rt.paths[i], side));
      parts.push_back({make_rational(cnt, static_cast<std::int64_t>(group.size())), dominate_rec(ctx, L.inst, r)});
    }
    return verified(L.inst, L.rt, mix(parts), "uniformize");
  }
  return std::nullopt;
}

std::optional<Certificate> thru_split(Context& ctx, const Ladder& L) {
  std::vector<std::size_t> over, around;
  for (std::size_t i = 0; i < L.rt.paths.size(); ++i) {
    if (L.cen.labels[i] != PathPattern::Thru) continue;
    (L.thru_over(L.rt.paths[i]) ? over : around).push_back(i);
  }
  if (over.empty() || around.empty()) return std::nullopt;
  ctx.count("ladder:thru-split");
  Routing all_over = L.rt, all_around = L.rt;
  for (std::size_t i : around) {
    auto seg = L.split_thru(L.rt.paths[i]).seg;
    all_over.paths[i] = L.with_segment(L.rt.paths[i], {seg.front(), seg.back()});
  }
  for (std::size_t i : over) {
    auto seg = L.split_thru(L.rt.paths[i]).seg;
    all_around.paths[i] = L.with_segment(L.rt.paths[i], L.arc(seg.front(), seg.back()));
  }
  auto q = static_cast<std::int64_t>(over.size() + around.size());
  std::vector<std::pair<Rational, Certificate>> parts{
      {make_rational(static_cast<std::int64_t>(over.size()), q), dominate_rec(ctx, L.inst, all_over)},
      {make_rational(static_cast<std::int64_t>(around.size()), q), dominate_rec(ctx, L.inst, all_around)}};
  return verified(L.inst, L.rt, mix(parts), "thru-split");
}

Certificate remove_U(Context& ctx, const Ladder& L) {
  ctx.count("ladder:u-removal");
  Graph g1 = L.inst.graph.without_vertices(L.fr.U);
  std::map<Vertex, std::int64_t> b1;
  for (Vertex x : g1.vertices()) b1[x] = L.inst.demand(x);
  Routing r1;
  std::vector<RoutePath> suffixes;
  for (std::size_t i = 0; i < L.rt.paths.size(); ++i) {
    const auto& p = L.rt.paths[i];
    if (!L.is_u_path(i)) {
      r1.paths.push_back(p);
      continue;
    }
    Vertex a = arrival(L.fr, p);
    ++b1[a];
    r1.paths.push_back(prefix_to(p, a));
    suffixes.push_back(suffix_from(p, a));
  }
  Instance inst1 = rebase_instance(L.inst, g1, b1);
  Certificate c1 = dominate_rec(ctx, inst1, r1);
  std::vector<std::pair<Rational, Certificate>> parts;
  for (const auto& en : c1.entries) {
    std::map<Vertex, RoutePath> to;
    for (const auto& p : en.tree.paths) to[p.back()] = p;
    Routing lifted = en.tree;
    for (const auto& s : suffixes) {
      auto it = std::find(lifted.paths.begin(), lifted.paths.end(), to.at(s.front()));
      lifted.paths.erase(it);
      lifted.paths.push_back(concat(to.at(s.front()), s));
    }
    lifted.canonicalize();
    parts.push_back({en.lambda, dominate_rec(ctx, L.inst, lifted)});
  }
  return verified(L.inst, L.rt, mix(parts), "u-removal");
}

Certificate case_b(Context& ctx, const Ladder& L, Vertex x) {
  ctx.count("ladder:case-b");
  Vertex y = x == L.fr.u ? L.fr.v : L.fr.u;
  std::vector<Edge> cedges;
  for (const auto& e : L.inst.graph.edges()) {
    if (L.fr.U_bar.count(e.a) && L.fr.U_bar.count(e.b)) cedges.push_back(e);
  }
  Graph c = L.inst.graph.edge_subgraph(cedges);
  std::map<Vertex, std::int64_t> bc;
  std::int64_t ku = 0;
  for (Vertex w : L.fr.U) {
    bc[w] = L.inst.demand(w);
    ku += bc[w];
  }
  bc[y] = L.cen.q;
  bc[x] = L.inst.k - ku - L.cen.q;
  std::vector<Rational> costs;
  for (const auto& e : c.edges()) costs.push_back(L.inst.costs[L.inst.graph.index_of(e)]);
  Instance ic = make_instance(c, x, bc, costs, L.inst.names);
  Routing rc;
  for (std::int64_t i = 0; i < bc[x]; ++i) rc.paths.push_back({x});
  for (std::size_t i = 0; i < L.rt.paths.size(); ++i) {
    const auto& p = L.rt.paths[i];
    if (L.is_u_path(i)) {
      rc.paths.push_back(suffix_from(p, x));
    } else if (L.cen.labels[i] == PathPattern::Thru) {
      auto seg = L.split_thru(p).seg;
      rc.paths.push_back(seg.front() == x ? seg : reversed(seg));
    }
  }
  rc.canonicalize();
  Certificate cc = dominate_rec(ctx, ic, rc);
  std::vector<std::pair<Rational, Certificate>> parts;
  for (const auto& en : cc.entries) {
    std::map<Vertex, RoutePath> to;
    for (const auto& p : en.tree.paths) to[p.back()] = p;
    Routing lifted = L.rt;
    for (std::size_t i = 0; i < L.rt.paths.size(); ++i) {
      const auto& p = L.rt.paths[i];
      if (L.is_u_path(i)) {
        lifted.paths[i] = concat(prefix_to(p, x), to.at(p.back()));
      } else if (L.cen.labels[i] == PathPattern::Thru) {
        auto seg = L.split_thru(p).seg;
        lifted.paths[i] = L.with_segment(p, seg.front() == x ? to.at(y) : reversed(to.at(y)));
      }
    }
    lifted.canonicalize();
    parts.push_back({en.lambda, dominate_rec(ctx, L.inst, lifted)});
  }
  return verified(L.inst, L.rt, mix(parts), "case-b");
}

// Both entry sides present, every U-terminal path crosses the top edge, every thru path goes around U.
Certificate case_a_prime(Context& ctx, const Ladder& L) {
  const auto& fr = L.fr;
  const std::size_t m = fr.boundary.size() - 1;
  RoutePath pre_u, pre_v;
  std::vector<std::size_t> thru;
  std::int64_t e_u = 0, e_v = 0;
  for (std::size_t i = 0; i < L.rt.paths.size(); ++i) {
    const auto& p = L.rt.paths[i];
    if (L.cen.labels[i] == PathPattern::Thru) thru.push_back(i);
    if (!L.is_u_path(i)) continue;
    Vertex x = p[entry_index(fr, p)];
    if (x == fr.u) {
      pre_u = prefix_to(p, fr.u);
      ++e_u;
    } else {
      pre_v = prefix_to(p, fr.v);
      ++e_v;
    }
  }
  // Paths that stay away from U are kept as they are.
  Routing base;
  for (std::size_t i = 0; i < L.rt.paths.size(); ++i) {
    if (!L.is_u_path(i)) base.paths.push_back(L.rt.paths[i]);
  }
  auto direct_u = [&](std::size_t i) { return concat(pre_u, RoutePath(fr.boundary.begin(), fr.boundary.begin() + i + 1)); };
  auto direct_v = [&](std::size_t i) { return concat(pre_v, reversed(RoutePath(fr.boundary.begin() + i, fr.boundary.end()))); };
  auto cross_u = [&](std::size_t i) { return concat(concat(pre_v, {fr.v, fr.u}), RoutePath(fr.boundary.begin(), fr.boundary.begin() + i + 1)); };
  auto cross_v = [&](std::size_t i) { return concat(concat(pre_u, {fr.u, fr.v}), reversed(RoutePath(fr.boundary.begin() + i, fr.boundary.end()))); };

  // Unit profile along the boundary: arrival through u is -1, through v is +1.
  UnitProfile prof;
  prof.start = L.cen.q;
  std::vector<std::int64_t> cw(m + 1, 0);
  for (std::size_t i = 0; i < L.rt.paths.size(); ++i) {
    if (!L.is_u_path(i)) continue;
    const auto& p = L.rt.paths[i];
    if (arrival(fr, p) == fr.u) {
      ++prof.start;
      ++cw[std::find(fr.boundary.begin(), fr.boundary.end(), p.back()) - fr.boundary.begin()];
    }
  }
  for (std::size_t i = 1; i < m; ++i) {
    std::int64_t b = L.inst.demand(fr.boundary[i]);
    for (std::int64_t t = 0; t < b; ++t) prof.slopes.push_back(t < cw[i] ? -1 : +1);
  }
  auto from_profile = [&](const UnitProfile& pr) {
    Routing r = base;
    std::size_t pos = 0;
    for (std::size_t i = 1; i < m; ++i) {
      for (std::int64_t t = 0; t < L.inst.demand(fr.boundary[i]); ++t, ++pos) {
        r.paths.push_back(pr.slopes[pos] < 0 ? cross_u(i) : cross_v(i));
      }
    }
    r.canonicalize();
    return r;
  };
  Routing p = L.rt.canonical();
  {
    Routing s = from_profile(smooth_profile(prof, L.inst.k));
    if (validate_routing(L.inst, s) == std::nullopt && dominates(y_vector(L.inst, s), L.y)) {
      if (!(s == p)) ctx.count("ladder:smooth");
      p = s;
    }
  }
  // Q1: every U-terminal path enters U straight from its entry vertex.
  std::vector<Routing> cands;
  {
    Routing q1 = base;
    for (const auto& path : p.paths) {
      if (!fr.U.count(path.back())) continue;
      std::size_t i = std::find(fr.boundary.begin(), fr.boundary.end(), path.back()) - fr.boundary.begin();
      q1.paths.push_back(arrival(fr, path) == fr.u ? direct_v(i) : direct_u(i));
    }
    q1.canonicalize();
    cands.push_back(q1);
  }
  // Q2(j): omit boundary edge j; w_1..w_j are served through u, the rest through v.
  for (std::size_t j = 0; j < m; ++j) {
    Routing q2;
    for (std::size_t i = 0; i < L.rt.paths.size(); ++i) {
      if (L.is_u_path(i)) continue;
      const auto& path = L.rt.paths[i];
      if (L.cen.labels[i] == PathPattern::Thru) {
        auto seg = L.split_thru(path).seg;
        q2.paths.push_back(L.with_segment(path, {seg.front(), seg.back()}));
      } else {
        q2.paths.push_back(path);
      }
    }
    std::int64_t pool_u = e_u, pool_v = e_v;
    for (std::size_t i = 1; i < m; ++i) {
      for (std::int64_t t = 0; t < L.inst.demand(fr.boundary[i]); ++t) {
        if (i <= j) {
          if (pool_u > 0) {
            --pool_u;
            q2.paths.push_back(direct_u(i));
          } else {
            --pool_v;
            q2.paths.push_back(cross_u(i));
          }
        } else {
          if (pool_v > 0) {
            --pool_v;
            q2.paths.push_back(direct_v(i));
          } else {
            --pool_u;
            q2.paths.push_back(cross_v(i));
          }
        }
      }
    }
    q2.canonicalize();
    cands.push_back(q2);
  }
  std::vector<EdgeVector> cy;
  for (const auto& c : cands) {
    if (auto err = validate_routing(L.inst, c)) throw ConstructionError("case A' candidate invalid: " + *err);
    cy.push_back(y_vector(L.inst, c));
  }
  auto attempt = [&](std::size_t a, std::size_t b, const std::string& route) -> std::optional<Certificate> {
    auto iv = pair_interval(cy[a], cy[b], L.y);
    if (!iv) return std::nullopt;
    ctx.count("ladder:case-a-prime:" + route);
    Rational lam = iv->second == 1 ? Rational(1) : (iv->first == 0 ? Rational(0) : iv->first);
    std::vector<std::pair<Rational, Certificate>> parts;
    if (lam > 0) parts.push_back({lam, dominate_rec(ctx, L.inst, cands[a])});
    if (lam < 1) parts.push_back({1 - lam, dominate_rec(ctx, L.inst, cands[b])});
    return verified(L.inst, L.rt, mix(parts), "case-a-prime");
  };
  // Designated Q2: an extremum of the n-function where Q1 exceeds the routing.
  {
    const auto& g = L.inst.graph;
    std::vector<std::int64_t> nb;
    auto n = n_vector(L.inst, p);
    for (std::size_t j = 0; j < m; ++j) nb.push_back(n[g.index_of(make_edge(fr.boundary[j], fr.boundary[j + 1]))]);
    std::optional<std::size_t> pick;
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t e = g.index_of(make_edge(fr.boundary[j], fr.boundary[j + 1]));
      if (cy[0][e] <= L.y[e]) continue;
      bool extremum = (j == 0 || nb[j - 1] != nb[j]) && (j + 1 == m || nb[j + 1] != nb[j]);
      if (extremum || !pick) pick = j;
      if (extremum) break;
    }
    if (pick) {
      if (auto c = attempt(0, *pick + 1, "designated")) return *c;
    }
  }
  for (std::size_t a = 0; a < cands.size(); ++a) {
    for (std::size_t b = a; b < cands.size(); ++b) {
      if (auto c = attempt(a, b, "pair-scan")) return *c;
    }
  }
  ctx.count("ladder:case-a-prime:lp");
  auto lp = find_dominating_combination(L.inst, L.rt, enumerate_tree_routings(L.inst));
  if (!lp) throw ConstructionError("no convex combination of tree routings dominates the routing");
  return verified(L.inst, L.rt, *lp, "case-a-prime");
}

}  // namespace

namespace detail {

Certificate dominate_ladder_rec(Context& ctx, const Instance& inst, const Routing& input) {
  Routing rt = input.canonical();
  if (is_tree_routing(inst, rt)) return single(rt);
  const Graph& g = inst.graph;
  auto n = n_vector(inst, rt);
  for (std::size_t e = 0; e < n.size(); ++e) {
    if (n[e] != 0) continue;
    ctx.count("ladder:unused-edge");
    Instance sub = rebase_instance(inst, g.without_edge(g.edges()[e]));
    return verified(inst, rt, dominate_rec(ctx, sub, rt), "unused-edge");
  }
  Ladder L{inst, rt, lowest_cycle_frame(g, inst.root), {}, y_vector(inst, rt)};
  L.cen = census(L.fr, rt);
  if (auto c = uniformize(ctx, L)) return *c;
  if (auto c = thru_split(ctx, L)) return *c;
  bool around = false;
  for (std::size_t i = 0; i < rt.paths.size(); ++i) {
    if (L.cen.labels[i] == PathPattern::Thru && !L.thru_over(rt.paths[i])) around = true;
  }
  if (!around) return remove_U(ctx, L);
  std::set<Vertex> entries;
  for (std::size_t i = 0; i < rt.paths.size(); ++i) {
    if (L.is_u_path(i)) entries.insert(rt.paths[i][entry_index(L.fr, rt.paths[i])]);
  }
  if (entries.size() == 1) return case_b(ctx, L, *entries.begin());
  if (L.cen.r_u == 0 || L.cen.r_v == 0) {
    throw ConstructionError("top edge unused but not removed");
  }
  return case_a_prime(ctx, L);
}

}  // namespace detail

Certificate dominate_on_ladder(const Instance& inst, const Routing& rt) {
  auto cls = classify(inst.graph);
  if (cls == GraphClass::Cycle) return dominate_on_cycle(inst, rt);
  if (cls != GraphClass::Ladder) throw StructuralError("dispatch error: graph is not a ladder");
  if (auto err = validate_routing(inst, rt)) throw ValidationError("invalid routing: " + *err);
  detail::Context ctx;
  return detail::dominate_ladder_rec(ctx, inst, rt);
}

}  // namespace pyramid
