#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pyramid/dominators.hpp"
#include "pyramid/solvers.hpp"

using namespace pyramid;
using helpers::c4;
using helpers::graph;
using helpers::ones;
using helpers::routing;

namespace {

// a0 a1 a2 / b0 b1 b2 = 0 1 2 / 3 4 5.
Graph grid23() { return graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}); }

std::vector<std::pair<Routing, Rational>> entries_of(const Certificate& c) {
  std::vector<std::pair<Routing, Rational>> out;
  for (const auto& e : c.entries) out.push_back({e.tree, e.lambda});
  return out;
}

void check_cert(const Instance& inst, const Routing& rt, const Certificate& c) {
  CHECK(!verify_certificate(inst, rt, c));
  std::string why;
  CHECK_MESSAGE(oracle::certificate_ok(inst, rt, entries_of(c), &why), why);
  for (const auto& e : c.entries) CHECK(oracle::support_is_tree(inst.graph, oracle::n_of(inst.graph, e.tree)));
}

Instance priced(const Instance& inst, std::mt19937_64& rng) {
  Instance out = inst;
  for (auto& c : out.costs) c = std::uniform_int_distribution<int>(0, 9)(rng);
  return out;
}

Rational best_tree_cost(const Instance& inst, const Certificate& c) {
  Rational best = routing_cost(inst, c.entries.front().tree);
  for (const auto& e : c.entries) best = std::min(best, routing_cost(inst, e.tree));
  return best;
}

}  // namespace

TEST_CASE("lowest_cycle_frame and path patterns on the 2x3 grid") {
  Graph g = grid23();
  auto fr = lowest_cycle_frame(g, 0);
  CHECK(fr.top_edge == make_edge(1, 4));
  CHECK(fr.U == std::set<Vertex>{2, 5});
  CHECK(fr.U_bar == std::set<Vertex>{1, 2, 4, 5});
  CHECK(fr.boundary.front() == fr.u);
  CHECK(fr.boundary.back() == fr.v);
  CHECK(fr.boundary.size() == 4);

  auto pat = [&](const RoutePath& p) { return classify_pattern(fr, p); };
  CHECK(pat({0}) == PathPattern::Outside);
  CHECK(pat({0, 1}) == PathPattern::Outside);
  CHECK(pat({0, 3}) == PathPattern::Outside);
  CHECK(pat({0, 1, 4}) == PathPattern::Thru);
  CHECK(pat({0, 1, 2, 5, 4}) == PathPattern::Thru);
  CHECK(pat({0, 1, 2}) == PathPattern::RUT);
  CHECK(pat({0, 3, 4, 5}) == PathPattern::RVT);
  CHECK(pat({0, 1, 4, 5}) == PathPattern::RUVT);
  CHECK(pat({0, 3, 4, 1, 2}) == PathPattern::RVUT);
  CHECK(to_string(PathPattern::RVUT) == "rvut");

  Routing rt = routing({{0}, {0, 1}, {0, 1, 4, 5, 2}, {0, 3}, {0, 1, 4}, {0, 1, 4, 5}});
  auto c = census(fr, rt);
  CHECK(c.q == 1);
  CHECK(c.r_u == 2);
  CHECK(c.r_v == 0);
  CHECK(c.labels.size() == rt.paths.size());
}

TEST_CASE("lowest_cycle_frame with the root on the top edge") {
  Graph g = grid23();
  auto fr = lowest_cycle_frame(g, 1);
  CHECK(fr.top_edge == make_edge(1, 4));
  CHECK(!fr.U.count(1));
  CHECK(fr.U.size() == 2);
  CHECK_THROWS_AS(lowest_cycle_frame(cycle_graph(5), 0), StructuralError);
}

TEST_CASE("dominate_on_ladder: a routing using every edge of the 2x3 grid") {
  Graph g = grid23();
  Instance inst = make_instance(g, 0, ones(g));
  Routing all = routing({{0}, {0, 1}, {0, 3, 4, 5, 2}, {0, 3}, {0, 1, 4}, {0, 1, 2, 5}});
  REQUIRE(!validate_routing(inst, all));
  for (std::size_t e = 0; e < g.num_edges(); ++e) REQUIRE(n_vector(inst, all)[e] > 0);
  check_cert(inst, all, dominate_on_ladder(inst, all));

  // At an optimum the cheapest certificate tree is an optimal tree routing.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    Instance pi = priced(inst, rng);
    auto opt = optimal_routing(pi);
    REQUIRE(opt.optimal);
    auto c = dominate_on_ladder(pi, opt.routing);
    check_cert(pi, opt.routing, c);
    CHECK(best_tree_cost(pi, c) == opt.cost);
    CHECK(optimal_tree_routing(pi).cost == opt.cost);
  }
}

TEST_CASE("dominate_on_ladder: root on the rung") {
  Graph g = grid23();
  Instance inst = make_instance(g, 1, ones(g));
  for (const auto& rt : oracle::all_routings(inst, 400)) check_cert(inst, rt, dominate_on_ladder(inst, rt));
}

TEST_CASE("dominate: trees, blocks and chorded cycles") {
  Graph tree = graph(5, {{0, 1}, {1, 2}, {1, 3}, {0, 4}});
  Instance ti = make_instance(tree, 0, ones(tree));
  Routing tr = routing({{0}, {0, 1}, {0, 1, 2}, {0, 1, 3}, {0, 4}});
  auto tc = dominate(ti, tr);
  REQUIRE(tc.entries.size() == 1);
  CHECK(tc.entries[0].tree == tr);
  CHECK(tc.entries[0].lambda == 1);

  // Two triangles sharing vertex 2.
  Graph bow = graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  Instance bi = make_instance(bow, 0, ones(bow));
  DominationStats st;
  for (const auto& rt : oracle::all_routings(bi)) check_cert(bi, rt, dominate(bi, rt, &st));
  CHECK(st.steps["blocks"] > 0);

  // C6 plus a short chord: the cheapest certificate tree matches the optimum.
  Graph cc = graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 3}});
  Instance ci = make_instance(cc, 0, ones(cc));
  auto rts = oracle::all_routings(ci);
  std::vector<Certificate> certs;
  for (const auto& rt : rts) {
    certs.push_back(dominate(ci, rt));
    check_cert(ci, rt, certs.back());
  }
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    Instance pi = priced(ci, rng);
    Rational best = best_tree_cost(pi, certs.front());
    for (const auto& c : certs) best = std::min(best, best_tree_cost(pi, c));
    CHECK(best == optimal_routing(pi).cost);
  }
}

TEST_CASE("dominate: refusals") {
  Graph k4 = graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Instance ki = make_instance(k4, 0, ones(k4));
  Routing rt = routing({{0}, {0, 1}, {0, 1, 2}, {0, 2, 3}});
  CHECK_THROWS_AS(dominate(ki, rt), StructuralError);

  Graph fan = graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  Instance fi = make_instance(fan, 0, ones(fan));
  CHECK_THROWS_AS(dominate_on_ladder(fi, routing({{0}, {0, 1}, {0, 1, 2}, {0, 3}, {0, 4}})), StructuralError);
  // A cycle is the base case of a ladder.
  Instance c5 = make_instance(cycle_graph(5), 0, ones(cycle_graph(5)));
  Routing c5rt = routing({{0}, {0, 1}, {0, 1, 2}, {0, 4, 3}, {0, 4}});
  CHECK(dominate_on_ladder(c5, c5rt).entries.size() == 1);

  Graph split = graph(4, {{0, 1}, {2, 3}});
  Instance si = make_instance(split, 0, {{0, 1}, {1, 1}});
  CHECK_THROWS_AS(dominate(si, routing({{0}, {0, 1}})), StructuralError);
}

TEST_CASE("minor projection: deletion keeps the certificate") {
  // C4 plus the chord 0-2, deleted.
  Graph g = graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  auto mr = apply_minor_op(g, MinorKind::DeleteEdge, make_edge(0, 2));
  Instance im = make_instance(mr.graph, 0, ones(mr.graph));
  Routing target = routing({{0}, {0, 3, 2, 1}, {0, 1, 2}, {0, 1, 2, 3}});
  Instance ig = lift_instance(im, g, mr.op);
  Routing lifted = lift_routing(target, mr.op);
  CHECK(lifted == target.canonical());
  Certificate cert = dominate(ig, lifted);
  Certificate proj = project_certificate_through_minor(cert, mr.op, im, target);
  auto want = normalize_certificate(cert);
  REQUIRE(proj.entries.size() == want.entries.size());
  for (std::size_t i = 0; i < want.entries.size(); ++i) {
    CHECK(proj.entries[i].tree == want.entries[i].tree);
    CHECK(proj.entries[i].lambda == want.entries[i].lambda);
  }
  check_cert(im, target, proj);
}

TEST_CASE("minor projection: contracting C4 to a triangle") {
  Graph g = cycle_graph(4);
  auto mr = apply_minor_op(g, MinorKind::ContractEdge, make_edge(2, 3), 2);
  REQUIRE(mr.graph.num_edges() == 3);
  Instance im = make_instance(mr.graph, 0, ones(mr.graph));
  Routing target = routing({{0}, {0, 2, 1}, {0, 1, 2}});
  Routing lifted = lift_routing(target, mr.op);
  CHECK(lifted == routing({{0}, {0, 3, 2, 1}, {0, 1, 2}}).canonical());
  Instance ig = lift_instance(im, g, mr.op);
  CHECK(ig.demand(3) == 0);
  CHECK(!validate_routing(ig, lifted));
  CHECK(contract_routing(lifted, mr.op) == target.canonical());

  auto nm = oracle::n_of(mr.graph, target), ng = oracle::n_of(g, lifted);
  for (const auto& [fm, f] : mr.op.edge_map) CHECK(nm[mr.graph.index_of(fm)] == ng[g.index_of(f)]);

  Certificate cert = dominate(ig, lifted);
  check_cert(ig, lifted, cert);
  check_cert(im, target, project_certificate_through_minor(cert, mr.op, im, target));
}

TEST_CASE("minor projection: lifted routings keep n and y on small graphs") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& g : connected_graphs(n)) {
      for (const auto& e : g.edges()) {
        for (Vertex keep : {e.a, e.b}) {
          auto mr = apply_minor_op(g, MinorKind::ContractEdge, e, keep);
          if (!mr.graph.has_vertex(0)) continue;
          Instance im = make_instance(mr.graph, 0, ones(mr.graph));
          Instance ig = lift_instance(im, g, mr.op);
          for (const auto& rt : oracle::all_routings(im, 50)) {
            Routing lifted = lift_routing(rt, mr.op);
            REQUIRE(!validate_routing(ig, lifted));
            auto nm = oracle::n_of(mr.graph, rt), ng = oracle::n_of(g, lifted);
            for (const auto& [fm, f] : mr.op.edge_map) CHECK(nm[mr.graph.index_of(fm)] == ng[g.index_of(f)]);
            CHECK(routing_cost(ig, lifted) == routing_cost(im, rt));
          }
        }
      }
    }
  }
}

TEST_CASE("dominate: every construction step is exercised") {
  DominationStats st;
  auto sweep = [&](const Graph& g, std::size_t cap) {
    for (Vertex root : g.vertices()) {
      Instance inst = make_instance(g, root, ones(g));
      for (const auto& rt : oracle::all_routings(inst, cap)) {
        Certificate c = dominate(inst, rt, &st);
        REQUIRE(!verify_certificate(inst, rt, c));
      }
    }
  };
  sweep(grid23(), 2000);
  sweep(graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 3}}), 2000);
  sweep(graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {1, 5}}), 2000);
  // Fan: 0 adjacent to every vertex of the path 1-2-3-4.
  sweep(graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}), 2000);
  sweep(graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}), 2000);
  for (const char* key : {"ladder:case-b", "ladder:case-a-prime:designated", "ladder:u-removal", "ladder:thru-split",
                          "ladder:uniformize", "ladder:unused-edge", "ladder:smooth", "minor", "blocks", "tree",
                          "cycle"}) {
    CHECK_MESSAGE(st.steps[key] > 0, key);
  }
}
