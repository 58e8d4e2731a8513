#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pyramid/solvers.hpp"

using namespace pyramid;
using helpers::at;
using helpers::c4;
using helpers::routing;

TEST_CASE("pyramidal") {
  CHECK(pyramidal(0, 4) == 0);
  CHECK(pyramidal(3, 4) == 1);
  CHECK(pyramidal(2, 4) == 2);
  CHECK_THROWS_AS(pyramidal(5, 4), InputError);
  CHECK_THROWS_AS(pyramidal(-1, 4), InputError);
}

TEST_CASE("make_instance refuses a root without demand and k = 0") {
  Graph g = cycle_graph(3);
  CHECK_THROWS_AS(make_instance(g, 0, {{0, 0}, {1, 1}}), InputError);
  CHECK_THROWS_AS(make_instance(g, 0, {{0, 0}}), InputError);
  CHECK_THROWS_AS(make_instance(g, 0, {{0, 1}}, {1, -1, 1}), InputError);
  CHECK(make_instance(g, 0, {{0, 2}, {2, 3}}).k == 5);
}

TEST_CASE("n_vector and y_vector: examples on C4") {
  Instance inst = c4();
  Routing cw = routing({{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}});
  auto n = n_vector(inst, cw);
  CHECK(at(inst, n, 0, 1) == 3);
  CHECK(at(inst, n, 1, 2) == 2);
  CHECK(at(inst, n, 2, 3) == 1);
  CHECK(at(inst, n, 3, 0) == 0);
  auto y = y_vector(inst, cw);
  CHECK(at(inst, y, 0, 1) == 1);
  CHECK(at(inst, y, 1, 2) == 2);
  CHECK(at(inst, y, 2, 3) == 1);
  CHECK(at(inst, y, 3, 0) == 0);

  Routing mixed = routing({{0}, {0, 1}, {0, 1, 2}, {0, 3}});
  auto nm = n_vector(inst, mixed);
  CHECK(at(inst, nm, 0, 1) == 2);
  CHECK(at(inst, nm, 1, 2) == 1);
  CHECK(at(inst, nm, 2, 3) == 0);
  CHECK(at(inst, nm, 3, 0) == 1);

  Routing all = routing({{0}, {0, 3, 2, 1}, {0, 1, 2}, {0, 1, 2, 3}});
  auto na = n_vector(inst, all), ya = y_vector(inst, all);
  CHECK(at(inst, na, 0, 1) == 2);
  CHECK(at(inst, na, 1, 2) == 3);
  CHECK(at(inst, na, 2, 3) == 2);
  CHECK(at(inst, na, 3, 0) == 1);
  CHECK(at(inst, ya, 0, 1) == 2);
  CHECK(at(inst, ya, 1, 2) == 1);
  CHECK(at(inst, ya, 2, 3) == 2);
  CHECK(at(inst, ya, 3, 0) == 1);

  Instance trivial = make_instance(cycle_graph(4), 0, {{0, 3}});
  Routing rt = routing({{0}, {0}, {0}});
  CHECK(n_vector(trivial, rt) == EdgeVector(4, 0));
  CHECK(y_vector(trivial, rt) == EdgeVector(4, 0));

  CHECK_THROWS_AS(n_vector(inst, routing({{0}, {0, 1}})), ValidationError);
}

TEST_CASE("routing_cost: examples") {
  Routing cw = routing({{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}});
  CHECK(routing_cost(c4(), cw) == 4);
  CHECK(routing_cost(c4({0, 0, 0, 0}), cw) == 0);
  Instance priced = c4();
  const Graph& g = priced.graph;
  priced.costs[g.index_of(make_edge(0, 1))] = 1;
  priced.costs[g.index_of(make_edge(1, 2))] = 2;
  priced.costs[g.index_of(make_edge(2, 3))] = 1;
  priced.costs[g.index_of(make_edge(0, 3))] = 5;
  CHECK(routing_cost(priced, cw) == 6);
}

TEST_CASE("validate_routing: examples") {
  Instance inst = c4();
  Routing cw = routing({{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}});
  CHECK(!validate_routing(inst, cw));
  Instance heavy = inst;
  heavy.demands[2] = 2;
  heavy.k = 5;
  CHECK(validate_routing(heavy, cw) == std::optional<std::string>("terminal b expects 2 paths, found 1"));
  CHECK(validate_routing(inst, routing({{0}, {0, 1, 0}, {0, 1, 2}, {0, 1, 2, 3}})) ==
        std::optional<std::string>("path not simple"));
  CHECK(validate_routing(inst, routing({{0}, {0, 2}, {0, 1, 2}, {0, 1, 2, 3}})).has_value());
  CHECK(validate_routing(inst, routing({{0}, {1}, {0, 1, 2}, {0, 1, 2, 3}})).has_value());
}

TEST_CASE("is_tree_routing: examples") {
  Instance inst = c4();
  CHECK(is_tree_routing(inst, routing({{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}})));
  CHECK(is_tree_routing(inst, routing({{0}, {0, 1}, {0, 1, 2}, {0, 3}})));
  CHECK(!is_tree_routing(inst, routing({{0}, {0, 3, 2, 1}, {0, 1, 2}, {0, 1, 2, 3}})));
}

TEST_CASE("verify_certificate: examples") {
  Instance inst = c4();
  Routing all = routing({{0}, {0, 3, 2, 1}, {0, 1, 2}, {0, 1, 2, 3}});
  Routing omit_ab = routing({{0}, {0, 1}, {0, 3}, {0, 3, 2}});
  Routing omit_ra = routing({{0}, {0, 3}, {0, 3, 2}, {0, 3, 2, 1}});
  Routing omit_cr = routing({{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}});
  Certificate bad{{{omit_ab, make_rational(1, 2)}, {omit_ra, make_rational(1, 2)}}};
  auto err = verify_certificate(inst, all, bad);
  REQUIRE(err.has_value());
  CHECK(err->find("edge rc") != std::string::npos);

  Certificate good{{{omit_ab, make_rational(1, 2)}, {omit_cr, make_rational(1, 2)}}};
  CHECK(!verify_certificate(inst, all, good));
  std::string why;
  CHECK(oracle::certificate_ok(inst, all, {{omit_ab, make_rational(1, 2)}, {omit_cr, make_rational(1, 2)}}, &why));

  CHECK(!verify_certificate(inst, omit_cr, Certificate{{{omit_cr, 1}}}));

  Certificate short_sum{{{omit_ab, make_rational(1, 3)}, {omit_cr, make_rational(1, 3)}}};
  CHECK(verify_certificate(inst, all, short_sum) == std::optional<std::string>("coefficients sum to 2/3"));
  CHECK(verify_certificate(inst, all, Certificate{{{all, 1}}}).has_value());
  CHECK(verify_certificate(inst, all, Certificate{{{omit_ab, 0}, {omit_cr, 1}}}).has_value());
}

TEST_CASE("normalize_certificate merges equal trees") {
  Instance inst = c4();
  Routing t = routing({{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}});
  Certificate c{{{t, make_rational(1, 4)}, {t, make_rational(3, 4)}}};
  auto n = normalize_certificate(c);
  REQUIRE(n.entries.size() == 1);
  CHECK(n.entries[0].lambda == 1);
  CHECK(combined_y(inst, n) == std::vector<Rational>{1, 0, 2, 1});
}

TEST_CASE("random routings: root degree sum, y bounds, agreement with the oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    Graph g = oracle::random_connected_graph(n, std::uniform_int_distribution<int>(0, 5)(rng), rng);
    std::map<Vertex, std::int64_t> b;
    for (Vertex v : g.vertices()) b[v] = std::uniform_int_distribution<int>(v == 0 ? 1 : 0, 3)(rng);
    Instance inst = make_instance(g, 0, b);
    Routing rt = oracle::random_routing(inst, rng);
    REQUIRE(!validate_routing(inst, rt));
    auto nv = n_vector(inst, rt);
    auto yv = y_vector(inst, rt);
    CHECK(nv == oracle::n_of(g, rt));
    CHECK(yv == oracle::y_of(g, rt, inst.k));
    CHECK(is_tree_routing(inst, rt) == oracle::support_is_tree(g, nv));
    std::int64_t at_root = 0;
    for (std::size_t e = 0; e < nv.size(); ++e) {
      if (g.edges()[e].has(0)) at_root += nv[e];
      CHECK(yv[e] <= nv[e]);
      CHECK(yv[e] <= inst.k - nv[e]);
      CHECK(2 * yv[e] <= inst.k);
      CHECK(yv[e] == pyramidal(nv[e], inst.k));
    }
    CHECK(at_root == inst.k - b[0]);
  }
}

TEST_CASE("the pyramidal function is concave on rationals") {
  for (std::int64_t k = 1; k <= 8; ++k) {
    auto p = [&](const Rational& t) { return t < Rational(k) - t ? t : Rational(k) - t; };
    for (std::int64_t x = 0; x <= k; ++x) {
      for (std::int64_t z = 0; z <= k; ++z) {
        for (std::int64_t d = 0; d <= 6; ++d) {
          Rational lam = make_rational(d, 6);
          Rational lhs = p(lam * x + (1 - lam) * z);
          CHECK(lhs >= lam * pyramidal(x, k) + (1 - lam) * pyramidal(z, k));
        }
      }
    }
  }
}

TEST_CASE("n-identity splits never raise y, and cost is monotone under domination") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(3, 7)(rng);
    Graph g = oracle::random_connected_graph(n, std::uniform_int_distribution<int>(1, 4)(rng), rng);
    std::map<Vertex, std::int64_t> b;
    for (Vertex v : g.vertices()) b[v] = std::uniform_int_distribution<int>(v == 0 ? 1 : 0, 3)(rng);
    Instance inst = make_instance(g, 0, b);
    Routing rt = oracle::random_routing(inst, rng);
    // Uniformize one terminal with several paths: weights are the path multiplicities.
    for (Vertex t : g.vertices()) {
      if (t == 0 || b[t] < 2) continue;
      std::map<RoutePath, std::int64_t> cnt;
      for (const auto& p : rt.paths) {
        if (p.back() == t) ++cnt[p];
      }
      std::vector<Rational> ysum(g.num_edges(), 0), nsum(g.num_edges(), 0);
      for (const auto& [p, c] : cnt) {
        Routing s;
        for (const auto& q : rt.paths) {
          if (q.back() != t) s.paths.push_back(q);
        }
        for (std::int64_t i = 0; i < b[t]; ++i) s.paths.push_back(p);
        auto ns = n_vector(inst, s), ys = y_vector(inst, s);
        for (std::size_t e = 0; e < ns.size(); ++e) {
          nsum[e] += make_rational(c, b[t]) * ns[e];
          ysum[e] += make_rational(c, b[t]) * ys[e];
        }
      }
      auto n0 = n_vector(inst, rt), y0 = y_vector(inst, rt);
      for (std::size_t e = 0; e < n0.size(); ++e) {
        CHECK(nsum[e] == n0[e]);
        CHECK(ysum[e] <= y0[e]);
      }
      break;
    }
    Routing other = oracle::random_routing(inst, rng);
    auto ya = y_vector(inst, rt), yb = y_vector(inst, other);
    if (dominates(ya, yb)) {
      Instance priced = inst;
      for (auto& c : priced.costs) c = make_rational(std::uniform_int_distribution<int>(0, 9)(rng), 3);
      CHECK(routing_cost(priced, rt) <= routing_cost(priced, other));
    }
  }
}
