#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pyramid/instance.hpp"

namespace pyramid {

// All routings of an instance as per-terminal multisets of simple paths.
// Iteration order is canonical: terminals by label, multisets lexicographic.
class RoutingSpace {
 public:
  explicit RoutingSpace(const Instance& inst, std::size_t path_cap = 1u << 20);

  const Instance& instance() const { return *inst_; }
  bool paths_truncated() const { return paths_truncated_; }

  // Calls visit(routing choice) until it returns false or `cap` routings were visited.
  // Returns false when the cap stopped the walk before the end.
  bool for_each(const std::function<bool(const std::vector<std::vector<std::size_t>>&)>& visit,
                std::size_t cap) const;

  Routing build(const std::vector<std::vector<std::size_t>>& choice) const;
  EdgeVector n_of(const std::vector<std::vector<std::size_t>>& choice) const;

  const std::vector<Vertex>& terminals() const { return terminals_; }
  const std::vector<std::vector<RoutePath>>& options() const { return options_; }

 private:
  const Instance* inst_;
  std::vector<Vertex> terminals_;  // non-root terminals
  std::vector<std::int64_t> counts_;
  std::vector<std::vector<RoutePath>> options_;
  std::vector<std::vector<std::vector<std::size_t>>> option_edges_;
  bool paths_truncated_ = false;
};

struct RoutingEnumeration {
  std::vector<Routing> routings;
  bool truncated = false;
};

RoutingEnumeration enumerate_routings(const Instance& inst, std::size_t cap);

struct SolveResult {
  Routing routing;
  Rational cost;
  bool optimal = true;  // false when the enumeration was truncated
};

SolveResult optimal_routing(const Instance& inst, std::size_t cap = 2'000'000);
SolveResult optimal_tree_routing(const Instance& inst);

// The tree routing whose paths run inside the given acyclic edge set.
Routing tree_routing_from_edges(const Instance& inst, const std::vector<Edge>& edges);

// Every tree routing: one per minimal subtree containing all terminals, canonical order.
std::vector<Routing> enumerate_tree_routings(const Instance& inst);

std::optional<Certificate> find_dominating_combination(const Instance& inst, const Routing& target,
                                                       const std::vector<Routing>& trees);

struct PRPolyhedronModel {
  std::vector<EdgeVector> sample;   // distinct y-vectors, sorted
  std::vector<EdgeVector> minimal;  // the componentwise-minimal ones; only these can be extreme points
  bool truncated = false;
};

PRPolyhedronModel build_polyhedron_model(const Instance& inst, std::size_t cap = 2'000'000);

bool is_extremal(const Instance& inst, const Routing& rt, const PRPolyhedronModel& model);
bool is_extremal_y(const EdgeVector& y, const PRPolyhedronModel& model);

// Componentwise-minimal elements, in input order.
std::vector<EdgeVector> minimal_points(const std::vector<EdgeVector>& points);

struct FamilyParams {
  int min_vertices = 3;
  int max_vertices = 4;
  std::int64_t demand_max = 1;
  std::int64_t total_max = 0;  // 0: no bound on k
  int cost_draws = 5;
  std::int64_t cost_max = 10;
  std::uint64_t seed = 1;
  bool allow_non_outerplanar = false;
  bool check_extremality = true;
  std::size_t routing_cap = 200'000;
};

struct Violation {
  std::string instance;
  std::string routing;
  std::string diagnosis;
};

struct SearchReport {
  std::size_t instances_checked = 0;
  std::vector<Violation> violations;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> caps;
  bool truncated = false;
  std::size_t non_outerplanar_checked = 0;
  std::vector<std::string> observations;  // non-outerplanar findings, report only
};

SearchReport check_conjecture(const FamilyParams& params);

// Instance families.
std::vector<Graph> two_connected_outerplanar_graphs(int n);  // up to isomorphism; n = 2 gives the single edge
std::vector<Graph> connected_graphs(int n);                  // up to isomorphism, n <= 6
std::vector<std::map<Vertex, std::int64_t>> demand_vectors(const Graph& g, Vertex root,
                                                           std::int64_t demand_max, std::int64_t total_max);
std::string describe_instance(const Instance& inst);

}  // namespace pyramid
