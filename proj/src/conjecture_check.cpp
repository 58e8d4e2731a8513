#include <random>

#include "pyramid/lp.hpp"
#include "pyramid/solvers.hpp"

namespace pyramid {

namespace {

struct InstanceOutcome {
  bool truncated = false;
  std::vector<std::string> problems;
};

InstanceOutcome check_instance(const Instance& inst, const FamilyParams& params, std::mt19937_64& rng) {
  InstanceOutcome out;
  PRPolyhedronModel model = build_polyhedron_model(inst, params.routing_cap);
  out.truncated = model.truncated;
  std::set<EdgeVector> tree_ys;
  for (const auto& t : enumerate_tree_routings(inst)) tree_ys.insert(y_vector(inst, t));

  std::uniform_int_distribution<std::int64_t> draw(0, params.cost_max);
  for (int d = 0; d < params.cost_draws; ++d) {
    Instance priced = inst;
    for (auto& c : priced.costs) c = draw(rng);
    if (model.truncated) continue;
    std::optional<Rational> opt, tree_opt;
    for (const auto& y : model.sample) {
      Rational c = cost_of(priced, y);
      if (!opt || c < *opt) opt = c;
    }
    for (const auto& y : tree_ys) {
      Rational c = cost_of(priced, y);
      if (!tree_opt || c < *tree_opt) tree_opt = c;
    }
    if (*opt != *tree_opt) {
      out.problems.push_back("cost draw " + std::to_string(d) + ": optimum " + format_rational(*opt) +
                             " but best tree " + format_rational(*tree_opt) + " under " +
                             describe_instance(priced));
    }
  }
  if (params.check_extremality && !model.truncated) {
    std::vector<EdgeVector> tree_points(tree_ys.begin(), tree_ys.end());
    for (const auto& y : model.minimal) {
      if (tree_ys.count(y)) continue;
      // A mix of tree vectors below y already shows y is not an extreme point.
      if (convex_domination(tree_points, std::vector<Rational>(y.begin(), y.end()))) continue;
      if (is_extremal_y(y, model)) {
        std::string ys;
        for (auto v : y) ys += (ys.empty() ? "" : ",") + std::to_string(v);
        out.problems.push_back("extremal non-tree y-vector (" + ys + ")");
      }
    }
  }
  return out;
}

}  // namespace

SearchReport check_conjecture(const FamilyParams& params) {
  SearchReport rep;
  rep.seed = params.seed;
  rep.caps["max-vertices"] = std::to_string(params.max_vertices);
  rep.caps["demand-max"] = std::to_string(params.demand_max);
  rep.caps["total-max"] = std::to_string(params.total_max);
  rep.caps["costs"] = std::to_string(params.cost_draws);
  rep.caps["cost-max"] = std::to_string(params.cost_max);
  rep.caps["routing-cap"] = std::to_string(params.routing_cap);
  std::mt19937_64 rng(params.seed);

  for (int n = params.min_vertices; n <= params.max_vertices; ++n) {
    std::vector<std::pair<Graph, bool>> graphs;
    for (auto& g : two_connected_outerplanar_graphs(n)) graphs.push_back({g, true});
    if (params.allow_non_outerplanar && n <= 6) {
      for (auto& g : connected_graphs(n)) {
        if (g.is_two_connected() && !is_outerplanar(g)) graphs.push_back({g, false});
      }
    }
    for (const auto& [g, outer] : graphs) {
      for (Vertex r : g.vertices()) {
        for (const auto& b : demand_vectors(g, r, params.demand_max, params.total_max)) {
          Instance inst = make_instance(g, r, b);
          auto res = check_instance(inst, params, rng);
          rep.truncated = rep.truncated || res.truncated;
          if (outer) {
            ++rep.instances_checked;
            for (auto& p : res.problems) rep.violations.push_back({describe_instance(inst), "", p});
          } else {
            ++rep.non_outerplanar_checked;
            for (auto& p : res.problems) rep.observations.push_back(describe_instance(inst) + ": " + p);
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace pyramid
