#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pyramid/graph.hpp"
#include "pyramid/rational.hpp"

namespace pyramid {

struct Instance {
  Graph graph;
  Vertex root = 0;
  std::map<Vertex, std::int64_t> demands;  // one entry per vertex
  std::vector<Rational> costs;             // aligned with graph.edges()
  std::map<Vertex, std::string> names;
  std::int64_t k = 0;

  std::int64_t demand(Vertex v) const;
  std::string name(Vertex v) const;
  std::string edge_name(const Edge& e) const;
  std::vector<Vertex> terminals() const;  // vertices with positive demand, root included
};

// Validates: root present with b_r >= 1, demands nonnegative, costs nonnegative.
// Missing demands default to 0, missing costs to 0.
Instance make_instance(Graph g, Vertex root, std::map<Vertex, std::int64_t> demands,
                       std::vector<Rational> costs = {}, std::map<Vertex, std::string> names = {});

// Same root, names and demands on a subgraph or supergraph with the same labels.
// Costs are carried over by edge; edges new to `g` cost 0.
Instance rebase_instance(const Instance& inst, Graph g,
                         std::optional<std::map<Vertex, std::int64_t>> demands = std::nullopt);

using RoutePath = VertexPath;

RoutePath prefix_to(const RoutePath& p, Vertex v);    // P^{rv}
RoutePath suffix_from(const RoutePath& p, Vertex v);  // P^{v-}
bool path_contains(const RoutePath& p, Vertex v);

struct Routing {
  std::vector<RoutePath> paths;

  void canonicalize() { std::sort(paths.begin(), paths.end()); }
  Routing canonical() const {
    Routing r = *this;
    r.canonicalize();
    return r;
  }
  bool operator==(const Routing& o) const { return canonical().paths == o.canonical().paths; }
};

using EdgeVector = std::vector<std::int64_t>;

std::int64_t pyramidal(std::int64_t x, std::int64_t k);

std::optional<std::string> validate_routing(const Instance& inst, const Routing& rt);

EdgeVector n_vector(const Instance& inst, const Routing& rt);
EdgeVector y_vector(const Instance& inst, const Routing& rt);
// No validation: for enumerations that build routings known to be valid.
EdgeVector n_vector_unchecked(const Graph& g, const Routing& rt);
EdgeVector y_from_n(const EdgeVector& n, std::int64_t k);

Rational routing_cost(const Instance& inst, const Routing& rt);
Rational cost_of(const Instance& inst, const EdgeVector& y);

bool support_is_tree(const Graph& g, const EdgeVector& n);
bool is_tree_routing(const Instance& inst, const Routing& rt);

bool dominates(const EdgeVector& lower, const EdgeVector& upper);  // lower <= upper everywhere

struct CertificateEntry {
  Routing tree;
  Rational lambda;
};

struct Certificate {
  std::vector<CertificateEntry> entries;
};

std::optional<std::string> verify_certificate(const Instance& inst, const Routing& target,
                                              const Certificate& cert);

// Sum of lambda_i * y(T_i), exact.
std::vector<Rational> combined_y(const Instance& inst, const Certificate& cert);

// Merges entries with equal canonical routings and drops zero weights; sorted for determinism.
Certificate normalize_certificate(const Certificate& cert);

}  // namespace pyramid
