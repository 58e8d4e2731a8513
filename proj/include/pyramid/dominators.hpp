#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pyramid/graph.hpp"
#include "pyramid/instance.hpp"

namespace pyramid {

// ---- taming ----

struct TameResult {
  Routing a;  // rt - P1 + P2^{rv} P1^{v-}
  Routing b;  // rt - P2 + P1^{rv} P2^{v-}
};

// nullopt when (P1, P2, v) meets the taming precondition, else the offending pair.
std::optional<std::string> taming_precondition(const Routing& rt, std::size_t i1, std::size_t i2, Vertex v);

// P1 = rt.paths[i1], P2 = rt.paths[i2]. Throws InputError when the precondition fails.
TameResult tame(const Instance& inst, const Routing& rt, std::size_t i1, std::size_t i2, Vertex v);

Routing canonicalize(const Instance& inst, const Routing& rt);

// All paths to one terminal equal, and any two paths through a vertex share the prefix to it.
bool is_coincident(const Routing& rt);

// ---- cycle coordinates ----

struct CycleCoordinates {
  std::vector<Vertex> vertex_order;  // w_0 = root, w_1 = smaller neighbour of the root, ...
  std::vector<Edge> edge_order;      // e_i = w_i w_{i+1 mod m+1}
  std::vector<std::int64_t> breakpoints;  // s_0 .. s_m
};

CycleCoordinates cycle_coordinates(const Instance& inst);

struct PiecewiseLinearFn {
  std::vector<std::pair<Rational, Rational>> breakpoints;
  std::vector<Vertex> dissolved;

  Rational operator()(const Rational& t) const;
  PiecewiseLinearFn y_function(std::int64_t k) const;
};

PiecewiseLinearFn n_function(const CycleCoordinates& coords, const Instance& inst, const Routing& rt);
PiecewiseLinearFn reflect_segment(const PiecewiseLinearFn& fn, std::int64_t t1, std::int64_t t2);

// Demand units along the coordinate line. Within a terminal's span the clockwise
// arrivals (slope -1) come first.
struct UnitProfile {
  std::int64_t start = 0;     // f(0)
  std::vector<int> slopes;    // one +-1 per unit
  std::vector<std::int64_t> values() const;
};

UnitProfile unit_profile(const CycleCoordinates& coords, const Instance& inst, const Routing& rt);
Routing routing_from_profile(const CycleCoordinates& coords, const Instance& inst, const UnitProfile& prof);

// Witness routing for a reflection of the unit function on [t1, t2].
Routing reflect_routing(const CycleCoordinates& coords, const Instance& inst, const Routing& rt, std::int64_t t1,
                        std::int64_t t2);

struct Shape {
  int crossings = 0;
  int peaks = 0;
  int valleys = 0;
  bool peaks_above = true;    // every peak strictly above k/2
  bool valleys_below = true;  // every valley strictly below k/2
};

// Shape of a value sequence: repeated values merged, crossings counted as sign changes of 2f - k.
Shape shape_of(const std::vector<std::int64_t>& values, std::int64_t k);

// Reflection rules applied to a unit profile until the shape bound holds.
UnitProfile smooth_profile(const UnitProfile& prof, std::int64_t k);
Routing smooth(const Instance& inst, const CycleCoordinates& coords, const Routing& rt);

// Tree routing on a cycle omitting e_j: w_1..w_j clockwise, the rest counter-clockwise.
Routing cycle_tree(const CycleCoordinates& coords, const Instance& inst, std::size_t j);

struct DominationDiagnostics {
  Rational alpha_1, beta_1, alpha_2, beta_2;
  Rational lambda_1 = 1, lambda_2 = 0;
  std::string route;  // "tree", "zero-touch", "designated", "pair-scan", "lp"
};

struct CycleDomination {
  Certificate cert;
  DominationDiagnostics diag;
};

CycleDomination dominate_on_cycle_detailed(const Instance& inst, const Routing& rt);
Certificate dominate_on_cycle(const Instance& inst, const Routing& rt);

// ---- ladders ----

struct LowestCycleFrame {
  Edge top_edge;
  Vertex u = 0, v = 0;
  std::vector<Vertex> boundary;  // u = w_0, w_1, ..., w_m = v through U
  std::set<Vertex> U;
  std::set<Vertex> U_bar;
};

// A leaf face whose lower part U avoids the root; faces avoiding it entirely come first,
// otherwise the root is an end of the top edge.
LowestCycleFrame lowest_cycle_frame(const Graph& g, Vertex root);

enum class PathPattern { Outside, Thru, RUT, RVUT, RVT, RUVT };

std::string to_string(PathPattern p);
PathPattern classify_pattern(const LowestCycleFrame& frame, const RoutePath& path);

struct PatternCensus {
  int q = 0;    // thru paths
  int r_u = 0;  // ruvt paths
  int r_v = 0;  // rvut paths
  std::vector<PathPattern> labels;
};

PatternCensus census(const LowestCycleFrame& frame, const Routing& rt);

Certificate dominate_on_ladder(const Instance& inst, const Routing& rt);

// ---- minors ----

// Instance on g (the graph before `op`) induced by inst_minor on the graph after it.
Instance lift_instance(const Instance& inst_minor, const Graph& g, const MinorOp& op);
Routing lift_routing(const Routing& rt_minor, const MinorOp& op);
// Contract a routing of the original graph; a path visiting the merged vertex twice is shortcut.
Routing contract_routing(const Routing& rt, const MinorOp& op);

Certificate project_certificate_through_minor(const Certificate& cert, const MinorOp& op,
                                              const Instance& inst_minor, const Routing& target_minor);

// ---- dispatcher ----

struct DominationStats {
  std::map<std::string, std::size_t> steps;
};

Certificate dominate(const Instance& inst, const Routing& rt, DominationStats* stats = nullptr);

}  // namespace pyramid
