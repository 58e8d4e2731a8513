#include <algorithm>

#include "pyramid/dominators.hpp"
#include "pyramid/lp.hpp"
#include "pyramid/solvers.hpp"

namespace pyramid {

namespace {

struct PairChoice {
  std::size_t a = 0, b = 0;
  Rational lambda;  // weight of a
};

std::optional<PairChoice> try_pair(const std::vector<EdgeVector>& ty, const EdgeVector& y, std::size_t a,
                                   std::size_t b) {
  auto iv = pair_interval(ty[a], ty[b], y);
  if (!iv) return std::nullopt;
  Rational lam = iv->second == 1 ? Rational(1) : (iv->first == 0 ? Rational(0) : iv->first);
  return PairChoice{a, b, lam};
}

void fill_diagnostics(DominationDiagnostics& d, const EdgeVector& y1, const EdgeVector& y2, const EdgeVector& y,
                      const Rational& lam) {
  d.lambda_1 = lam;
  d.lambda_2 = 1 - lam;
  // Tight edge of the combination: where the slack is smallest, first on ties.
  std::size_t best = 0;
  std::optional<Rational> slack;
  for (std::size_t e = 0; e < y.size(); ++e) {
    Rational s = Rational(y[e]) - lam * y1[e] - (1 - lam) * y2[e];
    if (y1[e] != y2[e] && (!slack || s < *slack)) {
      slack = s;
      best = e;
    }
  }
  if (!slack) return;
  Rational t = y[best];
  d.alpha_1 = Rational(y2[best]) - t;
  d.beta_1 = t - Rational(y1[best]);
  d.alpha_2 = d.alpha_1;
  d.beta_2 = d.beta_1;
}

}  // namespace

CycleDomination dominate_on_cycle_detailed(const Instance& inst, const Routing& rt) {
  if (classify(inst.graph) != GraphClass::Cycle) throw StructuralError("dispatch error: graph is not a cycle");
  if (auto err = validate_routing(inst, rt)) throw ValidationError("invalid routing: " + *err);
  CycleDomination out;
  const EdgeVector y = y_vector(inst, rt);
  auto finish = [&](Certificate cert) {
    if (auto err = verify_certificate(inst, rt, cert)) {
      throw ConstructionError("cycle certificate failed verification: " + *err);
    }
    out.cert = std::move(cert);
    return out;
  };
  if (is_tree_routing(inst, rt)) {
    out.diag.route = "tree";
    return finish({{{rt.canonical(), Rational(1)}}});
  }
  auto coords = cycle_coordinates(inst);
  Routing tamed = canonicalize(inst, rt);
  Routing smoothed = is_tree_routing(inst, tamed) ? tamed : smooth(inst, coords, tamed);
  if (is_tree_routing(inst, smoothed)) {
    out.diag.route = "tree";
    return finish({{{smoothed, Rational(1)}}});
  }
  const std::size_t m = coords.vertex_order.size() - 1;
  std::vector<Routing> trees;
  std::vector<EdgeVector> ty;
  for (std::size_t j = 0; j <= m; ++j) {
    trees.push_back(cycle_tree(coords, inst, j));
    ty.push_back(y_vector(inst, trees.back()));
  }
  auto use = [&](const PairChoice& c, const std::string& route) {
    out.diag.route = route;
    fill_diagnostics(out.diag, ty[c.a], ty[c.b], y, c.lambda);
    Certificate cert;
    if (c.a == c.b || c.lambda == 1) {
      cert.entries.push_back({trees[c.a], Rational(1)});
    } else if (c.lambda == 0) {
      cert.entries.push_back({trees[c.b], Rational(1)});
    } else {
      cert.entries.push_back({trees[c.a], c.lambda});
      cert.entries.push_back({trees[c.b], 1 - c.lambda});
    }
    return finish(cert);
  };
  auto prof = unit_profile(coords, inst, smoothed);
  auto vals = prof.values();
  auto edge_at = [&](std::int64_t t) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i <= m; ++i) {
      if (coords.breakpoints[i] == t) return i;
    }
    return std::nullopt;
  };
  // A zero of the n-function: some edge is unused, or the zero sits inside a terminal's span.
  for (std::size_t t = 0; t < vals.size(); ++t) {
    if (vals[t] != 0) continue;
    auto t64 = static_cast<std::int64_t>(t);
    if (auto i = edge_at(t64)) {
      if (auto c = try_pair(ty, y, *i, *i)) return use(*c, "zero-touch");
    }
    for (std::size_t i = 1; i <= m; ++i) {
      if (coords.breakpoints[i - 1] < t64 && t64 < coords.breakpoints[i]) {
        if (auto c = try_pair(ty, y, i - 1, i)) return use(*c, "zero-touch");
      }
    }
  }
  // Designated pair: the end of the first increase and its shift by f(0).
  std::size_t t = 0;
  while (t + 1 < vals.size() && vals[t + 1] >= vals[t]) ++t;
  auto sj = static_cast<std::int64_t>(t);
  auto j1 = edge_at(sj), j2 = edge_at(vals[0] + sj);
  if (j1 && j2) {
    if (auto c = try_pair(ty, y, *j1, *j2)) return use(*c, "designated");
  }
  for (std::size_t a = 0; a <= m; ++a) {
    if (auto c = try_pair(ty, y, a, a)) return use(*c, "pair-scan");
  }
  for (std::size_t a = 0; a <= m; ++a) {
    for (std::size_t b = a + 1; b <= m; ++b) {
      if (auto c = try_pair(ty, y, a, b)) return use(*c, "pair-scan");
    }
  }
  auto cert = find_dominating_combination(inst, rt, trees);
  if (!cert) throw ConstructionError("no convex combination of cycle trees dominates the routing");
  out.diag.route = "lp";
  return finish(normalize_certificate(*cert));
}

Certificate dominate_on_cycle(const Instance& inst, const Routing& rt) {
  return dominate_on_cycle_detailed(inst, rt).cert;
}

}  // namespace pyramid
