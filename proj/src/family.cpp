#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "pyramid/solvers.hpp"

namespace pyramid {

std::vector<Graph> two_connected_outerplanar_graphs(int n) {
  if (n < 2) return {};
  if (n == 2) return {Graph({0, 1}, {make_edge(0, 1)})};
  std::vector<std::pair<int, int>> chords;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      chords.push_back({i, j});
    }
  }
  auto crosses = [](std::pair<int, int> x, std::pair<int, int> y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
  };
  auto canon = [n](const std::vector<std::pair<int, int>>& cs) {
    std::vector<std::pair<int, int>> best;
    bool have = false;
    for (int rot = 0; rot < n; ++rot) {
      for (int refl = 0; refl < 2; ++refl) {
        std::vector<std::pair<int, int>> img;
        for (auto [a, b] : cs) {
          int x = refl ? (n - a + rot) % n : (a + rot) % n;
          int y = refl ? (n - b + rot) % n : (b + rot) % n;
          img.push_back({std::min(x, y), std::max(x, y)});
        }
        std::sort(img.begin(), img.end());
        if (!have || img < best) {
          best = img;
          have = true;
        }
      }
    }
    return best;
  };
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<std::pair<int, int>> cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == chords.size()) {
      seen.insert(canon(cur));
      return;
    }
    go(i + 1);
    for (const auto& c : cur) {
      if (crosses(c, chords[i])) return;
    }
    cur.push_back(chords[i]);
    go(i + 1);
    cur.pop_back();
  };
  go(0);
  std::vector<Graph> out;
  for (const auto& cs : seen) {
    std::vector<Vertex> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
    for (auto [a, b] : cs) es.push_back(make_edge(a, b));
    out.emplace_back(vs, es);
  }
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::map<std::pair<int, int>, int> pair_bit;
  for (std::size_t i = 0; i < pairs.size(); ++i) pair_bit[pairs[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Bit images of every pair under every permutation.
  std::vector<std::vector<int>> image(perms.size(), std::vector<int>(pairs.size()));
  for (std::size_t p = 0; p < perms.size(); ++p) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      int a = perms[p][pairs[i].first], b = perms[p][pairs[i].second];
      image[p][i] = pair_bit[{std::min(a, b), std::max(a, b)}];
    }
  }
  std::set<std::uint32_t> reps;
  std::uint32_t total = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    // Connectivity by union-find on the mask.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int comps = n;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      int x = find(pairs[i].first), y = find(pairs[i].second);
      if (x != y) {
        parent[x] = y;
        --comps;
      }
    }
    if (comps != 1) continue;
    std::uint32_t best = mask;
    for (std::size_t p = 0; p < perms.size(); ++p) {
      std::uint32_t img = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) img |= 1u << image[p][i];
      }
      best = std::min(best, img);
    }
    reps.insert(best);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask : reps) {
    std::vector<Vertex> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) es.push_back(make_edge(pairs[i].first, pairs[i].second));
    }
    out.emplace_back(vs, es);
  }
  return out;
}

std::vector<std::map<Vertex, std::int64_t>> demand_vectors(const Graph& g, Vertex root, std::int64_t demand_max,
                                                           std::int64_t total_max) {
  std::vector<std::map<Vertex, std::int64_t>> out;
  const auto& vs = g.vertices();
  std::map<Vertex, std::int64_t> cur;
  std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t sum) {
    if (total_max > 0 && sum > total_max) return;
    if (i == vs.size()) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t b = vs[i] == root ? 1 : 0; b <= demand_max; ++b) {
      cur[vs[i]] = b;
      go(i + 1, sum + b);
    }
  };
  go(0, 0);
  return out;
}

std::string describe_instance(const Instance& inst) {
  std::ostringstream os;
  os << "edges {";
  bool first = true;
  for (const auto& e : inst.graph.edges()) {
    os << (first ? "" : ",") << inst.name(e.a) << "-" << inst.name(e.b);
    first = false;
  }
  os << "} root " << inst.name(inst.root) << " demands {";
  first = true;
  for (Vertex v : inst.graph.vertices()) {
    os << (first ? "" : ",") << inst.name(v) << ":" << inst.demand(v);
    first = false;
  }
  os << "} costs {";
  first = true;
  for (const auto& c : inst.costs) {
    os << (first ? "" : ",") << format_rational(c);
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace pyramid
