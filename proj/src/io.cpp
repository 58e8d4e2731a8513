#include "pyramid/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace pyramid {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ws(raw);
    Line l{number, {}};
    for (std::string w; ws >> w;) l.words.push_back(w);
    if (!l.words.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
  throw InputError("line " + std::to_string(l.number) + ": " + msg);
}

std::int64_t parse_int(const Line& l, const std::string& w) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(w, &used);
    if (used != w.size()) fail(l, "not an integer: " + w);
    return v;
  } catch (const std::logic_error&) {
    fail(l, "not an integer: " + w);
  }
}

std::map<std::string, Vertex> name_index(const Instance& inst) {
  std::map<std::string, Vertex> idx;
  for (Vertex v : inst.graph.vertices()) idx[inst.name(v)] = v;
  return idx;
}

std::string path_line(const Instance& inst, const RoutePath& p) {
  std::string s = "path";
  for (Vertex x : p) s += " " + inst.name(x);
  return s + "\n";
}

RoutePath parse_path(const Line& l, const std::map<std::string, Vertex>& idx) {
  if (l.words.size() < 2) fail(l, "path needs at least one vertex");
  RoutePath p;
  for (std::size_t i = 1; i < l.words.size(); ++i) {
    auto it = idx.find(l.words[i]);
    if (it == idx.end()) fail(l, "unknown vertex " + l.words[i]);
    p.push_back(it->second);
  }
  return p;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::map<std::string, Vertex> idx;
  std::map<Vertex, std::string> names;
  std::map<Vertex, std::int64_t> demands;
  std::vector<Edge> edges;
  std::map<Edge, Rational> costs;
  std::optional<Vertex> root;
  std::vector<std::pair<Line, std::string>> root_lines;
  for (const auto& l : tokenize(text)) {
    const auto& w = l.words;
    auto vertex = [&](const std::string& id) {
      auto it = idx.find(id);
      if (it == idx.end()) fail(l, "unknown vertex " + id);
      return it->second;
    };
    if (w[0] == "vertex") {
      if (w.size() != 2 && !(w.size() == 4 && w[2] == "demand")) fail(l, "expected: vertex <id> demand <int>");
      if (idx.count(w[1])) fail(l, "duplicate vertex " + w[1]);
      Vertex v = static_cast<Vertex>(idx.size());
      idx[w[1]] = v;
      names[v] = w[1];
      demands[v] = w.size() == 4 ? parse_int(l, w[3]) : 0;
      if (demands[v] < 0) fail(l, "negative demand");
    } else if (w[0] == "edge") {
      if (w.size() != 3 && !(w.size() == 5 && w[3] == "cost")) fail(l, "expected: edge <id> <id> cost <rational>");
      Vertex a = vertex(w[1]), b = vertex(w[2]);
      if (a == b) fail(l, "self-loop at " + w[1]);
      Edge e = make_edge(a, b);
      if (costs.count(e)) fail(l, "duplicate edge " + w[1] + " " + w[2]);
      Rational c = 1;
      if (w.size() == 5) {
        try {
          c = parse_rational(w[4]);
        } catch (const InputError& ex) {
          fail(l, ex.what());
        }
      }
      if (c < 0) fail(l, "negative cost");
      edges.push_back(e);
      costs[e] = c;
    } else if (w[0] == "root") {
      if (w.size() != 2) fail(l, "expected: root <id>");
      if (root) fail(l, "second root line");
      root = vertex(w[1]);
    } else {
      fail(l, "unknown keyword " + w[0]);
    }
  }
  if (!root) throw InputError("missing root");
  std::vector<Vertex> vs;
  for (const auto& [v, n] : names) vs.push_back(v);
  Graph g(vs, edges);
  std::int64_t k = 0;
  for (const auto& [v, b] : demands) k += b;
  if (k < 1) throw InputError("k must be ≥ 1");
  if (demands[*root] < 1) throw InputError("root demand must be ≥ 1 (the root is a terminal)");
  std::vector<Rational> cv;
  for (const auto& e : g.edges()) cv.push_back(costs.at(e));
  return make_instance(g, *root, demands, cv, names);
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  for (Vertex v : inst.graph.vertices()) out << "vertex " << inst.name(v) << " demand " << inst.demand(v) << "\n";
  for (std::size_t i = 0; i < inst.graph.num_edges(); ++i) {
    const auto& e = inst.graph.edges()[i];
    out << "edge " << inst.name(e.a) << " " << inst.name(e.b) << " cost " << format_rational(inst.costs[i]) << "\n";
  }
  out << "root " << inst.name(inst.root) << "\n";
  return out.str();
}

Routing parse_routing(const std::string& text, const Instance& inst) {
  auto idx = name_index(inst);
  Routing rt;
  for (const auto& l : tokenize(text)) {
    if (l.words[0] != "path") fail(l, "expected: path <v0> ... <vk>");
    rt.paths.push_back(parse_path(l, idx));
  }
  rt.canonicalize();
  return rt;
}

std::string emit_routing(const Instance& inst, const Routing& rt) {
  std::string s;
  for (const auto& p : rt.canonical().paths) s += path_line(inst, p);
  return s;
}

CertificateFile parse_certificate(const std::string& text, const Instance& inst) {
  auto idx = name_index(inst);
  CertificateFile cf;
  for (const auto& l : tokenize(text)) {
    const auto& w = l.words;
    if (w[0] == "tree") {
      if (w.size() != 3 || w[1] != "lambda") fail(l, "expected: tree lambda <p/q>");
      try {
        cf.cert.entries.push_back({Routing{}, parse_rational(w[2])});
      } catch (const InputError& ex) {
        fail(l, ex.what());
      }
    } else if (w[0] == "path") {
      if (cf.cert.entries.empty()) fail(l, "path outside a tree block");
      cf.cert.entries.back().tree.paths.push_back(parse_path(l, idx));
    } else if (w[0] == "target-cost") {
      if (w.size() != 2) fail(l, "expected: target-cost <p/q>");
      try {
        cf.target_cost = parse_rational(w[1]);
      } catch (const InputError& ex) {
        fail(l, ex.what());
      }
    } else {
      fail(l, "unknown keyword " + w[0]);
    }
  }
  Rational sum = 0;
  for (auto& en : cf.cert.entries) {
    en.tree.canonicalize();
    sum += en.lambda;
  }
  if (sum != 1) throw InputError("coefficients sum to " + format_rational(sum));
  return cf;
}

std::string emit_certificate(const Instance& inst, const Certificate& cert, const Routing* target) {
  std::string s;
  for (const auto& en : normalize_certificate(cert).entries) {
    s += "tree lambda " + format_rational(en.lambda) + "\n";
    for (const auto& p : en.tree.paths) s += path_line(inst, p);
  }
  if (target) s += "target-cost " + format_rational(routing_cost(inst, *target)) + "\n";
  return s;
}

std::string emit_report(const SearchReport& rep) {
  std::ostringstream out;
  if (rep.truncated) out << "TRUNCATED: some enumerations hit their caps\n";
  out << rep.violations.size() << " violations / " << rep.instances_checked << " instances (seed " << rep.seed;
  for (const auto& [k, v] : rep.caps) out << ", " << k << "=" << v;
  out << ")\n";
  for (const auto& v : rep.violations) {
    out << "violation: " << v.instance;
    if (!v.routing.empty()) out << " | " << v.routing;
    out << " | " << v.diagnosis << "\n";
  }
  if (rep.non_outerplanar_checked) out << "non-outerplanar instances checked: " << rep.non_outerplanar_checked << "\n";
  for (const auto& o : rep.observations) out << "observation: " << o << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pyramid
