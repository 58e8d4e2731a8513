#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pyramid {

using Vertex = int;

struct Edge {
  Vertex a = 0;
  Vertex b = 0;  // a < b always

  auto operator<=>(const Edge&) const = default;
  bool has(Vertex v) const { return a == v || b == v; }
  Vertex other(Vertex v) const { return v == a ? b : a; }
};

Edge make_edge(Vertex x, Vertex y);

class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(Vertex v) const;
  bool has_edge(Vertex x, Vertex y) const { return edge_index(x, y).has_value(); }
  std::optional<std::size_t> edge_index(Vertex x, Vertex y) const;
  std::size_t index_of(const Edge& e) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;
  Vertex max_label() const;

  bool is_connected() const;
  bool is_two_connected() const;

  Graph without_edge(const Edge& e) const;
  Graph without_vertices(const std::set<Vertex>& drop) const;
  // Subgraph on exactly the given edges; vertices are their endpoints plus `extra`.
  Graph edge_subgraph(const std::vector<Edge>& keep, const std::vector<Vertex>& extra = {}) const;

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<Vertex, std::vector<Vertex>> adjacency_;
};

Graph cycle_graph(int n);

struct BlockDecomposition {
  std::vector<Graph> blocks;
  std::set<Vertex> cut_vertices;
  std::map<Edge, std::size_t> membership;
};

BlockDecomposition blocks(const Graph& g);

enum class MinorKind { DeleteEdge, ContractEdge };

struct MinorOp {
  MinorKind kind = MinorKind::DeleteEdge;
  Edge edge;
  Vertex kept = 0;     // s: the endpoint whose label the merged vertex keeps
  Vertex removed = 0;  // t
  Vertex merged_vertex = 0;
  std::map<Edge, Edge> edge_map;  // edge of the result -> edge of the original
  std::vector<Edge> discarded;    // parallel edges dropped by the merge
};

struct MinorResult {
  Graph graph;
  MinorOp op;
};

// For contractions the merged vertex keeps the label of `keep` (default: e.a).
MinorResult apply_minor_op(const Graph& g, MinorKind kind, const Edge& e,
                           std::optional<Vertex> keep = std::nullopt);

enum class GraphClass { Cycle, Ladder, OuterplanarOther, NonOuterplanar };

std::string to_string(GraphClass c);

GraphClass classify(const Graph& g);
bool is_outerplanar(const Graph& g);

// Outer Hamiltonian cycle with non-crossing chords, for a 2-connected outerplanar graph.
std::optional<std::vector<Vertex>> outer_cycle(const Graph& g);

// Exhaustive branch-set search for a K4 or K2,3 minor. Exponential; small graphs only.
bool has_forbidden_minor(const Graph& g);

using VertexPath = std::vector<Vertex>;

struct PathEnumeration {
  std::vector<VertexPath> paths;
  bool truncated = false;
};

PathEnumeration enumerate_simple_paths(const Graph& g, Vertex s, Vertex t, std::size_t cap);

struct LadderModel {
  std::vector<Vertex> outer_cycle;
  std::vector<Edge> rungs;                     // chords, in face order
  std::vector<VertexPath> rails;               // outer-cycle segments between rung endpoints
  std::vector<std::vector<Vertex>> faces;      // bounded faces, each in outer-cycle order
  std::vector<std::vector<Edge>> face_chords;  // chords on each face boundary
  std::size_t lowest_face = 0;
  Edge top_edge;
};

// Only for 2-connected outerplanar graphs of max degree <= 3 that are not cycles.
std::optional<LadderModel> build_ladder_model(const Graph& g);

struct LadderEmbedding {
  Graph ladder;
  std::vector<MinorOp> ops;
  std::vector<Graph> stages;  // stages[0] = ladder, stages[i+1] = stages[i] after ops[i]
};

LadderEmbedding embed_in_ladder(const Graph& g);

}  // namespace pyramid
