#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid.hpp"
#include "supersolvable.hpp"

namespace chordmat {

/// Unlabeled simple graph on at most 64 vertices, adjacency as bit masks.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  ElementSet neighbors(int v) const { return ElementSet(adj_[static_cast<std::size_t>(v)]); }
  int degree(int v) const { return neighbors(v).size(); }
  bool has_edge(int u, int v) const { return neighbors(u).contains(v); }
  void add_edge(int u, int v);
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool is_clique(ElementSet vertices) const;
  bool is_connected() const;
  /// At least three vertices, and connected after deleting any one vertex.
  bool is_two_connected() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  bool connected_within(ElementSet vertices) const;
  std::vector<std::uint64_t> adj_;
};

struct Edge {
  int u = 0;
  int v = 0;
};

/// Multigraph whose edges carry the labels 1..n; edge(e) is the edge with
/// 0-based label e. Vertices are indexed 0..order()-1 and carry names.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges_by_label);
  /// Vertices named v1..v<order>; edges labelled in the given order.
  static LabeledGraph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(names_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int label) const { return edges_[static_cast<std::size_t>(label)]; }
  /// Index of the named vertex, or -1.
  int vertex_index(const std::string& name) const;

  /// No self-loops and no parallel edges.
  bool is_simple() const;
  bool is_connected() const;
  /// Throws NotSimpleGraph when the graph has loops or parallel edges.
  SimpleGraph to_simple() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

/// Vertex-edge incidence matrix over GF(2).
BinaryMatroid cycle_matroid(const LabeledGraph& g);

/// Dual of the cycle matroid; throws NotConnected.
BinaryMatroid cocycle_matroid(const LabeledGraph& g);

/// S-labeling check: every vertex's earlier neighbours form a clique.
/// This is the reverse of the usual perfect-elimination-order convention.
bool is_slabeling(const SimpleGraph& g, const std::vector<int>& order);

/// Maximum-cardinality search (lowest index wins ties) followed by the clique
/// check. Returns the S-labeling when the graph is chordal.
std::optional<std::vector<int>> is_chordal_graph(const SimpleGraph& g);
std::optional<std::vector<int>> is_chordal_graph(const LabeledGraph& g);

/// All S-labelings in lexicographic order. Throws EnumerationCapExceeded
/// above `limits.max_graph_vertices` vertices.
std::vector<std::vector<int>> s_labelings(const SimpleGraph& g, const Limits& limits = default_limits());
std::vector<std::vector<int>> s_labelings(const LabeledGraph& g, const Limits& limits = default_limits());
std::uint64_t count_s_labelings(const SimpleGraph& g, const Limits& limits = default_limits());

/// F_i = labels of edges with both ends among the first i+1 vertices of
/// `order`. The result is validated as an M-chain of the cycle matroid,
/// using `validator` when given (it must wrap cycle_matroid(g)).
MChain slabel_to_mchain(const LabeledGraph& g, const std::vector<int>& order,
                        const ChainValidator* validator = nullptr);

/// Graph on the blocks of an M-partition; blocks i and j are adjacent when a
/// nontrivial line meets both.
struct SGraph {
  std::vector<ElementSet> blocks;
  std::vector<std::pair<int, int>> edges;  // 0-based block indices, i < j, sorted

  SimpleGraph graph() const;
  /// Graphviz output with nodes P1..Pr labelled by their block contents.
  std::string to_dot(const std::string& name = "S") const;
  /// One `Pi -- Pj` line per edge.
  std::string edge_list() const;
};

/// Throws InvalidPartition unless the blocks come from an M-chain of the
/// simple binary matroid `m`.
SGraph sgraph_of(const BinaryMatroid& m, const MPartition& partition,
                 const ChainValidator* validator = nullptr);

/// S-graph of the cycle matroid under the M-partition of an S-labeling.
SGraph derived_sgraph(const LabeledGraph& g, const std::vector<int>& order,
                      const ChainValidator* validator = nullptr);

/// Checks that block edge {P_i, P_j} always maps to the graph edge
/// {v_(i+1), v_(j+1)} of the labeling (1-based positions).
bool subgraph_embedding_check(const LabeledGraph& g, const std::vector<int>& order, const SGraph& sg);

/// Adds a vertex adjacent to every vertex; new edges get labels n+1..n+m in
/// vertex order and the new vertex is the last one.
LabeledGraph cone(const LabeledGraph& g);

/// Brute-force vertex bijection search with degree pruning.
bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b, const Limits& limits = default_limits());

}  // namespace chordmat
