#include "graphs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace chordmat {

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int n) {
  if (n < 0 || n > kMaxElements) fail(ErrorCode::InvalidArgument, "graph order outside [0,64]");
  adj_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order(); ++v) twice += degree(v);
  return twice / 2;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= order() || v >= order()) {
    fail(ErrorCode::InvalidArgument, "invalid simple-graph edge");
  }
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimpleGraph::is_clique(ElementSet vertices) const {
  for (int v : vertices) {
    if (!vertices.without(v).subset_of(neighbors(v))) return false;
  }
  return true;
}

bool SimpleGraph::connected_within(ElementSet vertices) const {
  if (vertices.empty()) return true;
  ElementSet reached = ElementSet::single(vertices.min());
  ElementSet frontier = reached;
  while (!frontier.empty()) {
    ElementSet next;
    for (int v : frontier) next |= neighbors(v);
    next = (next & vertices) - reached;
    reached |= next;
    frontier = next;
  }
  return reached == vertices;
}

bool SimpleGraph::is_connected() const { return connected_within(ElementSet::full(order())); }

bool SimpleGraph::is_two_connected() const {
  if (order() < 3 || !is_connected()) return false;
  const ElementSet all = ElementSet::full(order());
  for (int v = 0; v < order(); ++v) {
    if (!connected_within(all.without(v))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// LabeledGraph

LabeledGraph::LabeledGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges_by_label)
    : names_(std::move(vertex_names)), edges_(std::move(edges_by_label)) {
  if (order() > kMaxElements || size() > kMaxElements) {
    fail(ErrorCode::InvalidArgument, "graphs are limited to 64 vertices and 64 edges");
  }
  std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != names_.size()) fail(ErrorCode::InvalidArgument, "duplicate vertex name");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= order() || e.v >= order()) {
      fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
  }
}

LabeledGraph LabeledGraph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> names;
  for (int i = 1; i <= order; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return LabeledGraph(std::move(names), std::move(list));
}

int LabeledGraph::vertex_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool LabeledGraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u == e.v) return false;
    if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
  }
  return true;
}

bool LabeledGraph::is_connected() const {
  // Built directly: connectivity does not care about parallel edges or loops.
  SimpleGraph g(order());
  for (const Edge& e : edges_) {
    if (e.u != e.v && !g.has_edge(e.u, e.v)) g.add_edge(e.u, e.v);
  }
  return g.is_connected();
}

SimpleGraph LabeledGraph::to_simple() const {
  if (!is_simple()) fail(ErrorCode::NotSimpleGraph, "graph has a self-loop or parallel edges");
  SimpleGraph g(order());
  for (const Edge& e : edges_) g.add_edge(e.u, e.v);
  return g;
}

// ---------------------------------------------------------------------------
// Matroids of a graph

BinaryMatroid cycle_matroid(const LabeledGraph& g) {
  gf2::Matrix incidence(g.order(), g.size());
  for (int label = 0; label < g.size(); ++label) {
    const Edge& e = g.edge(label);
    if (e.u == e.v) continue;  // a self-loop is a zero column
    incidence.set(e.u, label, true);
    incidence.set(e.v, label, true);
  }
  return BinaryMatroid(std::move(incidence));
}

BinaryMatroid cocycle_matroid(const LabeledGraph& g) {
  if (!g.is_connected()) fail(ErrorCode::NotConnected, "cocycle matroid needs a connected graph");
  return dual(cycle_matroid(g));
}

// ---------------------------------------------------------------------------
// Chordal graphs and S-labelings

bool is_slabeling(const SimpleGraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.order()) return false;
  ElementSet placed;
  for (int v : order) {
    if (v < 0 || v >= g.order() || placed.contains(v)) return false;
    if (!g.is_clique(g.neighbors(v) & placed)) return false;
    placed.insert(v);
  }
  return true;
}

std::optional<std::vector<int>> is_chordal_graph(const SimpleGraph& g) {
  std::vector<int> weight(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> order;
  ElementSet numbered;
  for (int step = 0; step < g.order(); ++step) {
    int best = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (!numbered.contains(v) && (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])) {
        best = v;
      }
    }
    order.push_back(best);
    numbered.insert(best);
    for (int w : g.neighbors(best)) ++weight[static_cast<std::size_t>(w)];
  }
  if (!is_slabeling(g, order)) return std::nullopt;
  return order;
}

std::optional<std::vector<int>> is_chordal_graph(const LabeledGraph& g) {
  return is_chordal_graph(g.to_simple());
}

namespace {

void check_vertex_cap(const SimpleGraph& g, const Limits& limits) {
  if (g.order() > limits.max_graph_vertices) {
    fail(ErrorCode::EnumerationCapExceeded, "permutation search over " + std::to_string(g.order()) +
                                                " vertices exceeds cap " +
                                                std::to_string(limits.max_graph_vertices));
  }
}

/// Extends `prefix` in increasing vertex order; `emit` sees each complete labeling.
void extend_labelings(const SimpleGraph& g, std::vector<int>& prefix, ElementSet placed,
                      const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(prefix.size()) == g.order()) {
    emit(prefix);
    return;
  }
  for (int v = 0; v < g.order(); ++v) {
    if (placed.contains(v) || !g.is_clique(g.neighbors(v) & placed)) continue;
    prefix.push_back(v);
    extend_labelings(g, prefix, placed.with(v), emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> s_labelings(const SimpleGraph& g, const Limits& limits) {
  check_vertex_cap(g, limits);
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  extend_labelings(g, prefix, {}, [&](const std::vector<int>& order) { out.push_back(order); });
  return out;
}

std::vector<std::vector<int>> s_labelings(const LabeledGraph& g, const Limits& limits) {
  return s_labelings(g.to_simple(), limits);
}

std::uint64_t count_s_labelings(const SimpleGraph& g, const Limits& limits) {
  check_vertex_cap(g, limits);
  std::uint64_t count = 0;
  std::vector<int> prefix;
  extend_labelings(g, prefix, {}, [&](const std::vector<int>&) { ++count; });
  return count;
}

MChain slabel_to_mchain(const LabeledGraph& g, const std::vector<int>& order, const ChainValidator* validator) {
  const SimpleGraph simple = g.to_simple();
  if (order.empty()) fail(ErrorCode::InvalidSLabel, "graph has no vertices");
  if (!is_slabeling(simple, order)) fail(ErrorCode::InvalidSLabel, "order is not an S-labeling");
  if (!simple.is_connected()) fail(ErrorCode::InvalidSLabel, "graph is not connected");

  MChain chain{{ElementSet{}}};
  ElementSet prefix = ElementSet::single(order.front());
  for (std::size_t i = 1; i < order.size(); ++i) {
    prefix.insert(order[i]);
    ElementSet flat;
    for (int label = 0; label < g.size(); ++label) {
      if (prefix.contains(g.edge(label).u) && prefix.contains(g.edge(label).v)) flat.insert(label);
    }
    chain.flats.push_back(flat);
  }

  try {
    if (validator != nullptr) {
      validator->validate(chain);
    } else {
      ChainValidator(cycle_matroid(g)).validate(chain);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidChain) throw;
    fail(ErrorCode::InvalidSLabel, e.what());
  }
  return chain;
}

// ---------------------------------------------------------------------------
// S-graphs

SimpleGraph SGraph::graph() const { return SimpleGraph(static_cast<int>(blocks.size()), edges); }

std::string SGraph::to_dot(const std::string& name) const {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out << "  P" << i + 1 << " [label=\"P" << i + 1 << ' ' << blocks[i].to_string() << "\"];\n";
  }
  for (auto [a, b] : edges) out << "  P" << a + 1 << " -- P" << b + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string SGraph::edge_list() const {
  std::ostringstream out;
  for (auto [a, b] : edges) out << 'P' << a + 1 << " -- P" << b + 1 << '\n';
  return out.str();
}

SGraph sgraph_of(const BinaryMatroid& m, const MPartition& partition, const ChainValidator* validator) {
  require_simple(m);
  ElementSet seen;
  for (ElementSet block : partition.blocks) {
    if (block.empty()) fail(ErrorCode::InvalidPartition, "empty block");
    if (block.intersects(seen)) fail(ErrorCode::InvalidPartition, "blocks are not disjoint");
    seen |= block;
  }
  if (seen != m.ground_set()) fail(ErrorCode::InvalidPartition, "blocks do not cover the ground set");

  const MChain chain = chain_from_partition(partition);
  std::optional<ChainValidator> owned;
  if (validator == nullptr) validator = &owned.emplace(m);
  if (!validator->is_valid(chain)) {
    fail(ErrorCode::InvalidPartition, partition.to_string() + " does not come from an M-chain");
  }

  SGraph sg;
  sg.blocks = partition.blocks;
  std::set<std::pair<int, int>> edges;
  for (const Flat& line : nontrivial_lines(validator->lattice())) {
    std::vector<int> met;
    for (std::size_t i = 0; i < sg.blocks.size(); ++i) {
      if (line.elements.intersects(sg.blocks[i])) met.push_back(static_cast<int>(i));
    }
    for (std::size_t a = 0; a < met.size(); ++a) {
      for (std::size_t b = a + 1; b < met.size(); ++b) edges.emplace(met[a], met[b]);
    }
  }
  sg.edges.assign(edges.begin(), edges.end());
  return sg;
}

SGraph derived_sgraph(const LabeledGraph& g, const std::vector<int>& order, const ChainValidator* validator) {
  std::optional<ChainValidator> owned;
  if (validator == nullptr) validator = &owned.emplace(cycle_matroid(g));
  const MChain chain = slabel_to_mchain(g, order, validator);
  return sgraph_of(validator->matroid(), mpartition(chain), validator);
}

bool subgraph_embedding_check(const LabeledGraph& g, const std::vector<int>& order, const SGraph& sg) {
  const SimpleGraph simple = g.to_simple();
  for (auto [i, j] : sg.edges) {
    // Block P_(k+1) (0-based k) goes to v_(k+2), i.e. order[k + 1].
    const auto a = static_cast<std::size_t>(i + 1);
    const auto b = static_cast<std::size_t>(j + 1);
    if (b >= order.size() || !simple.has_edge(order[a], order[b])) return false;
  }
  return true;
}

LabeledGraph cone(const LabeledGraph& g) {
  std::vector<std::string> names = g.vertex_names();
  std::string apex = "v0";
  while (g.vertex_index(apex) >= 0) apex += "'";
  names.push_back(apex);
  std::vector<Edge> edges = g.edges();
  const int apex_index = g.order();
  for (int v = 0; v < g.order(); ++v) edges.push_back({v, apex_index});
  return LabeledGraph(std::move(names), std::move(edges));
}

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b, const Limits& limits) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  check_vertex_cap(a, limits);
  const int n = a.order();
  std::vector<int> deg_a(static_cast<std::size_t>(n));
  std::vector<int> deg_b(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    deg_a[static_cast<std::size_t>(v)] = a.degree(v);
    deg_b[static_cast<std::size_t>(v)] = b.degree(v);
  }
  std::vector<int> sorted_a = deg_a;
  std::vector<int> sorted_b = deg_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::function<bool(int, ElementSet)> assign = [&](int v, ElementSet used) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used.contains(w) || deg_b[static_cast<std::size_t>(w)] != deg_a[static_cast<std::size_t>(v)]) continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u) {
        consistent = a.has_edge(u, v) == b.has_edge(image[static_cast<std::size_t>(u)], w);
      }
      if (!consistent) continue;
      image[static_cast<std::size_t>(v)] = w;
      if (assign(v + 1, used.with(w))) return true;
    }
    return false;
  };
  return assign(0, {});
}

}  // namespace chordmat
