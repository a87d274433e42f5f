#pragma once

#include <vector>

#include "catalog.hpp"
#include "oracles.hpp"

namespace fixtures {

using namespace chordmat;

// 1-based labels, as written in the examples.
inline ElementSet S(std::initializer_list<int> labels) {
  ElementSet s;
  for (int l : labels) s.insert(l - 1);
  return s;
}

inline BinaryMatroid g0() { return cycle_matroid(catalog::fan_g0()); }
inline BinaryMatroid k33_dual() { return cocycle_matroid(catalog::complete_bipartite(3, 3)); }
inline BinaryMatroid kn(int k) { return cycle_matroid(catalog::complete_graph(k)); }
inline BinaryMatroid cn(int k) { return cycle_matroid(catalog::cycle_graph(k)); }

inline std::vector<oracle::Mask> columns(const BinaryMatroid& m) {
  std::vector<oracle::Mask> cols;
  for (int e = 0; e < m.size(); ++e) cols.push_back(m.matrix().column(e).bits());
  return cols;
}

inline std::vector<oracle::Mask> masks(const CircuitFamily& family) {
  std::vector<oracle::Mask> out;
  for (ElementSet c : family) out.push_back(c.bits());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ElementSet> sets(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<ElementSet> out;
  for (auto l : lists) out.push_back(S(l));
  return out;
}

inline MChain chain(std::initializer_list<std::initializer_list<int>> flats) { return MChain{sets(flats)}; }

// Labeled graph from an oracle graph, vertices v1..vn, edges in lexicographic order.
inline LabeledGraph labeled(const oracle::Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return LabeledGraph::from_edges(g.n, edges);
}

inline oracle::Graph unlabeled(const SimpleGraph& g) {
  oracle::Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add(u, v);
  return out;
}

// Small supersolvable and non-supersolvable matroids used by property tests.
inline std::vector<catalog::CatalogEntry> sample_catalog(int max_r = 3, int max_n = 7) {
  std::vector<catalog::CatalogEntry> out;
  catalog::for_each_simple_binary(max_r, max_n, [&](const catalog::CatalogEntry& e) { out.push_back(e); });
  return out;
}

inline const BinaryMatroid& binary(const catalog::CatalogEntry& e) { return std::get<BinaryMatroid>(e.matroid); }

}  // namespace fixtures
