// Acceptance suite: one PASS/FAIL line per criterion, with timings.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "fixtures.hpp"

using namespace chordmat;
using namespace fixtures;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects counterexamples; keeps the first one for the report.
struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool condition, const std::string& what) {
    ++checked;
    if (condition) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checked << " checks";
    if (failures != 0) s << ", " << failures << " failures, first: " << first;
    return {failures == 0, s.str()};
  }
};

constexpr int kMaxR = 4;
constexpr int kMaxN = 9;

const std::vector<int> kIdentity5{0, 1, 2, 3, 4};

const MChain& g0_chain() {
  static const MChain c = chain({{}, {1}, {1, 2, 3}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6, 7}});
  return c;
}

std::string describe(const LabeledGraph& g) {
  std::string s = std::to_string(g.order()) + " vertices:";
  for (const Edge& e : g.edges()) s += " " + g.name(e.u) + g.name(e.v);
  return s;
}

bool is_complete(const SimpleGraph& g) { return g.edge_count() == g.order() * (g.order() - 1) / 2; }

void sweep(const std::function<void(const catalog::CatalogEntry&, const BinaryMatroid&)>& visit) {
  catalog::for_each_simple_binary(kMaxR, kMaxN, [&](const catalog::CatalogEntry& e) { visit(e, binary(e)); });
}

// ---- criteria ------------------------------------------------------------------

Outcome g0_chain_and_partition() {
  Tally t;
  const BinaryMatroid m = g0();
  const auto all = all_mchains(m);
  t.expect(std::find(all.begin(), all.end(), g0_chain()) != all.end(), "chain missing from all_mchains");
  const auto first = find_mchain(m);
  t.expect(first && *first == g0_chain(), "first chain differs");
  const MChain from_label = slabel_to_mchain(catalog::fan_g0(), kIdentity5);
  t.expect(from_label == g0_chain(), "S-label chain differs");
  const MPartition p = mpartition(g0_chain());
  t.expect(p.blocks == sets({{1}, {2, 3}, {4, 5}, {6, 7}}), "partition " + p.to_string());
  return t.outcome(g0_chain().to_string() + " with partition " + p.to_string());
}

Outcome sgraph_examples() {
  Tally t;
  const BinaryMatroid m = g0();
  const SGraph path = sgraph_of(m, MPartition{sets({{1}, {2, 3}, {4, 5}, {6, 7}})});
  t.expect(path.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}}, "path: " + path.edge_list());
  const SGraph star = sgraph_of(m, MPartition{sets({{4}, {3, 5}, {1, 2}, {6, 7}})});
  t.expect(star.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}}, "star: " + star.edge_list());
  t.expect(star.graph().degree(1) == 3, "P2 is not the centre");
  std::size_t partitions = 0;
  for (int l = 3; l <= 5; ++l) {
    const BinaryMatroid k = kn(l);
    const ChainValidator validator(k);
    for (const MChain& c : all_mchains(k)) {
      ++partitions;
      const SimpleGraph sg = sgraph_of(k, mpartition(c), &validator).graph();
      t.expect(sg.order() == l - 1 && is_complete(sg), "M(K" + std::to_string(l) + ") " + c.to_string());
    }
  }
  return t.outcome("path, K1,3 and " + std::to_string(partitions) + " complete-graph partitions");
}

Outcome counterexample_pair() {
  Tally t;
  const auto fano = catalog::analyze(*catalog::builtin("fano"));
  t.expect(fano.supersolvable == true, "Fano not supersolvable");
  t.expect(fano.chordal == true, "Fano not chordal");
  const auto k33 = catalog::analyze(catalog::entry_of(k33_dual(), "cocycle K3,3"));
  t.expect(k33.chordal == true, "M*(K3,3) not chordal");
  t.expect(k33.supersolvable == false, "M*(K3,3) supersolvable");
  return t.outcome("Fano supersolvable+chordal, M*(K3,3) chordal only");
}

Outcome supersolvable_implies_chordal() {
  Tally t;
  std::size_t entries = 0;
  std::size_t supersolvable = 0;
  std::size_t chordal_only = 0;
  sweep([&](const catalog::CatalogEntry& e, const BinaryMatroid& m) {
    ++entries;
    const bool ss = find_mchain(m).has_value();
    const bool ch = is_chordal(m);
    supersolvable += ss;
    chordal_only += ch && !ss;
    if (ss) t.expect(ch, e.id);
  });
  std::ostringstream s;
  s << entries << " matroids, " << supersolvable << " supersolvable, " << chordal_only
    << " chordal but not supersolvable";
  return t.outcome(s.str());
}

Outcome three_way_equivalence() {
  Tally t;
  std::size_t entries = 0;
  sweep([&](const catalog::CatalogEntry& e, const BinaryMatroid& m) {
    ++entries;
    if (m.size() > 12) return;
    for (int ell = 2; ell <= 4; ++ell) {
      const EquivalenceReport r = equivalence_report(m, ell);
      t.expect(r.consistent(), e.id + " ell=" + std::to_string(ell));
    }
  });
  return t.outcome(std::to_string(entries) + " matroids x ell in {2,3,4}");
}

Outcome chord_iff_closure() {
  Tally t;
  sweep([&](const catalog::CatalogEntry& e, const BinaryMatroid& m) {
    for (ElementSet c : circuits(m)) {
      t.expect(find_chord(m, c).has_value() == (m.closure_set(c) != c), e.id + " circuit " + c.to_string());
    }
  });
  const GeneralMatroid u = catalog::u24();
  t.expect(!find_chord(u, S({1, 2, 3})).has_value(), "U(2,4) {1,2,3} has a chord");
  t.expect(u.closure_set(S({1, 2, 3})) == S({1, 2, 3, 4}), "U(2,4) closure");
  return t.outcome("every catalog circuit, plus U(2,4)");
}

Outcome sgraphs_are_chordal() {
  Tally t;
  std::size_t chains = 0;
  sweep([&](const catalog::CatalogEntry& e, const BinaryMatroid& m) {
    const auto all = all_mchains(m);
    if (all.empty()) return;
    const ChainValidator validator(m);
    for (const MChain& c : all) {
      ++chains;
      const SimpleGraph g = sgraph_of(m, mpartition(c), &validator).graph();
      const int last = g.order() - 1;
      t.expect(is_chordal_graph(g).has_value(), e.id + " " + c.to_string() + " not chordal");
      t.expect(g.is_clique(g.neighbors(last)), e.id + " " + c.to_string() + " last block not simplicial");
    }
  });
  return t.outcome(std::to_string(chains) + " M-chains");
}

Outcome deformation_connected() {
  Tally t;
  std::size_t matroids = 0;
  sweep([&](const catalog::CatalogEntry& e, const BinaryMatroid& m) {
    const auto all = all_mchains(m);
    if (all.empty()) return;
    ++matroids;
    t.expect(deformation_graph_connected(all), e.id);
  });
  return t.outcome(std::to_string(matroids) + " supersolvable matroids");
}

// Connected graphs on 1..6 vertices, one per isomorphism class.
const std::vector<oracle::Graph>& small_graphs() {
  static const std::vector<oracle::Graph> graphs = [] {
    std::vector<oracle::Graph> out;
    for (int n = 1; n <= 6; ++n) {
      for (auto& g : oracle::connected_classes(n)) out.push_back(std::move(g));
    }
    return out;
  }();
  return graphs;
}

Outcome dirac_stanley() {
  Tally t;
  std::size_t chordal = 0;
  for (const auto& og : small_graphs()) {
    const LabeledGraph g = labeled(og);
    const bool ss = find_mchain(cycle_matroid(g)).has_value();
    const bool ch = is_chordal_graph(g).has_value();
    chordal += ch;
    t.expect(ss == ch, describe(g));
    t.expect(ch == oracle::chordal(og), "recognition disagrees with oracle");
  }
  return t.outcome(std::to_string(small_graphs().size()) + " graphs, " + std::to_string(chordal) + " chordal");
}

Outcome slabel_count_check() {
  Tally t;
  std::size_t graphs = 0;
  for (const auto& og : small_graphs()) {
    if (!oracle::two_connected(og) || !oracle::chordal(og)) continue;
    ++graphs;
    const LabeledGraph g = labeled(og);
    const std::uint64_t labelings = s_labelings(g).size();
    const std::uint64_t chains = all_mchains(cycle_matroid(g)).size();
    t.expect(labelings == 2 * chains, describe(g) + ": " + std::to_string(labelings) + " vs " + std::to_string(chains));
  }
  const auto k4 = catalog::complete_graph(4);
  const std::size_t l = s_labelings(k4).size();
  const std::size_t c = all_mchains(cycle_matroid(k4)).size();
  t.expect(l == 24 && c == 12, "K4 gives " + std::to_string(l) + " and " + std::to_string(c));
  return t.outcome(std::to_string(graphs) + " 2-connected chordal graphs, K4: 24 = 2 x 12");
}

// Criteria 11 and 12 share the enumeration of (graph, S-labeling) cases.
struct ConeResults {
  Tally cone;
  Tally embed;
  std::size_t cases = 0;
};

const ConeResults& cone_results() {
  static const ConeResults results = [] {
    ConeResults r;
    for (const auto& og : small_graphs()) {
      if (!oracle::chordal(og)) continue;
      const LabeledGraph g = labeled(og);
      const LabeledGraph coned = cone(g);
      const ChainValidator own(cycle_matroid(g));
      const ChainValidator big(cycle_matroid(coned));
      const int apex = coned.order() - 1;
      for (const auto& order : s_labelings(g)) {
        ++r.cases;
        std::vector<int> cone_order{apex};
        cone_order.insert(cone_order.end(), order.begin(), order.end());
        const SimpleGraph derived = derived_sgraph(coned, cone_order, &big).graph();
        const bool iso = graphs_isomorphic(derived, g.to_simple());
        r.cone.expect(iso, describe(g));
        r.cone.expect(iso == oracle::isomorphic(unlabeled(derived), og), "isomorphism disagrees with oracle");
        const SGraph sg = derived_sgraph(g, order, &own);
        r.embed.expect(subgraph_embedding_check(g, order, sg), describe(g));
      }
    }
    return r;
  }();
  return results;
}

Outcome cone_isomorphic() {
  const ConeResults& r = cone_results();
  return r.cone.outcome(std::to_string(r.cases) + " (graph, S-labeling) cases");
}

Outcome derived_embeds() {
  const ConeResults& r = cone_results();
  return r.embed.outcome(std::to_string(r.cases) + " (graph, S-labeling) cases");
}

Outcome oracle_equivalences() {
  Tally t;
  std::size_t matroids = 0;
  auto closure_check = [&](const std::string& id, const BinaryMatroid& m) {
    ++matroids;
    const auto family = masks(circuits(m));
    for (oracle::Mask x = 0; x < (oracle::Mask{1} << m.size()); ++x) {
      t.expect(m.closure_set(ElementSet(x)).bits() == oracle::closure_by_circuits(family, x),
               id + " X=" + ElementSet(x).to_string());
    }
  };
  catalog::for_each_simple_binary(kMaxR, 8, [&](const catalog::CatalogEntry& e) { closure_check(e.id, binary(e)); });
  // loops and parallel elements too
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    std::vector<std::uint64_t> cols(1 + seed % 8);
    std::uint64_t state = seed * 0x9E3779B97F4A7C15ULL + 1;
    for (auto& c : cols) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      c = state % 16;
    }
    closure_check("random " + std::to_string(seed), BinaryMatroid::from_columns(cols, 4));
  }

  std::size_t graphs = 0;
  for (int n = 1; n <= 7; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t code = 0; code < (1U << pairs); ++code) {
      ++graphs;
      const oracle::Graph og = oracle::from_code(n, code);
      SimpleGraph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (og.edge(u, v)) g.add_edge(u, v);
      t.expect(is_chordal_graph(g).has_value() == oracle::chordal(og),
               "graph n=" + std::to_string(n) + " code=" + std::to_string(code));
    }
  }
  return t.outcome(std::to_string(matroids) + " matroids (all subsets), " + std::to_string(graphs) +
                   " labelled graphs");
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "G0 M-chain and M-partition", 1, g0_chain_and_partition},
      {2, "S-graph examples", 5, sgraph_examples},
      {3, "Fano and M*(K3,3) verdicts", 10, counterexample_pair},
      {4, "supersolvable implies chordal (r<=4, n<=9)", 600, supersolvable_implies_chordal},
      {5, "three-way equivalence for ell = 2, 3, 4", 600, three_way_equivalence},
      {6, "chord iff closure grows; U(2,4) counterexample", 60, chord_iff_closure},
      {7, "S-graphs are chordal with a simplicial last block", 600, sgraphs_are_chordal},
      {8, "elementary deformations connect all M-chains", 600, deformation_connected},
      {9, "M(G) supersolvable iff G chordal (<= 6 vertices)", 300, dirac_stanley},
      {10, "S-labelings = 2 x M-chains on 2-connected chordal graphs", 300, slabel_count_check},
      {11, "derived S-graph of the cone is isomorphic to G", 300, cone_isomorphic},
      {12, "derived S-graph embeds in G", 300, derived_embeds},
      {13, "closure and chordality oracles agree", 300, oracle_equivalences},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      o.ok = false;
      o.detail += ", over the time budget";
    }
    failed += o.ok ? 0 : 1;
    std::printf("%s %2d  %-58s %8.3fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
