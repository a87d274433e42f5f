#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chordality.hpp"
#include "graphs.hpp"
#include "supersolvable.hpp"

namespace chordmat::catalog {

// Named constructions ------------------------------------------------------

/// PG(2,2): the seven nonzero vectors of GF(2)^3, element i = binary i.
BinaryMatroid fano();
/// U(2,4): every 3-subset of [4] is a circuit. Not binary.
GeneralMatroid u24();
/// The five-vertex fan G0 (v1 joined to the path v2..v5), edge labels
/// 1=v1v2 2=v2v3 3=v1v3 4=v3v4 5=v1v4 6=v4v5 7=v1v5.
LabeledGraph fan_g0();
/// K_k with edges {v_i, v_j}, i < j, labelled in lexicographic order.
LabeledGraph complete_graph(int k);
/// K_{a,b}: parts u1..ua and w1..wb, edges labelled u-major.
LabeledGraph complete_bipartite(int a, int b);
/// Cycle v1 v2 ... vk v1, edge i = {v_i, v_(i+1)}.
LabeledGraph cycle_graph(int k);
LabeledGraph path_graph(int k);

struct CatalogEntry {
  std::string id;
  std::variant<BinaryMatroid, GeneralMatroid> matroid;
  std::string provenance;
};

/// Builtin names: fano, u24, g0, k<k>, k<a>,<b>, c<k>, p<k>. Graph builders
/// yield their cycle matroid, or the cocycle matroid when `cocycle` is set.
std::optional<CatalogEntry> builtin(const std::string& name, bool cocycle = false);
std::optional<LabeledGraph> builtin_graph(const std::string& name);
std::vector<std::string> builtin_names();

CatalogEntry entry_of(BinaryMatroid m, std::string provenance);
CatalogEntry entry_of(GeneralMatroid m, std::string provenance);

// Exhaustive enumeration ---------------------------------------------------

/// Streams every simple binary matroid of rank 1..max_r on at most max_n
/// elements, as column sets of nonzero vectors of GF(2)^r that span GF(2)^r.
/// Order: rank, then size, then lexicographic column subsets. Entries are
/// distinct as column sets; linearly equivalent copies are kept.
class SimpleBinaryEnumerator {
 public:
  SimpleBinaryEnumerator(int max_r, int max_n, const Limits& limits = default_limits());
  std::optional<CatalogEntry> next();

 private:
  bool advance();
  int max_r_;
  int max_n_;
  int rank_ = 1;
  int size_ = 1;
  std::vector<int> combo_;  // indices into 1..2^rank-1, increasing
  bool fresh_ = true;
  bool done_ = false;
};

void for_each_simple_binary(int max_r, int max_n, const std::function<void(const CatalogEntry&)>& visit,
                            const Limits& limits = default_limits());

// Analysis -------------------------------------------------------------------

struct AnalysisReport {
  std::string id;
  int n = 0;
  int rank = 0;
  bool simple = false;
  bool binary = false;
  std::size_t circuit_count = 0;
  std::optional<bool> chordal;
  std::map<int, bool> ell_chordal;
  std::optional<bool> supersolvable;
  std::optional<MChain> mchain;
  std::vector<EquivalenceReport> equivalence;
};

/// Fills every field that applies. Non-simple inputs get only the structural
/// fields; non-binary inputs get no supersolvability or equivalence checks.
/// Throws Internal if supersolvable but not chordal, or if the three
/// conditions of a equivalence entry disagree.
AnalysisReport analyze(const CatalogEntry& entry, const Limits& limits = default_limits());

enum class ReportFormat { Text, KeyValue };
std::string format_report(const AnalysisReport& report, ReportFormat format);

}  // namespace chordmat::catalog
