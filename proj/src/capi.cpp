#include "chordmat/chordmat.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "chordality.hpp"
#include "graphs.hpp"
#include "io.hpp"
#include "supersolvable.hpp"

using namespace chordmat;

struct cm_matroid {
  std::optional<BinaryMatroid> binary;
  std::optional<GeneralMatroid> general;  // set for circuit-list input
};

struct cm_graph {
  LabeledGraph graph;
};

struct cm_setlist {
  std::vector<ElementSet> sets;
};

struct cm_chainlist {
  std::vector<MChain> chains;
};

struct cm_sgraph {
  SGraph sgraph;
};

struct cm_report {
  catalog::AnalysisReport report;
};

namespace {

thread_local std::string last_error;

cm_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CM_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return CM_ERR_PARSE;
    case ErrorCode::EnumerationCapExceeded: return CM_ERR_CAP_EXCEEDED;
    case ErrorCode::NotSimple:
    case ErrorCode::NotSimpleGraph: return CM_ERR_NOT_SIMPLE;
    case ErrorCode::NotBinary: return CM_ERR_NOT_BINARY;
    case ErrorCode::InvalidCircuitAxioms:
    case ErrorCode::NotACircuit:
    case ErrorCode::SeedNotCircuits:
    case ErrorCode::NotAFlat:
    case ErrorCode::InvalidChain:
    case ErrorCode::DifferentMatroids:
    case ErrorCode::InvalidSLabel:
    case ErrorCode::InvalidPartition:
    case ErrorCode::NotConnected: return CM_ERR_INVALID_INPUT;
    case ErrorCode::NoPathFound:
    case ErrorCode::Internal: return CM_ERR_INTERNAL;
  }
  return CM_ERR_INTERNAL;
}

template <typename F>
cm_status guarded(F&& body) {
  try {
    body();
    return CM_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return CM_ERR_INTERNAL;
  }
}

template <typename T>
T& need(T* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
  return *p;
}

std::string need_text(const char* s, const char* what) {
  if (s == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
  return s;
}

const BinaryMatroid& need_binary(const cm_matroid* m) {
  const cm_matroid& h = need(m, "matroid");
  if (!h.binary) fail(ErrorCode::NotBinary, "operation needs a binary matroid");
  return *h.binary;
}

int ground_size(const cm_matroid& m) { return m.binary ? m.binary->size() : m.general->size(); }

ElementSet elements_of(const cm_matroid& m, const int* elements, std::size_t count) {
  if (elements == nullptr && count != 0) fail(ErrorCode::InvalidArgument, "element array is null");
  return ElementSet::from_one_based(std::vector<int>(elements, elements + count), ground_size(m));
}

MChain chain_of(const cm_setlist* list) { return MChain{need(list, "chain").sets}; }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T>
void emit(T** out, T* value) {
  need(out, "output pointer");
  *out = value;
}

cm_matroid* wrap_general(GeneralMatroid g) {
  auto* h = new cm_matroid{};
  try {
    h->binary = binary_representation(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EnumerationCapExceeded) throw;
  }
  h->general = std::move(g);
  return h;
}

cm_matroid* wrap_entry(const catalog::CatalogEntry& entry) {
  if (const auto* b = std::get_if<BinaryMatroid>(&entry.matroid)) return new cm_matroid{*b, std::nullopt};
  return wrap_general(std::get<GeneralMatroid>(entry.matroid));
}

catalog::CatalogEntry entry_of(const cm_matroid& m) {
  if (m.general) return catalog::entry_of(*m.general, "input");
  return catalog::entry_of(*m.binary, "input");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<int> order_of(const cm_graph& g, const int* order, std::size_t len) {
  if (order == nullptr) fail(ErrorCode::InvalidArgument, "order is null");
  if (static_cast<int>(len) != g.graph.order()) fail(ErrorCode::InvalidSLabel, "order length differs from vertex count");
  return {order, order + len};
}

}  // namespace

extern "C" {

const char* cm_version(void) { return "0.1.0"; }

const char* cm_last_error(void) { return last_error.c_str(); }

const char* cm_status_name(cm_status status) {
  switch (status) {
    case CM_OK: return "ok";
    case CM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CM_ERR_PARSE: return "parse error";
    case CM_ERR_CAP_EXCEEDED: return "enumeration cap exceeded";
    case CM_ERR_NOT_SIMPLE: return "not simple";
    case CM_ERR_NOT_BINARY: return "not binary";
    case CM_ERR_INVALID_INPUT: return "invalid input";
    case CM_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void cm_string_free(char* s) { std::free(s); }

// ---- matroids ---------------------------------------------------------------

cm_status cm_matroid_from_gf2_text(const char* text, cm_matroid** out) {
  return guarded([&] { emit(out, new cm_matroid{io::parse_gf2(need_text(text, "text")), std::nullopt}); });
}

cm_status cm_matroid_from_circ_text(const char* text, cm_matroid** out) {
  return guarded([&] { emit(out, wrap_general(io::parse_circ(need_text(text, "text")))); });
}

cm_status cm_matroid_load_file(const char* path, cm_matroid** out) {
  return guarded([&] {
    const std::string p = need_text(path, "path");
    const std::string text = io::read_file(p);
    if (ends_with(p, ".circ")) {
      emit(out, wrap_general(io::parse_circ(text)));
    } else if (ends_with(p, ".gf2")) {
      emit(out, new cm_matroid{io::parse_gf2(text), std::nullopt});
    } else {
      fail(ErrorCode::ParseError, "unknown matroid file extension: " + p);
    }
  });
}

cm_status cm_matroid_from_graph(const cm_graph* g, int cocycle, cm_matroid** out) {
  return guarded([&] {
    const LabeledGraph& graph = need(g, "graph").graph;
    emit(out, new cm_matroid{cocycle != 0 ? cocycle_matroid(graph) : cycle_matroid(graph), std::nullopt});
  });
}

cm_status cm_matroid_builtin(const char* name, int cocycle, cm_matroid** out) {
  return guarded([&] {
    auto entry = catalog::builtin(need_text(name, "name"), cocycle != 0);
    if (!entry) fail(ErrorCode::InvalidArgument, std::string("unknown builtin '") + name + "'");
    emit(out, wrap_entry(*entry));
  });
}

cm_status cm_matroid_dual(const cm_matroid* m, cm_matroid** out) {
  return guarded([&] { emit(out, new cm_matroid{dual(need_binary(m)), std::nullopt}); });
}

void cm_matroid_free(cm_matroid* m) { delete m; }

int cm_matroid_size(const cm_matroid* m) { return m == nullptr ? -1 : ground_size(*m); }

int cm_matroid_rank(const cm_matroid* m) {
  if (m == nullptr) return -1;
  return m->binary ? m->binary->rank() : m->general->rank();
}

int cm_matroid_is_binary(const cm_matroid* m) { return m != nullptr && m->binary.has_value() ? 1 : 0; }

int cm_matroid_is_simple(const cm_matroid* m) {
  if (m == nullptr) return 0;
  return (m->binary ? is_simple(*m->binary) : m->general->is_simple()) ? 1 : 0;
}

cm_status cm_matroid_canonical_key(const cm_matroid* m, char** out) {
  return guarded([&] { emit(out, copy_string(entry_of(need(m, "matroid")).id)); });
}

cm_status cm_matroid_rank_of(const cm_matroid* m, const int* elements, size_t count, int* out) {
  return guarded([&] {
    const cm_matroid& h = need(m, "matroid");
    const ElementSet x = elements_of(h, elements, count);
    need(out, "output") = h.binary ? h.binary->rank_of(x) : h.general->rank_of(x);
  });
}

cm_status cm_matroid_closure(const cm_matroid* m, const int* elements, size_t count, cm_setlist** out) {
  return guarded([&] {
    const cm_matroid& h = need(m, "matroid");
    const ElementSet x = elements_of(h, elements, count);
    emit(out, new cm_setlist{{h.binary ? h.binary->closure_set(x) : h.general->closure_set(x)}});
  });
}

cm_status cm_matroid_circuits(const cm_matroid* m, cm_setlist** out) {
  return guarded([&] {
    const cm_matroid& h = need(m, "matroid");
    const CircuitFamily family = h.binary ? circuits(*h.binary) : h.general->circuits();
    emit(out, new cm_setlist{family.circuits()});
  });
}

cm_status cm_matroid_nontrivial_lines(const cm_matroid* m, cm_setlist** out) {
  return guarded([&] {
    auto* list = new cm_setlist{};
    for (const Flat& f : nontrivial_lines(need_binary(m))) list->sets.push_back(f.elements);
    emit(out, list);
  });
}

// ---- chords -----------------------------------------------------------------

cm_status cm_find_chord(const cm_matroid* m, const int* circuit, size_t count, int* found, int* chord,
                        cm_setlist** parts) {
  return guarded([&] {
    const cm_matroid& h = need(m, "matroid");
    const ElementSet c = elements_of(h, circuit, count);
    const auto witness = h.binary ? find_chord(*h.binary, c) : find_chord(*h.general, c);
    need(found, "found") = witness ? 1 : 0;
    if (chord != nullptr) *chord = witness ? witness->chord + 1 : 0;
    if (parts != nullptr) *parts = witness ? new cm_setlist{{witness->c1, witness->c2}} : new cm_setlist{};
  });
}

cm_status cm_ell_chordal(const cm_matroid* m, int ell, int* holds, cm_setlist** chordless) {
  return guarded([&] {
    const cm_matroid& h = need(m, "matroid");
    const ChordalityVerdict verdict = h.binary ? ell_chordality(*h.binary, ell) : ell_chordality(*h.general, ell);
    need(holds, "holds") = verdict.holds ? 1 : 0;
    if (chordless != nullptr) {
      *chordless = new cm_setlist{};
      if (verdict.chordless) (*chordless)->sets.push_back(*verdict.chordless);
    }
  });
}

cm_status cm_ell_closed(const cm_matroid* m, int ell, int* holds) {
  return guarded([&] { need(holds, "holds") = is_ell_closed(need_binary(m), ell) ? 1 : 0; });
}

cm_status cm_delta_closure(const cm_matroid* m, int ell, cm_setlist** closure, int* equals_all) {
  return guarded([&] {
    const cm_matroid& h = need(m, "matroid");
    if (ell < 2) fail(ErrorCode::InvalidArgument, "ell must be at least 2");
    const CircuitFamily all = h.binary ? circuits(*h.binary) : h.general->circuits();
    const CircuitFamily result = delta_closure(all, all.with_max_size(ell + 1));
    need(equals_all, "equals_all") = result == all ? 1 : 0;
    emit(closure, new cm_setlist{result.circuits()});
  });
}

cm_status cm_equivalence(const cm_matroid* m, int ell, int out[3]) {
  return guarded([&] {
    const EquivalenceReport r = equivalence_report(need_binary(m), ell);
    need(out, "output");
    out[0] = r.ell_closed ? 1 : 0;
    out[1] = r.chordal_ell2 ? 1 : 0;
    out[2] = r.delta_generated ? 1 : 0;
  });
}

// ---- M-chains -----------------------------------------------------------------

cm_status cm_mchain_first(const cm_matroid* m, int* found, cm_setlist** chain) {
  return guarded([&] {
    const auto result = find_mchain(need_binary(m));
    need(found, "found") = result ? 1 : 0;
    emit(chain, result ? new cm_setlist{result->flats} : new cm_setlist{});
  });
}

cm_status cm_mchains_all(const cm_matroid* m, cm_chainlist** out) {
  return guarded([&] { emit(out, new cm_chainlist{all_mchains(need_binary(m))}); });
}

size_t cm_chainlist_count(const cm_chainlist* list) { return list == nullptr ? 0 : list->chains.size(); }

cm_status cm_chainlist_get(const cm_chainlist* list, size_t index, cm_setlist** chain) {
  return guarded([&] {
    const auto& chains = need(list, "chain list").chains;
    if (index >= chains.size()) fail(ErrorCode::InvalidArgument, "chain index out of range");
    emit(chain, new cm_setlist{chains[index].flats});
  });
}

void cm_chainlist_free(cm_chainlist* list) { delete list; }

cm_status cm_mpartition(const cm_setlist* chain, cm_setlist** partition) {
  return guarded([&] {
    const MChain c = chain_of(chain);
    if (c.flats.empty()) fail(ErrorCode::InvalidArgument, "empty chain");
    emit(partition, new cm_setlist{mpartition(c).blocks});
  });
}

cm_status cm_mchain_validate(const cm_matroid* m, const cm_setlist* chain, int* ok) {
  return guarded([&] {
    const BinaryMatroid& b = need_binary(m);
    const MChain c = chain_of(chain);
    need(ok, "ok") = !c.flats.empty() && ChainValidator(b).is_valid(c) ? 1 : 0;
  });
}

cm_status cm_deformation_path(const cm_matroid* m, const cm_setlist* from, const cm_setlist* to,
                              cm_chainlist** path) {
  return guarded([&] { emit(path, new cm_chainlist{deformation_path(need_binary(m), chain_of(from), chain_of(to))}); });
}

// ---- S-graphs -------------------------------------------------------------------

cm_status cm_sgraph_of(const cm_matroid* m, const cm_setlist* partition, cm_sgraph** out) {
  return guarded([&] {
    const MPartition p{need(partition, "partition").sets};
    emit(out, new cm_sgraph{sgraph_of(need_binary(m), p)});
  });
}

int cm_sgraph_order(const cm_sgraph* sg) { return sg == nullptr ? -1 : static_cast<int>(sg->sgraph.blocks.size()); }

size_t cm_sgraph_edge_count(const cm_sgraph* sg) { return sg == nullptr ? 0 : sg->sgraph.edges.size(); }

cm_status cm_sgraph_edge(const cm_sgraph* sg, size_t index, int* a, int* b) {
  return guarded([&] {
    const auto& edges = need(sg, "S-graph").sgraph.edges;
    if (index >= edges.size()) fail(ErrorCode::InvalidArgument, "edge index out of range");
    need(a, "a") = edges[index].first + 1;
    need(b, "b") = edges[index].second + 1;
  });
}

cm_status cm_sgraph_blocks(const cm_sgraph* sg, cm_setlist** blocks) {
  return guarded([&] { emit(blocks, new cm_setlist{need(sg, "S-graph").sgraph.blocks}); });
}

cm_status cm_sgraph_check(const cm_sgraph* sg, int* chordal, int* last_simplicial) {
  return guarded([&] {
    const SimpleGraph g = need(sg, "S-graph").sgraph.graph();
    need(chordal, "chordal") = is_chordal_graph(g) ? 1 : 0;
    const int last = g.order() - 1;
    need(last_simplicial, "last_simplicial") = last < 0 || g.is_clique(g.neighbors(last)) ? 1 : 0;
  });
}

cm_status cm_sgraph_dot(const cm_sgraph* sg, char** out) {
  return guarded([&] { emit(out, copy_string(need(sg, "S-graph").sgraph.to_dot())); });
}

cm_status cm_sgraph_edge_list(const cm_sgraph* sg, char** out) {
  return guarded([&] { emit(out, copy_string(need(sg, "S-graph").sgraph.edge_list())); });
}

void cm_sgraph_free(cm_sgraph* sg) { delete sg; }

// ---- set lists -------------------------------------------------------------------

cm_status cm_setlist_create(const int* const* sets, const size_t* sizes, size_t count, int n, cm_setlist** out) {
  return guarded([&] {
    if (count != 0 && (sets == nullptr || sizes == nullptr)) fail(ErrorCode::InvalidArgument, "set arrays are null");
    auto list = std::make_unique<cm_setlist>();
    for (size_t i = 0; i < count; ++i) {
      if (sets[i] == nullptr && sizes[i] != 0) fail(ErrorCode::InvalidArgument, "set is null");
      list->sets.push_back(ElementSet::from_one_based(std::vector<int>(sets[i], sets[i] + sizes[i]), n));
    }
    emit(out, list.release());
  });
}

size_t cm_setlist_count(const cm_setlist* list) { return list == nullptr ? 0 : list->sets.size(); }

size_t cm_setlist_item_size(const cm_setlist* list, size_t index) {
  if (list == nullptr || index >= list->sets.size()) return 0;
  return static_cast<size_t>(list->sets[index].size());
}

cm_status cm_setlist_item(const cm_setlist* list, size_t index, int* buffer, size_t capacity) {
  return guarded([&] {
    const auto& sets = need(list, "set list").sets;
    if (index >= sets.size()) fail(ErrorCode::InvalidArgument, "set index out of range");
    const std::vector<int> labels = sets[index].one_based();
    if (labels.size() > capacity) fail(ErrorCode::InvalidArgument, "buffer too small");
    if (!labels.empty()) std::memcpy(&need(buffer, "buffer"), labels.data(), labels.size() * sizeof(int));
  });
}

cm_status cm_setlist_format(const cm_setlist* list, const char* separator, char** out) {
  return guarded([&] {
    const auto& sets = need(list, "set list").sets;
    const std::string sep = separator == nullptr ? "\n" : separator;
    std::string text;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (i != 0) text += sep;
      text += sets[i].to_string();
    }
    emit(out, copy_string(text));
  });
}

void cm_setlist_free(cm_setlist* list) { delete list; }

// ---- graphs ------------------------------------------------------------------------

cm_status cm_graph_from_text(const char* text, cm_graph** out) {
  return guarded([&] { emit(out, new cm_graph{io::parse_graph(need_text(text, "text"))}); });
}

cm_status cm_graph_load_file(const char* path, cm_graph** out) {
  return guarded([&] { emit(out, new cm_graph{io::parse_graph(io::read_file(need_text(path, "path")))}); });
}

cm_status cm_graph_builtin(const char* name, cm_graph** out) {
  return guarded([&] {
    auto g = catalog::builtin_graph(need_text(name, "name"));
    if (!g) fail(ErrorCode::InvalidArgument, std::string("unknown builtin graph '") + name + "'");
    emit(out, new cm_graph{std::move(*g)});
  });
}

void cm_graph_free(cm_graph* g) { delete g; }

int cm_graph_order(const cm_graph* g) { return g == nullptr ? -1 : g->graph.order(); }

int cm_graph_size(const cm_graph* g) { return g == nullptr ? -1 : g->graph.size(); }

const char* cm_graph_vertex_name(const cm_graph* g, int vertex) {
  if (g == nullptr || vertex < 0 || vertex >= g->graph.order()) return nullptr;
  return g->graph.name(vertex).c_str();
}

cm_status cm_graph_slabeling(const cm_graph* g, int* found, int* order, size_t capacity) {
  return guarded([&] {
    const LabeledGraph& graph = need(g, "graph").graph;
    const auto labeling = is_chordal_graph(graph);
    need(found, "found") = labeling ? 1 : 0;
    if (!labeling) return;
    if (capacity < labeling->size()) fail(ErrorCode::InvalidArgument, "order buffer too small");
    std::copy(labeling->begin(), labeling->end(), &need(order, "order"));
  });
}

cm_status cm_graph_slabeling_count(const cm_graph* g, uint64_t* count) {
  return guarded([&] { need(count, "count") = count_s_labelings(need(g, "graph").graph.to_simple()); });
}

cm_status cm_graph_slabel_to_mchain(const cm_graph* g, const int* order, size_t len, cm_setlist** chain) {
  return guarded([&] {
    const cm_graph& h = need(g, "graph");
    emit(chain, new cm_setlist{slabel_to_mchain(h.graph, order_of(h, order, len)).flats});
  });
}

cm_status cm_graph_derived_sgraph(const cm_graph* g, const int* order, size_t len, cm_sgraph** out) {
  return guarded([&] {
    const cm_graph& h = need(g, "graph");
    emit(out, new cm_sgraph{derived_sgraph(h.graph, order_of(h, order, len))});
  });
}

cm_status cm_graph_cone(const cm_graph* g, cm_graph** out) {
  return guarded([&] { emit(out, new cm_graph{cone(need(g, "graph").graph)}); });
}

cm_status cm_graph_cone_check(const cm_graph* g, const int* order, size_t len, int* isomorphic, int* embeds) {
  return guarded([&] {
    const cm_graph& h = need(g, "graph");
    std::vector<int> labeling = order_of(h, order, len);
    const SGraph own = derived_sgraph(h.graph, labeling);
    need(embeds, "embeds") = subgraph_embedding_check(h.graph, labeling, own) ? 1 : 0;

    const LabeledGraph coned = cone(h.graph);
    std::vector<int> cone_order{h.graph.order()};
    cone_order.insert(cone_order.end(), labeling.begin(), labeling.end());
    const SGraph derived = derived_sgraph(coned, cone_order);
    need(isomorphic, "isomorphic") = graphs_isomorphic(derived.graph(), h.graph.to_simple()) ? 1 : 0;
  });
}

// ---- analysis ----------------------------------------------------------------------

cm_status cm_analyze(const cm_matroid* m, cm_report** out) {
  return guarded([&] { emit(out, new cm_report{catalog::analyze(entry_of(need(m, "matroid")))}); });
}

cm_status cm_report_summary_get(const cm_report* r, cm_report_summary* out) {
  return guarded([&] {
    const auto& rep = need(r, "report").report;
    cm_report_summary& s = need(out, "summary");
    s.n = rep.n;
    s.rank = rep.rank;
    s.simple = rep.simple ? 1 : 0;
    s.binary = rep.binary ? 1 : 0;
    s.circuit_count = rep.circuit_count;
    s.chordal = rep.chordal ? (*rep.chordal ? 1 : 0) : -1;
    s.supersolvable = rep.supersolvable ? (*rep.supersolvable ? 1 : 0) : -1;
  });
}

cm_status cm_report_format(const cm_report* r, int key_value, char** out) {
  return guarded([&] {
    const auto format = key_value != 0 ? catalog::ReportFormat::KeyValue : catalog::ReportFormat::Text;
    emit(out, copy_string(catalog::format_report(need(r, "report").report, format)));
  });
}

void cm_report_free(cm_report* r) { delete r; }

cm_status cm_catalog_sweep(int max_r, int max_n, cm_catalog_visitor visit, void* user, cm_catalog_summary* out) {
  return guarded([&] {
    cm_catalog_summary summary{};
    catalog::SimpleBinaryEnumerator entries(max_r, max_n);
    while (auto entry = entries.next()) {
      ++summary.entries;
      cm_report holder;
      try {
        holder.report = catalog::analyze(*entry);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Internal) throw;
        ++summary.violations;
        last_error = e.what();
        if (visit != nullptr && visit(entry->id.c_str(), nullptr, user) != 0) break;
        continue;
      }
      const auto& rep = holder.report;
      const bool chordal = rep.chordal.value_or(false);
      const bool supersolvable = rep.supersolvable.value_or(false);
      summary.chordal += chordal ? 1 : 0;
      summary.supersolvable += supersolvable ? 1 : 0;
      summary.chordal_not_supersolvable += chordal && !supersolvable ? 1 : 0;
      if (visit != nullptr && visit(entry->id.c_str(), &holder, user) != 0) break;
    }
    need(out, "summary") = summary;
  });
}

}  // extern "C"
