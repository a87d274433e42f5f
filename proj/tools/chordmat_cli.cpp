// chordmat command-line front end. Talks to the library only through the C API.
#include <chordmat/chordmat.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kNegative = 1;  // the property asked about does not hold
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;
constexpr int kInternal = 4;

struct Failure {
  cm_status status;
  std::string message;
};

void check(cm_status s) {
  if (s != CM_OK) throw Failure{s, cm_last_error()};
}

int exit_code(cm_status s) {
  switch (s) {
    case CM_OK: return kOk;
    case CM_ERR_CAP_EXCEEDED: return kCapExceeded;
    case CM_ERR_INTERNAL: return kInternal;
    default: return kInputError;
  }
}

template <auto Free>
struct Deleter {
  template <typename T>
  void operator()(T* p) const { Free(p); }
};
using Matroid = std::unique_ptr<cm_matroid, Deleter<cm_matroid_free>>;
using Graph = std::unique_ptr<cm_graph, Deleter<cm_graph_free>>;
using SetList = std::unique_ptr<cm_setlist, Deleter<cm_setlist_free>>;
using ChainList = std::unique_ptr<cm_chainlist, Deleter<cm_chainlist_free>>;
using SGraph = std::unique_ptr<cm_sgraph, Deleter<cm_sgraph_free>>;
using Report = std::unique_ptr<cm_report, Deleter<cm_report_free>>;

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  cm_string_free(s);
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Graph load_graph(const std::string& spec) {
  cm_graph* g = nullptr;
  check(spec.rfind('@', 0) == 0 ? cm_graph_builtin(spec.c_str() + 1, &g) : cm_graph_load_file(spec.c_str(), &g));
  return Graph(g);
}

// `@name` for builtins, otherwise a .gf2, .circ or .graph file.
Matroid load_matroid(const std::string& spec, bool cocycle) {
  cm_matroid* m = nullptr;
  if (spec.rfind('@', 0) == 0) {
    check(cm_matroid_builtin(spec.c_str() + 1, cocycle ? 1 : 0, &m));
  } else if (ends_with(spec, ".graph")) {
    Graph g = load_graph(spec);
    check(cm_matroid_from_graph(g.get(), cocycle ? 1 : 0, &m));
  } else {
    check(cm_matroid_load_file(spec.c_str(), &m));
  }
  return Matroid(m);
}

std::string format(const cm_setlist* list, const char* sep) {
  char* s = nullptr;
  check(cm_setlist_format(list, sep, &s));
  return take(s);
}

std::vector<int> item(const cm_setlist* list, size_t i) {
  std::vector<int> out(cm_setlist_item_size(list, i));
  check(cm_setlist_item(list, i, out.data(), out.size()));
  return out;
}

std::vector<int> parse_labels(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw Failure{CM_ERR_INVALID_ARGUMENT, "bad element label '" + token + "'"};
    }
  }
  return out;
}

// "1|2,3|4,5" -> blocks; also used for chains written as their partitions.
SetList parse_partition(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, '|')) blocks.push_back(parse_labels(part));
  std::vector<const int*> ptrs;
  std::vector<size_t> sizes;
  for (const auto& b : blocks) {
    ptrs.push_back(b.data());
    sizes.push_back(b.size());
  }
  cm_setlist* out = nullptr;
  check(cm_setlist_create(ptrs.data(), sizes.data(), blocks.size(), n, &out));
  return SetList(out);
}

// Prefix unions of a partition, from the empty set.
SetList chain_from_partition(const std::string& text, int n) {
  SetList blocks = parse_partition(text, n);
  std::vector<std::vector<int>> flats{{}};
  for (size_t i = 0; i < cm_setlist_count(blocks.get()); ++i) {
    std::vector<int> next = flats.back();
    for (int e : item(blocks.get(), i)) next.push_back(e);
    flats.push_back(next);
  }
  std::vector<const int*> ptrs;
  std::vector<size_t> sizes;
  for (const auto& f : flats) {
    ptrs.push_back(f.data());
    sizes.push_back(f.size());
  }
  cm_setlist* out = nullptr;
  check(cm_setlist_create(ptrs.data(), sizes.data(), flats.size(), n, &out));
  return SetList(out);
}

std::vector<int> parse_order(const cm_graph* g, const std::string& text) {
  std::vector<int> order;
  std::string name;
  std::istringstream in(text);
  while (std::getline(in, name, ',')) {
    int found = -1;
    for (int v = 0; v < cm_graph_order(g); ++v) {
      if (name == cm_graph_vertex_name(g, v)) found = v;
    }
    if (found < 0) throw Failure{CM_ERR_INVALID_ARGUMENT, "unknown vertex '" + name + "'"};
    order.push_back(found);
  }
  return order;
}

std::string order_names(const cm_graph* g, const std::vector<int>& order) {
  std::string out;
  for (size_t i = 0; i < order.size(); ++i) out += (i ? "," : "") + std::string(cm_graph_vertex_name(g, order[i]));
  return out;
}

std::vector<int> mcs_order(const cm_graph* g, int& found) {
  std::vector<int> order(static_cast<size_t>(cm_graph_order(g)));
  check(cm_graph_slabeling(g, &found, order.data(), order.size()));
  return order;
}

std::string chain_text(const cm_setlist* chain) { return format(chain, " < "); }

// ---- subcommands -------------------------------------------------------------

struct Options {
  std::string input;
  bool cocycle = false;
  bool key_value = false;
  bool all = false;
  bool count = false;
  bool report = false;
  int ell = 4;
  int max_r = 3;
  int max_n = 7;
  std::string circuit;
  std::string partition;
  std::string from;
  std::string to;
  std::string order;
  std::string dot;
};

int cmd_analyze(const Options& o) {
  Matroid m = load_matroid(o.input, o.cocycle);
  cm_report* r = nullptr;
  check(cm_analyze(m.get(), &r));
  Report report(r);
  char* s = nullptr;
  check(cm_report_format(report.get(), o.key_value ? 1 : 0, &s));
  std::cout << take(s);
  return kOk;
}

int cmd_circuits(const Options& o) {
  Matroid m = load_matroid(o.input, o.cocycle);
  cm_setlist* c = nullptr;
  check(cm_matroid_circuits(m.get(), &c));
  SetList circuits(c);
  if (cm_setlist_count(c) != 0) std::cout << format(c, "\n") << '\n';
  return kOk;
}

int cmd_chord(const Options& o) {
  Matroid m = load_matroid(o.input, o.cocycle);
  const std::vector<int> c = parse_labels(o.circuit);
  int found = 0;
  int chord = 0;
  cm_setlist* p = nullptr;
  check(cm_find_chord(m.get(), c.data(), c.size(), &found, &chord, &p));
  SetList parts(p);
  if (!found) {
    std::cout << "no chord\n";
    return kNegative;
  }
  std::cout << "chord " << chord << ": " << format(p, " + ") << '\n';
  return kOk;
}

int cmd_chordal(const Options& o) {
  Matroid m = load_matroid(o.input, o.cocycle);
  int holds = 0;
  cm_setlist* c = nullptr;
  check(cm_ell_chordal(m.get(), o.ell, &holds, &c));
  SetList chordless(c);
  if (holds) {
    std::cout << o.ell << "-chordal: yes\n";
    return kOk;
  }
  std::cout << o.ell << "-chordal: no, chordless circuit " << format(c, "") << '\n';
  return kNegative;
}

int cmd_delta_closure(const Options& o) {
  Matroid m = load_matroid(o.input, o.cocycle);
  int equals = 0;
  cm_setlist* c = nullptr;
  check(cm_delta_closure(m.get(), o.ell, &c, &equals));
  SetList closure(c);
  if (cm_setlist_count(c) != 0) std::cout << format(c, "\n") << '\n';
  std::cout << "closure size " << cm_setlist_count(c) << ", equals all circuits: " << (equals ? "yes" : "no") << '\n';
  return equals ? kOk : kNegative;
}

int cmd_mchain(const Options& o) {
  Matroid m = load_matroid(o.input, o.cocycle);
  if (o.all) {
    cm_chainlist* l = nullptr;
    check(cm_mchains_all(m.get(), &l));
    ChainList chains(l);
    for (size_t i = 0; i < cm_chainlist_count(l); ++i) {
      cm_setlist* c = nullptr;
      check(cm_chainlist_get(l, i, &c));
      SetList chain(c);
      std::cout << chain_text(c) << '\n';
    }
    std::cout << cm_chainlist_count(l) << " M-chains\n";
    return cm_chainlist_count(l) != 0 ? kOk : kNegative;
  }
  int found = 0;
  cm_setlist* c = nullptr;
  check(cm_mchain_first(m.get(), &found, &c));
  SetList chain(c);
  if (!found) {
    std::cout << "not supersolvable\n";
    return kNegative;
  }
  std::cout << chain_text(c) << '\n';
  return kOk;
}

// First M-chain's partition, or the one given with --partition.
SetList partition_for(const cm_matroid* m, const Options& o, bool& found) {
  found = true;
  if (!o.partition.empty()) return parse_partition(o.partition, cm_matroid_size(m));
  int ok = 0;
  cm_setlist* c = nullptr;
  check(cm_mchain_first(m, &ok, &c));
  SetList chain(c);
  found = ok != 0;
  if (!found) return nullptr;
  cm_setlist* p = nullptr;
  check(cm_mpartition(c, &p));
  return SetList(p);
}

int cmd_partition(const Options& o) {
  Matroid m = load_matroid(o.input, o.cocycle);
  bool found = false;
  SetList p = partition_for(m.get(), o, found);
  if (!found) {
    std::cout << "not supersolvable\n";
    return kNegative;
  }
  std::cout << format(p.get(), " | ") << '\n';
  return kOk;
}

int cmd_sgraph(const Options& o) {
  Matroid m = load_matroid(o.input, o.cocycle);
  bool found = false;
  SetList p = partition_for(m.get(), o, found);
  if (!found) {
    std::cout << "not supersolvable\n";
    return kNegative;
  }
  cm_sgraph* s = nullptr;
  check(cm_sgraph_of(m.get(), p.get(), &s));
  SGraph sg(s);
  char* text = nullptr;
  if (!o.dot.empty()) {
    check(cm_sgraph_dot(s, &text));
    const std::string dot = take(text);
    if (o.dot == "-") {
      std::cout << dot;
    } else {
      std::ofstream out(o.dot);
      if (!(out << dot)) throw Failure{CM_ERR_INVALID_ARGUMENT, "cannot write '" + o.dot + "'"};
    }
    return kOk;
  }
  std::cout << "blocks: " << format(p.get(), " | ") << '\n';
  check(cm_sgraph_edge_list(s, &text));
  std::cout << take(text);
  int chordal = 0;
  int last = 0;
  check(cm_sgraph_check(s, &chordal, &last));
  std::cout << "chordal: " << (chordal ? "yes" : "no") << ", last block simplicial: " << (last ? "yes" : "no")
            << '\n';
  return kOk;
}

int cmd_deform(const Options& o) {
  Matroid m = load_matroid(o.input, o.cocycle);
  const int n = cm_matroid_size(m.get());
  SetList from = chain_from_partition(o.from, n);
  SetList to = chain_from_partition(o.to, n);
  cm_chainlist* l = nullptr;
  check(cm_deformation_path(m.get(), from.get(), to.get(), &l));
  ChainList path(l);
  for (size_t i = 0; i < cm_chainlist_count(l); ++i) {
    cm_setlist* c = nullptr;
    check(cm_chainlist_get(l, i, &c));
    SetList chain(c);
    std::cout << chain_text(c) << '\n';
  }
  std::cout << cm_chainlist_count(l) - 1 << " elementary deformations\n";
  return kOk;
}

int cmd_slabel(const Options& o) {
  Graph g = load_graph(o.input);
  if (o.count) {
    uint64_t count = 0;
    check(cm_graph_slabeling_count(g.get(), &count));
    std::cout << count << '\n';
    return count != 0 ? kOk : kNegative;
  }
  int found = 1;
  std::vector<int> order = o.order.empty() ? mcs_order(g.get(), found) : parse_order(g.get(), o.order);
  if (!found) {
    std::cout << "not chordal\n";
    return kNegative;
  }
  std::cout << "S-labeling: " << order_names(g.get(), order) << '\n';
  cm_setlist* c = nullptr;
  check(cm_graph_slabel_to_mchain(g.get(), order.data(), order.size(), &c));
  SetList chain(c);
  std::cout << "M-chain: " << chain_text(c) << '\n';
  cm_setlist* p = nullptr;
  check(cm_mpartition(c, &p));
  SetList partition(p);
  std::cout << "M-partition: " << format(p, " | ") << '\n';
  return kOk;
}

int cmd_cone(const Options& o) {
  Graph g = load_graph(o.input);
  int found = 1;
  std::vector<int> order = o.order.empty() ? mcs_order(g.get(), found) : parse_order(g.get(), o.order);
  if (!found) {
    std::cout << "not chordal\n";
    return kNegative;
  }
  int iso = 0;
  int embeds = 0;
  check(cm_graph_cone_check(g.get(), order.data(), order.size(), &iso, &embeds));
  std::cout << "S-labeling: " << order_names(g.get(), order) << '\n';
  std::cout << "derived S-graph embeds in G: " << (embeds ? "yes" : "no") << '\n';
  std::cout << "derived S-graph of cone isomorphic to G: " << (iso ? "yes" : "no") << '\n';
  return iso && embeds ? kOk : kNegative;
}

struct SweepState {
  bool print;
  bool key_value;
};

int print_entry(const char* id, const cm_report* r, void* user) {
  const auto* state = static_cast<const SweepState*>(user);
  if (r == nullptr) {
    std::cout << "VIOLATION " << id << ": " << cm_last_error() << '\n';
    return 0;
  }
  if (!state->print) return 0;
  char* s = nullptr;
  check(cm_report_format(r, state->key_value ? 1 : 0, &s));
  std::cout << take(s);
  if (state->key_value) std::cout << '\n';
  return 0;
}

int cmd_catalog(const Options& o) {
  SweepState state{o.report, o.key_value};
  cm_catalog_summary summary{};
  check(cm_catalog_sweep(o.max_r, o.max_n, print_entry, &state, &summary));
  std::cout << "entries " << summary.entries << '\n'
            << "chordal " << summary.chordal << '\n'
            << "supersolvable " << summary.supersolvable << '\n'
            << "chordal_not_supersolvable " << summary.chordal_not_supersolvable << '\n'
            << "violations " << summary.violations << '\n';
  return summary.violations == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chordal and supersolvable binary matroids"};
  app.set_version_flag("--version", cm_version());
  app.require_subcommand(1);
  Options o;

  const std::string input_help = "Matroid: .gf2, .circ or .graph file, or @builtin (fano, u24, g0, k4, k2,3, c5, p4)";
  auto matroid_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, input_help)->required();
    sub->add_flag("--cocycle", o.cocycle, "Use the cocycle matroid of a graph input");
    sub->add_flag("--cycle", "Use the cycle matroid of a graph input (default)");
    return sub;
  };

  CLI::App* analyze = matroid_cmd("analyze", "Structural, chordality and supersolvability report");
  analyze->add_flag("--kv", o.key_value, "key=value output");
  CLI::App* circuits = matroid_cmd("circuits", "List every circuit");
  CLI::App* chord = matroid_cmd("chord", "Find a chord of one circuit");
  chord->add_option("--circuit", o.circuit, "Circuit as comma-separated labels")->required();
  CLI::App* chordal = matroid_cmd("chordal", "Test ell-chordality");
  chordal->add_option("--ell", o.ell, "Minimum circuit size that must have a chord")->capture_default_str();
  CLI::App* delta = matroid_cmd("delta-closure", "Delta-closure of the circuits of size at most ell+1");
  delta->add_option("--ell", o.ell, "ell >= 2")->capture_default_str();
  CLI::App* mchain = matroid_cmd("mchain", "First M-chain, or all with --all");
  mchain->add_flag("--all", o.all, "Enumerate every M-chain");
  CLI::App* partition = matroid_cmd("partition", "M-partition of the first M-chain");
  CLI::App* sgraph = matroid_cmd("sgraph", "S-graph of an M-partition");
  sgraph->add_option("--partition", o.partition, "Blocks such as 1|2,3|4,5 (default: first M-chain)");
  sgraph->add_option("--dot", o.dot, "Write Graphviz output to this file ('-' for stdout)");
  CLI::App* deform = matroid_cmd("deform", "Elementary deformations between two M-chains");
  deform->add_option("--from", o.from, "Source chain as its partition, e.g. 1|2,3|4,5")->required();
  deform->add_option("--to", o.to, "Target chain as its partition")->required();

  const std::string graph_help = "Graph: .graph file or @builtin";
  CLI::App* slabel = app.add_subcommand("slabel", "S-labeling of a chordal graph and its M-chain");
  slabel->add_option("input", o.input, graph_help)->required();
  slabel->add_flag("--count", o.count, "Count all S-labelings");
  slabel->add_option("--order", o.order, "Use this vertex order (comma-separated names)");
  CLI::App* cone_cmd = app.add_subcommand("cone", "Check the cone S-graph correspondence");
  cone_cmd->add_option("input", o.input, graph_help)->required();
  cone_cmd->add_flag("--check", "Run the check (default)");
  cone_cmd->add_option("--order", o.order, "S-labeling to use (default: maximum-cardinality search)");

  CLI::App* catalog = app.add_subcommand("catalog", "Sweep all simple binary matroids up to a size");
  catalog->add_option("--max-r", o.max_r, "Maximum rank")->capture_default_str();
  catalog->add_option("--max-n", o.max_n, "Maximum number of elements")->capture_default_str();
  catalog->add_flag("--report", o.report, "Print a report per entry");
  catalog->add_flag("--kv", o.key_value, "key=value reports");

  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands{
      {analyze, cmd_analyze}, {circuits, cmd_circuits},   {chord, cmd_chord},   {chordal, cmd_chordal},
      {delta, cmd_delta_closure}, {mchain, cmd_mchain},   {partition, cmd_partition}, {sgraph, cmd_sgraph},
      {deform, cmd_deform},   {slabel, cmd_slabel},       {cone_cmd, cmd_cone}, {catalog, cmd_catalog}};
  try {
    for (const auto& [sub, run] : commands) {
      if (sub->parsed()) return run(o);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return exit_code(f.status);
  }
  return kInputError;
}
