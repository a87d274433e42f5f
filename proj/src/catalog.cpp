#include "catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace chordmat::catalog {

BinaryMatroid fano() {
  std::vector<std::uint64_t> columns;
  for (std::uint64_t v = 1; v <= 7; ++v) columns.push_back(v);
  return BinaryMatroid::from_columns(columns, 3);
}

GeneralMatroid u24() {
  return general_from_circuits(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

LabeledGraph fan_g0() {
  // 0-based vertices v1..v5 -> 0..4.
  return LabeledGraph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}, {3, 4}, {0, 4}});
}

LabeledGraph complete_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  }
  return LabeledGraph::from_edges(k, edges);
}

LabeledGraph complete_bipartite(int a, int b) {
  std::vector<std::string> names;
  for (int i = 1; i <= a; ++i) names.push_back("u" + std::to_string(i));
  for (int j = 1; j <= b; ++j) names.push_back("w" + std::to_string(j));
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return LabeledGraph(std::move(names), std::move(edges));
}

LabeledGraph cycle_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return LabeledGraph::from_edges(k, edges);
}

LabeledGraph path_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return LabeledGraph::from_edges(k, edges);
}

CatalogEntry entry_of(BinaryMatroid m, std::string provenance) {
  std::string id = canonical_key(m);
  return {std::move(id), std::move(m), std::move(provenance)};
}

CatalogEntry entry_of(GeneralMatroid m, std::string provenance) {
  std::string id = "circ" + std::to_string(m.size()) + ":";
  for (std::size_t i = 0; i < m.circuits().size(); ++i) {
    if (i != 0) id += ';';
    id += m.circuits()[i].to_string();
  }
  return {std::move(id), std::move(m), std::move(provenance)};
}

namespace {

std::optional<std::vector<int>> parse_numbers(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.size() > 2 ||
        !std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
      return std::nullopt;
    }
    out.push_back(std::stoi(part));
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace

std::optional<LabeledGraph> builtin_graph(const std::string& name) {
  if (name == "g0") return fan_g0();
  if (name.size() < 2) return std::nullopt;
  const auto numbers = parse_numbers(name.substr(1));
  if (!numbers) return std::nullopt;
  const std::vector<int>& v = *numbers;
  auto in_range = [](int x, int lo) { return x >= lo && x <= 11; };
  switch (name.front()) {
    case 'k':
      if (v.size() == 1 && in_range(v[0], 1)) return complete_graph(v[0]);
      if (v.size() == 2 && in_range(v[0], 1) && in_range(v[1], 1)) return complete_bipartite(v[0], v[1]);
      break;
    case 'c':
      if (v.size() == 1 && in_range(v[0], 3)) return cycle_graph(v[0]);
      break;
    case 'p':
      if (v.size() == 1 && in_range(v[0], 1)) return path_graph(v[0]);
      break;
    default:
      break;
  }
  return std::nullopt;
}

std::optional<CatalogEntry> builtin(const std::string& name, bool cocycle) {
  if (name == "fano") return entry_of(fano(), "fano");
  if (name == "u24") return entry_of(u24(), "u24");
  if (auto g = builtin_graph(name)) {
    return cocycle ? entry_of(cocycle_matroid(*g), "cocycle:" + name) : entry_of(cycle_matroid(*g), "cycle:" + name);
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  return {"fano", "u24", "g0", "k<k>", "k<a>,<b>", "c<k>", "p<k>"};
}

// ---------------------------------------------------------------------------
// Enumeration

SimpleBinaryEnumerator::SimpleBinaryEnumerator(int max_r, int max_n, const Limits& limits)
    : max_r_(max_r), max_n_(max_n) {
  if (max_r < 1 || max_n < 1) fail(ErrorCode::InvalidArgument, "max_r and max_n must be positive");
  double total = 0;
  for (int r = 1; r <= max_r; ++r) {
    const int vectors = (1 << std::min(r, 20)) - 1;
    for (int k = r; k <= std::min(max_n, vectors); ++k) {
      total += std::exp(std::lgamma(vectors + 1.0) - std::lgamma(k + 1.0) - std::lgamma(vectors - k + 1.0));
    }
  }
  if (max_r > 16 || max_n > limits.max_elements || total > 1e8) {
    fail(ErrorCode::EnumerationCapExceeded, "catalog with max_r=" + std::to_string(max_r) +
                                                " max_n=" + std::to_string(max_n) + " is too large");
  }
  rank_ = 1;
  size_ = 1;
}

bool SimpleBinaryEnumerator::advance() {
  const int vectors = (1 << rank_) - 1;
  if (fresh_) {
    fresh_ = false;
  } else {
    // Next k-combination of 1..vectors in lexicographic order.
    int i = size_ - 1;
    while (i >= 0 && combo_[static_cast<std::size_t>(i)] == vectors - (size_ - 1 - i)) --i;
    if (i >= 0) {
      ++combo_[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size_; ++j) combo_[static_cast<std::size_t>(j)] = combo_[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
    ++size_;
    if (size_ > std::min(max_n_, vectors)) {
      ++rank_;
      size_ = rank_;
      if (rank_ > max_r_ || size_ > max_n_) return false;
    }
  }
  combo_.resize(static_cast<std::size_t>(size_));
  for (int j = 0; j < size_; ++j) combo_[static_cast<std::size_t>(j)] = j + 1;
  return true;
}

std::optional<CatalogEntry> SimpleBinaryEnumerator::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    gf2::XorBasis basis;
    for (int v : combo_) basis.insert(static_cast<std::uint64_t>(v));
    if (basis.dimension() != rank_) continue;
    std::vector<std::uint64_t> columns(combo_.begin(), combo_.end());
    std::ostringstream provenance;
    provenance << "enumerate r=" << rank_ << " n=" << size_;
    return entry_of(BinaryMatroid::from_columns(columns, rank_), provenance.str());
  }
  return std::nullopt;
}

void for_each_simple_binary(int max_r, int max_n, const std::function<void(const CatalogEntry&)>& visit,
                            const Limits& limits) {
  SimpleBinaryEnumerator it(max_r, max_n, limits);
  while (auto entry = it.next()) visit(*entry);
}

// ---------------------------------------------------------------------------
// Analysis

namespace {

void fill_chordality(AnalysisReport& report, const CircuitFamily& family,
                     const std::function<bool(ElementSet)>& has_chord) {
  // Largest size of a chordless circuit decides every ell at once.
  int largest_chordless = 0;
  for (ElementSet c : family) {
    if (c.size() > largest_chordless && !has_chord(c)) largest_chordless = c.size();
  }
  const int top = std::max(4, family.max_circuit_size());
  for (int ell = 3; ell <= top; ++ell) report.ell_chordal[ell] = largest_chordless < ell;
  report.chordal = largest_chordless < 4;
}

AnalysisReport analyze_binary(const BinaryMatroid& m, AnalysisReport report, const Limits& limits) {
  report.n = m.size();
  report.rank = m.rank();
  report.binary = true;
  report.simple = is_simple(m);
  const CircuitFamily family = circuits(m, limits);
  report.circuit_count = family.size();
  if (!report.simple) return report;

  fill_chordality(report, family, [&](ElementSet c) { return find_chord(m, c).has_value(); });
  report.mchain = find_mchain(m, limits);
  report.supersolvable = report.mchain.has_value();
  if (*report.supersolvable && !*report.chordal) {
    fail(ErrorCode::Internal, report.id + ": supersolvable binary matroid reported as not chordal");
  }
  if (m.size() <= limits.max_subset_sweep) {
    for (int ell = 2; ell <= 4; ++ell) {
      const EquivalenceReport t = equivalence_report(m, ell, limits);
      if (!t.consistent()) {
        fail(ErrorCode::Internal, report.id + ": equivalent conditions disagree at ell=" + std::to_string(ell));
      }
      report.equivalence.push_back(t);
    }
  }
  return report;
}

}  // namespace

AnalysisReport analyze(const CatalogEntry& entry, const Limits& limits) {
  AnalysisReport report;
  report.id = entry.id;
  if (const auto* binary = std::get_if<BinaryMatroid>(&entry.matroid)) {
    return analyze_binary(*binary, std::move(report), limits);
  }
  const auto& general = std::get<GeneralMatroid>(entry.matroid);
  if (auto represented = binary_representation(general, limits)) {
    return analyze_binary(*represented, std::move(report), limits);
  }
  report.n = general.size();
  report.rank = general.rank();
  report.binary = false;
  report.simple = general.is_simple();
  report.circuit_count = general.circuits().size();
  if (report.simple) {
    fill_chordality(report, general.circuits(),
                    [&](ElementSet c) { return find_chord(general.circuits(), c).has_value(); });
  }
  return report;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* true_false(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_report(const AnalysisReport& r, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::KeyValue) {
    out << "id=" << r.id << '\n'
        << "n=" << r.n << '\n'
        << "rank=" << r.rank << '\n'
        << "simple=" << true_false(r.simple) << '\n'
        << "binary=" << true_false(r.binary) << '\n'
        << "circuits=" << r.circuit_count << '\n';
    if (r.chordal) out << "chordal=" << true_false(*r.chordal) << '\n';
    for (auto [ell, holds] : r.ell_chordal) out << "ell_chordal." << ell << '=' << true_false(holds) << '\n';
    if (r.supersolvable) out << "supersolvable=" << true_false(*r.supersolvable) << '\n';
    if (r.mchain) out << "mchain=" << r.mchain->to_string() << '\n';
    for (const auto& t : r.equivalence) {
      out << "equivalence." << t.ell << '=' << true_false(t.ell_closed) << ',' << true_false(t.chordal_ell2)
          << ',' << true_false(t.delta_generated) << '\n';
    }
    return out.str();
  }

  out << "id:             " << r.id << '\n'
      << "elements:       " << r.n << '\n'
      << "rank:           " << r.rank << '\n'
      << "simple:         " << yes_no(r.simple) << '\n'
      << "binary:         " << yes_no(r.binary) << '\n'
      << "circuits:       " << r.circuit_count << '\n';
  if (r.chordal) out << "chordal:        " << yes_no(*r.chordal) << '\n';
  if (!r.ell_chordal.empty()) {
    out << "ell-chordal:   ";
    for (auto [ell, holds] : r.ell_chordal) out << ' ' << ell << '=' << yes_no(holds);
    out << '\n';
  }
  if (r.supersolvable) out << "supersolvable:  " << yes_no(*r.supersolvable) << '\n';
  if (r.mchain) out << "M-chain:        " << r.mchain->to_string() << '\n';
  for (const auto& t : r.equivalence) {
    out << "ell=" << t.ell << ":          " << t.ell << "-closed=" << yes_no(t.ell_closed) << ' ' << t.ell + 2
        << "-chordal=" << yes_no(t.chordal_ell2) << " delta-generated=" << yes_no(t.delta_generated) << '\n';
  }
  return out.str();
}

}  // namespace chordmat::catalog
