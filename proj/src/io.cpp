#include "io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace chordmat::io {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

int parse_int(const std::string& token, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": expected an integer, got '" + token + "'");
  }
  return value;
}

}  // namespace

BinaryMatroid parse_gf2(const std::string& text) {
  std::vector<std::string> rows;
  for (const auto& [number, line] : content_lines(text)) {
    if (line.find_first_not_of("01") != std::string::npos) {
      fail(ErrorCode::ParseError, "line " + std::to_string(number) + ": rows must contain only 0 and 1");
    }
    if (!rows.empty() && line.size() != rows.front().size()) {
      fail(ErrorCode::ParseError, "line " + std::to_string(number) + ": row length differs from first row");
    }
    rows.push_back(line);
  }
  if (rows.empty()) fail(ErrorCode::ParseError, "matrix file has no rows");
  if (rows.front().size() > static_cast<std::size_t>(kMaxElements)) {
    fail(ErrorCode::ParseError, "more than 64 columns");
  }
  return BinaryMatroid(gf2::Matrix::from_strings(rows));
}

GeneralMatroid parse_circ(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) fail(ErrorCode::ParseError, "circuit file is empty");
  const auto header = split(lines.front().second);
  if (header.size() != 1) fail(ErrorCode::ParseError, "first line must hold only n");
  const int n = parse_int(header.front(), lines.front().first);
  if (n < 0 || n > kMaxElements) fail(ErrorCode::ParseError, "n must lie in [0,64]");
  std::vector<ElementSet> circuits;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<int> labels;
    for (const auto& token : split(lines[i].second)) labels.push_back(parse_int(token, lines[i].first));
    try {
      circuits.push_back(ElementSet::from_one_based(labels, n));
    } catch (const Error& e) {
      fail(ErrorCode::ParseError, "line " + std::to_string(lines[i].first) + ": " + e.what());
    }
  }
  return general_from_circuits(n, circuits);
}

LabeledGraph parse_graph(const std::string& text) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  auto vertex = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<int>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };

  struct RawEdge {
    int label;
    int u;
    int v;
    int line;
  };
  std::vector<RawEdge> raw;
  bool any_labeled = false;
  bool any_unlabeled = false;
  bool seen_edge = false;
  for (const auto& [number, line] : content_lines(text)) {
    const auto tokens = split(line);
    if (tokens.front() == "vertices") {
      if (seen_edge) fail(ErrorCode::ParseError, "line " + std::to_string(number) + ": vertices header after edges");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (index.count(tokens[i]) != 0) fail(ErrorCode::ParseError, "duplicate vertex '" + tokens[i] + "'");
        vertex(tokens[i]);
      }
      continue;
    }
    seen_edge = true;
    if (tokens.size() == 3) {
      any_labeled = true;
      raw.push_back({parse_int(tokens[0], number), vertex(tokens[1]), vertex(tokens[2]), number});
    } else if (tokens.size() == 2) {
      any_unlabeled = true;
      raw.push_back({0, vertex(tokens[0]), vertex(tokens[1]), number});
    } else {
      fail(ErrorCode::ParseError, "line " + std::to_string(number) + ": expected 'label u v' or 'u v'");
    }
  }
  if (any_labeled && any_unlabeled) fail(ErrorCode::ParseError, "either all edges carry labels or none does");

  const int n = static_cast<int>(raw.size());
  std::vector<Edge> edges(raw.size());
  std::vector<bool> used(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const int label = any_labeled ? raw[i].label : static_cast<int>(i) + 1;
    if (label < 1 || label > n || used[static_cast<std::size_t>(label - 1)]) {
      fail(ErrorCode::ParseError, "line " + std::to_string(raw[i].line) + ": edge labels must be exactly 1.." +
                                      std::to_string(n) + ", each once");
    }
    used[static_cast<std::size_t>(label - 1)] = true;
    edges[static_cast<std::size_t>(label - 1)] = {raw[i].u, raw[i].v};
  }
  return LabeledGraph(std::move(names), std::move(edges));
}

std::string format_gf2(const BinaryMatroid& m) {
  std::string out;
  for (const auto& row : m.matrix().row_vectors()) out += row.to_string() + '\n';
  return out;
}

std::string format_graph(const LabeledGraph& g) {
  std::string out = "vertices";
  for (const auto& name : g.vertex_names()) out += ' ' + name;
  out += '\n';
  for (int label = 0; label < g.size(); ++label) {
    out += std::to_string(label + 1) + ' ' + g.name(g.edge(label).u) + ' ' + g.name(g.edge(label).v) + '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace chordmat::io
