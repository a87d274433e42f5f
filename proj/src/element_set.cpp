#include "element_set.hpp"

#include <algorithm>

#include "errors.hpp"

namespace chordmat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::InvalidCircuitAxioms: return "InvalidCircuitAxioms";
    case ErrorCode::NotACircuit: return "NotACircuit";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::SeedNotCircuits: return "SeedNotCircuits";
    case ErrorCode::NotAFlat: return "NotAFlat";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::DifferentMatroids: return "DifferentMatroids";
    case ErrorCode::NoPathFound: return "NoPathFound";
    case ErrorCode::InvalidSLabel: return "InvalidSLabel";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotSimpleGraph: return "NotSimpleGraph";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

ElementSet ElementSet::from_one_based(const std::vector<int>& labels, int n) {
  ElementSet s;
  for (int label : labels) {
    if (label < 1 || label > n) {
      fail(ErrorCode::InvalidArgument,
           "element " + std::to_string(label) + " outside [1," + std::to_string(n) + "]");
    }
    s.insert(label - 1);
  }
  return s;
}

std::vector<int> ElementSet::one_based() const {
  std::vector<int> out;
  out.reserve(size());
  for (int e : *this) out.push_back(e + 1);
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : *this) {
    if (!first) out += ',';
    out += std::to_string(e + 1);
    first = false;
  }
  out += '}';
  return out;
}

bool lex_less(ElementSet a, ElementSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

}  // namespace chordmat
