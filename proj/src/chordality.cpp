#include "chordality.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>

namespace chordmat {

namespace {

void check_ell(int ell) {
  if (ell < 2) fail(ErrorCode::InvalidArgument, "ell must be at least 2, got " + std::to_string(ell));
}

ChordWitness ordered_witness(int chord, ElementSet a, ElementSet b) {
  if (lex_less(b, a)) std::swap(a, b);
  return {chord, a, b};
}

/// Echelon basis keyed by top bit that records which input vectors each row combines.
class TrackedBasis {
 public:
  std::pair<std::uint64_t, ElementSet> reduce(std::uint64_t v, ElementSet combo = {}) const {
    while (v != 0) {
      const auto top = static_cast<std::size_t>(63 - std::countl_zero(v));
      if (rows_[top] == 0) break;
      v ^= rows_[top];
      combo ^= combos_[top];
    }
    return {v, combo};
  }
  void insert(std::uint64_t v, ElementSet label) {
    const auto [rest, combo] = reduce(v, label);
    if (rest == 0) return;
    const auto top = static_cast<std::size_t>(63 - std::countl_zero(rest));
    rows_[top] = rest;
    combos_[top] = combo;
  }

 private:
  std::array<std::uint64_t, 64> rows_{};
  std::array<ElementSet, 64> combos_{};
};

template <typename Finder>
ChordalityVerdict scan_circuits(const CircuitFamily& family, int ell, Finder&& find) {
  for (ElementSet c : family) {
    if (c.size() >= ell && !find(c)) return {false, c};
  }
  return {true, std::nullopt};
}

}  // namespace

std::optional<ChordWitness> find_chord(const CircuitFamily& family, ElementSet c) {
  if (!family.contains(c)) fail(ErrorCode::NotACircuit, c.to_string() + " is not a circuit");
  std::vector<ElementSet> lex(family.begin(), family.end());
  std::sort(lex.begin(), lex.end(), lex_less);

  ElementSet outside;
  for (ElementSet d : family) outside |= d;
  outside = outside - c;
  for (int i : outside) {
    for (ElementSet c1 : lex) {
      if (!c1.contains(i) || !c1.without(i).subset_of(c)) continue;
      const ElementSet c2 = c ^ c1;
      if (c2 != c1 && family.contains(c2)) return ordered_witness(i, c1, c2);
    }
  }
  return std::nullopt;
}

bool is_circuit(const BinaryMatroid& m, ElementSet c) {
  if (c.empty() || !c.subset_of(m.ground_set())) return false;
  if (m.rank_of(c) != c.size() - 1) return false;
  return std::all_of(c.begin(), c.end(), [&](int e) { return m.is_independent(c.without(e)); });
}

std::optional<ChordWitness> find_chord(const BinaryMatroid& m, ElementSet c) {
  if (!is_circuit(m, c)) fail(ErrorCode::NotACircuit, c.to_string() + " is not a circuit");
  const ElementSet candidates = m.closure_set(c) - c - m.loops();
  if (candidates.empty()) return std::nullopt;
  const int chord = candidates.min();

  // C - {a} is a basis of span(C) for any a in C; express the chord column in it.
  TrackedBasis basis;
  for (int e : c.without(c.min())) basis.insert(m.column(e), ElementSet::single(e));
  const auto [residue, support] = basis.reduce(m.column(chord));
  if (residue != 0) fail(ErrorCode::Internal, "chord column not in the span of the circuit");

  const ElementSet d = support.with(chord);
  const ElementSet d_prime = (c - support).with(chord);
  return ordered_witness(chord, d, d_prime);
}

std::optional<ChordWitness> find_chord(const GeneralMatroid& m, ElementSet c) {
  return find_chord(m.circuits(), c);
}

ChordalityVerdict ell_chordality(const BinaryMatroid& m, int ell, const Limits& limits) {
  check_ell(ell);
  require_simple(m);
  return scan_circuits(circuits(m, limits), ell,
                       [&](ElementSet c) { return find_chord(m, c).has_value(); });
}

ChordalityVerdict ell_chordality(const GeneralMatroid& m, int ell) {
  check_ell(ell);
  if (!m.is_simple()) fail(ErrorCode::NotSimple, "matroid has a circuit with fewer than 3 elements");
  return scan_circuits(m.circuits(), ell,
                       [&](ElementSet c) { return find_chord(m.circuits(), c).has_value(); });
}

bool is_ell_chordal(const BinaryMatroid& m, int ell, const Limits& limits) {
  return ell_chordality(m, ell, limits).holds;
}

bool is_ell_chordal(const GeneralMatroid& m, int ell) { return ell_chordality(m, ell).holds; }

bool is_chordal(const BinaryMatroid& m, const Limits& limits) { return is_ell_chordal(m, 4, limits); }

bool is_chordal(const GeneralMatroid& m) { return is_ell_chordal(m, 4); }

std::optional<ElementSet> ell_closed_counterexample(const BinaryMatroid& m, int ell,
                                                    const Limits& limits) {
  check_ell(ell);
  if (m.size() > limits.max_subset_sweep) {
    fail(ErrorCode::EnumerationCapExceeded, "subset sweep over 2^" + std::to_string(m.size()) +
                                                " sets exceeds cap 2^" +
                                                std::to_string(limits.max_subset_sweep));
  }
  const CircuitFamily small = circuits(m, limits).with_max_size(ell + 1);
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const ElementSet x(bits);
    const bool condition = std::all_of(small.begin(), small.end(), [&](ElementSet c) {
      return (c & x).size() < c.size() - 1 || c.subset_of(x);
    });
    if (condition && !m.is_flat(x)) return x;
  }
  return std::nullopt;
}

bool is_ell_closed(const BinaryMatroid& m, int ell, const Limits& limits) {
  return !ell_closed_counterexample(m, ell, limits).has_value();
}

CircuitFamily delta_closure(const CircuitFamily& all, const CircuitFamily& seed) {
  for (ElementSet c : seed) {
    if (!all.contains(c)) fail(ErrorCode::SeedNotCircuits, c.to_string() + " is not a circuit");
  }
  std::vector<ElementSet> members(seed.begin(), seed.end());
  std::unordered_set<ElementSet, ElementSetHash> present(members.begin(), members.end());

  // Circuits are visited in increasing size; repeat until a full pass adds nothing.
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementSet c : all) {
      if (present.count(c) != 0) continue;
      const bool splits = std::any_of(members.begin(), members.end(), [&](ElementSet c1) {
        // c = c1 ^ c2 with c1 & c2 = {i} forces c2 = c ^ c1 and c1 - c = {i}.
        return (c1 - c).size() == 1 && present.count(c ^ c1) != 0;
      });
      if (splits) {
        members.push_back(c);
        present.insert(c);
        changed = true;
      }
    }
  }
  return CircuitFamily(std::move(members));
}

CircuitFamily delta_closure(const BinaryMatroid& m, const CircuitFamily& seed, const Limits& limits) {
  return delta_closure(circuits(m, limits), seed);
}

CircuitFamily delta_closure(const GeneralMatroid& m, const CircuitFamily& seed) {
  return delta_closure(m.circuits(), seed);
}

EquivalenceReport equivalence_report(const BinaryMatroid& m, int ell, const Limits& limits) {
  check_ell(ell);
  require_simple(m);
  const CircuitFamily all = circuits(m, limits);
  EquivalenceReport report;
  report.ell = ell;
  report.ell_closed = is_ell_closed(m, ell, limits);
  report.chordal_ell2 = is_ell_chordal(m, ell + 2, limits);
  report.delta_generated = delta_closure(all, all.with_max_size(ell + 1)) == all;
  return report;
}

}  // namespace chordmat
