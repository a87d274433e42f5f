#pragma once

#include <optional>

#include "matroid.hpp"

namespace chordmat {

/// Chord `chord` splits a circuit C into circuits c1 and c2:
/// c1 & c2 == {chord} and c1 ^ c2 == C. c1 is the lexicographically smaller part.
struct ChordWitness {
  int chord = -1;
  ElementSet c1;
  ElementSet c2;
  friend bool operator==(const ChordWitness&, const ChordWitness&) = default;
};

/// Brute-force chord search over a circuit list. Chords are tried in
/// increasing order, and for each chord the circuit pairs in lexicographic order.
/// Throws NotACircuit when `c` is not in `family`.
std::optional<ChordWitness> find_chord(const CircuitFamily& family, ElementSet c);

/// Chord search in a binary matroid: a chord exists iff cl(C) contains a
/// non-loop element i outside C; the two halves are the fundamental circuit
/// of i in C and its symmetric difference with C.
std::optional<ChordWitness> find_chord(const BinaryMatroid& m, ElementSet c);

std::optional<ChordWitness> find_chord(const GeneralMatroid& m, ElementSet c);

/// Circuit test from ranks alone: c is dependent and every c - e is independent.
bool is_circuit(const BinaryMatroid& m, ElementSet c);

struct ChordalityVerdict {
  bool holds = true;
  /// First circuit (size-then-lex order) with at least ell elements and no chord.
  std::optional<ElementSet> chordless;
};

ChordalityVerdict ell_chordality(const BinaryMatroid& m, int ell,
                                 const Limits& limits = default_limits());
ChordalityVerdict ell_chordality(const GeneralMatroid& m, int ell);

bool is_ell_chordal(const BinaryMatroid& m, int ell, const Limits& limits = default_limits());
bool is_ell_chordal(const GeneralMatroid& m, int ell);
bool is_chordal(const BinaryMatroid& m, const Limits& limits = default_limits());
bool is_chordal(const GeneralMatroid& m);

/// A subset X that satisfies
///   |C & X| >= |C| - 1  =>  C subset of X   for every circuit with |C| <= ell + 1
/// and yet is not closed; std::nullopt when the matroid is ell-closed.
/// Sweeps all 2^n subsets.
std::optional<ElementSet> ell_closed_counterexample(const BinaryMatroid& m, int ell,
                                                    const Limits& limits = default_limits());
bool is_ell_closed(const BinaryMatroid& m, int ell, const Limits& limits = default_limits());

/// Least family containing `seed` and every circuit of `all` that splits into
/// two members of the family. Throws SeedNotCircuits if seed is not a subfamily.
CircuitFamily delta_closure(const CircuitFamily& all, const CircuitFamily& seed);
CircuitFamily delta_closure(const BinaryMatroid& m, const CircuitFamily& seed,
                            const Limits& limits = default_limits());
CircuitFamily delta_closure(const GeneralMatroid& m, const CircuitFamily& seed);

struct EquivalenceReport {
  int ell = 0;
  bool ell_closed = false;      // M is ell-closed
  bool chordal_ell2 = false;    // M is (ell+2)-chordal
  bool delta_generated = false; // C(M) = cl_delta(C_{ell+1})
  bool consistent() const { return ell_closed == chordal_ell2 && chordal_ell2 == delta_generated; }
};

/// Evaluates the three equivalent conditions independently. Requires a simple matroid.
EquivalenceReport equivalence_report(const BinaryMatroid& m, int ell,
                                      const Limits& limits = default_limits());

}  // namespace chordmat
