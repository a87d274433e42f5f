#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "element_set.hpp"
#include "errors.hpp"
#include "gf2.hpp"

namespace chordmat {

/// An antichain of nonempty element sets, kept sorted by size and then
/// lexicographically so that iteration order is deterministic.
class CircuitFamily {
 public:
  CircuitFamily() = default;
  /// Throws InvalidCircuitAxioms if a member is empty or contained in another.
  explicit CircuitFamily(std::vector<ElementSet> circuits);

  const std::vector<ElementSet>& circuits() const { return circuits_; }
  std::size_t size() const { return circuits_.size(); }
  bool empty() const { return circuits_.empty(); }
  auto begin() const { return circuits_.begin(); }
  auto end() const { return circuits_.end(); }
  const ElementSet& operator[](std::size_t i) const { return circuits_[i]; }

  bool contains(ElementSet c) const;
  /// Members with at most `max_size` elements.
  CircuitFamily with_max_size(int max_size) const;
  int max_circuit_size() const;
  int min_circuit_size() const;

  friend bool operator==(const CircuitFamily& a, const CircuitFamily& b) {
    return a.circuits_ == b.circuits_;
  }

 private:
  std::vector<ElementSet> circuits_;     // size, then lex
  std::vector<ElementSet> by_mask_;      // numeric, for lookup
};

struct Flat {
  ElementSet elements;
  int rank = 0;
  friend bool operator==(const Flat&, const Flat&) = default;
};

/// All flats of a matroid, grouped by rank; each level sorted lexicographically.
class FlatLattice {
 public:
  FlatLattice() = default;
  explicit FlatLattice(std::vector<std::vector<Flat>> levels);

  int rank() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<std::vector<Flat>>& levels() const { return levels_; }
  const std::vector<Flat>& level(int k) const { return levels_[static_cast<std::size_t>(k)]; }
  std::size_t count() const;
  bool contains(ElementSet s) const;
  /// Rank of the flat `s`, or -1 when `s` is not a flat.
  int rank_of_flat(ElementSet s) const;
  /// Flats contained in `top`, in level order.
  std::vector<Flat> flats_below(ElementSet top) const;

 private:
  std::vector<std::vector<Flat>> levels_;
  std::vector<std::pair<std::uint64_t, int>> index_;  // sorted mask -> rank
};

/// A matroid represented by a matrix over GF(2); element i is column i.
///
/// Loops and parallel elements are allowed here. Operations whose theory
/// assumes a simple matroid check `is_simple` and throw `NotSimple`.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  explicit BinaryMatroid(gf2::Matrix matrix);
  /// Column j is the bit pattern `columns[j]` over `rows` coordinates.
  static BinaryMatroid from_columns(const std::vector<std::uint64_t>& columns, int rows);

  const gf2::Matrix& matrix() const { return matrix_; }
  int size() const { return matrix_.cols(); }
  int rank() const { return rank_; }
  ElementSet ground_set() const { return ElementSet::full(size()); }

  /// Coordinates of element e in a fixed basis of the row space (rank() bits).
  std::uint64_t column(int e) const { return columns_[static_cast<std::size_t>(e)]; }

  /// For a restriction: parent element of each element; identity otherwise.
  const std::vector<int>& origin() const { return origin_; }

  int rank_of(ElementSet x) const;
  bool is_independent(ElementSet x) const { return rank_of(x) == x.size(); }
  /// The span closure {e : column e in span of columns x}.
  ElementSet closure_set(ElementSet x) const;
  Flat closure(ElementSet x) const;
  bool is_flat(ElementSet x) const { return closure_set(x) == x; }
  ElementSet loops() const { return closure_set({}); }

 private:
  friend BinaryMatroid restriction(const BinaryMatroid& m, ElementSet x);

  gf2::Matrix matrix_;
  std::vector<std::uint64_t> columns_;
  std::vector<int> origin_;
  int rank_ = 0;
};

/// All circuits, by sweeping the 2^(n-r) vectors of the cycle space.
CircuitFamily circuits(const BinaryMatroid& m, const Limits& limits = default_limits());

/// Matroid represented by a basis of the orthogonal complement of the row space.
BinaryMatroid dual(const BinaryMatroid& m);

/// M|X with elements renumbered 0..|X|-1 in increasing order; `origin()` maps back.
BinaryMatroid restriction(const BinaryMatroid& m, ElementSet x);

bool is_simple(const BinaryMatroid& m);
void require_simple(const BinaryMatroid& m);

FlatLattice flats(const BinaryMatroid& m, const Limits& limits = default_limits());

/// Rank-2 flats with at least three elements.
std::vector<Flat> nontrivial_lines(const BinaryMatroid& m);
std::vector<Flat> nontrivial_lines(const FlatLattice& lattice);

/// Stable identifier: row count plus the sorted column patterns of the matrix.
std::string canonical_key(const BinaryMatroid& m);

/// A matroid given only by its circuit list. Intended for small examples
/// such as U(2,4) that are not binary.
class GeneralMatroid {
 public:
  GeneralMatroid() = default;
  /// Validates the circuit axioms by brute force; throws InvalidCircuitAxioms.
  GeneralMatroid(int n, CircuitFamily circuits);

  int size() const { return n_; }
  int rank() const { return rank_; }
  ElementSet ground_set() const { return ElementSet::full(n_); }
  const CircuitFamily& circuits() const { return circuits_; }

  bool is_independent(ElementSet x) const;
  int rank_of(ElementSet x) const;
  /// X together with every x such that some circuit C has C \ X = {x}.
  ElementSet closure_set(ElementSet x) const;
  Flat closure(ElementSet x) const;
  bool is_simple() const;

 private:
  int n_ = 0;
  int rank_ = 0;
  CircuitFamily circuits_;
};

GeneralMatroid general_from_circuits(int n, const std::vector<ElementSet>& circuits);

/// Every C1 != C2 has C1 xor C2 peeled into disjoint circuits greedily.
bool satisfies_binary_law(const CircuitFamily& family);

/// The binary matroid whose cycle space is spanned by the given circuits, if
/// its circuits are exactly the given ones (i.e. the matroid is binary).
std::optional<BinaryMatroid> binary_representation(const GeneralMatroid& m,
                                                    const Limits& limits = default_limits());

}  // namespace chordmat
