#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "matroid.hpp"

namespace chordmat {

/// A maximal chain of modular flats F0 < F1 < ... < Fr, stored bottom-up.
struct MChain {
  std::vector<ElementSet> flats;

  int rank() const { return static_cast<int>(flats.size()) - 1; }
  ElementSet top() const { return flats.back(); }
  /// `{} < {1} < {1,2,3}` with 1-based labels.
  std::string to_string() const;
  friend bool operator==(const MChain&, const MChain&) = default;
};

/// Blocks P_i = F_i - F_{i-1}, i = 1..r.
struct MPartition {
  std::vector<ElementSet> blocks;

  /// `{1} | {2,3} | {4,5}`.
  std::string to_string() const;
  friend bool operator==(const MPartition&, const MPartition&) = default;
};

/// Chains compare lexicographically flat by flat, from F0 upward.
bool chain_less(const MChain& a, const MChain& b);

MPartition mpartition(const MChain& chain);

/// Prefix unions of the blocks, starting from the empty set.
MChain chain_from_partition(const MPartition& partition);

/// r(F) + r(F') = r(cl(F u F')) + r(F n F'). Throws NotAFlat.
bool is_modular_pair(const BinaryMatroid& m, ElementSet f1, ElementSet f2);

bool is_modular_flat(const BinaryMatroid& m, ElementSet f, const FlatLattice& lattice);
bool is_modular_flat(const BinaryMatroid& m, ElementSet f, const Limits& limits = default_limits());

/// Holds the flat lattice of one matroid and answers "is this flat modular"
/// and "is this an M-chain" queries, caching modularity per flat.
/// Not safe for concurrent use (the cache is mutable).
class ChainValidator {
 public:
  explicit ChainValidator(BinaryMatroid m, const Limits& limits = default_limits());

  const BinaryMatroid& matroid() const { return m_; }
  const FlatLattice& lattice() const { return lattice_; }

  bool is_modular(ElementSet flat) const;
  /// Throws InvalidChain naming the first violated condition.
  void validate(const MChain& chain) const;
  bool is_valid(const MChain& chain) const;

 private:
  BinaryMatroid m_;
  FlatLattice lattice_;
  mutable std::unordered_map<ElementSet, bool, ElementSetHash> modular_;
};

/// First M-chain in the top-down search: modular hyperplanes of M tried in
/// lexicographic order, then recursion into the restriction to the hyperplane.
/// std::nullopt iff M is not supersolvable. Requires a simple matroid.
std::optional<MChain> find_mchain(const BinaryMatroid& m, const Limits& limits = default_limits());

/// Every M-chain, sorted by `chain_less`.
std::vector<MChain> all_mchains(const BinaryMatroid& m, const Limits& limits = default_limits());

/// The chain {F_i n F}, consecutive duplicates removed, validated as an
/// M-chain of M|F. Flats keep the element labels of `m`.
MChain restrict_chain(const BinaryMatroid& m, const MChain& chain, ElementSet f,
                      const Limits& limits = default_limits());

/// True iff the two chains have the same flats except possibly one.
/// Throws DifferentMatroids when their lengths or top flats differ.
bool is_elementary_deformation(const MChain& a, const MChain& b);

/// Shortest sequence of elementary deformations from `from` to `to`, found
/// by breadth-first search over `all_mchains`. Throws NoPathFound.
std::vector<MChain> deformation_path(const BinaryMatroid& m, const MChain& from, const MChain& to,
                                     const Limits& limits = default_limits());

/// True iff the elementary-deformation graph on `chains` is connected.
bool deformation_graph_connected(const std::vector<MChain>& chains);

}  // namespace chordmat
