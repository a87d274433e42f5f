#include "matroid.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace chordmat {

namespace {

bool size_then_lex(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace

// ---------------------------------------------------------------------------
// CircuitFamily

CircuitFamily::CircuitFamily(std::vector<ElementSet> circuits) : circuits_(std::move(circuits)) {
  std::sort(circuits_.begin(), circuits_.end(), size_then_lex);
  circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
  for (std::size_t i = 0; i < circuits_.size(); ++i) {
    if (circuits_[i].empty()) fail(ErrorCode::InvalidCircuitAxioms, "empty circuit");
    for (std::size_t j = i + 1; j < circuits_.size(); ++j) {
      if (circuits_[i].subset_of(circuits_[j])) {
        fail(ErrorCode::InvalidCircuitAxioms, "not an antichain: " + circuits_[i].to_string() +
                                                  " is contained in " + circuits_[j].to_string());
      }
    }
  }
  by_mask_ = circuits_;
  std::sort(by_mask_.begin(), by_mask_.end());
}

bool CircuitFamily::contains(ElementSet c) const {
  return std::binary_search(by_mask_.begin(), by_mask_.end(), c);
}

CircuitFamily CircuitFamily::with_max_size(int max_size) const {
  std::vector<ElementSet> kept;
  for (ElementSet c : circuits_) {
    if (c.size() <= max_size) kept.push_back(c);
  }
  return CircuitFamily(std::move(kept));
}

int CircuitFamily::max_circuit_size() const {
  return circuits_.empty() ? 0 : circuits_.back().size();
}

int CircuitFamily::min_circuit_size() const {
  return circuits_.empty() ? 0 : circuits_.front().size();
}

// ---------------------------------------------------------------------------
// FlatLattice

FlatLattice::FlatLattice(std::vector<std::vector<Flat>> levels) : levels_(std::move(levels)) {
  for (const auto& level : levels_) {
    for (const Flat& f : level) index_.emplace_back(f.elements.bits(), f.rank);
  }
  std::sort(index_.begin(), index_.end());
}

std::size_t FlatLattice::count() const { return index_.size(); }

bool FlatLattice::contains(ElementSet s) const { return rank_of_flat(s) >= 0; }

int FlatLattice::rank_of_flat(ElementSet s) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(s.bits(), -1));
  if (it == index_.end() || it->first != s.bits()) return -1;
  return it->second;
}

std::vector<Flat> FlatLattice::flats_below(ElementSet top) const {
  std::vector<Flat> out;
  for (const auto& level : levels_) {
    for (const Flat& f : level) {
      if (f.elements.subset_of(top)) out.push_back(f);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// BinaryMatroid

BinaryMatroid::BinaryMatroid(gf2::Matrix matrix) : matrix_(std::move(matrix)) {
  const gf2::EchelonForm ef = gf2::rref(matrix_);
  rank_ = ef.reduced.rows();
  columns_.assign(static_cast<std::size_t>(size()), 0);
  for (int i = 0; i < rank_; ++i) {
    const std::uint64_t row = ef.reduced.row(i).bits();
    for (int e = 0; e < size(); ++e) {
      if ((row >> e) & 1U) columns_[static_cast<std::size_t>(e)] |= std::uint64_t{1} << i;
    }
  }
  origin_.resize(static_cast<std::size_t>(size()));
  for (int e = 0; e < size(); ++e) origin_[static_cast<std::size_t>(e)] = e;
}

BinaryMatroid BinaryMatroid::from_columns(const std::vector<std::uint64_t>& columns, int rows) {
  return BinaryMatroid(gf2::Matrix::from_columns(columns, rows));
}

int BinaryMatroid::rank_of(ElementSet x) const {
  gf2::XorBasis basis;
  for (int e : x) basis.insert(column(e));
  return basis.dimension();
}

ElementSet BinaryMatroid::closure_set(ElementSet x) const {
  gf2::XorBasis basis;
  for (int e : x) basis.insert(column(e));
  ElementSet out = x;
  for (int e = 0; e < size(); ++e) {
    if (!out.contains(e) && basis.contains(column(e))) out.insert(e);
  }
  return out;
}

Flat BinaryMatroid::closure(ElementSet x) const {
  return {closure_set(x), rank_of(x)};
}

CircuitFamily circuits(const BinaryMatroid& m, const Limits& limits) {
  const int nullity = m.size() - m.rank();
  if (nullity > limits.max_cycle_space_dim) {
    fail(ErrorCode::EnumerationCapExceeded,
         "cycle space of dimension " + std::to_string(nullity) + " exceeds cap " +
             std::to_string(limits.max_cycle_space_dim));
  }
  const std::vector<gf2::Vector> basis = gf2::null_space(m.matrix());
  std::vector<ElementSet> found;
  std::uint64_t current = 0;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  // Gray-code walk: step k flips basis vector countr_zero(k).
  for (std::uint64_t k = 1; k < total; ++k) {
    current ^= basis[static_cast<std::size_t>(std::countr_zero(k))].bits();
    const ElementSet support(current);
    if (m.rank_of(support) == support.size() - 1) found.push_back(support);
  }
  return CircuitFamily(std::move(found));
}

BinaryMatroid dual(const BinaryMatroid& m) {
  return BinaryMatroid(gf2::Matrix(gf2::null_space(m.matrix()), m.size()));
}

BinaryMatroid restriction(const BinaryMatroid& m, ElementSet x) {
  if (!x.subset_of(m.ground_set())) fail(ErrorCode::InvalidArgument, "restriction set outside ground set");
  gf2::Matrix sub(m.matrix().rows(), x.size());
  int j = 0;
  for (int e : x) {
    for (int i = 0; i < m.matrix().rows(); ++i) {
      if (m.matrix().get(i, e)) sub.set(i, j, true);
    }
    ++j;
  }
  BinaryMatroid out(std::move(sub));
  j = 0;
  for (int e : x) out.origin_[static_cast<std::size_t>(j++)] = m.origin()[static_cast<std::size_t>(e)];
  return out;
}

bool is_simple(const BinaryMatroid& m) {
  std::unordered_set<std::uint64_t> seen;
  for (int e = 0; e < m.size(); ++e) {
    const std::uint64_t c = m.column(e);
    if (c == 0 || !seen.insert(c).second) return false;
  }
  return true;
}

void require_simple(const BinaryMatroid& m) {
  if (!is_simple(m)) fail(ErrorCode::NotSimple, "matroid has a loop or a parallel pair");
}

FlatLattice flats(const BinaryMatroid& m, const Limits& limits) {
  if (m.rank() > limits.max_flat_rank) {
    fail(ErrorCode::EnumerationCapExceeded, "rank " + std::to_string(m.rank()) +
                                                " exceeds flat-lattice cap " +
                                                std::to_string(limits.max_flat_rank));
  }
  std::vector<std::vector<Flat>> levels;
  levels.push_back({m.closure({})});
  long total = 1;
  for (int k = 0; k < m.rank(); ++k) {
    std::unordered_set<ElementSet, ElementSetHash> next;
    for (const Flat& f : levels.back()) {
      gf2::XorBasis basis;
      for (int e : f.elements) basis.insert(m.column(e));
      for (int e = 0; e < m.size(); ++e) {
        if (f.elements.contains(e)) continue;
        // cl(F + e): F's span extended by column e.
        gf2::XorBasis extended = basis;
        extended.insert(m.column(e));
        ElementSet g = f.elements.with(e);
        for (int x = 0; x < m.size(); ++x) {
          if (!g.contains(x) && extended.contains(m.column(x))) g.insert(x);
        }
        next.insert(g);
      }
    }
    total += static_cast<long>(next.size());
    if (total > limits.max_flats) {
      fail(ErrorCode::EnumerationCapExceeded, "flat count exceeds cap " + std::to_string(limits.max_flats));
    }
    std::vector<Flat> level;
    level.reserve(next.size());
    for (ElementSet g : next) level.push_back({g, k + 1});
    std::sort(level.begin(), level.end(),
              [](const Flat& a, const Flat& b) { return lex_less(a.elements, b.elements); });
    levels.push_back(std::move(level));
  }
  return FlatLattice(std::move(levels));
}

std::vector<Flat> nontrivial_lines(const FlatLattice& lattice) {
  std::vector<Flat> out;
  if (lattice.rank() < 2) return out;
  for (const Flat& f : lattice.level(2)) {
    if (f.elements.size() >= 3) out.push_back(f);
  }
  return out;
}

std::vector<Flat> nontrivial_lines(const BinaryMatroid& m) {
  // Rank-2 flats are the closures of pairs; no need for the whole lattice.
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Flat> out;
  const ElementSet loops = m.loops();
  for (int a = 0; a < m.size(); ++a) {
    for (int b = a + 1; b < m.size(); ++b) {
      if (m.rank_of({a, b}) != 2) continue;
      const ElementSet line = m.closure_set({a, b});
      if ((line - loops).size() >= 3 && seen.insert(line).second) out.push_back({line, 2});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Flat& x, const Flat& y) { return lex_less(x.elements, y.elements); });
  return out;
}

std::string canonical_key(const BinaryMatroid& m) {
  std::vector<std::uint64_t> cols;
  for (int e = 0; e < m.size(); ++e) cols.push_back(m.matrix().column(e).bits());
  std::sort(cols.begin(), cols.end());
  std::ostringstream out;
  out << "r" << m.matrix().rows() << ":";
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i != 0) out << ',';
    out << std::hex << cols[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// GeneralMatroid

GeneralMatroid::GeneralMatroid(int n, CircuitFamily circuits) : n_(n), circuits_(std::move(circuits)) {
  if (n < 0 || n > kMaxElements) fail(ErrorCode::InvalidArgument, "ground set size outside [0,64]");
  const ElementSet ground = ground_set();
  for (ElementSet c : circuits_) {
    if (!c.subset_of(ground)) {
      fail(ErrorCode::InvalidCircuitAxioms, "circuit " + c.to_string() + " outside ground set");
    }
  }
  // Weak elimination: C1 != C2, e in both => some circuit inside (C1 u C2) - e.
  for (std::size_t i = 0; i < circuits_.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits_.size(); ++j) {
      const ElementSet c1 = circuits_[i];
      const ElementSet c2 = circuits_[j];
      for (int e : c1 & c2) {
        const ElementSet rest = (c1 | c2).without(e);
        const bool ok = std::any_of(circuits_.begin(), circuits_.end(),
                                    [&](ElementSet c) { return c.subset_of(rest); });
        if (!ok) {
          fail(ErrorCode::InvalidCircuitAxioms,
               "circuit elimination fails for " + c1.to_string() + " and " + c2.to_string() +
                   " at element " + std::to_string(e + 1));
        }
      }
    }
  }
  rank_ = rank_of(ground);
}

bool GeneralMatroid::is_independent(ElementSet x) const {
  return std::none_of(circuits_.begin(), circuits_.end(), [&](ElementSet c) { return c.subset_of(x); });
}

int GeneralMatroid::rank_of(ElementSet x) const {
  // Greedy is exact once the circuit axioms hold: all maximal independent
  // subsets of x have the same size.
  ElementSet basis;
  for (int e : x) {
    if (is_independent(basis.with(e))) basis.insert(e);
  }
  return basis.size();
}

ElementSet GeneralMatroid::closure_set(ElementSet x) const {
  ElementSet out = x;
  for (ElementSet c : circuits_) {
    const ElementSet rest = c - x;
    if (rest.size() == 1) out |= rest;
  }
  return out;
}

Flat GeneralMatroid::closure(ElementSet x) const { return {closure_set(x), rank_of(x)}; }

bool GeneralMatroid::is_simple() const { return circuits_.min_circuit_size() >= 3 || circuits_.empty(); }

GeneralMatroid general_from_circuits(int n, const std::vector<ElementSet>& circuits) {
  return GeneralMatroid(n, CircuitFamily(circuits));
}

bool satisfies_binary_law(const CircuitFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      ElementSet rest = family[i] ^ family[j];
      while (!rest.empty()) {
        auto it = std::find_if(family.begin(), family.end(),
                               [&](ElementSet c) { return c.subset_of(rest); });
        if (it == family.end()) return false;
        rest = rest - *it;
      }
    }
  }
  return true;
}

std::optional<BinaryMatroid> binary_representation(const GeneralMatroid& m, const Limits& limits) {
  gf2::Matrix cycles(m.size());
  for (ElementSet c : m.circuits()) cycles.add_row(gf2::Vector(m.size(), c.bits()));
  BinaryMatroid candidate(gf2::Matrix(gf2::null_space(cycles), m.size()));
  if (circuits(candidate, limits) == m.circuits()) return candidate;
  return std::nullopt;
}

}  // namespace chordmat
