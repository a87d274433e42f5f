#include "supersolvable.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

namespace chordmat {

namespace {

void require_flat(const BinaryMatroid& m, ElementSet f) {
  if (!f.subset_of(m.ground_set()) || !m.is_flat(f)) fail(ErrorCode::NotAFlat, f.to_string() + " is not a flat");
}

bool modular_pair_unchecked(const BinaryMatroid& m, ElementSet a, ElementSet b) {
  return m.rank_of(a) + m.rank_of(b) == m.rank_of(a | b) + m.rank_of(a & b);
}

/// Modular hyperplanes of M|F for each flat F visited, memoized.
class HyperplaneSearch {
 public:
  HyperplaneSearch(const BinaryMatroid& m, const Limits& limits)
      : m_(m), lattice_(flats(m, limits)), limits_(limits) {}

  const std::vector<ElementSet>& modular_hyperplanes(ElementSet top, int top_rank) {
    auto it = memo_.find(top);
    if (it != memo_.end()) return it->second;
    std::vector<ElementSet> below;
    for (int k = 0; k <= top_rank; ++k) {
      for (const Flat& f : lattice_.level(k)) {
        if (f.elements.subset_of(top)) below.push_back(f.elements);
      }
    }
    std::vector<ElementSet> found;
    if (top_rank > 0) {
      for (const Flat& h : lattice_.level(top_rank - 1)) {
        if (!h.elements.subset_of(top)) continue;
        const bool modular = std::all_of(below.begin(), below.end(), [&](ElementSet y) {
          return modular_pair_unchecked(m_, h.elements, y);
        });
        if (modular) found.push_back(h.elements);
      }
    }
    return memo_.emplace(top, std::move(found)).first->second;
  }

  /// Visits chains top-down; `visit` returns false to stop the search.
  void search(const std::function<bool(const MChain&)>& visit) {
    std::vector<ElementSet> stack{m_.ground_set()};
    descend(stack, m_.rank(), visit);
  }

  long visited() const { return visited_; }

 private:
  bool descend(std::vector<ElementSet>& stack, int rank, const std::function<bool(const MChain&)>& visit) {
    if (rank == 0) {
      if (++visited_ > limits_.max_chains) {
        fail(ErrorCode::EnumerationCapExceeded, "more than " + std::to_string(limits_.max_chains) + " M-chains");
      }
      MChain chain{{stack.rbegin(), stack.rend()}};
      return visit(chain);
    }
    // Copy: the memo may rehash while recursing.
    const std::vector<ElementSet> hyperplanes = modular_hyperplanes(stack.back(), rank);
    for (ElementSet h : hyperplanes) {
      stack.push_back(h);
      const bool keep_going = descend(stack, rank - 1, visit);
      stack.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const BinaryMatroid& m_;
  FlatLattice lattice_;
  const Limits& limits_;
  std::unordered_map<ElementSet, std::vector<ElementSet>, ElementSetHash> memo_;
  long visited_ = 0;
};

std::string join_sets(const std::vector<ElementSet>& sets, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i != 0) out += sep;
    out += sets[i].to_string();
  }
  return out;
}

}  // namespace

std::string MChain::to_string() const { return join_sets(flats, " < "); }

std::string MPartition::to_string() const { return join_sets(blocks, " | "); }

bool chain_less(const MChain& a, const MChain& b) {
  return std::lexicographical_compare(a.flats.begin(), a.flats.end(), b.flats.begin(), b.flats.end(),
                                      lex_less);
}

MPartition mpartition(const MChain& chain) {
  MPartition p;
  for (std::size_t i = 1; i < chain.flats.size(); ++i) p.blocks.push_back(chain.flats[i] - chain.flats[i - 1]);
  return p;
}

MChain chain_from_partition(const MPartition& partition) {
  MChain chain{{ElementSet{}}};
  for (ElementSet block : partition.blocks) chain.flats.push_back(chain.flats.back() | block);
  return chain;
}

bool is_modular_pair(const BinaryMatroid& m, ElementSet f1, ElementSet f2) {
  require_flat(m, f1);
  require_flat(m, f2);
  return modular_pair_unchecked(m, f1, f2);
}

bool is_modular_flat(const BinaryMatroid& m, ElementSet f, const FlatLattice& lattice) {
  require_flat(m, f);
  for (const auto& level : lattice.levels()) {
    for (const Flat& g : level) {
      if (!modular_pair_unchecked(m, f, g.elements)) return false;
    }
  }
  return true;
}

bool is_modular_flat(const BinaryMatroid& m, ElementSet f, const Limits& limits) {
  require_flat(m, f);
  return is_modular_flat(m, f, flats(m, limits));
}

ChainValidator::ChainValidator(BinaryMatroid m, const Limits& limits)
    : m_(std::move(m)), lattice_(flats(m_, limits)) {}

bool ChainValidator::is_modular(ElementSet flat) const {
  auto it = modular_.find(flat);
  if (it != modular_.end()) return it->second;
  const bool modular = is_modular_flat(m_, flat, lattice_);
  modular_.emplace(flat, modular);
  return modular;
}

void ChainValidator::validate(const MChain& chain) const {
  auto reject = [&](const std::string& why) { fail(ErrorCode::InvalidChain, chain.to_string() + ": " + why); };
  if (chain.rank() != m_.rank()) reject("length does not match rank " + std::to_string(m_.rank()));
  if (chain.flats.front() != m_.loops()) reject("bottom flat is not cl({})");
  if (chain.top() != m_.ground_set()) reject("top flat is not the ground set");
  for (std::size_t i = 0; i < chain.flats.size(); ++i) {
    const ElementSet f = chain.flats[i];
    if (lattice_.rank_of_flat(f) != static_cast<int>(i)) {
      reject(f.to_string() + " is not a flat of rank " + std::to_string(i));
    }
    if (i > 0 && !chain.flats[i - 1].proper_subset_of(f)) reject("flats are not nested");
    if (!is_modular(f)) reject(f.to_string() + " is not modular");
  }
}

bool ChainValidator::is_valid(const MChain& chain) const {
  try {
    validate(chain);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidChain) return false;
    throw;
  }
}

std::optional<MChain> find_mchain(const BinaryMatroid& m, const Limits& limits) {
  require_simple(m);
  HyperplaneSearch search(m, limits);
  std::optional<MChain> found;
  search.search([&](const MChain& chain) {
    found = chain;
    return false;
  });
  return found;
}

std::vector<MChain> all_mchains(const BinaryMatroid& m, const Limits& limits) {
  require_simple(m);
  HyperplaneSearch search(m, limits);
  std::vector<MChain> out;
  search.search([&](const MChain& chain) {
    out.push_back(chain);
    return true;
  });
  std::sort(out.begin(), out.end(), chain_less);
  return out;
}

MChain restrict_chain(const BinaryMatroid& m, const MChain& chain, ElementSet f, const Limits& limits) {
  require_flat(m, f);
  MChain restricted;
  for (ElementSet flat : chain.flats) {
    const ElementSet cut = flat & f;
    if (restricted.flats.empty() || restricted.flats.back() != cut) restricted.flats.push_back(cut);
  }

  // Validate inside M|F, whose elements are renumbered 0..|F|-1.
  const BinaryMatroid sub = restriction(m, f);
  std::vector<int> position(static_cast<std::size_t>(m.size()), -1);
  int next = 0;
  for (int e : f) position[static_cast<std::size_t>(e)] = next++;
  MChain renumbered;
  for (ElementSet flat : restricted.flats) {
    ElementSet mapped;
    for (int e : flat) mapped.insert(position[static_cast<std::size_t>(e)]);
    renumbered.flats.push_back(mapped);
  }
  ChainValidator(sub, limits).validate(renumbered);
  return restricted;
}

bool is_elementary_deformation(const MChain& a, const MChain& b) {
  if (a.flats.size() != b.flats.size() || a.top() != b.top()) {
    fail(ErrorCode::DifferentMatroids, "chains " + a.to_string() + " and " + b.to_string() +
                                           " belong to different matroids");
  }
  // Flats of a chain have distinct ranks, so compare position by position.
  int differing = 0;
  for (std::size_t i = 0; i < a.flats.size(); ++i) {
    if (a.flats[i] != b.flats[i]) ++differing;
  }
  return differing <= 1;
}

namespace {

std::vector<std::vector<int>> deformation_adjacency(const std::vector<MChain>& chains) {
  std::vector<std::vector<int>> adj(chains.size());
  for (std::size_t i = 0; i < chains.size(); ++i) {
    for (std::size_t j = i + 1; j < chains.size(); ++j) {
      if (is_elementary_deformation(chains[i], chains[j])) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
    }
  }
  return adj;
}

}  // namespace

std::vector<MChain> deformation_path(const BinaryMatroid& m, const MChain& from, const MChain& to,
                                     const Limits& limits) {
  const std::vector<MChain> chains = all_mchains(m, limits);
  auto index_of = [&](const MChain& c) {
    auto it = std::lower_bound(chains.begin(), chains.end(), c, chain_less);
    if (it == chains.end() || *it != c) fail(ErrorCode::InvalidChain, c.to_string() + " is not an M-chain");
    return static_cast<int>(it - chains.begin());
  };
  const int source = index_of(from);
  const int target = index_of(to);
  const auto adj = deformation_adjacency(chains);

  std::vector<int> parent(chains.size(), -1);
  std::deque<int> queue{source};
  parent[static_cast<std::size_t>(source)] = source;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == target) break;
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (parent[static_cast<std::size_t>(v)] < 0) {
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  if (parent[static_cast<std::size_t>(target)] < 0) {
    fail(ErrorCode::NoPathFound, "no deformation path from " + from.to_string() + " to " + to.to_string());
  }
  std::vector<MChain> path;
  for (int v = target; v != source; v = parent[static_cast<std::size_t>(v)]) path.push_back(chains[static_cast<std::size_t>(v)]);
  path.push_back(chains[static_cast<std::size_t>(source)]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool deformation_graph_connected(const std::vector<MChain>& chains) {
  if (chains.empty()) return true;
  const auto adj = deformation_adjacency(chains);
  std::vector<bool> seen(chains.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == chains.size();
}

}  // namespace chordmat
