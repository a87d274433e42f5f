#include <doctest.h>

#include "fixtures.hpp"

using namespace chordmat;
using namespace fixtures;

namespace {

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Spanning subsets of the nonzero vectors of GF(2)^r with exactly n members,
// counted by brute force over all subsets.
std::uint64_t spanning_subsets(int r, int n) {
  const int points = (1 << r) - 1;
  std::uint64_t count = 0;
  for (std::uint32_t s = 0; s < (1U << points); ++s) {
    if (__builtin_popcount(s) != n) continue;
    std::vector<oracle::Mask> cols;
    for (int p = 0; p < points; ++p)
      if ((s >> p) & 1U) cols.push_back(static_cast<oracle::Mask>(p + 1));
    if (oracle::rank(cols, (oracle::Mask{1} << cols.size()) - 1) == r) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("builders") {
  const BinaryMatroid f = catalog::fano();
  CHECK(f.size() == 7);
  CHECK(f.rank() == 3);
  CHECK(nontrivial_lines(f).size() == 7);
  CHECK(catalog::u24().circuits().size() == 4);
  CHECK(catalog::complete_graph(5).size() == 10);
  CHECK(catalog::complete_bipartite(3, 3).size() == 9);
  CHECK(catalog::cycle_graph(5).size() == 5);
}

TEST_CASE("builtin names") {
  CHECK(catalog::builtin("fano").has_value());
  CHECK(catalog::builtin("k3,3", true).has_value());
  CHECK(catalog::builtin_graph("g0").has_value());
  CHECK_FALSE(catalog::builtin("nonsense").has_value());
  CHECK_FALSE(catalog::builtin_graph("k99").has_value());
  for (const std::string& name : catalog::builtin_names()) CAPTURE(name);
}

TEST_CASE("enumeration counts") {
  // rank 2, n = 3 is the three-point line
  std::vector<std::string> r2;
  catalog::for_each_simple_binary(2, 3, [&](const catalog::CatalogEntry& e) {
    if (std::holds_alternative<BinaryMatroid>(e.matroid) && binary(e).rank() == 2) r2.push_back(e.id);
  });
  CHECK(r2.size() == 4);

  for (int r = 1; r <= 3; ++r) {
    std::uint64_t expected = 0;
    for (int n = r; n <= std::min(7, (1 << r) - 1); ++n) expected += spanning_subsets(r, n);
    std::uint64_t got = 0;
    catalog::for_each_simple_binary(r, 7, [&](const catalog::CatalogEntry& e) { got += binary(e).rank() == r; });
    CHECK(got == expected);
  }
  // every 3-subset of PG(2,2) not on a line, and so on, sums to 92 for rank 3
  CHECK(spanning_subsets(3, 3) + spanning_subsets(3, 4) + spanning_subsets(3, 5) + spanning_subsets(3, 6) +
            spanning_subsets(3, 7) ==
        92);
  CHECK(binomial(7, 3) - 7 == spanning_subsets(3, 3));
}

TEST_CASE("enumeration contains Fano and is deterministic") {
  const std::string fano_key = canonical_key(catalog::fano());
  std::vector<std::string> first;
  std::vector<std::string> second;
  catalog::for_each_simple_binary(3, 7, [&](const catalog::CatalogEntry& e) { first.push_back(e.id); });
  catalog::for_each_simple_binary(3, 7, [&](const catalog::CatalogEntry& e) { second.push_back(e.id); });
  CHECK(first == second);
  CHECK(std::find(first.begin(), first.end(), fano_key) != first.end());
  std::vector<std::string> sorted = first;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(catalog::SimpleBinaryEnumerator(17, 20), Error);
  Limits tight;
  tight.max_elements = 4;
  CHECK_THROWS_AS(catalog::SimpleBinaryEnumerator(3, 7, tight), Error);
}

TEST_CASE("analysis reports") {
  const auto fano = catalog::analyze(*catalog::builtin("fano"));
  CHECK(fano.supersolvable == true);
  CHECK(fano.chordal == true);
  CHECK(fano.circuit_count == 14);

  const auto k33 = catalog::analyze(*catalog::builtin("k3,3", true));
  CHECK(k33.chordal == true);
  CHECK(k33.supersolvable == false);
  CHECK_FALSE(k33.mchain.has_value());

  const auto c5 = catalog::analyze(*catalog::builtin("c5"));
  CHECK(c5.chordal == false);

  const auto u = catalog::analyze(*catalog::builtin("u24"));
  CHECK_FALSE(u.binary);
  CHECK_FALSE(u.supersolvable.has_value());
  CHECK(u.ell_chordal.at(3) == false);

  const std::string kv = catalog::format_report(fano, catalog::ReportFormat::KeyValue);
  CHECK(kv.find("supersolvable=true\n") != std::string::npos);
  CHECK(kv.find("mchain={} < {1} < {1,2,3} < {1,2,3,4,5,6,7}\n") != std::string::npos);
  CHECK(catalog::format_report(fano, catalog::ReportFormat::Text) ==
        catalog::format_report(catalog::analyze(*catalog::builtin("fano")), catalog::ReportFormat::Text));
}

TEST_CASE("analysis of non-simple input keeps to structure") {
  const auto r = catalog::analyze(catalog::entry_of(BinaryMatroid(gf2::Matrix::from_strings({"110", "001"})), "t"));
  CHECK_FALSE(r.simple);
  CHECK_FALSE(r.chordal.has_value());
  CHECK_FALSE(r.supersolvable.has_value());
}
