#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gf2.hpp"

using namespace chordmat;
using namespace chordmat::gf2;

TEST_CASE("rank of small matrices") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(3, 4)) == 0);
  // incidence rows of the path a-b-c: two edges, three vertices, padded to 7 columns
  const Matrix path = Matrix::from_strings({"1000000", "1100000", "0100000"});
  CHECK(rank(path) == 2);
}

TEST_CASE("rref uses leftmost pivots") {
  const Matrix m = Matrix::from_strings({"0110", "1100", "1010"});
  const EchelonForm e = rref(m);
  CHECK(e.pivot_cols == std::vector<int>{0, 1});
  CHECK(e.reduced.row(0) == Vector::from_string("1010"));
  CHECK(e.reduced.row(1) == Vector::from_string("0110"));
}

TEST_CASE("null space") {
  CHECK(null_space(Matrix::identity(3)).empty());
  CHECK(null_space(Matrix::from_strings({"00"})).size() == 2);

  // triangle incidence: vertices x edges
  const Matrix triangle = Matrix::from_strings({"101", "110", "011"});
  const auto basis = null_space(triangle);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].support() == ElementSet{0, 1, 2});
}

TEST_CASE("null space vectors are annihilated and independent") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 10);
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.set(r, c, rng() & 1U);
    const auto basis = null_space(m);
    CHECK(static_cast<int>(basis.size()) == cols - rank(m));
    XorBasis span;
    for (const Vector& v : basis) {
      CHECK(m.multiply(v).is_zero());
      CHECK(span.insert(v.bits()));
    }
  }
}

TEST_CASE("column span") {
  const BinaryMatroid fano = catalog::fano();
  const Matrix& m = fano.matrix();
  CHECK(in_column_span(m, ElementSet::full(7), m.column(4)));
  CHECK(in_column_span(m, {}, Vector(3)));
  CHECK_FALSE(in_column_span(m, {}, m.column(0)));
  // column i is binary i: 1 + 2 = 3
  CHECK(in_column_span(m, {0, 1}, m.column(2)));
  CHECK_FALSE(in_column_span(m, {0, 1}, m.column(3)));
}

TEST_CASE("rank agrees with the span-size oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    std::vector<std::uint64_t> cols(1 + rng() % 8);
    for (auto& c : cols) c = rng() % (1U << rows);
    const Matrix m = Matrix::from_columns(cols, rows);
    CHECK(rank(m) == oracle::rank(cols, (oracle::Mask{1} << cols.size()) - 1));
  }
}

TEST_CASE("vectors") {
  Vector v = Vector::from_string("1011");
  CHECK(v.length() == 4);
  CHECK(v.to_string() == "1011");
  CHECK(v.support() == ElementSet{0, 2, 3});
  CHECK(dot(v, Vector::from_string("1010")) == false);
  CHECK(dot(v, Vector::from_string("1000")) == true);
  v ^= Vector::from_string("1111");
  CHECK(v.to_string() == "0100");
}
