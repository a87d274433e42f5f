#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "element_set.hpp"

namespace chordmat::gf2 {

/// Fixed-length bit vector over GF(2), at most 64 coordinates.
class Vector {
 public:
  Vector() = default;
  explicit Vector(int length, std::uint64_t bits = 0);
  /// Parses a string of '0'/'1' characters, leftmost character = coordinate 0.
  static Vector from_string(const std::string& text);

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  bool get(int i) const { return (bits_ >> i) & 1U; }
  void set(int i, bool value);
  bool is_zero() const { return bits_ == 0; }
  ElementSet support() const { return ElementSet(bits_); }
  std::string to_string() const;

  Vector& operator^=(const Vector& other);
  friend Vector operator^(Vector a, const Vector& b) { return a ^= b; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  int length_ = 0;
  std::uint64_t bits_ = 0;
};

/// Dot product over GF(2).
bool dot(const Vector& a, const Vector& b);

/// Dense rectangular matrix over GF(2). Each row is a `Vector` of length `cols()`.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int cols) : cols_(cols) {}
  Matrix(int rows, int cols);
  Matrix(std::vector<Vector> rows, int cols);
  /// Rows given as '0'/'1' strings of equal length.
  static Matrix from_strings(const std::vector<std::string>& rows);
  static Matrix identity(int n);
  /// Builds a matrix from column vectors; column j holds bits of `columns[j]` (row i = bit i).
  static Matrix from_columns(const std::vector<std::uint64_t>& columns, int rows);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<Vector>& row_vectors() const { return rows_; }
  const Vector& row(int i) const { return rows_[i]; }
  bool get(int r, int c) const { return rows_[r].get(c); }
  void set(int r, int c, bool value) { rows_[r].set(c, value); }
  void add_row(Vector row);
  /// Column j as a vector of length rows(); requires rows() <= 64.
  Vector column(int j) const;
  Vector multiply(const Vector& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int cols_ = 0;
  std::vector<Vector> rows_;
};

struct EchelonForm {
  Matrix reduced;               // nonzero rows only, reduced row echelon form
  std::vector<int> pivot_cols;  // pivot column of each reduced row, increasing
};

/// Reduced row echelon form with the leftmost available pivot at each step.
EchelonForm rref(const Matrix& m);

int rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column of the echelon form,
/// ordered by free column.
std::vector<Vector> null_space(const Matrix& m);

/// True iff `v` lies in the span of the columns of `m` indexed by `cols`.
bool in_column_span(const Matrix& m, ElementSet cols, const Vector& v);

/// Incremental basis of a subspace of GF(2)^64, keyed by highest set bit.
class XorBasis {
 public:
  /// Reduces `v` against the basis; returns the residue (0 iff v is in the span).
  std::uint64_t reduce(std::uint64_t v) const;
  /// Inserts `v`; returns false if it was already in the span.
  bool insert(std::uint64_t v);
  bool contains(std::uint64_t v) const { return reduce(v) == 0; }
  int dimension() const { return dim_; }

 private:
  std::array<std::uint64_t, 64> by_top_{};
  int dim_ = 0;
};

}  // namespace chordmat::gf2
