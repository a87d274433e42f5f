#include "gf2.hpp"

#include <bit>
#include <utility>

#include "errors.hpp"

namespace chordmat::gf2 {

namespace {

std::uint64_t low_mask(int length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

void check_length(int length) {
  if (length < 0 || length > kMaxElements) {
    fail(ErrorCode::InvalidArgument,
         "vector length " + std::to_string(length) + " outside [0,64]");
  }
}

}  // namespace

Vector::Vector(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  check_length(length);
  if ((bits & ~low_mask(length)) != 0) {
    fail(ErrorCode::InvalidArgument, "bits set beyond vector length");
  }
}

Vector Vector::from_string(const std::string& text) {
  Vector v(static_cast<int>(text.size()));
  for (int i = 0; i < v.length_; ++i) {
    char c = text[static_cast<std::size_t>(i)];
    if (c == '1') {
      v.bits_ |= std::uint64_t{1} << i;
    } else if (c != '0') {
      fail(ErrorCode::ParseError, std::string("unexpected character '") + c + "' in 0/1 row");
    }
  }
  return v;
}

void Vector::set(int i, bool value) {
  if (value) {
    bits_ |= std::uint64_t{1} << i;
  } else {
    bits_ &= ~(std::uint64_t{1} << i);
  }
}

std::string Vector::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (get(i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Vector& Vector::operator^=(const Vector& other) {
  if (other.length_ != length_) fail(ErrorCode::InvalidArgument, "vector length mismatch");
  bits_ ^= other.bits_;
  return *this;
}

bool dot(const Vector& a, const Vector& b) {
  if (a.length() != b.length()) fail(ErrorCode::InvalidArgument, "vector length mismatch");
  return (std::popcount(a.bits() & b.bits()) & 1) != 0;
}

Matrix::Matrix(int rows, int cols) : cols_(cols) {
  check_length(cols);
  rows_.assign(static_cast<std::size_t>(rows), Vector(cols));
}

Matrix::Matrix(std::vector<Vector> rows, int cols) : cols_(cols), rows_(std::move(rows)) {
  check_length(cols);
  for (const auto& r : rows_) {
    if (r.length() != cols) fail(ErrorCode::InvalidArgument, "matrix is not rectangular");
  }
}

Matrix Matrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) return Matrix(0);
  Matrix m(static_cast<int>(rows.front().size()));
  for (const auto& text : rows) {
    if (static_cast<int>(text.size()) != m.cols_) {
      fail(ErrorCode::ParseError, "rows have different lengths");
    }
    m.rows_.push_back(Vector::from_string(text));
  }
  return m;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::uint64_t>& columns, int rows) {
  Matrix m(rows, static_cast<int>(columns.size()));
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < rows; ++i) {
      if ((columns[static_cast<std::size_t>(j)] >> i) & 1U) m.set(i, j, true);
    }
  }
  return m;
}

void Matrix::add_row(Vector row) {
  if (row.length() != cols_) fail(ErrorCode::InvalidArgument, "row length mismatch");
  rows_.push_back(row);
}

Vector Matrix::column(int j) const {
  Vector v(rows());
  for (int i = 0; i < rows(); ++i) {
    if (rows_[static_cast<std::size_t>(i)].get(j)) v.set(i, true);
  }
  return v;
}

Vector Matrix::multiply(const Vector& v) const {
  Vector out(rows());
  for (int i = 0; i < rows(); ++i) out.set(i, dot(rows_[static_cast<std::size_t>(i)], v));
  return out;
}

EchelonForm rref(const Matrix& m) {
  std::vector<std::uint64_t> work;
  work.reserve(static_cast<std::size_t>(m.rows()));
  for (const auto& r : m.row_vectors()) work.push_back(r.bits());

  std::vector<int> pivots;
  std::size_t next = 0;
  for (int c = 0; c < m.cols() && next < work.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t found = next;
    while (found < work.size() && (work[found] & bit) == 0) ++found;
    if (found == work.size()) continue;
    std::swap(work[next], work[found]);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i != next && (work[i] & bit) != 0) work[i] ^= work[next];
    }
    pivots.push_back(c);
    ++next;
  }

  Matrix reduced(m.cols());
  for (std::size_t i = 0; i < next; ++i) reduced.add_row(Vector(m.cols(), work[i]));
  return {std::move(reduced), std::move(pivots)};
}

int rank(const Matrix& m) {
  XorBasis basis;
  for (const auto& r : m.row_vectors()) basis.insert(r.bits());
  return basis.dimension();
}

std::vector<Vector> null_space(const Matrix& m) {
  const EchelonForm ef = rref(m);
  ElementSet pivot_set;
  for (int p : ef.pivot_cols) pivot_set.insert(p);

  std::vector<Vector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (pivot_set.contains(f)) continue;
    Vector v(m.cols());
    v.set(f, true);
    // Row i of the RREF reads x_{pivot_i} + sum_{free} a_{i,free} x_free = 0.
    for (int i = 0; i < ef.reduced.rows(); ++i) {
      if (ef.reduced.get(i, f)) v.set(ef.pivot_cols[static_cast<std::size_t>(i)], true);
    }
    basis.push_back(v);
  }
  return basis;
}

bool in_column_span(const Matrix& m, ElementSet cols, const Vector& v) {
  if (v.length() != m.rows()) fail(ErrorCode::InvalidArgument, "column length mismatch");
  XorBasis basis;
  for (int c : cols) {
    if (c >= m.cols()) fail(ErrorCode::InvalidArgument, "column index out of range");
    basis.insert(m.column(c).bits());
  }
  return basis.contains(v.bits());
}

std::uint64_t XorBasis::reduce(std::uint64_t v) const {
  while (v != 0) {
    const int top = 63 - std::countl_zero(v);
    if (by_top_[static_cast<std::size_t>(top)] == 0) return v;
    v ^= by_top_[static_cast<std::size_t>(top)];
  }
  return 0;
}

bool XorBasis::insert(std::uint64_t v) {
  v = reduce(v);
  if (v == 0) return false;
  by_top_[static_cast<std::size_t>(63 - std::countl_zero(v))] = v;
  ++dim_;
  return true;
}

}  // namespace chordmat::gf2
