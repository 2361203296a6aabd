#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "polar/polynomial.hpp"

namespace polar {

// Dense matrix over the prime field.
class ConstMatrix {
public:
  ConstMatrix(PrimeField field, int rows, int cols);
  ConstMatrix(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);

  static ConstMatrix identity(PrimeField field, int n);

  const PrimeField& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Fq& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Fq at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  ConstMatrix top_rows(int k) const;
  ConstMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;
  // Columns [first, first+count).
  ConstMatrix column_block(int first, int count) const;

  friend ConstMatrix operator*(const ConstMatrix& a, const ConstMatrix& b);
  friend bool operator==(const ConstMatrix&, const ConstMatrix&) = default;

private:
  PrimeField field_;
  int rows_;
  int cols_;
  std::vector<Fq> data_;
};

// Rank by Gaussian elimination over the prime field.
int rank(const ConstMatrix& m);
// Square only; Gaussian elimination.
Fq determinant(const ConstMatrix& m);
// Basis of {v | m v = 0}, one vector per free column of the reduced row echelon form.
std::vector<Point> kernel_basis(const ConstMatrix& m);

// Rectangular matrix of polynomials sharing one ambient space.
class PolyMatrix {
public:
  PolyMatrix(PrimeField field, int nvars, int rows, int cols);
  // Row-major entries; every entry must live in the same ambient space.
  PolyMatrix(int rows, int cols, std::vector<Polynomial> entries);

  static PolyMatrix from_constants(const ConstMatrix& m, int nvars);

  const PrimeField& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  const Polynomial& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, Polynomial p);

  PolyMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;
  ConstMatrix evaluated(std::span<const Fq> x) const;
  // Same matrix viewed in a larger ambient space.
  PolyMatrix embedded(int nvars) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
  PrimeField field_;
  int nvars_;
  int rows_;
  int cols_;
  std::vector<Polynomial> entries_;
};

// Rows of `top` followed by rows of `bottom`.
PolyMatrix stack(const PolyMatrix& top, const PolyMatrix& bottom);

// p x n matrix of partial derivatives dF_k/dx_l.
PolyMatrix jacobian(std::span<const Polynomial> polys);

// Berkowitz division-free determinant. Square input only.
Polynomial determinant(const PolyMatrix& m);

struct MinorIndex {
  std::vector<int> rows;  // 0-based, increasing
  std::vector<int> cols;  // 0-based, increasing
};

// Streams every r x r minor in lexicographic order of (row set, column set).
// The visitor returns false to stop early. Returns the number of minors visited.
// Minors sharing a row prefix share the Laplace expansion of that prefix.
std::size_t for_each_minor(const PolyMatrix& m, int r,
                           const std::function<bool(const MinorIndex&, const Polynomial&)>& visit);

// Applied to every partial Laplace expansion. When it is reduction modulo an
// ideal, the visited values are the minors modulo that ideal.
using MinorReducer = std::function<Polynomial(const Polynomial&)>;
std::size_t for_each_minor(const PolyMatrix& m, int r,
                           const std::function<bool(const MinorIndex&, const Polynomial&)>& visit,
                           const MinorReducer& reduce);
std::vector<Polynomial> enumerate_minors(const PolyMatrix& m, int r);

// Number of r-minors for_each_minor would visit: C(rows, r) * C(cols, r).
std::size_t minor_count(int rows, int cols, int r);

// Rank of m(x).
int rank_at_point(const PolyMatrix& m, std::span<const Fq> x);

}  // namespace polar
