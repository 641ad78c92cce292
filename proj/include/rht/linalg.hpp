#pragma once

#include "rht/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rht {

// Dense matrix over Q, stored as rows. Everything in scope stays well under
// a few thousand rows/columns, so dense exact elimination is the right tool.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, VecQ(cols)) {}

  static MatrixQ from_rows(std::vector<VecQ> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  VecQ& row(std::size_t i) { return rows_[i]; }
  const VecQ& row(std::size_t i) const { return rows_[i]; }

  void append_row(VecQ r);
  MatrixQ transposed() const;
  VecQ apply(const VecQ& x) const;  // this * x (column vector)

  bool operator==(const MatrixQ& o) const {
    return cols_ == o.cols_ && rows_ == o.rows_;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<VecQ> rows_;
};

struct RrefResult {
  MatrixQ mat;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row, ascending
};

// Reduced row echelon form. Pivot choice is deterministic (first row with a
// nonzero entry in the current column), so serial and parallel results are
// identical; the elimination across rows is the OpenMP kernel.
RrefResult rref(MatrixQ m);

namespace reference {
// Textbook serial elimination, kept as the reference implementation; tests
// check exact agreement with the parallel kernel and the bench target times
// both.
RrefResult rref_serial(MatrixQ m);
}  // namespace reference

std::size_t rank(const MatrixQ& m);

// Basis of {x : m*x = 0}; one vector per free column, unit in that column.
std::vector<VecQ> kernel_basis(const MatrixQ& m);

// One solution of a*x = b with free variables set to 0, or nullopt.
std::optional<VecQ> solve(const MatrixQ& a, const VecQ& b);

// Coordinates of v in span(basis), or nullopt if v lies outside.
std::optional<VecQ> membership(const std::vector<VecQ>& basis, const VecQ& v);

// Vectors from `ambient` (in order) completing span(sub) to span(ambient).
// Precondition: sub is contained in span(ambient); violations are a caller
// bug and throw std::logic_error.
std::vector<VecQ> quotient_representatives(const std::vector<VecQ>& ambient,
                                           const std::vector<VecQ>& sub);

// Elimination of a fixed matrix A reusable against many right-hand sides,
// including symbolic ones: T*A = R with R in rref. b is consistent iff
// (T*b) vanishes on the zero rows of R; a particular solution assigns
// (T*b)_i to pivot column i and 0 to free columns. Rows of T with index
// >= rank() are a basis of the left kernel of A.
class LinearSolver {
 public:
  explicit LinearSolver(const MatrixQ& a);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return ncols_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const MatrixQ& transform() const { return t_; }

  std::optional<VecQ> solve(const VecQ& b) const;

 private:
  std::size_t nrows_ = 0, ncols_ = 0;
  MatrixQ t_;
  std::vector<std::size_t> pivots_;
};

// Incremental row-space builder for greedy independence filtering.
class RowSpan {
 public:
  explicit RowSpan(std::size_t cols) : cols_(cols) {}

  bool contains(const VecQ& v) const { return reduce(v).has_value() == false; }
  // Adds v to the span; returns false (and changes nothing) if already inside.
  bool add(const VecQ& v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  // fully reduced residue of v, or nullopt when v reduces to zero
  std::optional<std::pair<VecQ, std::size_t>> reduce(VecQ v) const;

  std::size_t cols_;
  std::vector<VecQ> rows_;                // reduced rows, leading coeff 1
  std::vector<std::size_t> lead_;        // leading column per row
};

}  // namespace rht
