#ifndef LIAISON_MATRIX_HPP
#define LIAISON_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "liaison/fp.hpp"

namespace liaison {

/// Dense row-major matrix over F_p. Values are plain residues; the Fp
/// context is supplied to the operations that need it.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fe& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Fe at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<Fe> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const Fe> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Fe> a_;
};

struct RrefResult {
  Matrix matrix;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

RrefResult rref(const Fp& fp, Matrix m);

/// Basis of the right null space {v : m v = 0}; size cols - rank.
std::vector<std::vector<Fe>> kernel_basis(const Fp& fp, const Matrix& m);

std::vector<Fe> mat_vec(const Fp& fp, const Matrix& m,
                        std::span<const Fe> v);

/// Incremental row-space builder: feeds rows one at a time, keeps a reduced
/// pivot structure, and reports the rank so far. Used for graded-piece
/// dimensions where the row supply is huge but the rank is capped by the
/// column count.
class RowReducer {
 public:
  RowReducer(const Fp& fp, std::size_t cols) : fp_(fp), cols_(cols) {}

  /// Returns true if the row added a new pivot.
  bool add_row(std::vector<Fe> row);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  bool full_rank() const { return pivots_.size() == cols_; }

  /// Reduce `row` against the current pivot rows (in place).
  void reduce(std::vector<Fe>& row) const;

  /// Pivot rows stacked as a matrix in pivot-column order (a row basis of
  /// the span, not fully back-substituted).
  Matrix basis_matrix() const;

 private:
  Fp fp_;
  std::size_t cols_;
  std::vector<std::vector<Fe>> rows_;     // one per pivot, unit leading coeff
  std::vector<std::size_t> pivots_;       // pivot col per stored row
  std::vector<int> pivot_of_col_ = std::vector<int>();  // lazily sized
};

}  // namespace liaison

#endif
