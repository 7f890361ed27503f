#include "liaison/matrix.hpp"

#include <algorithm>

namespace liaison {

namespace {

// row_a -= c * row_b, starting at column `from`.
void row_axpy(const Fp& fp, std::span<Fe> a, std::span<const Fe> b, Fe c,
              std::size_t from) {
  if (c == 0) return;
  const Fe k = fp.neg(c);
  for (std::size_t j = from; j < a.size(); ++j) {
    if (b[j] != 0)
      a[j] = fp.reduce(a[j] + static_cast<std::uint64_t>(k) * b[j]);
  }
}

void row_scale(const Fp& fp, std::span<Fe> a, Fe c, std::size_t from) {
  if (c == 1) return;
  for (std::size_t j = from; j < a.size(); ++j) {
    if (a[j] != 0) a[j] = fp.mul(a[j], c);
  }
}

}  // namespace

RrefResult rref(const Fp& fp, Matrix m) {
  RrefResult res;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j)
        std::swap(m.at(piv, j), m.at(r, j));
    }
    row_scale(fp, m.row(r), fp.inv(m.at(r, c)), c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && m.at(i, c) != 0)
        row_axpy(fp, m.row(i), m.row(r), m.at(i, c), c);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.matrix = std::move(m);
  return res;
}

std::vector<std::vector<Fe>> kernel_basis(const Fp& fp, const Matrix& m) {
  RrefResult rr = rref(fp, m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Fe>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Fe> v(cols, 0);
    v[free_c] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) {
      // pivot row i has unit pivot at rr.pivot_cols[i]
      Fe coef = rr.matrix.at(i, free_c);
      v[rr.pivot_cols[i]] = fp.neg(coef);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Fe> mat_vec(const Fp& fp, const Matrix& m,
                        std::span<const Fe> v) {
  std::vector<Fe> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      acc += static_cast<std::uint64_t>(m.at(i, j)) * v[j];
      if ((j & 63) == 63) acc = fp.reduce(acc);
    }
    out[i] = fp.reduce(acc);
  }
  return out;
}

bool RowReducer::add_row(std::vector<Fe> row) {
  if (pivot_of_col_.empty()) pivot_of_col_.assign(cols_, -1);
  std::size_t j = 0;
  while (j < cols_) {
    if (row[j] == 0) {
      ++j;
      continue;
    }
    int pr = pivot_of_col_[j];
    if (pr < 0) break;
    row_axpy(fp_, row, rows_[static_cast<std::size_t>(pr)], row[j], j);
    ++j;
  }
  if (j == cols_) return false;
  row_scale(fp_, row, fp_.inv(row[j]), j);
  pivot_of_col_[j] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  pivots_.push_back(j);
  return true;
}

void RowReducer::reduce(std::vector<Fe>& row) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (row[j] == 0) continue;
    int pr = pivot_of_col_.empty() ? -1 : pivot_of_col_[j];
    if (pr < 0) continue;
    row_axpy(fp_, row, rows_[static_cast<std::size_t>(pr)], row[j], j);
  }
}

Matrix RowReducer::basis_matrix() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pivots_[a] < pivots_[b];
  });
  Matrix m(rows_.size(), cols_);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& src = rows_[order[i]];
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = src[j];
  }
  return m;
}

}  // namespace liaison
