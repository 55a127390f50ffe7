#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rpq {

using Index = std::uint32_t;

// Boolean matrix in compressed sparse row layout. Only positions holding a
// logical 1 are stored; column indices within a row are strictly increasing.
class SparseBoolMatrix {
 public:
  SparseBoolMatrix() : row_ptr_(1, 0) {}
  SparseBoolMatrix(Index nrows, Index ncols)
      : nrows_(nrows), ncols_(ncols), row_ptr_(std::size_t{nrows} + 1, 0) {}

  // Builds a matrix from arbitrary (row, col) pairs. Duplicates are collapsed
  // and out-of-range positions raise LookupError.
  static SparseBoolMatrix from_pairs(Index nrows, Index ncols,
                                     std::vector<std::pair<Index, Index>> pairs);

  // Adopts already-canonical CSR arrays. Validates every invariant.
  static SparseBoolMatrix from_csr(Index nrows, Index ncols,
                                   std::vector<std::size_t> row_ptr,
                                   std::vector<Index> col_idx);

  // Same as from_csr, but the caller guarantees canonical input. Only checked
  // in debug builds; kernels use this for their own outputs.
  static SparseBoolMatrix from_canonical_csr(Index nrows, Index ncols,
                                             std::vector<std::size_t> row_ptr,
                                             std::vector<Index> col_idx);

  static SparseBoolMatrix identity(Index n);

  Index nrows() const noexcept { return nrows_; }
  Index ncols() const noexcept { return ncols_; }
  std::size_t nnz() const noexcept { return col_idx_.size(); }
  bool empty() const noexcept { return col_idx_.empty(); }

  std::span<const Index> row(Index r) const noexcept {
    return {col_idx_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }
  bool contains(Index r, Index c) const noexcept;

  std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
  std::span<const Index> col_idx() const noexcept { return col_idx_; }

  std::vector<std::pair<Index, Index>> to_pairs() const;

  // True when every structural invariant holds.
  bool is_canonical() const noexcept;

  friend bool operator==(const SparseBoolMatrix&, const SparseBoolMatrix&) = default;

 private:
  Index nrows_ = 0;
  Index ncols_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<Index> col_idx_;
};

SparseBoolMatrix zero(Index nrows, Index ncols);

SparseBoolMatrix transpose(const SparseBoolMatrix& a);

// Elementwise OR (A ⊕ B).
SparseBoolMatrix or_sum(const SparseBoolMatrix& a, const SparseBoolMatrix& b);

// OR of any number of equally-shaped matrices in one pass. An empty span
// yields a 0x0 matrix.
SparseBoolMatrix or_sum(std::span<const SparseBoolMatrix> terms);

// Boolean semiring product: C(i,k) = OR_j A(i,j) AND B(j,k).
// Rows of the result are computed independently and may be split across
// kernel threads; the output does not depend on the thread count.
SparseBoolMatrix bool_matmul(const SparseBoolMatrix& a, const SparseBoolMatrix& b);

// A<M>: positions of `a` that are also present in `m`.
SparseBoolMatrix mask(const SparseBoolMatrix& a, const SparseBoolMatrix& m);

// A<¬M>: positions of `a` absent from `m`. The complement of `m` is never built.
SparseBoolMatrix mask_complement(const SparseBoolMatrix& a, const SparseBoolMatrix& m);

}  // namespace rpq
