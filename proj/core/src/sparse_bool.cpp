#include "rpq/sparse_bool.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>

#include "rpq/error.hpp"
#include "rpq/parallel.hpp"

namespace rpq {
namespace {

void require_same_shape(const SparseBoolMatrix& a, const SparseBoolMatrix& b, const char* op) {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) {
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.nrows()) + "x" +
                            std::to_string(a.ncols()) + " vs " + std::to_string(b.nrows()) +
                            "x" + std::to_string(b.ncols()));
  }
}

// Applies a sorted-merge rule row by row; `emit` decides which side survives.
template <typename Merge>
SparseBoolMatrix rowwise(const SparseBoolMatrix& a, const SparseBoolMatrix& b, Merge merge) {
  std::vector<std::size_t> row_ptr(std::size_t{a.nrows()} + 1, 0);
  std::vector<Index> cols;
  cols.reserve(std::max(a.nnz(), b.nnz()));
  for (Index r = 0; r < a.nrows(); ++r) {
    const auto ra = a.row(r);
    const auto rb = b.row(r);
    merge(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(cols));
    row_ptr[r + 1] = cols.size();
  }
  return SparseBoolMatrix::from_canonical_csr(a.nrows(), a.ncols(), std::move(row_ptr), std::move(cols));
}

// Per-thread scratch for one output row of a product.
struct RowAccumulator {
  std::vector<Index> stamp;
  std::vector<Index> cols;
  Index epoch = 0;

  explicit RowAccumulator(Index ncols) : stamp(ncols, 0) {}

  void next_row() {
    cols.clear();
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
  }

  void add(std::span<const Index> src) {
    for (Index c : src) {
      if (stamp[c] != epoch) {
        stamp[c] = epoch;
        cols.push_back(c);
      }
    }
  }

  // Sorted output; dense rows are recovered by a stamp scan instead of sorting.
  void flush_into(std::vector<Index>& out) {
    if (cols.size() > stamp.size() / 16) {
      for (Index c = 0; c < stamp.size(); ++c) {
        if (stamp[c] == epoch) out.push_back(c);
      }
    } else {
      std::sort(cols.begin(), cols.end());
      out.insert(out.end(), cols.begin(), cols.end());
    }
  }
};

constexpr std::size_t kParallelWork = std::size_t{1} << 15;

void multiply_rows(const SparseBoolMatrix& a, const SparseBoolMatrix& b, Index first, Index last,
                   std::vector<std::size_t>& row_len, std::vector<Index>& out) {
  std::optional<RowAccumulator> acc;
  for (Index r = first; r < last; ++r) {
    const auto ra = a.row(r);
    const std::size_t before = out.size();
    if (ra.size() == 1) {
      const auto src = b.row(ra[0]);
      out.insert(out.end(), src.begin(), src.end());
    } else if (!ra.empty()) {
      if (!acc) acc.emplace(b.ncols());
      acc->next_row();
      for (Index j : ra) acc->add(b.row(j));
      acc->flush_into(out);
    }
    row_len[r] = out.size() - before;
  }
}

}  // namespace

SparseBoolMatrix SparseBoolMatrix::from_pairs(Index nrows, Index ncols,
                                              std::vector<std::pair<Index, Index>> pairs) {
  for (const auto& [r, c] : pairs) {
    if (r >= nrows || c >= ncols) {
      throw LookupError("position (" + std::to_string(r) + "," + std::to_string(c) +
                        ") outside " + std::to_string(nrows) + "x" + std::to_string(ncols));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  SparseBoolMatrix m(nrows, ncols);
  m.col_idx_.reserve(pairs.size());
  for (const auto& [r, c] : pairs) {
    ++m.row_ptr_[r + 1];
    m.col_idx_.push_back(c);
  }
  for (Index r = 0; r < nrows; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
  return m;
}

SparseBoolMatrix SparseBoolMatrix::from_csr(Index nrows, Index ncols, std::vector<std::size_t> row_ptr,
                                            std::vector<Index> col_idx) {
  SparseBoolMatrix m;
  m.nrows_ = nrows;
  m.ncols_ = ncols;
  m.row_ptr_ = std::move(row_ptr);
  m.col_idx_ = std::move(col_idx);
  if (!m.is_canonical()) throw Error("from_csr: arrays do not describe a canonical matrix");
  return m;
}

SparseBoolMatrix SparseBoolMatrix::from_canonical_csr(Index nrows, Index ncols,
                                                      std::vector<std::size_t> row_ptr,
                                                      std::vector<Index> col_idx) {
  SparseBoolMatrix m;
  m.nrows_ = nrows;
  m.ncols_ = ncols;
  m.row_ptr_ = std::move(row_ptr);
  m.col_idx_ = std::move(col_idx);
  assert(m.is_canonical());
  return m;
}

SparseBoolMatrix SparseBoolMatrix::identity(Index n) {
  SparseBoolMatrix m(n, n);
  m.col_idx_.resize(n);
  for (Index i = 0; i < n; ++i) {
    m.col_idx_[i] = i;
    m.row_ptr_[i + 1] = i + 1;
  }
  return m;
}

bool SparseBoolMatrix::contains(Index r, Index c) const noexcept {
  if (r >= nrows_ || c >= ncols_) return false;
  const auto cols = row(r);
  return std::binary_search(cols.begin(), cols.end(), c);
}

std::vector<std::pair<Index, Index>> SparseBoolMatrix::to_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(nnz());
  for (Index r = 0; r < nrows_; ++r) {
    for (Index c : row(r)) out.emplace_back(r, c);
  }
  return out;
}

bool SparseBoolMatrix::is_canonical() const noexcept {
  if (row_ptr_.size() != std::size_t{nrows_} + 1 || row_ptr_.front() != 0 ||
      row_ptr_.back() != col_idx_.size()) {
    return false;
  }
  for (Index r = 0; r < nrows_; ++r) {
    if (row_ptr_[r] > row_ptr_[r + 1]) return false;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      if (col_idx_[k] >= ncols_) return false;
      if (k > row_ptr_[r] && col_idx_[k - 1] >= col_idx_[k]) return false;
    }
  }
  return true;
}

SparseBoolMatrix zero(Index nrows, Index ncols) { return SparseBoolMatrix(nrows, ncols); }

SparseBoolMatrix transpose(const SparseBoolMatrix& a) {
  std::vector<std::size_t> row_ptr(std::size_t{a.ncols()} + 1, 0);
  for (Index c : a.col_idx()) ++row_ptr[c + 1];
  for (Index c = 0; c < a.ncols(); ++c) row_ptr[c + 1] += row_ptr[c];

  std::vector<Index> cols(a.nnz());
  std::vector<std::size_t> cursor(row_ptr.begin(), row_ptr.end() - 1);
  // Visiting source rows in increasing order keeps each output row sorted.
  for (Index r = 0; r < a.nrows(); ++r) {
    for (Index c : a.row(r)) cols[cursor[c]++] = r;
  }
  return SparseBoolMatrix::from_canonical_csr(a.ncols(), a.nrows(), std::move(row_ptr), std::move(cols));
}

SparseBoolMatrix or_sum(const SparseBoolMatrix& a, const SparseBoolMatrix& b) {
  require_same_shape(a, b, "or_sum");
  return rowwise(a, b, [](auto f1, auto l1, auto f2, auto l2, auto out) {
    std::set_union(f1, l1, f2, l2, out);
  });
}

SparseBoolMatrix or_sum(std::span<const SparseBoolMatrix> terms) {
  if (terms.empty()) return {};
  if (terms.size() == 1) return terms.front();
  if (terms.size() == 2) return or_sum(terms[0], terms[1]);
  for (const auto& t : terms.subspan(1)) require_same_shape(terms.front(), t, "or_sum");

  const Index nrows = terms.front().nrows();
  const Index ncols = terms.front().ncols();
  std::vector<std::size_t> row_ptr(std::size_t{nrows} + 1, 0);
  std::vector<Index> cols;
  RowAccumulator acc(ncols);
  for (Index r = 0; r < nrows; ++r) {
    const SparseBoolMatrix* only = nullptr;
    std::size_t contributing = 0;
    for (const auto& t : terms) {
      if (!t.row(r).empty()) {
        only = &t;
        ++contributing;
      }
    }
    if (contributing == 1) {
      const auto src = only->row(r);
      cols.insert(cols.end(), src.begin(), src.end());
    } else if (contributing > 1) {
      acc.next_row();
      for (const auto& t : terms) acc.add(t.row(r));
      acc.flush_into(cols);
    }
    row_ptr[r + 1] = cols.size();
  }
  return SparseBoolMatrix::from_canonical_csr(nrows, ncols, std::move(row_ptr), std::move(cols));
}

SparseBoolMatrix bool_matmul(const SparseBoolMatrix& a, const SparseBoolMatrix& b) {
  if (a.ncols() != b.nrows()) {
    throw DimensionMismatch("bool_matmul: " + std::to_string(a.nrows()) + "x" +
                            std::to_string(a.ncols()) + " times " + std::to_string(b.nrows()) +
                            "x" + std::to_string(b.ncols()));
  }
  if (a.empty() || b.empty()) return zero(a.nrows(), b.ncols());

  std::size_t work = 0;
  for (Index j : a.col_idx()) work += b.row(j).size();

  const unsigned workers = kernel_threads();
  std::vector<std::size_t> row_len(a.nrows(), 0);
  std::vector<Index> cols;

  if (workers <= 1 || a.nrows() < 2 || work < kParallelWork) {
    cols.reserve(std::min<std::size_t>(work, std::size_t{a.nrows()} * b.ncols()));
    multiply_rows(a, b, 0, a.nrows(), row_len, cols);
  } else {
    std::vector<std::vector<Index>> parts(workers);
    parallel_chunks(a.nrows(), workers, [&](std::size_t first, std::size_t last, unsigned w) {
      multiply_rows(a, b, static_cast<Index>(first), static_cast<Index>(last), row_len, parts[w]);
    });
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    cols.reserve(total);
    for (const auto& p : parts) cols.insert(cols.end(), p.begin(), p.end());
  }

  std::vector<std::size_t> row_ptr(std::size_t{a.nrows()} + 1, 0);
  for (Index r = 0; r < a.nrows(); ++r) row_ptr[r + 1] = row_ptr[r] + row_len[r];
  return SparseBoolMatrix::from_canonical_csr(a.nrows(), b.ncols(), std::move(row_ptr), std::move(cols));
}

SparseBoolMatrix mask(const SparseBoolMatrix& a, const SparseBoolMatrix& m) {
  require_same_shape(a, m, "mask");
  return rowwise(a, m, [](auto f1, auto l1, auto f2, auto l2, auto out) {
    std::set_intersection(f1, l1, f2, l2, out);
  });
}

SparseBoolMatrix mask_complement(const SparseBoolMatrix& a, const SparseBoolMatrix& m) {
  require_same_shape(a, m, "mask_complement");
  return rowwise(a, m, [](auto f1, auto l1, auto f2, auto l2, auto out) {
    std::set_difference(f1, l1, f2, l2, out);
  });
}

}  // namespace rpq
