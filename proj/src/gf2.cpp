#include "dbw/gf2.hpp"

namespace dbw {

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Gf2Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rows[i][j]) m.set(i, j, true);
  return m;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

int Gf2Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::uint64_t> work = data_;
  auto row = [&](int r) { return work.data() + idx(r); };
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int w = c >> 6;
    std::uint64_t bit = std::uint64_t{1} << (c & 63);
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (row(r)[w] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int k = 0; k < words_per_row_; ++k)
        std::swap(row(pivot)[k], row(rank)[k]);
    for (int r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      if (row(r)[w] & bit)
        for (int k = 0; k < words_per_row_; ++k) row(r)[k] ^= row(rank)[k];
    }
    ++rank;
  }
  return rank;
}

int gf2_rank(const Gf2Matrix& m) { return m.rank(); }

Gf2Matrix adjacency_submatrix(const DiGraph& d, const std::vector<int>& rows,
                              const std::vector<int>& cols) {
  std::vector<int> col_pos(d.vertex_count(), -1);
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos[cols[j]] = static_cast<int>(j);
  Gf2Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (EdgeId e : d.out_edges(rows[i])) {
      int j = col_pos[d.arc(e).head];
      if (j >= 0) m.set(static_cast<int>(i), j, true);
    }
  return m;
}

int bicut_value(const DiGraph& d, const Bitset& vertex_side) {
  std::vector<int> inside = vertex_side.indices();
  std::vector<int> outside = (~vertex_side).indices();
  int r1 = adjacency_submatrix(d, outside, inside).rank();
  int r2 = adjacency_submatrix(d, inside, outside).rank();
  return r1 + r2;
}

}  // namespace dbw
