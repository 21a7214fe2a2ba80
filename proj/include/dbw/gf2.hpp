#pragma once

#include <cstdint>
#include <vector>

#include "dbw/bitset.hpp"
#include "dbw/digraph.hpp"

namespace dbw {

// Dense bit matrix over GF(2).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
        data_(static_cast<std::size_t>(rows) * words_per_row_, 0) {}

  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (data_[idx(r) + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(int r, int c, bool v) {
    if (v)
      data_[idx(r) + (c >> 6)] |= std::uint64_t{1} << (c & 63);
    else
      data_[idx(r) + (c >> 6)] &= ~(std::uint64_t{1} << (c & 63));
  }

  Gf2Matrix transposed() const;

  int rank() const;  // Gaussian elimination on a scratch copy

 private:
  std::size_t idx(int r) const {
    return static_cast<std::size_t>(r) * words_per_row_;
  }

  int rows_ = 0, cols_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> data_;
};

int gf2_rank(const Gf2Matrix& m);

// Adjacency submatrix rows x cols of d (entry 1 iff arc row->col).
Gf2Matrix adjacency_submatrix(const DiGraph& d, const std::vector<int>& rows,
                              const std::vector<int>& cols);

// rank M[V\X, X] + rank M[X, V\X] over GF(2); the bi-cut-rank cut function.
int bicut_value(const DiGraph& d, const Bitset& vertex_side);

}  // namespace dbw
