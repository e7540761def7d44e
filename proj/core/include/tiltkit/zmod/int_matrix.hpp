#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tiltkit/zmod/integer.hpp"

namespace tiltkit {

using IntVec = std::vector<Int>;

// Dense row-major integer matrix. Zero rows or columns are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(size_t n);
  static IntMatrix from_columns(size_t rows, const std::vector<IntVec>& cols);
  static IntMatrix column(const IntVec& v);
  static IntMatrix diagonal(const IntVec& d);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  IntVec col(size_t j) const;
  IntVec row(size_t i) const;
  void set_col(size_t j, const IntVec& v);

  IntMatrix transpose() const;
  IntMatrix select_rows(const std::vector<size_t>& idx) const;
  IntMatrix select_cols(const std::vector<size_t>& idx) const;
  IntMatrix row_range(size_t begin, size_t end) const;
  IntMatrix col_range(size_t begin, size_t end) const;
  // Overwrite the block with top-left corner (r, c) by b.
  void set_block(size_t r, size_t c, const IntMatrix& b);

  bool is_zero() const;
  bool is_identity() const;

  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Int& s, const IntMatrix& a);
  friend IntVec operator*(const IntMatrix& a, const IntVec& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  std::string str() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

bool is_zero(const IntVec& v);

}  // namespace tiltkit
