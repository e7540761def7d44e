#include "tiltkit/zmod/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace tiltkit {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(size_t rows, const std::vector<IntVec>& cols) {
  IntMatrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

IntMatrix IntMatrix::column(const IntVec& v) { return from_columns(v.size(), {v}); }

IntMatrix IntMatrix::diagonal(const IntVec& d) {
  IntMatrix m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntVec IntMatrix::col(size_t j) const {
  IntVec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVec IntMatrix::row(size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_col(size_t j, const IntVec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(const std::vector<size_t>& idx) const {
  IntMatrix m(idx.size(), cols_);
  for (size_t k = 0; k < idx.size(); ++k)
    for (size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
  return m;
}

IntMatrix IntMatrix::select_cols(const std::vector<size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  return m;
}

IntMatrix IntMatrix::row_range(size_t begin, size_t end) const {
  IntMatrix m(end - begin, cols_);
  for (size_t i = begin; i < end; ++i)
    for (size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
  return m;
}

IntMatrix IntMatrix::col_range(size_t begin, size_t end) const {
  IntMatrix m(rows_, end - begin);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
  return m;
}

void IntMatrix::set_block(size_t r, size_t c, const IntMatrix& b) {
  for (size_t i = 0; i < b.rows_; ++i)
    for (size_t j = 0; j < b.cols_; ++j) (*this)(r + i, c + j) = b(i, j);
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Int(i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  IntMatrix m(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const Int& y = b(k, j);
        if (!y.is_zero()) m(i, j).submul(-x, y);
      }
    }
  return m;
}

IntMatrix operator*(const Int& s, const IntMatrix& a) {
  IntMatrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

IntVec operator*(const IntMatrix& a, const IntVec& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVec r(a.rows_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k)
      if (!v[k].is_zero() && !a(i, k).is_zero()) r[i].submul(-a(i, k), v[k]);
  return r;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  for (size_t j = 0; j < a.cols(); ++j) {
    for (size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
    for (size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace tiltkit
