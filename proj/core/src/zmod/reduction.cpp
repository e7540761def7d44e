#include "tiltkit/zmod/reduction.hpp"

#include <stdexcept>
#include <utility>

namespace tiltkit {

namespace {

class SmithWork {
 public:
  SmithWork(const IntMatrix& m, unsigned track)
      : a_(m), r_(m.rows()), c_(m.cols()), track_(track) {
    if (track_ & kTrackU) u_ = IntMatrix::identity(r_);
    if (track_ & kTrackUinv) uinv_ = IntMatrix::identity(r_);
    if (track_ & kTrackV) v_ = IntMatrix::identity(c_);
    if (track_ & kTrackVinv) vinv_ = IntMatrix::identity(c_);
  }

  // row_i += q * row_j
  void row_add(size_t i, size_t j, const Int& q) {
    if (q.is_zero()) return;
    Int nq = -q;
    for (size_t k = 0; k < c_; ++k)
      if (!a_(j, k).is_zero()) a_(i, k).submul(nq, a_(j, k));
    if (track_ & kTrackU)
      for (size_t k = 0; k < r_; ++k)
        if (!u_(j, k).is_zero()) u_(i, k).submul(nq, u_(j, k));
    if (track_ & kTrackUinv)
      for (size_t k = 0; k < r_; ++k)
        if (!uinv_(k, i).is_zero()) uinv_(k, j).submul(q, uinv_(k, i));
  }
  void row_swap(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < c_; ++k) std::swap(a_(i, k), a_(j, k));
    if (track_ & kTrackU)
      for (size_t k = 0; k < r_; ++k) std::swap(u_(i, k), u_(j, k));
    if (track_ & kTrackUinv)
      for (size_t k = 0; k < r_; ++k) std::swap(uinv_(k, i), uinv_(k, j));
  }
  void row_neg(size_t i) {
    for (size_t k = 0; k < c_; ++k) a_(i, k) = -a_(i, k);
    if (track_ & kTrackU)
      for (size_t k = 0; k < r_; ++k) u_(i, k) = -u_(i, k);
    if (track_ & kTrackUinv)
      for (size_t k = 0; k < r_; ++k) uinv_(k, i) = -uinv_(k, i);
  }
  // col_i += q * col_j
  void col_add(size_t i, size_t j, const Int& q) {
    if (q.is_zero()) return;
    Int nq = -q;
    for (size_t k = 0; k < r_; ++k)
      if (!a_(k, j).is_zero()) a_(k, i).submul(nq, a_(k, j));
    if (track_ & kTrackV)
      for (size_t k = 0; k < c_; ++k)
        if (!v_(k, j).is_zero()) v_(k, i).submul(nq, v_(k, j));
    if (track_ & kTrackVinv)
      for (size_t k = 0; k < c_; ++k)
        if (!vinv_(i, k).is_zero()) vinv_(j, k).submul(q, vinv_(i, k));
  }
  void col_swap(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < r_; ++k) std::swap(a_(k, i), a_(k, j));
    if (track_ & kTrackV)
      for (size_t k = 0; k < c_; ++k) std::swap(v_(k, i), v_(k, j));
    if (track_ & kTrackVinv)
      for (size_t k = 0; k < c_; ++k) std::swap(vinv_(i, k), vinv_(j, k));
  }

  SmithForm run() {
    size_t t = 0;
    const size_t lim = std::min(r_, c_);
    for (; t < lim; ++t) {
      if (!bring_smallest(t)) break;
      for (;;) {
        bool dirty = false;
        for (size_t i = t + 1; i < r_; ++i) {
          if (a_(i, t).is_zero()) continue;
          row_add(i, t, -round_div(a_(i, t), a_(t, t)));
          if (!a_(i, t).is_zero()) dirty = true;
        }
        for (size_t j = t + 1; j < c_; ++j) {
          if (a_(t, j).is_zero()) continue;
          col_add(j, t, -round_div(a_(t, j), a_(t, t)));
          if (!a_(t, j).is_zero()) dirty = true;
        }
        if (dirty) {
          bring_smallest_in_cross(t);
          continue;
        }
        bool fixed = false;
        for (size_t i = t + 1; i < r_ && !fixed; ++i)
          for (size_t j = t + 1; j < c_; ++j)
            if (!divides(a_(t, t), a_(i, j))) {
              row_add(t, i, Int(1));
              fixed = true;
              break;
            }
        if (!fixed) break;
      }
      if (a_(t, t).sign() < 0) row_neg(t);
    }
    SmithForm s;
    s.rank = t;
    for (size_t k = 0; k < t; ++k) s.diag.push_back(a_(k, k));
    s.U = std::move(u_);
    s.Uinv = std::move(uinv_);
    s.V = std::move(v_);
    s.Vinv = std::move(vinv_);
    return s;
  }

 private:
  bool bring_smallest(size_t t) {
    size_t bi = r_, bj = c_;
    Int best;
    for (size_t i = t; i < r_; ++i)
      for (size_t j = t; j < c_; ++j) {
        const Int& x = a_(i, j);
        if (x.is_zero()) continue;
        Int ax = abs(x);
        if (bi == r_ || ax < best) {
          best = ax;
          bi = i;
          bj = j;
          if (best.is_one()) goto found;
        }
      }
    if (bi == r_) return false;
  found:
    row_swap(t, bi);
    col_swap(t, bj);
    return true;
  }

  void bring_smallest_in_cross(size_t t) {
    Int best = abs(a_(t, t));
    size_t bi = t, bj = t;
    for (size_t i = t + 1; i < r_; ++i)
      if (!a_(i, t).is_zero() && abs(a_(i, t)) < best) {
        best = abs(a_(i, t));
        bi = i;
        bj = t;
      }
    for (size_t j = t + 1; j < c_; ++j)
      if (!a_(t, j).is_zero() && abs(a_(t, j)) < best) {
        best = abs(a_(t, j));
        bi = t;
        bj = j;
      }
    row_swap(t, bi);
    col_swap(t, bj);
  }

  IntMatrix a_;
  size_t r_, c_;
  unsigned track_;
  IntMatrix u_, uinv_, v_, vinv_;
};

}  // namespace

IntMatrix SmithForm::D(size_t rows, size_t cols) const {
  IntMatrix d(rows, cols);
  for (size_t k = 0; k < rank; ++k) d(k, k) = diag[k];
  return d;
}

SmithForm smith(const IntMatrix& m, unsigned track) { return SmithWork(m, track).run(); }

ColumnEchelon column_echelon(const IntMatrix& a, bool track_transform) {
  const size_t n = a.rows(), m = a.cols();
  IntMatrix h = a;
  IntMatrix v = track_transform ? IntMatrix::identity(m) : IntMatrix();
  std::vector<size_t> pivots;

  auto col_add = [&](size_t i, size_t j, const Int& q) {  // col_i += q col_j
    if (q.is_zero()) return;
    Int nq = -q;
    for (size_t k = 0; k < n; ++k)
      if (!h(k, j).is_zero()) h(k, i).submul(nq, h(k, j));
    if (track_transform)
      for (size_t k = 0; k < m; ++k)
        if (!v(k, j).is_zero()) v(k, i).submul(nq, v(k, j));
  };
  auto col_swap = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < n; ++k) std::swap(h(k, i), h(k, j));
    if (track_transform)
      for (size_t k = 0; k < m; ++k) std::swap(v(k, i), v(k, j));
  };
  auto col_neg = [&](size_t i) {
    for (size_t k = 0; k < n; ++k) h(k, i) = -h(k, i);
    if (track_transform)
      for (size_t k = 0; k < m; ++k) v(k, i) = -v(k, i);
  };

  size_t c = 0;
  for (size_t row = 0; row < n && c < m; ++row) {
    for (;;) {
      size_t p = m;
      for (size_t j = c; j < m; ++j)
        if (!h(row, j).is_zero() && (p == m || abs(h(row, j)) < abs(h(row, p)))) p = j;
      if (p == m) break;
      bool others = false;
      for (size_t j = c; j < m; ++j) {
        if (j == p || h(row, j).is_zero()) continue;
        col_add(j, p, -round_div(h(row, j), h(row, p)));
        if (!h(row, j).is_zero()) others = true;
      }
      if (others) continue;
      col_swap(c, p);
      if (h(row, c).sign() < 0) col_neg(c);
      pivots.push_back(row);
      ++c;
      break;
    }
  }
  return ColumnEchelon{std::move(h), std::move(v), std::move(pivots)};
}

IntMatrix hermite_basis(const IntMatrix& gens) {
  ColumnEchelon e = column_echelon(gens, false);
  const size_t r = e.rank();
  IntMatrix b = e.H.col_range(0, r);
  const size_t n = b.rows();
  for (size_t j = 0; j < r; ++j) {
    const size_t p = e.pivot_rows[j];
    const Int piv = b(p, j);
    for (size_t l = 0; l < j; ++l) {
      Int q = floor_div(b(p, l), piv);
      if (q.is_zero()) continue;
      for (size_t k = p; k < n; ++k)
        if (!b(k, j).is_zero()) b(k, l).submul(q, b(k, j));
    }
  }
  return b;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  ColumnEchelon e = column_echelon(a, true);
  return e.V.col_range(e.rank(), a.cols());
}

IntSolution solve_integer(const IntMatrix& a, const IntVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: rhs length mismatch");
  ColumnEchelon e = column_echelon(a, true);
  IntSolution sol;
  sol.kernel = e.V.col_range(e.rank(), a.cols());
  IntVec r = b;
  IntVec y(e.rank());
  size_t next_row = 0;
  for (size_t j = 0; j < e.rank(); ++j) {
    const size_t p = e.pivot_rows[j];
    for (size_t i = next_row; i < p; ++i)
      if (!r[i].is_zero()) return sol;
    if (!divides(e.H(p, j), r[p])) return sol;
    y[j] = exact_div(r[p], e.H(p, j));
    for (size_t i = p; i < a.rows(); ++i)
      if (!e.H(i, j).is_zero()) r[i].submul(y[j], e.H(i, j));
    next_row = p + 1;
  }
  for (size_t i = next_row; i < a.rows(); ++i)
    if (!r[i].is_zero()) return sol;
  IntVec x(a.cols());
  for (size_t j = 0; j < e.rank(); ++j)
    if (!y[j].is_zero())
      for (size_t k = 0; k < a.cols(); ++k)
        if (!e.V(k, j).is_zero()) x[k].submul(-y[j], e.V(k, j));
  sol.particular = std::move(x);
  return sol;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  SmithForm s = smith(m, 0);
  if (s.rank != m.rows()) return false;
  for (const auto& d : s.diag)
    if (!d.is_one()) return false;
  return true;
}

}  // namespace tiltkit
