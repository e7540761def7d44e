#include "tiltkit/zmod/lattice.hpp"

#include <stdexcept>

#include "tiltkit/zmod/reduction.hpp"

namespace tiltkit {

Lattice Lattice::span(const IntMatrix& gens) {
  Lattice l;
  l.n_ = gens.rows();
  l.basis_ = hermite_basis(gens);
  for (size_t j = 0; j < l.basis_.cols(); ++j) {
    size_t p = 0;
    while (l.basis_(p, j).is_zero()) ++p;
    l.pivots_.push_back(p);
  }
  return l;
}

Lattice Lattice::span(size_t n, const std::vector<IntVec>& gens) { return span(IntMatrix::from_columns(n, gens)); }

bool Lattice::is_full() const {
  if (rank() != n_) return false;
  for (size_t j = 0; j < n_; ++j)
    if (!basis_(j, j).is_one()) return false;
  return true;
}

std::optional<IntVec> Lattice::reduce(const IntVec& v, bool want_coords) const {
  if (v.size() != n_) throw std::invalid_argument("lattice: vector length mismatch");
  IntVec r = v;
  IntVec c(want_coords ? rank() : 0);
  size_t next = 0;
  for (size_t j = 0; j < rank(); ++j) {
    const size_t p = pivots_[j];
    for (size_t i = next; i < p; ++i)
      if (!r[i].is_zero()) return std::nullopt;
    if (!r[p].is_zero()) {
      if (!divides(basis_(p, j), r[p])) return std::nullopt;
      Int q = exact_div(r[p], basis_(p, j));
      for (size_t i = p; i < n_; ++i)
        if (!basis_(i, j).is_zero()) r[i].submul(q, basis_(i, j));
      if (want_coords) c[j] = std::move(q);
    }
    next = p + 1;
  }
  for (size_t i = next; i < n_; ++i)
    if (!r[i].is_zero()) return std::nullopt;
  return c;
}

bool Lattice::contains(const IntVec& v) const { return reduce(v, false).has_value(); }

bool Lattice::contains_columns(const IntMatrix& m) const {
  for (size_t j = 0; j < m.cols(); ++j)
    if (!contains(m.col(j))) return false;
  return true;
}

bool Lattice::contains(const Lattice& o) const { return n_ == o.n_ && contains_columns(o.basis_); }

std::optional<IntVec> Lattice::coordinates(const IntVec& v) const { return reduce(v, true); }

IntMatrix Lattice::coordinates(const IntMatrix& m) const {
  IntMatrix c(rank(), m.cols());
  for (size_t j = 0; j < m.cols(); ++j) {
    auto cj = coordinates(m.col(j));
    if (!cj) throw std::logic_error("lattice: vector not contained");
    c.set_col(j, *cj);
  }
  return c;
}

Lattice Lattice::operator+(const Lattice& o) const {
  if (n_ != o.n_) throw std::invalid_argument("lattice sum: dimension mismatch");
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return span(hstack(basis_, o.basis_));
}

Lattice Lattice::intersect(const Lattice& o) const {
  if (n_ != o.n_) throw std::invalid_argument("lattice intersection: dimension mismatch");
  if (contains(o)) return o;
  if (o.contains(*this)) return *this;
  return o.preimage(basis_).image(basis_);
}

Lattice Lattice::preimage(const IntMatrix& m) const {
  if (m.rows() != n_) throw std::invalid_argument("lattice preimage: row mismatch");
  const size_t k = m.cols();
  IntMatrix ker = kernel_basis(hstack(m, -basis_));
  return span(ker.row_range(0, k));
}

Lattice Lattice::image(const IntMatrix& m) const {
  if (m.cols() != n_) throw std::invalid_argument("lattice image: column mismatch");
  return span(m * basis_);
}

Lattice Lattice::saturation() const {
  if (is_zero()) return *this;
  SmithForm s = smith(basis_, kTrackUinv);
  return span(s.Uinv.col_range(0, s.rank));
}

}  // namespace tiltkit
