#pragma once

#include <optional>

#include "tiltkit/zmod/int_matrix.hpp"

namespace tiltkit {

// A sublattice of Z^n, stored by its canonical column Hermite basis; two lattices
// are equal iff their bases are.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(size_t n) : n_(n), basis_(n, 0) {}

  static Lattice span(const IntMatrix& gens);
  static Lattice span(size_t n, const std::vector<IntVec>& gens);
  static Lattice full(size_t n) { return span(IntMatrix::identity(n)); }
  static Lattice zero(size_t n) { return Lattice(n); }

  size_t dim() const { return n_; }
  size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  bool is_zero() const { return basis_.cols() == 0; }
  bool is_full() const;

  bool contains(const IntVec& v) const;
  bool contains_columns(const IntMatrix& m) const;
  bool contains(const Lattice& o) const;
  // Unique coordinates of v in the basis, if v lies in the lattice.
  std::optional<IntVec> coordinates(const IntVec& v) const;
  // Coordinates for every column of m; throws if one is not contained.
  IntMatrix coordinates(const IntMatrix& m) const;

  Lattice operator+(const Lattice& o) const;
  Lattice intersect(const Lattice& o) const;
  // {x : m x ∈ *this}; m has dim() rows.
  Lattice preimage(const IntMatrix& m) const;
  // {m x : x ∈ *this}
  Lattice image(const IntMatrix& m) const;
  // {x : k x ∈ *this for some k ≠ 0}
  Lattice saturation() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

 private:
  std::optional<IntVec> reduce(const IntVec& v, bool want_coords) const;

  size_t n_ = 0;
  IntMatrix basis_;
  std::vector<size_t> pivots_;
};

}  // namespace tiltkit
