#pragma once

#include <memory>
#include <string>

#include "tiltkit/zmod/int_matrix.hpp"
#include "tiltkit/zmod/lattice.hpp"

namespace tiltkit {

// Isomorphism invariant: Z^free_rank ⊕ Z/d_1 ⊕ ... with d_i >= 2 and d_i | d_{i+1}.
struct CanonicalForm {
  size_t free_rank = 0;
  IntVec torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool in_T() const { return free_rank == 0; }
  bool in_F() const { return torsion.empty(); }
  std::string str() const;
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }
};

// Coordinates adapted to the Smith form of a relation matrix: x ↦ to_min·x lands in
// ⊕ Z/orders[i] (order 0 meaning a free coordinate); from_min·e_i lifts back.
struct MinimalCoords {
  IntMatrix to_min;
  IntMatrix from_min;
  IntVec orders;
};

MinimalCoords minimal_coords(size_t n, const IntMatrix& relations);

// coker(Z^m → Z^n), given by an n×m relation matrix. Immutable and cheap to copy.
class FgGroup {
 public:
  FgGroup();  // the zero group on Z^0
  explicit FgGroup(const IntMatrix& relations);
  FgGroup(size_t ambient_rank, const IntMatrix& relations);

  static FgGroup free(size_t n);
  static FgGroup cyclic(const Int& d);
  // Generators with the given orders; order 0 is a free generator.
  static FgGroup from_orders(const IntVec& orders);

  size_t ambient_rank() const { return d_->n; }
  const IntMatrix& relations() const { return d_->relations; }
  const Lattice& relation_lattice() const { return d_->rel_lattice; }
  const CanonicalForm& canonical() const { return d_->canonical; }
  const MinimalCoords& minimal() const { return d_->min; }

  bool is_zero() const { return d_->canonical.is_zero(); }
  bool in_T() const { return d_->canonical.in_T(); }
  bool in_F() const { return d_->canonical.in_F(); }
  // The relation lattice is zero, so the presentation itself is free.
  bool is_free_presentation() const { return d_->rel_lattice.is_zero(); }

  bool is_zero_element(const IntVec& v) const { return d_->rel_lattice.contains(v); }
  bool is_zero_columns(const IntMatrix& m) const { return d_->rel_lattice.contains_columns(m); }
  // Coordinates in the minimal presentation, reduced into [0, order).
  IntVec min_coords(const IntVec& v) const;

  bool same_object(const FgGroup& o) const { return d_ == o.d_; }
  friend bool operator==(const FgGroup& a, const FgGroup& b);
  friend bool operator!=(const FgGroup& a, const FgGroup& b) { return !(a == b); }

  std::string str() const;

 private:
  struct Data {
    size_t n = 0;
    IntMatrix relations;
    Lattice rel_lattice;
    CanonicalForm canonical;
    MinimalCoords min;
  };
  std::shared_ptr<const Data> d_;
};

class GroupMap {
 public:
  GroupMap() = default;
  // Throws IllDefined unless lift carries src relations into dst relations.
  GroupMap(FgGroup src, FgGroup dst, IntMatrix lift);
  static GroupMap unchecked(FgGroup src, FgGroup dst, IntMatrix lift);
  static GroupMap zero(const FgGroup& src, const FgGroup& dst);
  static GroupMap identity(const FgGroup& g);

  const FgGroup& src() const { return src_; }
  const FgGroup& dst() const { return dst_; }
  const IntMatrix& lift() const { return lift_; }

  IntVec apply(const IntVec& v) const { return lift_ * v; }
  bool is_zero() const { return dst_.is_zero_columns(lift_); }
  bool equals(const GroupMap& o) const;

  GroupMap operator-() const;
  friend GroupMap operator+(const GroupMap& a, const GroupMap& b);
  friend GroupMap operator-(const GroupMap& a, const GroupMap& b);
  friend GroupMap operator*(const Int& k, const GroupMap& f);
  // g * f is g ∘ f.
  friend GroupMap operator*(const GroupMap& g, const GroupMap& f);

  std::string str() const;

 private:
  FgGroup src_, dst_;
  IntMatrix lift_;
};

bool same_endpoints(const GroupMap& a, const GroupMap& b);

}  // namespace tiltkit
