#pragma once

#include <optional>
#include <vector>

#include "tiltkit/zmod/group.hpp"

namespace tiltkit {

// A subgroup of `ambient`, identified with the lattice of its lifts (which always
// contains the relation lattice). group() is a minimal presentation of it.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(FgGroup ambient, const Lattice& lifts);
  static Subgroup generated_by(const FgGroup& ambient, const IntMatrix& gens);
  static Subgroup whole(const FgGroup& ambient);
  static Subgroup zero(const FgGroup& ambient);

  const FgGroup& ambient() const { return ambient_; }
  const Lattice& lattice() const { return lattice_; }
  // Canonical generator lifts: the Hermite basis of the lift lattice.
  const IntMatrix& generators() const { return lattice_.basis(); }
  const FgGroup& group() const { return group_; }
  const GroupMap& inclusion() const { return inclusion_; }

  bool contains(const IntVec& v) const { return lattice_.contains(v); }
  bool contains(const Subgroup& o) const { return lattice_.contains(o.lattice_); }
  bool contains_image(const GroupMap& h) const { return lattice_.contains_columns(h.lift()); }
  bool is_zero() const { return lattice_ == ambient_.relation_lattice(); }
  bool is_whole() const { return lattice_.is_full(); }

  // Coordinates of an element (given by a lift) in group().
  IntVec coordinates(const IntVec& v) const;
  // h: A → ambient with image inside; returns the factorization A → group().
  GroupMap factor(const GroupMap& h) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_ == b.ambient_ && a.lattice_ == b.lattice_;
  }
  friend bool operator!=(const Subgroup& a, const Subgroup& b) { return !(a == b); }

 private:
  FgGroup ambient_;
  Lattice lattice_;
  FgGroup group_;
  GroupMap inclusion_;
  IntMatrix to_group_;  // lattice coordinates → group() coordinates
};

Subgroup operator+(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// ambient / lattice with a minimal presentation.
struct Quotient {
  FgGroup group;
  GroupMap proj;
  IntMatrix section;  // lift of a set-theoretic section: proj.lift * section ≡ id
  Lattice kernel_lifts;

  // g: ambient → H vanishing on the kernel; returns the induced map group → H.
  GroupMap induce(const GroupMap& g) const;
};

Quotient quotient(const FgGroup& g, const Lattice& lifts);
Quotient quotient(const Subgroup& s);

struct DirectSum {
  FgGroup group;
  GroupMap in1, in2, pr1, pr2;
};

DirectSum direct_sum(const FgGroup& a, const FgGroup& b);
// (f, g): A ⊕ B → C and (f; g): A → B ⊕ C through a given sum.
GroupMap copair(const DirectSum& s, const GroupMap& f, const GroupMap& g);
GroupMap pair(const DirectSum& s, const GroupMap& f, const GroupMap& g);

Subgroup kernel(const GroupMap& f);
Subgroup image(const GroupMap& f);
Quotient cokernel(const GroupMap& f);

bool is_mono(const GroupMap& f);
bool is_epi(const GroupMap& f);
bool is_iso(const GroupMap& f);

struct Pullback {
  Subgroup sub;  // inside src(f) ⊕ src(g)
  DirectSum sum;
  GroupMap p1, p2;
  const FgGroup& group() const { return sub.group(); }
};
Pullback pullback(const GroupMap& f, const GroupMap& g);

struct Pushout {
  Quotient quot;  // of dst(f) ⊕ dst(g)
  DirectSum sum;
  GroupMap j1, j2;
  const FgGroup& group() const { return quot.group; }
};
Pushout pushout(const GroupMap& f, const GroupMap& g);

struct TorsionDecomposition {
  FgGroup group;
  Subgroup t_part;
  Quotient f_quotient;
};
TorsionDecomposition torsion_decompose(const FgGroup& g);
Lattice torsion_lattice(const FgGroup& g);

// Hom(src, dst) presented on independent cyclic generators.
class HomGroup {
 public:
  HomGroup() = default;
  HomGroup(FgGroup src, FgGroup dst);

  const FgGroup& src() const { return src_; }
  const FgGroup& dst() const { return dst_; }
  const FgGroup& group() const { return group_; }
  size_t size() const { return gens_.size(); }
  const std::vector<GroupMap>& generators() const { return gens_; }
  const IntVec& orders() const { return orders_; }
  // Generator k is step(k) · from_min[:, slot.first] · to_min[slot.second, :].
  std::pair<size_t, size_t> slot(size_t k) const { return slot_[k]; }
  const Int& step(size_t k) const { return step_[k]; }

  IntVec coordinates(const GroupMap& f) const;
  GroupMap element(const IntVec& coords) const;
  // Evaluate the Hom element with these coordinates at an element of src.
  IntVec evaluate(const IntVec& coords, const IntVec& x) const { return element(coords).apply(x); }

 private:
  FgGroup src_, dst_, group_;
  std::vector<GroupMap> gens_;
  IntVec orders_;
  std::vector<std::pair<size_t, size_t>> slot_;  // (row, col) in minimal coordinates
  IntVec step_;
};

HomGroup hom_group(const FgGroup& g, const FgGroup& h);

}  // namespace tiltkit
