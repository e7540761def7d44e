#pragma once

#include <vector>

#include "tiltkit/tiltb/butterfly.hpp"

namespace tiltkit {

// A bounded cochain complex E^lo → ... → E^hi; terms outside [lo, hi] are zero.
class ChainComplex {
 public:
  ChainComplex() = default;
  // d[i]: E^{lo+i} → E^{lo+i+1}, one fewer than the terms. Throws InvalidInput unless δ² = 0.
  ChainComplex(int lo, std::vector<FgGroup> terms, std::vector<GroupMap> d);
  static ChainComplex unchecked(int lo, std::vector<FgGroup> terms, std::vector<GroupMap> d);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool empty() const { return terms_.empty(); }
  size_t length() const { return terms_.size(); }

  FgGroup term(int n) const;
  GroupMap d(int n) const;  // E^n → E^{n+1}

  Subgroup cycles(int n) const { return kernel(d(n)); }
  // im δ^{n-1} together with the relations of E^n, as lifts.
  Lattice boundaries(int n) const;
  // H^n as a quotient of the cycle group.
  Quotient cohomology(int n) const;
  bool is_acyclic() const;

  // Drops boundary terms of ambient rank zero.
  ChainComplex normalized() const;
  friend bool operator==(const ChainComplex& a, const ChainComplex& b);
  friend bool operator!=(const ChainComplex& a, const ChainComplex& b) { return !(a == b); }

 private:
  int lo_ = 0;
  std::vector<FgGroup> terms_;
  std::vector<GroupMap> d_;
};

// Degreewise maps src^n → dst^n; zero outside the stored range.
class ChainMap {
 public:
  ChainMap() = default;
  // Throws InvalidInput if the components do not commute with the differentials.
  ChainMap(ChainComplex src, ChainComplex dst, int lo, std::vector<GroupMap> components);
  static ChainMap unchecked(ChainComplex src, ChainComplex dst, int lo, std::vector<GroupMap> components);
  static ChainMap zero(const ChainComplex& src, const ChainComplex& dst);
  static ChainMap identity(const ChainComplex& c);

  const ChainComplex& src() const { return src_; }
  const ChainComplex& dst() const { return dst_; }
  GroupMap at(int n) const;
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(f_.size()) - 1; }

  bool equals(const ChainMap& o) const;
  friend ChainMap operator+(const ChainMap& a, const ChainMap& b);
  friend ChainMap operator-(const ChainMap& a, const ChainMap& b);
  // g * f is g ∘ f.
  friend ChainMap operator*(const ChainMap& g, const ChainMap& f);

 private:
  ChainComplex src_, dst_;
  int lo_ = 0;
  std::vector<GroupMap> f_;
};

// Degree range covered by either complex; empty ranges give lo > hi.
std::pair<int, int> joint_range(const ChainComplex& a, const ChainComplex& b);

bool is_chain_map(const ChainComplex& src, const ChainComplex& dst, int lo, const std::vector<GroupMap>& f);
// Isomorphism on every H^n, decided on lattices without building the cohomology groups.
bool is_quasi_iso(const ChainMap& f);
// The map induced on H^n, between the groups of cohomology(n).
GroupMap induced_on_cohomology(const ChainMap& f, int n);

// The cohomological functor ℍ attached to the torsion pair.
struct HhFunctor {
  ChainComplex complex;
  int lo = 0;                  // a_subs cover [lo, hi + 1], objects [lo, hi]
  std::vector<Subgroup> a_subs;
  std::vector<BObject> objects;
  const Subgroup& a(int n) const { return a_subs[static_cast<size_t>(n - lo)]; }
  const BObject& hh(int n) const { return objects[static_cast<size_t>(n - lo)]; }
  int hi() const { return lo + static_cast<int>(objects.size()) - 1; }
};
HhFunctor hh_functor(const ChainComplex& c);
// ℍ^n(f) as a strict butterfly between ℍ^n(src) and ℍ^n(dst).
Butterfly hh_map(const ChainMap& f, const HhFunctor& src, const HhFunctor& dst, int n);
// Exactness of 0 → H^0(ℍ^{n-1}) → H^n → H^{-1}(ℍ^n) → 0, for lo < n <= hi.
bool cohomology_ses_exact(const HhFunctor& h, int n);

}  // namespace tiltkit
