#pragma once

#include <vector>

#include "tiltkit/decorated/complex.hpp"

namespace tiltkit {

// A complex with a subgroup M^n ⊆ E^n in each degree, not necessarily respected by δ.
class DecComplex {
 public:
  DecComplex() = default;
  // One subgroup per term of the complex. Throws InvalidInput on a wrong ambient group.
  DecComplex(ChainComplex c, std::vector<Subgroup> deco);
  static DecComplex zero_decoration(const ChainComplex& c);
  static DecComplex full_decoration(const ChainComplex& c);

  const ChainComplex& complex() const { return c_; }
  int lo() const { return c_.lo(); }
  int hi() const { return c_.hi(); }
  FgGroup term(int n) const { return c_.term(n); }
  GroupMap d(int n) const { return c_.d(n); }
  Subgroup deco(int n) const;

  friend bool operator==(const DecComplex& a, const DecComplex& b);
  friend bool operator!=(const DecComplex& a, const DecComplex& b) { return !(a == b); }

 private:
  ChainComplex c_;
  std::vector<Subgroup> m_;
};

inline const ChainComplex& forget(const DecComplex& d) { return d.complex(); }

struct DecMap {
  DecComplex src, dst;
  ChainMap map;
  GroupMap at(int n) const { return map.at(n); }
};
// Throws InvalidInput unless the map is a chain map with f(M^n) ⊆ N^n.
DecMap make_dec_map(const DecComplex& src, const DecComplex& dst, int lo, std::vector<GroupMap> components);
DecMap dec_identity(const DecComplex& d);
DecMap dec_zero(const DecComplex& src, const DecComplex& dst);

// H^{-1,n} = ker(M^n → E^{n+1}/M^{n+1}) as the subgroup M^n ∩ δ^{-1}(M^{n+1}) of E^n, and
// H^{0,n} = coker of the same map, as the quotient E^{n+1}/(M^{n+1} + δM^n); n ∈ [lo − 1, hi].
struct DecCohomology {
  int lo = 0;
  std::vector<Subgroup> h_m1;
  std::vector<Quotient> h_0;
  ChainComplex h_m1_complex;  // 𝓗^{-1}, a subcomplex of E
  ChainComplex h_0_complex;   // 𝓗^0, with H^{0,n} in degree n
  int hi() const { return lo + static_cast<int>(h_m1.size()) - 1; }
  const Subgroup& m1(int n) const { return h_m1[static_cast<size_t>(n - lo)]; }
  const Quotient& zero(int n) const { return h_0[static_cast<size_t>(n - lo)]; }
};
DecCohomology dec_cohomology(const DecComplex& d);

bool is_compatible(const DecComplex& d);
bool is_compatible(const DecCohomology& h);

// The natural map E/𝓗^{-1} → 𝓗^0[-1]; both are quotient complexes of E, and the shift is
// plain reindexing (degree n holds H^{0,n-1}).
struct LoesWitness {
  ChainMap map;
  bool verdict = false;
};
LoesWitness loes_witness(const DecComplex& d);

// Maps induced on 𝓗^{-1} and 𝓗^0.
ChainMap induced_h_m1(const DecMap& f, const DecCohomology& src, const DecCohomology& dst);
ChainMap induced_h_0(const DecMap& f, const DecCohomology& src, const DecCohomology& dst);

struct MapClass {
  bool is_qis = false, is_sis = false;
};
MapClass classify_map(const DecMap& f);

// (E[k])^n = E^{n+k} with differential (−1)^k δ.
DecComplex shift(const DecComplex& d, int k);
ChainComplex shift(const ChainComplex& c, int k);
// E ⊕ E[1] ⊕ F with d(a, b, c) = (δa − b, −δb, δc + f b) and the summed decoration.
DecComplex cylinder(const DecMap& f);
// Cyl(f)/E: E^{n+1} ⊕ F^n with d(b, c) = (−δb, δc + f b).
DecComplex cone(const DecMap& f);

// Chain homotopy f ≃ g: f − g = δs + sδ.
bool is_chain_homotopic(const ChainMap& f, const ChainMap& g);
// Decorated homotopy: f − g = δs + sδ with s(M^n) ⊆ N^{n-1}.
bool is_homotopic(const DecMap& f, const DecMap& g);

// The group of decorated maps src → dst, inside the product of the degreewise Hom groups.
FgGroup dec_hom_group(const DecComplex& src, const DecComplex& dst);

// Tensor complex with δ(x ⊗ y) = δx ⊗ y + (−1)^p x ⊗ δy, decorated by the image of (E ⊗ N) ⊕ (M ⊗ F).
DecComplex tensor(const DecComplex& a, const DecComplex& b);
// Tensor product of groups on the ambient basis e_i ⊗ f_j ↦ i·rank(b) + j.
FgGroup tensor(const FgGroup& a, const FgGroup& b);

// An epimorphic quasi-isomorphism from a complex of free groups, with the pulled-back decoration.
struct FreeCover {
  DecComplex cover;
  DecMap map;
};
FreeCover free_cover_complex(const DecComplex& d);

}  // namespace tiltkit
