#pragma once

#include <optional>
#include <vector>

#include "tiltkit/decorated/decorated.hpp"
#include "tiltkit/tiltb/butterfly.hpp"

namespace tiltkit {

// The unique δ: E_p → E_q with δι_p = κ_q, σ_q δ = ρ_p, δκ_p = 0 and ρ_q δ = 0; none iff q∘p ≠ 0.
// Throws NotComposable unless p.dst = q.src.
std::optional<GroupMap> link(const Butterfly& p, const Butterfly& q);

// A bounded complex ^lo𝕏 → ... → ^hi𝕏 in B. diff(n): ^{n-1}𝕏 → ^n𝕏 has middle ^nE; the
// outermost ones, diff(lo) from 0 and diff(hi + 1) to 0, are the canonical strict butterflies,
// so ^loE = ^loX^{-1} and ^{hi+1}E = ^hiX^0.
class BComplex {
 public:
  BComplex() = default;

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(obj_.size()) - 1; }
  bool empty() const { return obj_.empty(); }

  BObject object(int n) const;
  Butterfly diff(int n) const;
  FgGroup middle(int n) const { return diff(n).e; }
  // δ: ^nE → ^{n+1}E
  GroupMap link(int n) const;

 private:
  friend BComplex make_b_complex(int lo, std::vector<BObject> objects, std::vector<Butterfly> differentials);
  int lo_ = 0;
  std::vector<BObject> obj_;
  std::vector<Butterfly> d_;      // degrees lo .. hi + 1
  std::vector<GroupMap> links_;   // degrees lo .. hi
};

// differentials[i] goes into degree lo + 1 + i. Throws NotComposable on mismatched endpoints and
// NonZeroComposite naming the first degree whose composite is not zero.
BComplex make_b_complex(int lo, std::vector<BObject> objects, std::vector<Butterfly> differentials);

// Degreewise butterflies commuting with the differentials up to equality.
struct BChainMap {
  BComplex src, dst;
  int lo = 0;
  std::vector<Butterfly> comps;
  bool strict = false;  // every component carries chain map data
  Butterfly at(int n) const;
  int hi() const { return lo + static_cast<int>(comps.size()) - 1; }
};
// Throws NonCommutingSquare naming the first degree where f d ≠ d f.
BChainMap make_b_chain_map(const BComplex& src, const BComplex& dst, int lo, std::vector<Butterfly> comps);
BChainMap b_identity(const BComplex& x);

// (E^n, M^n) = (^nE, ι(^nX^{-1})) with the links as differential; supported on [lo, hi + 1].
DecComplex tot(const BComplex& x);
// ^n𝕏 = [M^n → E^{n+1}/M^{n+1}] on [lo − 1, hi], with middle E^n into degree n. Throws NotCompatible.
BComplex g_inverse(const DecComplex& d);
// The canonical strict isomorphism 𝐗 → G(Tot 𝐗): ι on degree −1, the inverse of σ̄ on degree 0.
BChainMap canonical_iso(const BComplex& x);

// Components on the middles, solved degreewise and unique; throws TransferFailure if the
// commutator with the links is not zero or a component is missing.
DecMap tot_map(const BChainMap& f);
BChainMap g_map(const DecMap& f);

// P = g ∘ s^{-1} through 𝔼 = [X^{-1} ⊕ Y^{-1} →κ+ι E], with s = (pr1, σ) and g = (pr2, ρ).
struct Roof {
  BObject e;
  Butterfly s, g;
};
Roof roof(const Butterfly& p);
// P = t^{-1} ∘ h through 𝔽 = [E →(−σ,ρ) X^0 ⊕ Y^0], with t = (ι, in2) and h = (−κ, in1).
struct CoRoof {
  BObject f;
  Butterfly t, h;
};
CoRoof co_roof(const Butterfly& p);

// f = g ∘ s^{-1} = t^{-1} ∘ h with s, g, t, h strict chain maps and s, t degreewise isomorphisms.
struct RoofChain {
  BComplex e;
  BChainMap s, g;
  BComplex f;
  BChainMap t, h;
};
RoofChain roof_chain(const BChainMap& f);

// ℍ^n(𝐗) = [^nE/A → B] with A from diff(n) and B ⊆ ^{n+1}E from diff(n + 1), for n in [lo, hi].
struct BCohomology {
  int lo = 0;
  std::vector<BObject> objects;
  const BObject& at(int n) const { return objects[static_cast<size_t>(n - lo)]; }
  int hi() const { return lo + static_cast<int>(objects.size()) - 1; }
};
BCohomology b_complex_cohomology(const BComplex& x);
bool is_b_exact(const BComplex& x);

// Cone with ^nC = ^{n+1}𝕏 ⊕ ^n𝕐 and differential [[−d, 0], [f, d]], built inside B.
BComplex b_cone(const BChainMap& f);
// Quasi-isomorphism in Ch(B), decided by exactness of the cone.
bool is_b_quasi_iso(const BChainMap& f);

}  // namespace tiltkit
