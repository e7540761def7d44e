#pragma once

#include <vector>

#include "tiltkit/bridge/tot.hpp"
#include "tiltkit/decorated/decorated.hpp"
#include "tiltkit/zmod/ops.hpp"

namespace tiltkit {

// A finite family of homomorphisms h_i: A_i → B_i parametrized by stacked Hom coordinates.
class MapFamily {
 public:
  size_t add(const FgGroup& src, const FgGroup& dst);
  size_t size() const { return homs_.size(); }
  const HomGroup& hom(size_t i) const { return homs_[i]; }
  size_t offset(size_t i) const { return off_[i]; }
  size_t rank() const { return off_.back(); }

  FgGroup group() const;
  IntVec coordinates(const std::vector<GroupMap>& maps) const;
  std::vector<GroupMap> element(const IntVec& coords) const;

 private:
  std::vector<HomGroup> homs_;
  std::vector<size_t> off_{0};
};

// 𝔥om((E, M), (F, N)) with its decoration 𝓜. Degree k holds the sequences g_n: E^n → F^{n+k}
// with g_n(M^n) ⊆ N^{n+k} whose commutator δ_F g_n − (−1)^k g_{n+1} δ_E maps M^n into N^{n+k+1};
// 𝓜^k asks g_n(M^n) = 0 and g_n(E^n) ⊆ N^{n+k}.
struct DecoratedHomComplex {
  DecComplex src, dst;
  int lo = 0;
  std::vector<MapFamily> ambient;  // per degree: g_n for n in [src.lo, src.hi]
  std::vector<Subgroup> homs;      // 𝔥om^k inside ambient[k].group()
  DecComplex complex;              // terms homs[k].group(), decorated by 𝓜

  int hi() const { return lo + static_cast<int>(homs.size()) - 1; }
  // coords in the ambient coordinates of homs[k].group()
  std::vector<GroupMap> element(int k, const IntVec& coords) const;
};

DecoratedHomComplex hom_complex_dec(const DecComplex& x, const DecComplex& y);
// 𝓜^k ∩ d^{-1}(𝓜^{k+1}) = 0 in every degree.
bool enrich_check(const DecoratedHomComplex& h);

// 𝔥om^k/(𝓜^k + d𝓜^{k−1}) with the induced differential. Throws PreconditionViolated unless enrich_check.
struct DgQuotient {
  int lo = 0;
  std::vector<Quotient> q;  // of the terms of the decorated hom complex
  ChainComplex complex;
};
DgQuotient dg_quotient(const DecoratedHomComplex& h);

// 𝔥om in Ch^st(B): sequences of strict h_n: ^n𝕏 → ^{n+k}𝕐 whose extensions admit a fill
// φ: E^n → F^{n+k} with σφ = h^0_{n−1}σ and φι = (−1)^k ι h^{-1}_n, modulo null-homotopies.
struct StrictHomComplex {
  BComplex src, dst;
  int lo = 0;
  std::vector<MapFamily> ambient;  // per degree: (h^{-1}_n, h^0_n) for n in [src.lo, src.hi]
  std::vector<Subgroup> chains;    // strict sequences with a fill
  std::vector<Subgroup> null;      // (s d_X, d_Y s), inside chains
  std::vector<Quotient> terms;     // chains / null, as quotients of chains[k].group()
  ChainComplex complex;

  int hi() const { return lo + static_cast<int>(chains.size()) - 1; }
  // The strict morphisms h_n of an element given by ambient coordinates.
  std::vector<Butterfly> element(int k, const IntVec& coords) const;
  // The class in terms[k] of strict pairs, one (h^{-1}_n, h^0_n) per n in [src.lo, src.hi].
  IntVec coordinates(int k, const std::vector<StrictParts>& h) const;
};
StrictHomComplex strict_hom_complex(const BComplex& x, const BComplex& y);

// The map 𝔊: γ ↦ ((−1)^k g̲_n, ḡ_{n+1}) from 𝔥om^k(x, y) to the strict hom complex of the
// associated B-complexes, degree by degree, with the checks of the DG equivalence.
struct DgEquivalenceDegree {
  int k = 0;
  GroupMap map;
  bool surjective = false;
  bool kernel_matches = false;  // kernel = 𝓜^k + d𝓜^{k−1}
  bool commutes = false;        // with the differentials
};
std::vector<DgEquivalenceDegree> dg_equivalence(const DecoratedHomComplex& h, const StrictHomComplex& s);

// A strict (f^{-1}, f^0) is zero in B iff (f^{-1}, f^0) = (s d_X, d_Y s) for some s: X^0 → Y^{-1}.
bool is_null_homotopic(const StrictParts& f, const BObject& x, const BObject& y);

// ℙ = [P ×_{X^0} X^{-1} → P] for P = Z^n covering X^0 by its ambient generators, with the strict
// isomorphism ℙ → 𝕏 = (second projection, cover). Objects with X^0 free are returned unchanged.
struct SemiProjective {
  BObject object;
  Butterfly iso;  // ℙ → 𝕏
};
SemiProjective semi_projective_replace(const BObject& x);
struct SemiProjectiveResolution {
  BComplex complex;
  BChainMap iso;  // 𝐏 → 𝐗, strict and degreewise an isomorphism
};
SemiProjectiveResolution semi_projective_resolution(const BComplex& x);

// Hom_B(𝕏, 𝕐) as strict chain maps ℙ → 𝕐 modulo null-homotopies.
struct BHom {
  BObject src, dst;
  SemiProjective p;
  MapFamily ambient;  // (f^{-1}: P^{-1} → Y^{-1}, f^0: P^0 → Y^0)
  Subgroup chains;
  Quotient q;  // q.group is Hom_B(𝕏, 𝕐)

  const FgGroup& group() const { return q.group; }
  // A representative butterfly 𝕏 → 𝕐 for coordinates in group().
  Butterfly element(const IntVec& coords) const;
  // Throws TransferFailure if f is not a morphism src → dst.
  IntVec coordinates(const Butterfly& f) const;
};
BHom hom_group_b(const BObject& x, const BObject& y);

// 𝔥om_{Ch(B)}: degree k is ⊕_n Hom_B(^n𝕏, ^{n+k}𝕐) with d(h)_n = d h_n − (−1)^k h_{n+1} d.
struct FullHomComplex {
  BComplex src, dst;
  int lo = 0;
  std::vector<std::vector<BHom>> homs;  // [k][n − src.lo]
  std::vector<std::vector<size_t>> off;  // ambient offsets of the summands
  ChainComplex complex;

  int hi() const { return lo + static_cast<int>(homs.size()) - 1; }
  IntVec coordinates(int k, const std::vector<Butterfly>& h) const;
};
FullHomComplex full_hom_complex(const BComplex& x, const BComplex& y);
// The inclusion of strict into full hom complexes, as a chain map.
ChainMap strict_to_full(const StrictHomComplex& s, const FullHomComplex& f);

// 𝔯𝔥om(𝐗, 𝐘) = 𝔥om_{Ch^st(B)}(𝐏, 𝐘) for the semi-projective resolution 𝐏 → 𝐗.
struct RHom {
  SemiProjectiveResolution resolution;
  StrictHomComplex complex;
};
RHom rhom(const BComplex& x, const BComplex& y);
// 𝔯𝔥om(𝐗, 𝐘) → 𝔥om_{Ch(B)}(𝐗, 𝐘): strict maps out of 𝐏 composed with the inverse of 𝐏 → 𝐗.
ChainMap rhom_comparison(const RHom& r, const FullHomComplex& f);

}  // namespace tiltkit
