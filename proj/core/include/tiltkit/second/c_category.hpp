#pragma once

#include <optional>
#include <string>

#include "tiltkit/tiltb/butterfly.hpp"
#include "tiltkit/zmod/ops.hpp"

namespace tiltkit {

// [K_1 ⊆ K_2 ⊆ E ⊇ M] with K_2 ∩ M ∈ ℱ and E/(K_1 + M) ∈ 𝒯.
struct CObject {
  FgGroup e;
  Subgroup k1, k2, m;
};

// The first failed condition, or nullopt for a valid object.
std::optional<std::string> c_object_defect(const FgGroup& e, const Subgroup& k1, const Subgroup& k2, const Subgroup& m);
// Throws NotCObject naming the failed condition.
CObject make_c_object(FgGroup e, Subgroup k1, Subgroup k2, Subgroup m);
bool operator==(const CObject& a, const CObject& b);

// A strict morphism: f: E → E′ with f(K_1) ⊆ K_1′, f(K_2) ⊆ K_2′ and f(M) ⊆ M′.
struct CMap {
  CObject src, dst;
  GroupMap f;
};
// Throws InvalidInput naming the subobject that is not respected.
CMap make_c_map(const CObject& src, const CObject& dst, GroupMap f);
CMap c_identity(const CObject& c);

// H = K_2/K_1, as a quotient of the group K_2.
Quotient h_quotient(const CObject& c);
FgGroup h_functor(const CObject& c);
GroupMap h_functor(const CMap& f);
// 𝒮_qis: H(f) is an isomorphism.
bool is_s_qis(const CMap& f);

// The butterfly reading: K_1 = im κ, K_2 = ker ρ, M = im ι. The butterfly built from a
// 4-tuple is [K_1 → E/M] → [M → E/K_2] with inclusions for κ, ι and projections for σ, ρ.
Butterfly c_to_butterfly(const CObject& c);
// Needs κ mono and ρ epi (PreconditionViolated), then validates (NotCObject).
CObject c_from_butterfly(const Butterfly& p);

// Strict morphisms between two 4-tuples, as a subgroup of Hom(E, E′).
Subgroup c_strict_homs(const CObject& x, const CObject& y);
HomGroup c_hom_ambient(const CObject& x, const CObject& y);

// Q′(A) = [ker p ⊆ F ⊆ F ⊇ F] for the free cover p: F ↠ A of the canonical presentation,
// with the witness H(Q′A) = F/ker p → A induced by p.
struct QPrime {
  CObject object;
  GroupMap cover;    // p: F → A
  GroupMap witness;  // H(Q′A) → A, an isomorphism
};
QPrime qprime(const FgGroup& a);
// Q′ on f: A → A′ via a lift φ: F → F′ of f along the covers.
CMap qprime_map(const QPrime& src, const QPrime& dst, const GroupMap& f);

// The tilting-case Q(A) = [0 ⊆ i(A) ⊆ T ⊇ 0] for a mono i: A ↪ T with T ∈ 𝒯.
// Throws PreconditionViolated otherwise; on this backend only torsion A qualify.
CObject q_tilting(const GroupMap& i);

}  // namespace tiltkit
