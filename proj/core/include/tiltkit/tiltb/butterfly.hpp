#pragma once

#include <array>
#include <optional>
#include <string>

#include "tiltkit/zmod/linear_system.hpp"
#include "tiltkit/zmod/ops.hpp"

namespace tiltkit {

// [X^{-1} →d X^0] with free kernel and finite cokernel.
class BObject {
 public:
  BObject();  // [0 → 0]
  static BObject unchecked(GroupMap d);

  const GroupMap& d() const { return d_; }
  const FgGroup& xm1() const { return d_.src(); }
  const FgGroup& x0() const { return d_.dst(); }
  const Subgroup& h_m1() const { return h_m1_; }
  const Quotient& h_0() const { return h_0_; }

  bool is_zero() const { return h_m1_.group().is_zero() && h_0_.group.is_zero(); }
  // Membership in the tilted pair: 𝒯′ = ℱ[1] (H^0 = 0) and ℱ′ = 𝒯 (H^{-1} = 0).
  bool in_T_prime() const { return h_0_.group.is_zero(); }
  bool in_F_prime() const { return h_m1_.group().is_zero(); }
  bool is_semi_projective() const { return x0().is_free_presentation(); }

  friend bool operator==(const BObject& a, const BObject& b) { return a.d_.equals(b.d_); }
  friend bool operator!=(const BObject& a, const BObject& b) { return !(a == b); }

 private:
  BObject(GroupMap d, Subgroup h_m1, Quotient h_0)
      : d_(std::move(d)), h_m1_(std::move(h_m1)), h_0_(std::move(h_0)) {}

  GroupMap d_;
  Subgroup h_m1_;
  Quotient h_0_;
};

// Throws NotBObject naming the failed constraint.
BObject validate_b_object(const GroupMap& d);

struct StrictParts {
  GroupMap m1, zero;  // f^{-1}, f^0
};

// X → Y presented by X^{-1} →κ E ←ι Y^{-1}, E →σ X^0, E →ρ Y^0.
struct Butterfly {
  BObject src, dst;
  FgGroup e;
  GroupMap kappa, iota, sigma, rho;
  std::optional<StrictParts> strict;  // set when built from a chain map

  // Throws InvalidInput describing the first violated butterfly axiom.
  void validate() const;
};

Butterfly make_butterfly(BObject src, BObject dst, FgGroup e, GroupMap kappa, GroupMap iota, GroupMap sigma,
                         GroupMap rho);
Butterfly make_strict(const GroupMap& f_m1, const GroupMap& f_0, const BObject& src, const BObject& dst);
Butterfly identity_b(const BObject& x);
Butterfly zero_b(const BObject& x, const BObject& y);

// p: X → Y then q: Y → Z.
Butterfly compose(const Butterfly& p, const Butterfly& q);
// Same composite through the simplified middles available when one side is strict:
// a push-forward of E along g^{-1} (q strict) or a pull-back of F along f^0 (p strict).
Butterfly compose_strict_after(const Butterfly& p, const Butterfly& q);
Butterfly compose_strict_before(const Butterfly& p, const Butterfly& q);

Butterfly add(const Butterfly& p, const Butterfly& p2);
Butterfly negate(const Butterfly& p);
Butterfly subtract(const Butterfly& p, const Butterfly& p2);
Butterfly scale(const Int& n, const Butterfly& p);
// Swap the roles of (κ, σ) and (ι, ρ); the inverse of an isomorphism.
Butterfly flip(const Butterfly& p);

// The isomorphism φ: E → E′ commuting with all four arrows, if one exists.
std::optional<GroupMap> butterfly_iso(const Butterfly& p, const Butterfly& p2);
bool butterfly_equal(const Butterfly& p, const Butterfly& p2);
bool is_zero_morphism(const Butterfly& p);
// A chain map representing p, when its NE-SW sequence splits.
std::optional<StrictParts> strict_representative(const Butterfly& p);

struct ButterflyAnalysis {
  Subgroup ker_kappa;  // H^{-2} of the cone, inside X^{-1}
  Subgroup ker_rho;    // inside E
  Quotient h_m1;       // ker ρ / im κ
  Quotient h_0;        // Y^0 / im ρ
  Subgroup t_part;     // torsion of h_m1
  Subgroup a_sub;      // A ⊆ E
  const FgGroup& h_m2() const { return ker_kappa.group(); }
};
ButterflyAnalysis analyze(const Butterfly& p);

struct BKernel {
  BObject object;
  Butterfly inclusion;
};
BKernel kernel_b(const Butterfly& p);

struct BCokernel {
  BObject object;
  Butterfly projection;
};
BCokernel cokernel_b(const Butterfly& p);

struct ImageFactorization {
  Butterfly epi, iso, mono;
};
ImageFactorization image_factorization(const Butterfly& p);

struct Classification {
  bool is_mono = false, is_epi = false, is_iso = false;
  std::optional<Butterfly> inverse;
};
Classification classify_morphism(const Butterfly& p);

struct LongExactSequence {
  std::array<FgGroup, 7> groups;
  std::array<GroupMap, 6> maps;
  bool exact = false;
  int first_failure = -1;  // position of the first non-exact spot
};
LongExactSequence long_exact_sequence(const Butterfly& p);

// Exactness of 0 → H^0(ker P) → h_m1 → H^{-1}(coker P) → 0.
bool cone_sequence_exact(const Butterfly& p);

struct BDirectSum {
  BObject object;
  DirectSum m1, zero;
  Butterfly in1, in2, pr1, pr2;
};
BDirectSum b_direct_sum(const BObject& x, const BObject& y);
// p ⊕ q between the given direct sums.
Butterfly butterfly_sum(const Butterfly& p, const Butterfly& q, const BDirectSum& src, const BDirectSum& dst);

// Exactness of A →f B →g C at B.
bool exact_at(const GroupMap& f, const GroupMap& g);

}  // namespace tiltkit
