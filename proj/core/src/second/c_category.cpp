#include "tiltkit/second/c_category.hpp"

#include "tiltkit/errors.hpp"
#include "tiltkit/zmod/linear_system.hpp"

namespace tiltkit {

std::optional<std::string> c_object_defect(const FgGroup& e, const Subgroup& k1, const Subgroup& k2,
                                           const Subgroup& m) {
  if (k1.ambient() != e || k2.ambient() != e || m.ambient() != e) return "K_1, K_2 and M must be subgroups of E";
  if (!k2.contains(k1)) return "K_1 is not contained in K_2";
  if (!intersect(k2, m).group().in_F()) return "K_2 ∩ M is not free";
  if (!quotient(k1 + m).group.in_T()) return "E/(K_1 + M) is not finite";
  return std::nullopt;
}

CObject make_c_object(FgGroup e, Subgroup k1, Subgroup k2, Subgroup m) {
  if (auto why = c_object_defect(e, k1, k2, m)) fail(ErrorKind::NotCObject, *why);
  return CObject{std::move(e), std::move(k1), std::move(k2), std::move(m)};
}

bool operator==(const CObject& a, const CObject& b) {
  return a.e == b.e && a.k1 == b.k1 && a.k2 == b.k2 && a.m == b.m;
}

CMap make_c_map(const CObject& src, const CObject& dst, GroupMap f) {
  if (f.src() != src.e || f.dst() != dst.e) fail(ErrorKind::MismatchedEndpoints, "map is not E → E′");
  if (!dst.k1.contains_image(f * src.k1.inclusion())) fail(ErrorKind::InvalidInput, "map does not carry K_1 into K_1′");
  if (!dst.k2.contains_image(f * src.k2.inclusion())) fail(ErrorKind::InvalidInput, "map does not carry K_2 into K_2′");
  if (!dst.m.contains_image(f * src.m.inclusion())) fail(ErrorKind::InvalidInput, "map does not carry M into M′");
  return CMap{src, dst, std::move(f)};
}

CMap c_identity(const CObject& c) { return CMap{c, c, GroupMap::identity(c.e)}; }

Quotient h_quotient(const CObject& c) {
  return quotient(c.k2.group(), Lattice::span(c.k2.factor(c.k1.inclusion()).lift()));
}

FgGroup h_functor(const CObject& c) { return h_quotient(c).group; }

GroupMap h_functor(const CMap& f) {
  Quotient s = h_quotient(f.src), t = h_quotient(f.dst);
  return s.induce(t.proj * f.dst.k2.factor(f.f * f.src.k2.inclusion()));
}

bool is_s_qis(const CMap& f) { return is_iso(h_functor(f)); }

Butterfly c_to_butterfly(const CObject& c) {
  Quotient em = quotient(c.m), ek = quotient(c.k2);
  BObject x = validate_b_object(em.proj * c.k1.inclusion());
  BObject y = validate_b_object(ek.proj * c.m.inclusion());
  return make_butterfly(x, y, c.e, c.k1.inclusion(), c.m.inclusion(), em.proj, ek.proj);
}

CObject c_from_butterfly(const Butterfly& p) {
  if (!is_mono(p.kappa)) fail(ErrorKind::PreconditionViolated, "κ is not a monomorphism");
  if (!is_epi(p.rho)) fail(ErrorKind::PreconditionViolated, "ρ is not an epimorphism");
  return make_c_object(p.e, image(p.kappa), kernel(p.rho), image(p.iota));
}

HomGroup c_hom_ambient(const CObject& x, const CObject& y) { return HomGroup(x.e, y.e); }

Subgroup c_strict_homs(const CObject& x, const CObject& y) {
  LinearMapSystem sys;
  sys.add_unknown(x.e, y.e);
  sys.add_equation({MapTerm{quotient(y.k1).proj, 0, x.k1.inclusion()}});
  sys.add_equation({MapTerm{quotient(y.k2).proj, 0, x.k2.inclusion()}});
  sys.add_equation({MapTerm{quotient(y.m).proj, 0, x.m.inclusion()}});
  return sys.solve().homogeneous_subgroup(0);
}

QPrime qprime(const FgGroup& a) {
  const MinimalCoords& mc = a.minimal();
  const FgGroup f = FgGroup::free(mc.orders.size());
  GroupMap p(f, a, mc.from_min);
  Subgroup whole = Subgroup::whole(f);
  Subgroup k = kernel(p);
  CObject obj = make_c_object(f, k, whole, whole);
  // H = F/ker p, presented on the generators of K_2 = F
  GroupMap witness = h_quotient(obj).induce(p * whole.inclusion());
  return QPrime{std::move(obj), std::move(p), std::move(witness)};
}

CMap qprime_map(const QPrime& src, const QPrime& dst, const GroupMap& f) {
  if (f.src() != src.cover.dst() || f.dst() != dst.cover.dst())
    fail(ErrorKind::MismatchedEndpoints, "map does not match the covered groups");
  CommutingSolution phi = solve_commuting(src.object.e, dst.object.e, {}, {{dst.cover, f * src.cover}});
  if (!phi.particular) fail(ErrorKind::PreconditionViolated, "map does not lift along the free cover");
  return make_c_map(src.object, dst.object, *phi.particular);
}

CObject q_tilting(const GroupMap& i) {
  if (!i.dst().in_T()) fail(ErrorKind::PreconditionViolated, "target of the embedding is not finite");
  if (!is_mono(i)) fail(ErrorKind::PreconditionViolated, "embedding is not a monomorphism");
  return make_c_object(i.dst(), Subgroup::zero(i.dst()), image(i), Subgroup::zero(i.dst()));
}

}  // namespace tiltkit
