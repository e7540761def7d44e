#include "tiltkit/tiltb/butterfly.hpp"

#include "tiltkit/errors.hpp"

namespace tiltkit {

BObject::BObject() : BObject(unchecked(GroupMap::zero(FgGroup(), FgGroup()))) {}

BObject BObject::unchecked(GroupMap d) {
  Subgroup k = kernel(d);
  Quotient c = cokernel(d);
  return BObject(std::move(d), std::move(k), std::move(c));
}

BObject validate_b_object(const GroupMap& d) {
  BObject x = BObject::unchecked(d);
  if (!x.h_m1().group().in_F()) fail(ErrorKind::NotBObject, "kernel of d is not free: " + x.h_m1().group().str());
  if (!x.h_0().group.in_T()) fail(ErrorKind::NotBObject, "cokernel of d is not finite: " + x.h_0().group.str());
  return x;
}

namespace {

Butterfly build(const BObject& src, const BObject& dst, GroupMap kappa, GroupMap iota, GroupMap sigma, GroupMap rho) {
  FgGroup e = sigma.src();
  return Butterfly{src, dst, std::move(e), std::move(kappa), std::move(iota), std::move(sigma), std::move(rho),
                   std::nullopt};
}

void require_same_endpoints(const Butterfly& p, const Butterfly& q, const char* what) {
  if (p.src != q.src || p.dst != q.dst)
    fail(ErrorKind::MismatchedEndpoints, std::string(what) + ": butterflies have different endpoints");
}

void check(bool ok, const char* msg) {
  if (!ok) fail(ErrorKind::InvalidInput, msg);
}

}  // namespace

void Butterfly::validate() const {
  check(kappa.src() == src.xm1() && kappa.dst() == e, "kappa must map X^{-1} to E");
  check(iota.src() == dst.xm1() && iota.dst() == e, "iota must map Y^{-1} to E");
  check(sigma.src() == e && sigma.dst() == src.x0(), "sigma must map E to X^0");
  check(rho.src() == e && rho.dst() == dst.x0(), "rho must map E to Y^0");
  check((sigma * kappa).equals(src.d()), "sigma after kappa is not d_X");
  check((rho * iota).equals(dst.d()), "rho after iota is not d_Y");
  check((rho * kappa).is_zero(), "rho after kappa is not zero");
  check((sigma * iota).is_zero(), "sigma after iota is not zero");
  check(is_mono(iota), "iota is not injective");
  check(is_epi(sigma), "sigma is not surjective");
  check(image(iota).contains(kernel(sigma)), "NE-SW sequence is not exact at E");
}

Butterfly make_butterfly(BObject src, BObject dst, FgGroup e, GroupMap kappa, GroupMap iota, GroupMap sigma,
                         GroupMap rho) {
  Butterfly p{std::move(src), std::move(dst), std::move(e), std::move(kappa), std::move(iota), std::move(sigma),
              std::move(rho), std::nullopt};
  p.validate();
  return p;
}

Butterfly make_strict(const GroupMap& f_m1, const GroupMap& f_0, const BObject& src, const BObject& dst) {
  if (f_m1.src() != src.xm1() || f_m1.dst() != dst.xm1())
    fail(ErrorKind::MismatchedEndpoints, "f^{-1} must map X^{-1} to Y^{-1}");
  if (f_0.src() != src.x0() || f_0.dst() != dst.x0()) fail(ErrorKind::MismatchedEndpoints, "f^0 must map X^0 to Y^0");
  if (!(dst.d() * f_m1).equals(f_0 * src.d()))
    fail(ErrorKind::NonCommutingSquare, "d_Y f^{-1} differs from f^0 d_X");
  DirectSum s = direct_sum(src.x0(), dst.xm1());
  Butterfly p = build(src, dst, pair(s, src.d(), -f_m1), s.in2, s.pr1, copair(s, f_0, dst.d()));
  p.strict = StrictParts{f_m1, f_0};
  return p;
}

Butterfly identity_b(const BObject& x) {
  return make_strict(GroupMap::identity(x.xm1()), GroupMap::identity(x.x0()), x, x);
}

Butterfly zero_b(const BObject& x, const BObject& y) {
  return make_strict(GroupMap::zero(x.xm1(), y.xm1()), GroupMap::zero(x.x0(), y.x0()), x, y);
}

Butterfly compose(const Butterfly& p, const Butterfly& q) {
  if (p.dst != q.src) fail(ErrorKind::NotComposable, "target of the first butterfly is not the source of the second");
  Pullback pb = pullback(p.rho, q.sigma);
  GroupMap j = pb.sub.factor(pair(pb.sum, p.iota, q.kappa));
  Quotient c = cokernel(j);
  GroupMap kappa = c.proj * pb.sub.factor(pair(pb.sum, p.kappa, GroupMap::zero(p.src.xm1(), q.e)));
  GroupMap iota = c.proj * pb.sub.factor(pair(pb.sum, GroupMap::zero(q.dst.xm1(), p.e), q.iota));
  return build(p.src, q.dst, kappa, iota, c.induce(p.sigma * pb.p1), c.induce(q.rho * pb.p2));
}

Butterfly compose_strict_after(const Butterfly& p, const Butterfly& q) {
  if (!q.strict) fail(ErrorKind::PreconditionViolated, "second butterfly is not strict");
  if (p.dst != q.src) fail(ErrorKind::NotComposable, "target of the first butterfly is not the source of the second");
  const StrictParts& g = *q.strict;
  Pushout po = pushout(p.iota, g.m1);
  GroupMap sigma = po.quot.induce(copair(po.sum, p.sigma, GroupMap::zero(q.dst.xm1(), p.src.x0())));
  GroupMap rho = po.quot.induce(copair(po.sum, g.zero * p.rho, q.dst.d()));
  return build(p.src, q.dst, po.j1 * p.kappa, po.j2, sigma, rho);
}

Butterfly compose_strict_before(const Butterfly& p, const Butterfly& q) {
  if (!p.strict) fail(ErrorKind::PreconditionViolated, "first butterfly is not strict");
  if (p.dst != q.src) fail(ErrorKind::NotComposable, "target of the first butterfly is not the source of the second");
  const StrictParts& f = *p.strict;
  Pullback pb = pullback(f.zero, q.sigma);
  GroupMap kappa = pb.sub.factor(pair(pb.sum, p.src.d(), q.kappa * f.m1));
  GroupMap iota = pb.sub.factor(pair(pb.sum, GroupMap::zero(q.dst.xm1(), p.src.x0()), q.iota));
  return build(p.src, q.dst, kappa, iota, pb.p1, q.rho * pb.p2);
}

Butterfly add(const Butterfly& p, const Butterfly& p2) {
  require_same_endpoints(p, p2, "add");
  Pullback pb = pullback(p.sigma, p2.sigma);
  Quotient c = cokernel(pb.sub.factor(pair(pb.sum, p.iota, -p2.iota)));
  GroupMap kappa = c.proj * pb.sub.factor(pair(pb.sum, p.kappa, p2.kappa));
  GroupMap iota = c.proj * pb.sub.factor(pair(pb.sum, GroupMap::zero(p.dst.xm1(), p.e), p2.iota));
  return build(p.src, p.dst, kappa, iota, c.induce(p.sigma * pb.p1), c.induce(p.rho * pb.p1 + p2.rho * pb.p2));
}

Butterfly negate(const Butterfly& p) { return build(p.src, p.dst, p.kappa, -p.iota, p.sigma, -p.rho); }

Butterfly subtract(const Butterfly& p, const Butterfly& p2) { return add(p, negate(p2)); }

Butterfly scale(const Int& n, const Butterfly& p) {
  if (n.is_zero()) return zero_b(p.src, p.dst);
  if (n.sign() < 0) return negate(scale(-n, p));
  // Double-and-add over the binary expansion of n.
  std::optional<Butterfly> acc;
  Butterfly pow = p;
  Int k = n;
  for (;;) {
    if (!divides(Int(2), k)) acc = acc ? add(*acc, pow) : pow;
    k = floor_div(k, Int(2));
    if (k.is_zero()) break;
    pow = add(pow, pow);
  }
  return *acc;
}

Butterfly flip(const Butterfly& p) {
  return make_butterfly(p.dst, p.src, p.e, p.iota, p.kappa, p.rho, p.sigma);
}

std::optional<GroupMap> butterfly_iso(const Butterfly& p, const Butterfly& p2) {
  require_same_endpoints(p, p2, "butterfly_equal");
  CommutingSolution s =
      solve_commuting(p.e, p2.e, {{p.kappa, p2.kappa}, {p.iota, p2.iota}}, {{p2.sigma, p.sigma}, {p2.rho, p.rho}});
  if (!s.particular) return std::nullopt;
  if (!is_iso(*s.particular))
    fail(ErrorKind::PreconditionViolated, "comparison map between butterflies is not an isomorphism");
  return s.particular;
}

bool butterfly_equal(const Butterfly& p, const Butterfly& p2) { return butterfly_iso(p, p2).has_value(); }

bool is_zero_morphism(const Butterfly& p) { return butterfly_equal(p, zero_b(p.src, p.dst)); }

std::optional<StrictParts> strict_representative(const Butterfly& p) {
  if (p.strict) return p.strict;
  CommutingSolution u = solve_commuting(p.src.x0(), p.e, {}, {{p.sigma, GroupMap::identity(p.src.x0())}});
  if (!u.particular) return std::nullopt;
  GroupMap f0 = p.rho * *u.particular;
  CommutingSolution fm1 =
      solve_commuting(p.src.xm1(), p.dst.xm1(), {}, {{p.iota, *u.particular * p.src.d() - p.kappa}});
  if (!fm1.particular) fail(ErrorKind::PreconditionViolated, "butterfly NE-SW sequence is not exact");
  return StrictParts{*fm1.particular, f0};
}

ButterflyAnalysis analyze(const Butterfly& p) {
  Subgroup ker_kappa = kernel(p.kappa);
  Subgroup ker_rho = kernel(p.rho);
  Quotient h_m1 = quotient(ker_rho.group(), Lattice::span(ker_rho.factor(p.kappa).lift()));
  Quotient h_0 = cokernel(p.rho);
  Subgroup t_part(h_m1.group, torsion_lattice(h_m1.group));
  // A = q^{-1}(T): elements of ker ρ with a nonzero multiple in im κ.
  Lattice im_kappa = Lattice::span(p.kappa.lift()) + p.e.relation_lattice();
  Subgroup a_sub(p.e, ker_rho.lattice().intersect(im_kappa.saturation()));
  return ButterflyAnalysis{std::move(ker_kappa), std::move(ker_rho), std::move(h_m1),
                           std::move(h_0),       std::move(t_part),  std::move(a_sub)};
}

BKernel kernel_b(const Butterfly& p) {
  ButterflyAnalysis a = analyze(p);
  const Subgroup& A = a.a_sub;
  BObject k = validate_b_object(A.factor(p.kappa));
  Butterfly incl = make_strict(GroupMap::identity(p.src.xm1()), p.sigma * A.inclusion(), k, p.src);
  return BKernel{std::move(k), std::move(incl)};
}

BCokernel cokernel_b(const Butterfly& p) {
  ButterflyAnalysis a = analyze(p);
  Quotient q = quotient(a.a_sub);
  BObject c = validate_b_object(q.induce(p.rho));
  Butterfly proj = make_strict(q.proj * p.iota, GroupMap::identity(p.dst.x0()), p.dst, c);
  return BCokernel{std::move(c), std::move(proj)};
}

ImageFactorization image_factorization(const Butterfly& p) {
  ButterflyAnalysis a = analyze(p);
  const Subgroup& A = a.a_sub;
  Quotient q = quotient(A);
  BObject coim = validate_b_object(p.sigma * A.inclusion());
  BObject im = validate_b_object(q.proj * p.iota);
  Butterfly epi = make_strict(A.factor(p.kappa), GroupMap::identity(p.src.x0()), p.src, coim);
  Butterfly iso = build(coim, im, A.inclusion(), p.iota, p.sigma, q.proj);
  Butterfly mono = make_strict(GroupMap::identity(p.dst.xm1()), q.induce(p.rho), im, p.dst);
  return ImageFactorization{std::move(epi), std::move(iso), std::move(mono)};
}

Classification classify_morphism(const Butterfly& p) {
  ButterflyAnalysis a = analyze(p);
  const bool kappa_mono = a.ker_kappa.is_zero();
  const bool rho_epi = a.h_0.group.is_zero();
  const FgGroup& h = a.h_m1.group;
  Classification c;
  c.is_mono = kappa_mono && h.in_F();
  c.is_epi = rho_epi && h.in_T();
  c.is_iso = kappa_mono && rho_epi && h.is_zero();
  if (c.is_iso) c.inverse = flip(p);
  return c;
}

bool exact_at(const GroupMap& f, const GroupMap& g) {
  if (f.dst() != g.src()) fail(ErrorKind::MismatchedEndpoints, "exact_at: maps are not composable");
  return (g * f).is_zero() && image(f).contains(kernel(g));
}

LongExactSequence long_exact_sequence(const Butterfly& p) {
  const BObject& X = p.src;
  const BObject& Y = p.dst;
  ButterflyAnalysis a = analyze(p);
  const GroupMap& incl_x = X.h_m1().inclusion();
  const GroupMap& incl_y = Y.h_m1().inclusion();

  GroupMap m0 = X.h_m1().factor(a.ker_kappa.inclusion());
  // −ι^{-1}∘κ on ker d_X; the sign makes a strict f induce f^{-1}, since κ = (d, −f^{-1}).
  CommutingSolution s1 =
      solve_commuting(X.h_m1().group(), Y.h_m1().group(), {}, {{p.iota * incl_y, -(p.kappa * incl_x)}});
  if (!s1.particular) fail(ErrorKind::ExactnessFailure, "kappa does not carry ker d_X into the image of iota");
  GroupMap m2 = a.h_m1.proj * a.ker_rho.factor(p.iota * incl_y);
  GroupMap m3 = a.h_m1.induce(X.h_0().proj * p.sigma * a.ker_rho.inclusion());
  // ρ∘(any σ-preimage)
  CommutingSolution s4 = solve_commuting(X.h_0().group, Y.h_0().group, {{X.h_0().proj * p.sigma, Y.h_0().proj * p.rho}}, {});
  if (!s4.particular) fail(ErrorKind::ExactnessFailure, "rho does not descend to H^0");
  GroupMap m5 = Y.h_0().induce(a.h_0.proj);

  LongExactSequence les;
  les.groups = {a.h_m2(), X.h_m1().group(), Y.h_m1().group(), a.h_m1.group, X.h_0().group, Y.h_0().group, a.h_0.group};
  les.maps = {m0, *s1.particular, m2, m3, *s4.particular, m5};
  std::array<bool, 7> ok{};
  ok[0] = is_mono(les.maps[0]);
  for (size_t i = 1; i < 6; ++i) ok[i] = exact_at(les.maps[i - 1], les.maps[i]);
  ok[6] = is_epi(les.maps[5]);
  les.exact = true;
  for (int i = 0; i < 7; ++i)
    if (!ok[static_cast<size_t>(i)]) {
      les.exact = false;
      les.first_failure = i;
      break;
    }
  return les;
}

bool cone_sequence_exact(const Butterfly& p) {
  ButterflyAnalysis a = analyze(p);
  const Subgroup& A = a.a_sub;
  BObject k = BObject::unchecked(A.factor(p.kappa));
  Quotient q = quotient(A);
  BObject c = BObject::unchecked(q.induce(p.rho));
  GroupMap alpha = k.h_0().induce(a.h_m1.proj * a.ker_rho.factor(A.inclusion()));
  GroupMap beta = a.h_m1.induce(c.h_m1().factor(q.proj * a.ker_rho.inclusion()));
  return is_mono(alpha) && exact_at(alpha, beta) && is_epi(beta);
}

BDirectSum b_direct_sum(const BObject& x, const BObject& y) {
  DirectSum m1 = direct_sum(x.xm1(), y.xm1());
  DirectSum zero = direct_sum(x.x0(), y.x0());
  BObject s = BObject::unchecked(
      GroupMap::unchecked(m1.group, zero.group, block_diag(x.d().lift(), y.d().lift())));
  Butterfly in1 = make_strict(m1.in1, zero.in1, x, s);
  Butterfly in2 = make_strict(m1.in2, zero.in2, y, s);
  Butterfly pr1 = make_strict(m1.pr1, zero.pr1, s, x);
  Butterfly pr2 = make_strict(m1.pr2, zero.pr2, s, y);
  return BDirectSum{std::move(s), std::move(m1), std::move(zero), std::move(in1), std::move(in2), std::move(pr1),
                    std::move(pr2)};
}

Butterfly butterfly_sum(const Butterfly& p, const Butterfly& q, const BDirectSum& src, const BDirectSum& dst) {
  if (src.pr1.dst != p.src || src.pr2.dst != q.src || dst.pr1.dst != p.dst || dst.pr2.dst != q.dst)
    fail(ErrorKind::MismatchedEndpoints, "butterfly_sum: summands do not match the given direct sums");
  auto blk = [](const FgGroup& s, const FgGroup& d, const GroupMap& f, const GroupMap& g) {
    return GroupMap::unchecked(s, d, block_diag(f.lift(), g.lift()));
  };
  // Two strict summands stay strict; the generic middle would be X^0 ⊕ Y^{-1} ⊕ X′^0 ⊕ Y′^{-1}.
  if (p.strict && q.strict)
    return make_strict(blk(src.m1.group, dst.m1.group, p.strict->m1, q.strict->m1),
                       blk(src.zero.group, dst.zero.group, p.strict->zero, q.strict->zero), src.object, dst.object);
  DirectSum es = direct_sum(p.e, q.e);
  return build(src.object, dst.object, blk(src.m1.group, es.group, p.kappa, q.kappa),
               blk(dst.m1.group, es.group, p.iota, q.iota), blk(es.group, src.zero.group, p.sigma, q.sigma),
               blk(es.group, dst.zero.group, p.rho, q.rho));
}

}  // namespace tiltkit
