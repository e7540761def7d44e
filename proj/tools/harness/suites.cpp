#include "harness/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "tiltkit/errors.hpp"
#include "tiltkit/zmod/reduction.hpp"

namespace tiltkit::harness {

namespace {

using io::json;

// One trial: named inputs (serialized only on failure) and the clauses checked against them.
class Trial {
 public:
  Trial(size_t index, std::vector<SuiteFailure>& out) : index_(index), out_(out) {}

  template <class T>
  void input(const std::string& name, const T& value) {
    inputs_.emplace_back(name, [value] { return io::to_json(value); });
  }

  void check(bool ok, const std::string& clause) {
    if (!ok) record(clause);
  }

  void record(const std::string& clause) {
    json ce = json::object();
    for (const auto& [name, f] : inputs_) {
      try {
        ce[name] = f();
      } catch (const std::exception& e) {
        ce[name] = std::string("<unserializable: ") + e.what() + ">";
      }
    }
    out_.push_back(SuiteFailure{index_, clause, std::move(ce)});
  }

 private:
  size_t index_;
  std::vector<SuiteFailure>& out_;
  std::vector<std::pair<std::string, std::function<json()>>> inputs_;
};

bool eq(const Butterfly& a, const Butterfly& b) { return butterfly_equal(a, b); }

IntVec unit(size_t n, size_t j) {
  IntVec v(n, Int(0));
  v[j] = 1;
  return v;
}

// Some u with f(u) = t in dst, if any.
std::optional<IntVec> preimage(const GroupMap& f, const IntVec& t) {
  IntSolution s = solve_integer(hstack(f.lift(), f.dst().relations()), t);
  if (!s.particular) return std::nullopt;
  return IntVec(s.particular->begin(), s.particular->begin() + static_cast<std::ptrdiff_t>(f.src().ambient_rank()));
}

bool same_group(const FgGroup& a, const FgGroup& b) { return a.canonical() == b.canonical(); }

// H^{-1} and H^0 agree up to isomorphism.
bool same_cohomology(const BObject& a, const BObject& b) {
  return same_group(a.h_m1().group(), b.h_m1().group()) && same_group(a.h_0().group, b.h_0().group);
}

// ---------------------------------------------------------------------------------------------

void torsion_axioms(Gen& g, Trial& t) {
  FgGroup T = g.torsion_group(), F = g.free_group(), G = g.group();
  t.input("torsion", T);
  t.input("free", F);
  t.input("group", G);
  t.check(HomGroup(T, F).group().is_zero(), "Hom(T, F) = 0");
  t.check(Subgroup::generated_by(F, g.matrix(F.ambient_rank(), static_cast<size_t>(g.range(0, 3)), 5)).group().in_F(),
          "subgroups of free groups are free");
  t.check(quotient(g.subgroup(T)).group.in_T(), "quotients of finite groups are finite");
  // every group is an extension of its free quotient by its torsion part
  TorsionDecomposition d = torsion_decompose(G);
  t.check(d.t_part.group().in_T() && d.f_quotient.group.in_F(), "torsion part finite, quotient free");
  // extension closure: for A ⊆ B with quotient C, A, C ∈ 𝒯 ⇒ B ∈ 𝒯 and A, C ∈ ℱ ⇒ B ∈ ℱ
  // B is built as an extension with prescribed end terms to make both cases frequent
  FgGroup A = g.coin() ? g.torsion_group() : g.free_group();
  FgGroup C = g.coin() ? g.torsion_group() : g.free_group();
  const size_t a = A.ambient_rank(), c = C.ambient_rank();
  IntMatrix rel(a + c, A.relations().cols() + C.relations().cols());
  rel.set_block(0, 0, A.relations());
  rel.set_block(a, A.relations().cols(), C.relations());
  rel.set_block(0, A.relations().cols(), g.matrix(a, C.relations().cols(), 3));
  FgGroup B(a + c, rel);
  IntMatrix first(a + c, a);
  first.set_block(0, 0, IntMatrix::identity(a));
  Subgroup sub = Subgroup::generated_by(B, first);
  Quotient q = quotient(sub);
  t.input("extension", B);
  if (sub.group().in_T() && q.group.in_T()) t.check(B.in_T(), "𝒯 is closed under extensions");
  if (sub.group().in_F() && q.group.in_F()) t.check(B.in_F(), "ℱ is closed under extensions");
}

void b_laws(Gen& g, Trial& t) {
  BObject x = g.b_object(), y = g.b_object(), z = g.b_object(), w = g.b_object();
  Butterfly p = g.any_morphism(x, y), p2 = g.any_morphism(x, y);
  Butterfly q = g.any_morphism(y, z), q2 = g.any_morphism(y, z);
  Butterfly r = g.any_morphism(z, w);
  t.input("p", p);
  t.input("p2", p2);
  t.input("q", q);
  t.input("q2", q2);
  t.input("r", r);
  t.check(eq(compose(compose(p, q), r), compose(p, compose(q, r))), "composition is associative");
  t.check(eq(compose(identity_b(x), p), p), "left identity");
  t.check(eq(compose(p, identity_b(y)), p), "right identity");
  t.check(eq(add(p, p2), add(p2, p)), "addition is commutative");
  t.check(eq(add(add(p, p2), p), add(p, add(p2, p))), "addition is associative");
  t.check(eq(add(p, zero_b(x, y)), p), "zero is neutral");
  t.check(is_zero_morphism(add(p, negate(p))), "negation is an additive inverse");
  t.check(eq(scale(2, p), add(p, p)), "scaling by 2 is doubling");
  t.check(eq(compose(add(p, p2), q), add(compose(p, q), compose(p2, q))), "composition is additive on the left");
  t.check(eq(compose(p, add(q, q2)), add(compose(p, q), compose(p, q2))), "composition is additive on the right");
}

void kernel_cokernel(Gen& g, Trial& t) {
  BObject x = g.b_object(), y = g.b_object(), w = g.b_object();
  Butterfly p = g.any_morphism(x, y);
  t.input("p", p);
  t.input("test_object", w);

  BKernel k = kernel_b(p);
  t.check(is_zero_morphism(compose(k.inclusion, p)), "kernel inclusion composes to zero");
  t.check(classify_morphism(k.inclusion).is_mono, "kernel inclusion is mono");
  {
    BHom wx = hom_group_b(w, x), wy = hom_group_b(w, y), wk = hom_group_b(w, k.object);
    GroupMap post_p = post_compose(wx, wy, p), post_i = post_compose(wk, wx, k.inclusion);
    t.check(image(post_i) == kernel(post_p), "Hom(W, ker p) → Hom(W, X) has image the maps killed by p");
    t.check(is_mono(post_i), "factorizations through the kernel are unique");
    for (int s = 0; s < 3; ++s) {
      Butterfly f = wx.element(g.kernel_element(post_p));
      auto u = preimage(post_i, wx.coordinates(f));
      t.check(u && eq(compose(wk.element(*u), k.inclusion), f), "test morphism factors through the kernel");
    }
  }

  BCokernel c = cokernel_b(p);
  t.check(is_zero_morphism(compose(p, c.projection)), "projection to the cokernel kills p");
  t.check(classify_morphism(c.projection).is_epi, "cokernel projection is epi");
  {
    BHom yw = hom_group_b(y, w), xw = hom_group_b(x, w), cw = hom_group_b(c.object, w);
    GroupMap pre_p = pre_compose(yw, xw, p), pre_q = pre_compose(cw, yw, c.projection);
    t.check(image(pre_q) == kernel(pre_p), "Hom(coker p, W) → Hom(Y, W) has image the maps killing p");
    t.check(is_mono(pre_q), "factorizations through the cokernel are unique");
    for (int s = 0; s < 3; ++s) {
      Butterfly f = yw.element(g.kernel_element(pre_p));
      auto u = preimage(pre_q, yw.coordinates(f));
      t.check(u && eq(compose(c.projection, cw.element(*u)), f), "test morphism factors through the cokernel");
    }
  }

  ImageFactorization im = image_factorization(p);
  t.check(eq(compose(compose(im.epi, im.iso), im.mono), p), "epi–mono factorization recomposes to p");
  t.check(classify_morphism(im.epi).is_epi, "first factor is epi");
  t.check(classify_morphism(im.mono).is_mono, "last factor is mono");
}

void classify_oracle(Gen& g, Trial& t) {
  BObject x = g.b_object();
  BObject y;
  Butterfly p;
  const long long mode = g.range(0, 3);
  if (mode == 0) {
    // an isomorphism onto the middle object of a roof
    Roof rf = roof(g.any_morphism(x, g.b_object()));
    p = flip(rf.s);
    y = p.dst;
  } else if (mode == 1) {
    y = x;
    p = g.any_morphism(x, x);
  } else {
    y = g.b_object();
    p = g.any_morphism(x, y);
  }
  t.input("p", p);
  Classification c = classify_morphism(p);
  t.check(c.is_mono == kernel_b(p).object.is_zero(), "mono ⇔ zero kernel");
  t.check(c.is_epi == cokernel_b(p).object.is_zero(), "epi ⇔ zero cokernel");
  t.check(c.is_iso == (c.is_mono && c.is_epi), "iso ⇔ mono and epi");

  // two-sided inverses, searched for in Hom_B(Y, X)
  BHom yx = hom_group_b(y, x), xx = hom_group_b(x, x), yy = hom_group_b(y, y);
  GroupMap left = pre_compose(yx, xx, p);    // q ↦ q∘p
  GroupMap right = post_compose(yx, yy, p);  // q ↦ p∘q
  const bool has_left = preimage(left, xx.coordinates(identity_b(x))).has_value();
  const bool has_right = preimage(right, yy.coordinates(identity_b(y))).has_value();
  t.check(c.is_iso == (has_left && has_right), "iso ⇔ a two-sided inverse exists");
  if (c.is_iso) {
    t.check(c.inverse.has_value(), "isomorphisms come with an inverse");
    if (c.inverse) {
      t.check(eq(compose(p, *c.inverse), identity_b(x)), "inverse∘p = id");
      t.check(eq(compose(*c.inverse, p), identity_b(y)), "p∘inverse = id");
    }
  }
}

void long_exact(Gen& g, Trial& t) {
  BObject x = g.b_object(), y = g.b_object();
  Butterfly p = g.any_morphism(x, y);
  t.input("p", p);
  LongExactSequence les = long_exact_sequence(p);
  t.check(les.exact, "seven-term sequence is exact");
  for (size_t i = 0; i + 1 < 6; ++i) t.check((les.maps[i + 1] * les.maps[i]).is_zero(), "consecutive maps compose to zero");
  // independent of the exactness test: ranks alternate to zero, and so do orders of finite terms
  long long rank = 0;
  bool finite = true;
  Int num(1), den(1);
  for (size_t i = 0; i < 7; ++i) {
    const CanonicalForm& c = les.groups[i].canonical();
    rank += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(c.free_rank);
    finite = finite && c.in_T();
    for (const auto& d : c.torsion) (i % 2 == 0 ? num : den) *= d;
  }
  t.check(rank == 0, "alternating sum of ranks vanishes");
  if (finite) t.check(num == den, "alternating product of orders is 1");

  ChainComplex c = g.complex(static_cast<int>(g.range(-1, 1)), static_cast<size_t>(g.range(1, 4)));
  t.input("complex", c);
  HhFunctor h = hh_functor(c);
  for (int n = h.lo + 1; n <= h.hi(); ++n) t.check(cohomology_ses_exact(h, n), "H^n sequence is short exact");
}

void tot_roundtrip(Gen& g, Trial& t) {
  DecComplex d = g.compatible_complex(g.config().max_complex_length);
  t.input("dec_complex", d);
  t.check(tot(g_inverse(d)) == d, "Tot∘G^{-1} is the identity");

  DecMap m = g.compatible_map(g.config().max_complex_length);
  t.input("dec_map", m);
  BChainMap f = g_map(m);
  t.check(tot_map(f).map.equals(m.map), "Tot(G(f)) = f");
  BChainMap cx = canonical_iso(f.src), cy = canonical_iso(f.dst);
  BChainMap gt = g_map(tot_map(f));
  for (int n = std::min(f.src.lo(), f.dst.lo()); n <= std::max(f.src.hi(), f.dst.hi()); ++n) {
    t.check(classify_morphism(cx.at(n)).is_iso, "canonical G∘Tot isomorphism is an iso");
    t.check(eq(compose(f.at(n), cy.at(n)), compose(cx.at(n), gt.at(n))), "canonical isomorphism is natural");
  }
  t.check(cx.strict, "canonical isomorphism is strict");

  DecMap m2 = g.dec_map(m.src, m.dst);
  DecMap sum{m.src, m.dst, m.map + m2.map};
  BChainMap fs = g_map(sum), f1 = g_map(m), f2 = g_map(m2);
  for (int n = fs.lo; n <= fs.hi(); ++n) t.check(eq(fs.at(n), add(f1.at(n), f2.at(n))), "G is additive");
  t.check(tot_map(fs).map.equals(tot_map(f1).map + tot_map(f2).map), "Tot is additive");

  // links: exist exactly for zero composites, and are unique
  BObject x = g.b_object(), y = g.b_object(), z = g.b_object();
  Butterfly p = g.any_morphism(x, y), q;
  if (g.coin()) {
    BHom yz = hom_group_b(y, z), xz = hom_group_b(x, z);
    q = yz.element(g.kernel_element(pre_compose(yz, xz, p)));
  } else {
    q = g.any_morphism(y, z);
  }
  t.input("p", p);
  t.input("q", q);
  try {
    t.check(link(p, q).has_value() == is_zero_morphism(compose(p, q)), "a link exists ⇔ the composite is zero");
  } catch (const TiltError& e) {
    t.record(std::string("link is unique: ") + e.what());
  }

  BComplex b = g.b_complex(g.config().max_complex_length);
  t.input("b_complex", b);
  for (int n = b.lo() - 1; n <= b.hi(); ++n) t.check((b.link(n + 1) * b.link(n)).is_zero(), "δ² = 0");
}

void cohisom(Gen& g, Trial& t) {
  BComplex x = g.b_complex(g.config().max_complex_length);
  t.input("b_complex", x);
  DecComplex d = tot(x);
  DecCohomology dc = dec_cohomology(d);
  for (int n = dc.lo; n <= dc.hi(); ++n) {
    const bool inside = n >= x.lo() && n <= x.hi();
    const FgGroup hm1 = inside ? x.object(n).h_m1().group() : FgGroup();
    const FgGroup h0 = inside ? x.object(n).h_0().group : FgGroup();
    t.check(same_group(dc.m1(n).group(), hm1), "H^{-1,n}(Tot X) ≅ H^{-1}(X^n)");
    t.check(same_group(dc.zero(n).group, h0), "H^{0,n}(Tot X) ≅ H^0(X^n)");
  }
  HhFunctor hh = hh_functor(d.complex());
  BCohomology bc = b_complex_cohomology(x);
  for (int n = hh.lo; n <= hh.hi(); ++n) {
    const bool inside = n >= bc.lo && n <= bc.hi();
    t.check(inside ? same_cohomology(hh.hh(n), bc.at(n)) : hh.hh(n).is_zero(), "ℍ^n(Tot X) ≅ ℍ^n(X)");
  }

  DecMap m = g.compatible_map(g.config().max_complex_length);
  BChainMap f = g_map(m);
  t.input("b_chain_map", f);
  DecMap tf = tot_map(f);
  t.check(is_b_quasi_iso(f) == is_quasi_iso(tf.map), "Tot preserves and reflects quasi-isomorphisms");
  bool degreewise = true;
  for (int n = std::min(f.src.lo(), f.dst.lo()); n <= std::max(f.src.hi(), f.dst.hi()); ++n)
    degreewise = degreewise && classify_morphism(f.at(n)).is_iso;
  t.check(degreewise == classify_map(tf).is_sis, "Tot preserves and reflects degreewise isomorphisms");
}

void cohofcoh(Gen& g, Trial& t) {
  DecComplex d = g.arbitrary_complex(g.config().max_complex_length);
  t.input("dec_complex", d);
  t.check(loes_witness(d).verdict, "E/𝓗^{-1} → 𝓗^0[-1] is a quasi-isomorphism");
  DecMap m = g.arbitrary_map(g.config().max_complex_length);
  t.input("dec_map", m);
  MapClass c = classify_map(m);
  t.check(!c.is_sis || c.is_qis, "strict-iso class maps are quasi-isomorphisms");
}

void enrich(Gen& g, Trial& t) {
  const size_t len = g.config().max_complex_length;
  DecComplex x = g.compatible_complex(len), y = g.compatible_complex(len);
  t.input("src", x);
  t.input("dst", y);
  t.check(enrich_check(hom_complex_dec(x, y)), "𝓜^k ∩ d^{-1}𝓜^{k+1} = 0");
}

void dgeq(Gen& g, Trial& t) {
  const size_t len = g.config().max_complex_length;
  DecComplex x = g.compatible_complex(len), y = g.compatible_complex(len);
  t.input("src", x);
  t.input("dst", y);
  DecoratedHomComplex h = hom_complex_dec(x, y);
  StrictHomComplex s = strict_hom_complex(g_inverse(x), g_inverse(y));
  DgQuotient q = dg_quotient(h);
  for (const auto& e : dg_equivalence(h, s)) {
    t.check(e.surjective, "𝔊 is onto in degree " + std::to_string(e.k));
    t.check(e.kernel_matches, "ker 𝔊 = 𝓜 + d𝓜 in degree " + std::to_string(e.k));
    t.check(e.commutes, "𝔊 commutes with d in degree " + std::to_string(e.k));
    const bool in_h = !q.q.empty() && e.k >= q.lo && e.k < q.lo + static_cast<int>(q.q.size());
    const bool iso = in_h ? is_iso(q.q[static_cast<size_t>(e.k - q.lo)].induce(e.map)) : e.map.dst().is_zero();
    t.check(iso, "𝔥om/(𝓜 + d𝓜) ≅ strict hom in degree " + std::to_string(e.k));
  }

  // strict and full homs out of a semi-projective complex
  BComplex a = semi_projective_resolution(g.b_complex(len)).complex;
  BComplex b = g.b_complex(len);
  t.input("semi_projective_src", a);
  t.input("b_dst", b);
  ChainMap incl = strict_to_full(strict_hom_complex(a, b), full_hom_complex(a, b));
  for (int k = incl.lo(); k <= incl.hi(); ++k) t.check(is_iso(incl.at(k)), "strict ↪ full is an isomorphism");
}

void cotilting_cover(Gen& g, Trial& t) {
  DecComplex d = g.compatible_complex(g.config().max_complex_length);
  t.input("dec_complex", d);
  FreeCover c = free_cover_complex(d);
  for (int n = c.cover.lo(); n <= c.cover.hi(); ++n) {
    t.check(c.cover.term(n).in_F(), "cover terms are free");
    t.check(is_epi(c.map.at(n)), "cover is degreewise onto");
  }
  t.check(is_quasi_iso(c.map.map), "cover is a quasi-isomorphism");
  t.check(is_compatible(c.cover), "pulled-back decoration is compatible");
}

void hrs2(Gen& g, Trial& t) {
  FgGroup a = g.group(), b = g.group(), c = g.group();
  t.input("a", a);
  QPrime qa = qprime(a), qb = qprime(b), qc = qprime(c);
  t.check(is_iso(qa.witness) && qa.witness.dst() == a, "H(Q′A) ≅ A through the witness");
  t.check(same_group(h_functor(qa.object), a), "H(Q′A) has the invariants of A");
  GroupMap f = g.map(a, b), h = g.map(b, c);
  t.input("f", f);
  t.input("g", h);
  CMap qf = qprime_map(qa, qb, f), qh = qprime_map(qb, qc, h);
  t.check((qb.witness * h_functor(qf)).equals(f * qa.witness), "the witness is natural");
  t.check(h_functor(qprime_map(qa, qc, h * f)).equals(h_functor(qh) * h_functor(qf)), "H∘Q′ is functorial");
}

// ---------------------------------------------------------------------------------------------

FgGroup Z() { return FgGroup::free(1); }

GroupMap times(long long k) { return GroupMap(Z(), Z(), IntMatrix{{k}}); }

void worked_examples(Gen&, Trial& t) {
  SmithForm s = smith(IntMatrix{{2, 4}, {6, 8}});
  t.check(s.diag == IntVec{Int(2), Int(4)}, "SNF of [[2,4],[6,8]] is diag(2,4)");

  BObject two = validate_b_object(times(2)), four = validate_b_object(times(4));
  Butterfly f24 = make_strict(times(1), times(2), two, four);
  BCokernel c = cokernel_b(f24);
  const BObject& o = c.object;
  t.check(same_group(o.xm1(), Z()) && same_group(o.x0(), Z()) && o.h_m1().group().is_zero() &&
              o.h_0().group.canonical().str() == "Z/2",
          "cokernel of f24 is [Z →×2 Z]");
  t.check(kernel_b(f24).object.is_zero(), "kernel of f24 is zero");

  t.check(HomGroup(FgGroup::cyclic(4), FgGroup::cyclic(6)).group().canonical().str() == "Z/2", "Hom(Z/4, Z/6) = Z/2");

  DecComplex d1(ChainComplex(0, {Z(), Z()}, {times(2)}), {Subgroup::whole(Z()), Subgroup::zero(Z())});
  DecCohomology h = dec_cohomology(d1);
  bool d1_ok = true;
  for (int n = h.lo; n <= h.hi(); ++n) {
    d1_ok = d1_ok && h.m1(n).group().is_zero();
    d1_ok = d1_ok && h.zero(n).group.canonical().str() == (n == 0 ? "Z/2" : "0");
  }
  t.check(d1_ok, "D1: H^{0,0} = Z/2 and every other decorated cohomology vanishes");
  t.check(is_compatible(d1), "D1 is compatible");

  QPrime q = qprime(FgGroup::cyclic(2));
  t.check(q.object == make_c_object(Z(), Subgroup::generated_by(Z(), IntMatrix{{2}}), Subgroup::whole(Z()),
                                    Subgroup::whole(Z())),
          "Q′(Z/2) = [2Z ⊆ Z ⊆ Z ⊇ Z]");

  SemiProjective sp = semi_projective_replace(validate_b_object(GroupMap::zero(Z(), FgGroup::cyclic(2))));
  t.check(sp.object.d().lift() == IntMatrix{{2, 0}} && sp.object.xm1().is_free_presentation() &&
              sp.object.x0().is_free_presentation(),
          "semi-projective replacement of [Z →0 Z/2] is [Z² →(2 0) Z]");
  t.check(classify_morphism(sp.iso).is_iso, "the replacement map is an isomorphism");

  LongExactSequence les = long_exact_sequence(f24);
  std::string seq;
  for (const auto& grp : les.groups) seq += grp.canonical().str() + "→";
  t.check(les.exact && seq + "0" == "0→0→0→0→Z/2→Z/4→Z/2→0", "f24 long exact sequence");
}

using SuiteFn = void (*)(Gen&, Trial&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"torsion-axioms", torsion_axioms}, {"b-laws", b_laws},
      {"kernel-cokernel", kernel_cokernel}, {"classify-oracle", classify_oracle},
      {"long-exact", long_exact},         {"tot-roundtrip", tot_roundtrip},
      {"cohisom", cohisom},               {"cohofcoh", cohofcoh},
      {"enrich", enrich},                 {"dgeq", dgeq},
      {"cotilting-cover", cotilting_cover}, {"hrs2", hrs2},
      {"worked-examples", worked_examples},
  };
  return r;
}

}  // namespace

GroupMap post_compose(const BHom& wx, const BHom& wy, const Butterfly& p) {
  const size_t n = wx.group().ambient_rank();
  std::vector<IntVec> cols;
  for (size_t j = 0; j < n; ++j) cols.push_back(wy.coordinates(compose(wx.element(unit(n, j)), p)));
  return GroupMap(wx.group(), wy.group(), IntMatrix::from_columns(wy.group().ambient_rank(), cols));
}

GroupMap pre_compose(const BHom& yw, const BHom& xw, const Butterfly& p) {
  const size_t n = yw.group().ambient_rank();
  std::vector<IntVec> cols;
  for (size_t j = 0; j < n; ++j) cols.push_back(xw.coordinates(compose(p, yw.element(unit(n, j)))));
  return GroupMap(yw.group(), xw.group(), IntMatrix::from_columns(xw.group().ambient_rank(), cols));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const GeneratorConfig& cfg) {
  cfg.validate();
  auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == name; });
  if (it == registry().end()) fail(ErrorKind::UnknownSuite, name);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.suite = name;
  r.trials = name == "worked-examples" ? 1 : cfg.trials;
  for (size_t i = 0; i < r.trials; ++i) {
    Gen g(cfg, name, i);
    Trial t(i, r.failures);
    try {
      it->second(g, t);
    } catch (const std::exception& e) {
      t.record(std::string("unexpected error: ") + e.what());
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

io::json to_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"trial", f.trial}, {"clause", f.clause}, {"counterexample", f.counterexample}});
  return {{"suite", r.suite},
          {"trials", r.trials},
          {"passed", r.passed()},
          {"failures", failures},
          {"duration_seconds", r.seconds}};
}

}  // namespace tiltkit::harness
