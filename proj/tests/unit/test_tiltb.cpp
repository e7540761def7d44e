#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tiltkit/errors.hpp"
#include "tiltkit/tiltb/butterfly.hpp"

using namespace tiltkit;
using tiltkit::testing::Rand;

namespace {

FgGroup Z() { return FgGroup::free(1); }

BObject times(long long k) { return validate_b_object(GroupMap(Z(), Z(), IntMatrix{{k}})); }

GroupMap scalar(const FgGroup& a, const FgGroup& b, long long k) { return GroupMap(a, b, IntMatrix{{k}}); }

// [Z →×2 Z] → [Z →×4 Z] with (f^{-1}, f^0) = (1, 2)
Butterfly f24() { return make_strict(scalar(Z(), Z(), 1), scalar(Z(), Z(), 2), times(2), times(4)); }

// Induced maps on H^{-1} and H^0, read off the long exact sequence.
std::pair<GroupMap, GroupMap> induced(const Butterfly& p) {
  LongExactSequence les = long_exact_sequence(p);
  return {les.maps[1], les.maps[4]};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const TiltError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(BObject, ValidateExamples) {
  BObject x = times(2);
  EXPECT_TRUE(x.h_m1().group().is_zero());
  EXPECT_EQ(x.h_0().group.canonical().str(), "Z/2");
  EXPECT_TRUE(x.in_T_prime() == false && x.in_F_prime());

  EXPECT_EQ(kind_of([] { validate_b_object(GroupMap::zero(FgGroup(), Z())); }), ErrorKind::NotBObject);

  BObject y = validate_b_object(GroupMap::zero(Z(), FgGroup::cyclic(2)));
  EXPECT_EQ(y.h_m1().group().canonical().str(), "Z");
  EXPECT_EQ(y.h_0().group.canonical().str(), "Z/2");

  EXPECT_EQ(kind_of([] { validate_b_object(GroupMap::zero(FgGroup::cyclic(3), FgGroup())); }), ErrorKind::NotBObject);
  EXPECT_TRUE(BObject().is_zero());
}

TEST(Butterfly, StrictIdentityShape) {
  Butterfly id = identity_b(times(2));
  EXPECT_NO_THROW(id.validate());
  EXPECT_EQ(id.kappa.lift(), (IntMatrix{{2}, {-1}}));
  EXPECT_EQ(id.rho.lift(), (IntMatrix{{1, 2}}));
  EXPECT_EQ(id.iota.lift(), (IntMatrix{{0}, {1}}));
  EXPECT_EQ(id.sigma.lift(), (IntMatrix{{1, 0}}));
}

TEST(Butterfly, StrictZeroShape) {
  Butterfly z = zero_b(times(2), times(4));
  EXPECT_EQ(z.kappa.lift(), (IntMatrix{{2}, {0}}));
  EXPECT_EQ(z.rho.lift(), (IntMatrix{{0, 4}}));
  EXPECT_TRUE(is_zero_morphism(z));
}

TEST(Butterfly, StrictRejectsNonCommutingSquare) {
  Butterfly p = f24();
  EXPECT_NO_THROW(p.validate());
  EXPECT_EQ(kind_of([] { make_strict(scalar(Z(), Z(), 1), scalar(Z(), Z(), 1), times(2), times(4)); }),
            ErrorKind::NonCommutingSquare);
}

TEST(Butterfly, ValidateRejectsBrokenAxioms) {
  Butterfly p = identity_b(times(2));
  EXPECT_EQ(kind_of([&] { make_butterfly(p.src, p.dst, p.e, p.kappa, p.iota, p.sigma, -p.rho); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { flip(f24()); }), ErrorKind::InvalidInput);
}

TEST(Butterfly, NonStrictIso) {
  // [0 → Z/2] ≅ [Z →×2 Z] through E = Z; the NE-SW sequence Z →×2 Z → Z/2 does not split.
  BObject x = validate_b_object(GroupMap::zero(FgGroup(), FgGroup::cyclic(2)));
  BObject y = times(2);
  Butterfly p = make_butterfly(x, y, Z(), GroupMap::zero(FgGroup(), Z()), scalar(Z(), Z(), 2),
                               scalar(Z(), FgGroup::cyclic(2), 1), scalar(Z(), Z(), 1));
  EXPECT_FALSE(strict_representative(p).has_value());
  Classification c = classify_morphism(p);
  EXPECT_TRUE(c.is_iso);
  ASSERT_TRUE(c.inverse);
  EXPECT_TRUE(butterfly_equal(compose(p, *c.inverse), identity_b(x)));
  EXPECT_TRUE(butterfly_equal(compose(*c.inverse, p), identity_b(y)));
}

TEST(Butterfly, ComposeRequiresMatchingObjects) {
  EXPECT_EQ(kind_of([] { compose(f24(), f24()); }), ErrorKind::NotComposable);
  EXPECT_EQ(kind_of([] { add(f24(), identity_b(times(2))); }), ErrorKind::MismatchedEndpoints);
}

TEST(Butterfly, EqualityExamples) {
  BObject x = times(2);
  Butterfly p = f24();
  EXPECT_TRUE(butterfly_equal(p, p));
  EXPECT_TRUE(butterfly_iso(p, p)->equals(GroupMap::identity(p.e)));

  // On [Z →×2 Z]: (3,3) − (1,1) = (s d, d s) with s = 1, while (0,0) differs on H^0 = Z/2.
  Butterfly a = make_strict(scalar(Z(), Z(), 1), scalar(Z(), Z(), 1), x, x);
  Butterfly b = make_strict(scalar(Z(), Z(), 3), scalar(Z(), Z(), 3), x, x);
  Butterfly c = make_strict(scalar(Z(), Z(), 0), scalar(Z(), Z(), 0), x, x);
  EXPECT_TRUE(butterfly_equal(a, b));
  EXPECT_FALSE(butterfly_equal(a, c));
  EXPECT_FALSE(induced(a).second.equals(induced(c).second));
}

TEST(Butterfly, NullHomotopicChainMapsAreEqual) {
  // f − g = (s d, d s) for s: X^0 → Y^{-1}.
  Rand r(7);
  for (int t = 0; t < 20; ++t) {
    BObject x = r.b_object(), y = r.b_object();
    StrictParts f = r.chain_map(x, y);
    GroupMap s = r.map(x.x0(), y.xm1());
    Butterfly p = make_strict(f.m1, f.zero, x, y);
    Butterfly q = make_strict(f.m1 + s * x.d(), f.zero + y.d() * s, x, y);
    EXPECT_TRUE(butterfly_equal(p, q));
  }
}

TEST(Butterfly, IdentityAndFunctoriality) {
  Rand r(11);
  for (int t = 0; t < 15; ++t) {
    BObject x = r.b_object(), y = r.b_object(), z = r.b_object();
    Butterfly p = r.butterfly(x, y);
    EXPECT_NO_THROW(p.validate());
    EXPECT_TRUE(butterfly_equal(compose(p, identity_b(y)), p));
    EXPECT_TRUE(butterfly_equal(compose(identity_b(x), p), p));

    StrictParts f = r.chain_map(x, y), g = r.chain_map(y, z);
    Butterfly fg = compose(make_strict(f.m1, f.zero, x, y), make_strict(g.m1, g.zero, y, z));
    EXPECT_NO_THROW(fg.validate());
    EXPECT_TRUE(butterfly_equal(fg, make_strict(g.m1 * f.m1, g.zero * f.zero, x, z)));
  }
}

TEST(Butterfly, SimplifiedCompositesAgree) {
  Rand r(13);
  for (int t = 0; t < 15; ++t) {
    BObject x = r.b_object(), y = r.b_object(), z = r.b_object();
    Butterfly p = r.butterfly(x, y);
    Butterfly q = r.strict(y, z);
    Butterfly after = compose_strict_after(p, q);
    EXPECT_NO_THROW(after.validate());
    EXPECT_TRUE(butterfly_equal(after, compose(p, q)));

    Butterfly s = r.strict(x, y);
    Butterfly u = r.butterfly(y, z);
    Butterfly before = compose_strict_before(s, u);
    EXPECT_NO_THROW(before.validate());
    EXPECT_TRUE(butterfly_equal(before, compose(s, u)));
  }
}

TEST(Butterfly, Associativity) {
  Rand r(17);
  for (int t = 0; t < 10; ++t) {
    BObject w = r.b_object(2), x = r.b_object(2), y = r.b_object(2), z = r.b_object(2);
    Butterfly a = r.butterfly(w, x), b = r.butterfly(x, y), c = r.butterfly(y, z);
    EXPECT_TRUE(butterfly_equal(compose(compose(a, b), c), compose(a, compose(b, c))));
  }
}

TEST(Butterfly, AdditionExamples) {
  Rand r(19);
  for (int t = 0; t < 15; ++t) {
    BObject x = r.b_object(), y = r.b_object();
    Butterfly p = r.butterfly(x, y);
    Butterfly z = zero_b(x, y);
    Butterfly sum = add(p, z);
    EXPECT_NO_THROW(sum.validate());
    EXPECT_TRUE(butterfly_equal(sum, p));
    EXPECT_TRUE(butterfly_equal(negate(negate(p)), p));
    EXPECT_TRUE(is_zero_morphism(add(p, negate(p))));

    StrictParts f = r.chain_map(x, y), g = r.chain_map(x, y);
    EXPECT_TRUE(butterfly_equal(add(make_strict(f.m1, f.zero, x, y), make_strict(g.m1, g.zero, x, y)),
                                make_strict(f.m1 + g.m1, f.zero + g.zero, x, y)));
  }
}

TEST(Butterfly, AbelianGroupLaws) {
  Rand r(23);
  for (int t = 0; t < 10; ++t) {
    BObject x = r.b_object(2), y = r.b_object(2);
    Butterfly a = r.butterfly(x, y), b = r.butterfly(x, y), c = r.butterfly(x, y);
    EXPECT_TRUE(butterfly_equal(add(a, b), add(b, a)));
    EXPECT_TRUE(butterfly_equal(add(add(a, b), c), add(a, add(b, c))));
    EXPECT_TRUE(butterfly_equal(scale(3, a), add(a, add(a, a))));
    EXPECT_TRUE(butterfly_equal(scale(-2, a), negate(add(a, a))));
  }
}

TEST(Butterfly, CompositionIsBilinear) {
  Rand r(29);
  for (int t = 0; t < 10; ++t) {
    BObject x = r.b_object(2), y = r.b_object(2), z = r.b_object(2);
    Butterfly a = r.butterfly(x, y), b = r.butterfly(x, y), c = r.butterfly(y, z), d = r.butterfly(y, z);
    EXPECT_TRUE(butterfly_equal(compose(add(a, b), c), add(compose(a, c), compose(b, c))));
    EXPECT_TRUE(butterfly_equal(compose(a, add(c, d)), add(compose(a, c), compose(a, d))));
  }
}

TEST(Analysis, IdentityConeIsExact) {
  Butterfly id = identity_b(times(2));
  ButterflyAnalysis a = analyze(id);
  EXPECT_TRUE(a.h_m2().is_zero());
  EXPECT_TRUE(a.h_m1.group.is_zero());
  EXPECT_TRUE(a.h_0.group.is_zero());
  EXPECT_EQ(a.a_sub, a.ker_rho);
  EXPECT_EQ(a.a_sub, image(id.kappa));
}

TEST(Analysis, ZeroMapConeSplits) {
  // H^n(C) = H^{n+1}(X) ⊕ H^n(Y) for the cone of a zero map.
  Rand r(31);
  for (int t = 0; t < 20; ++t) {
    BObject x = r.b_object(), y = r.b_object();
    ButterflyAnalysis a = analyze(zero_b(x, y));
    EXPECT_EQ(a.h_m2().canonical(), x.h_m1().group().canonical());
    EXPECT_EQ(a.h_m1.group.canonical(), direct_sum(x.h_0().group, y.h_m1().group()).group.canonical());
    EXPECT_EQ(a.h_0.group.canonical(), y.h_0().group.canonical());
  }
  ButterflyAnalysis a = analyze(zero_b(times(2), times(4)));
  EXPECT_TRUE(a.h_m2().is_zero());
  EXPECT_EQ(a.h_m1.group.canonical().str(), "Z/2");
  EXPECT_EQ(a.h_0.group.canonical().str(), "Z/4");
}

TEST(Analysis, F24) {
  Butterfly p = f24();
  ButterflyAnalysis a = analyze(p);
  EXPECT_TRUE(a.h_m2().is_zero());
  EXPECT_TRUE(a.h_m1.group.is_zero());
  EXPECT_EQ(a.h_0.group.canonical().str(), "Z/2");
  EXPECT_EQ(a.a_sub, image(p.kappa));
}

TEST(Analysis, SandwichInvariants) {
  Rand r(37);
  for (int t = 0; t < 25; ++t) {
    BObject x = r.b_object(), y = r.b_object();
    Butterfly p = r.butterfly(x, y);
    ButterflyAnalysis a = analyze(p);
    EXPECT_TRUE(a.a_sub.contains(image(p.kappa)));
    EXPECT_TRUE(a.ker_rho.contains(a.a_sub));
    EXPECT_TRUE(a.t_part.group().in_T());
    EXPECT_TRUE(quotient(a.a_sub.group(), Lattice::span(a.a_sub.factor(p.kappa).lift())).group.in_T());
    EXPECT_TRUE(quotient(a.ker_rho.group(), Lattice::span(a.ker_rho.factor(a.a_sub.inclusion()).lift())).group.in_F());
  }
}

TEST(KernelCokernel, Examples) {
  BObject x = times(2), y = times(4);
  EXPECT_TRUE(kernel_b(identity_b(x)).object.is_zero());
  EXPECT_TRUE(cokernel_b(identity_b(x)).object.is_zero());
  EXPECT_TRUE(kernel_b(f24()).object.is_zero());

  BCokernel c = cokernel_b(f24());
  EXPECT_TRUE(c.object.h_m1().group().is_zero());
  EXPECT_EQ(c.object.h_0().group.canonical().str(), "Z/2");
  EXPECT_EQ(c.object.xm1().canonical().str(), "Z");
  EXPECT_EQ(c.object.x0(), Z());
  const MinimalCoords& m = c.object.xm1().minimal();
  IntMatrix d = c.object.d().lift() * m.from_min;
  EXPECT_EQ(abs(d(0, 0)), Int(2));

  // Kernel and cokernel of a zero map are the source and target up to isomorphism.
  BKernel k = kernel_b(zero_b(x, y));
  EXPECT_TRUE(classify_morphism(k.inclusion).is_iso);
  BCokernel q = cokernel_b(zero_b(x, y));
  EXPECT_TRUE(classify_morphism(q.projection).is_iso);
}

TEST(KernelCokernel, ComposeToZero) {
  Rand r(41);
  for (int t = 0; t < 15; ++t) {
    BObject x = r.b_object(), y = r.b_object();
    Butterfly p = r.butterfly(x, y);
    BKernel k = kernel_b(p);
    BCokernel c = cokernel_b(p);
    EXPECT_NO_THROW(k.inclusion.validate());
    EXPECT_NO_THROW(c.projection.validate());
    EXPECT_TRUE(is_zero_morphism(compose(k.inclusion, p)));
    EXPECT_TRUE(is_zero_morphism(compose(p, c.projection)));
    EXPECT_TRUE(classify_morphism(k.inclusion).is_mono);
    EXPECT_TRUE(classify_morphism(c.projection).is_epi);
  }
}

TEST(Classify, Examples) {
  Classification id = classify_morphism(identity_b(times(2)));
  EXPECT_TRUE(id.is_mono && id.is_epi && id.is_iso);
  ASSERT_TRUE(id.inverse);
  EXPECT_TRUE(butterfly_equal(*id.inverse, identity_b(times(2))));

  Classification c = classify_morphism(f24());
  EXPECT_TRUE(c.is_mono);
  EXPECT_FALSE(c.is_epi);
  EXPECT_FALSE(c.is_iso);
  EXPECT_FALSE(c.inverse);
}

TEST(Classify, ResolutionIsIso) {
  Rand r(43);
  for (int t = 0; t < 15; ++t) {
    BObject x = r.b_object();
    Butterfly s = Rand::resolution(x);
    Classification c = classify_morphism(s);
    EXPECT_TRUE(c.is_iso);
    ASSERT_TRUE(c.inverse);
    EXPECT_TRUE(butterfly_equal(compose(s, *c.inverse), identity_b(s.src)));
    EXPECT_TRUE(butterfly_equal(compose(*c.inverse, s), identity_b(x)));
  }
}

TEST(Classify, AgreesWithKernelAndCokernel) {
  Rand r(47);
  int monos = 0, epis = 0;
  for (int t = 0; t < 30; ++t) {
    BObject x = r.b_object(2), y = r.b_object(2);
    Butterfly p = r.butterfly(x, y, 2);
    Classification c = classify_morphism(p);
    EXPECT_EQ(c.is_mono, kernel_b(p).object.is_zero());
    EXPECT_EQ(c.is_epi, cokernel_b(p).object.is_zero());
    EXPECT_EQ(c.is_iso, c.is_mono && c.is_epi);
    monos += c.is_mono;
    epis += c.is_epi;
  }
  EXPECT_GT(monos, 0);
  EXPECT_GT(epis, 0);
}

TEST(ImageFactorization, F24) {
  ImageFactorization f = image_factorization(f24());
  EXPECT_EQ(f.mono.src.xm1(), Z());
  EXPECT_EQ(f.mono.src.x0().canonical().str(), "Z");
  EXPECT_TRUE(classify_morphism(f.iso).is_iso);
  EXPECT_TRUE(butterfly_equal(compose(compose(f.epi, f.iso), f.mono), f24()));
}

TEST(ImageFactorization, ReproducesMorphism) {
  Rand r(53);
  for (int t = 0; t < 15; ++t) {
    BObject x = r.b_object(), y = r.b_object();
    Butterfly p = r.butterfly(x, y);
    ImageFactorization f = image_factorization(p);
    EXPECT_NO_THROW(f.iso.validate());
    EXPECT_TRUE(classify_morphism(f.epi).is_epi);
    EXPECT_TRUE(classify_morphism(f.iso).is_iso);
    EXPECT_TRUE(classify_morphism(f.mono).is_mono);
    EXPECT_TRUE(butterfly_equal(compose(compose(f.epi, f.iso), f.mono), p));
  }
  ImageFactorization z = image_factorization(zero_b(times(2), times(4)));
  EXPECT_TRUE(z.iso.src.is_zero());
}

TEST(LongExactSequence, F24) {
  LongExactSequence les = long_exact_sequence(f24());
  std::vector<std::string> got;
  for (const auto& g : les.groups) got.push_back(g.canonical().str());
  EXPECT_EQ(got, (std::vector<std::string>{"0", "0", "0", "0", "Z/2", "Z/4", "Z/2"}));
  EXPECT_TRUE(les.exact);
  EXPECT_EQ(les.first_failure, -1);
}

TEST(LongExactSequence, Identity) {
  BObject x = validate_b_object(GroupMap(FgGroup::free(2), Z(), IntMatrix{{2, 0}}));
  LongExactSequence les = long_exact_sequence(identity_b(x));
  EXPECT_TRUE(les.exact);
  EXPECT_TRUE(les.groups[0].is_zero() && les.groups[3].is_zero() && les.groups[6].is_zero());
  EXPECT_TRUE(les.maps[1].equals(GroupMap::identity(les.groups[1])));
  EXPECT_TRUE(les.maps[4].equals(GroupMap::identity(les.groups[4])));
}

TEST(LongExactSequence, RandomExact) {
  Rand r(59);
  for (int t = 0; t < 25; ++t) {
    BObject x = r.b_object(), y = r.b_object();
    EXPECT_TRUE(long_exact_sequence(r.butterfly(x, y)).exact);
    EXPECT_TRUE(cone_sequence_exact(r.butterfly(x, y)));
  }
}

TEST(Split, FreeSourceGivesStrictRepresentative) {
  Rand r(61);
  for (int t = 0; t < 15; ++t) {
    BObject y = r.b_object();
    Butterfly res = Rand::resolution(r.b_object());
    Butterfly p = compose(res, r.butterfly(res.dst, y));
    ASSERT_TRUE(p.src.is_semi_projective());
    auto s = strict_representative(p);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(butterfly_equal(make_strict(s->m1, s->zero, p.src, y), p));
  }
}

TEST(DirectSum, InjectionsAndProjections) {
  Rand r(67);
  for (int t = 0; t < 10; ++t) {
    BObject x = r.b_object(), y = r.b_object();
    BDirectSum s = b_direct_sum(x, y);
    EXPECT_TRUE(butterfly_equal(compose(s.in1, s.pr1), identity_b(x)));
    EXPECT_TRUE(is_zero_morphism(compose(s.in1, s.pr2)));
    EXPECT_TRUE(butterfly_equal(add(compose(s.pr1, s.in1), compose(s.pr2, s.in2)), identity_b(s.object)));

    Butterfly p = r.butterfly(x, x), q = r.butterfly(y, y);
    Butterfly pq = butterfly_sum(p, q, s, s);
    EXPECT_NO_THROW(pq.validate());
    EXPECT_TRUE(butterfly_equal(compose(s.in1, pq), compose(p, s.in1)));
    EXPECT_TRUE(butterfly_equal(compose(pq, s.pr2), compose(s.pr2, q)));
  }
}
