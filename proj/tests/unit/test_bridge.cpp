#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tiltkit/bridge/tot.hpp"
#include "tiltkit/errors.hpp"

using namespace tiltkit;
using tiltkit::testing::Rand;

namespace {

FgGroup Z() { return FgGroup::free(1); }

GroupMap times(const FgGroup& a, const FgGroup& b, long long k) { return GroupMap(a, b, IntMatrix{{k}}); }

// D1: [Z →×2 Z] in degrees 0, 1, decorated by M^0 = Z, M^1 = 0.
DecComplex d1() {
  return DecComplex(ChainComplex(0, {Z(), Z()}, {times(Z(), Z(), 2)}), {Subgroup::whole(Z()), Subgroup::zero(Z())});
}

BObject two() { return validate_b_object(times(Z(), Z(), 2)); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const TiltError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

bool degreewise_iso(const BChainMap& f) {
  for (int n = std::min(f.src.lo(), f.dst.lo()); n <= std::max(f.src.hi(), f.dst.hi()); ++n)
    if (!classify_morphism(f.at(n)).is_iso) return false;
  return true;
}

// A random map between random compatible complexes, with a good share of quasi-isomorphisms.
DecMap random_compatible_map(Rand& r) {
  DecComplex x = r.compatible_complex(static_cast<int>(r.range(-1, 0)), static_cast<size_t>(r.range(1, 3)));
  switch (r.range(0, 3)) {
    case 0: return dec_identity(x);
    case 1: {
      FreeCover c = free_cover_complex(x);
      if (is_compatible(c.cover)) return c.map;
      return dec_identity(x);
    }
    default: {
      DecComplex y = r.compatible_complex(static_cast<int>(r.range(-1, 0)), static_cast<size_t>(r.range(1, 3)));
      return r.dec_map(x, y);
    }
  }
}

}  // namespace

TEST(Link, Examples) {
  BObject x = two();
  auto l = link(identity_b(x), zero_b(x, BObject()));
  ASSERT_TRUE(l.has_value());
  // for the canonical strict identity δ is ρ = copair(1, d)
  EXPECT_TRUE(l->equals(GroupMap::unchecked(identity_b(x).e, x.x0(), identity_b(x).rho.lift())));
  // the identity twice does not compose to zero
  EXPECT_FALSE(link(identity_b(x), identity_b(x)).has_value());
  EXPECT_EQ(kind_of([&] { link(identity_b(x), identity_b(BObject())); }), ErrorKind::NotComposable);
}

TEST(BComplex, RejectsBadInput) {
  BObject x = two();
  EXPECT_EQ(kind_of([&] { make_b_complex(0, {x, x, x}, {identity_b(x), identity_b(x)}); }),
            ErrorKind::NonZeroComposite);
  EXPECT_EQ(kind_of([&] { make_b_complex(0, {x, BObject()}, {identity_b(x)}); }), ErrorKind::NotComposable);
  EXPECT_EQ(kind_of([&] { make_b_complex(0, {x, x}, {}); }), ErrorKind::InvalidInput);
}

TEST(BComplex, SingleObject) {
  BComplex x = make_b_complex(3, {two()}, {});
  EXPECT_EQ(x.lo(), 3);
  EXPECT_EQ(x.hi(), 3);
  // ^3E = X^{-1} and ^4E = X^0 with δ = d
  EXPECT_TRUE(x.link(3).equals(times(Z(), Z(), 2)));
  DecComplex t = tot(x);
  EXPECT_EQ(t.lo(), 3);
  EXPECT_EQ(t.hi(), 4);
  EXPECT_TRUE(t.deco(3).is_whole());
  EXPECT_TRUE(t.deco(4).is_zero());
}

TEST(Tot, D1RoundTrip) {
  BComplex g = g_inverse(d1());
  EXPECT_EQ(g.lo(), -1);
  EXPECT_EQ(g.hi(), 1);
  EXPECT_TRUE(g.object(-1).is_zero());
  EXPECT_EQ(g.object(0), two());
  EXPECT_TRUE(g.object(1).is_zero());
  EXPECT_EQ(tot(g), d1());
}

TEST(Tot, RejectsIncompatible) {
  // H^{0,0} = Z/(0) = Z is not finite
  DecComplex bad(ChainComplex(0, {Z(), Z()}, {times(Z(), Z(), 0)}), {Subgroup::zero(Z()), Subgroup::zero(Z())});
  EXPECT_EQ(kind_of([&] { g_inverse(bad); }), ErrorKind::NotCompatible);
}

TEST(Tot, RandomRoundTrips) {
  Rand r(301);
  for (int t = 0; t < 40; ++t) {
    DecComplex d = r.compatible_complex(static_cast<int>(r.range(-2, 1)), static_cast<size_t>(r.range(1, 4)));
    BComplex g = g_inverse(d);
    EXPECT_EQ(tot(g), d);
    BChainMap c = canonical_iso(g);
    EXPECT_TRUE(c.strict);
    EXPECT_TRUE(degreewise_iso(c));
  }
}

TEST(Tot, CanonicalIsoOnTransportedComplex) {
  // the roof chain of the identity has non-canonical differentials
  Rand r(302);
  for (int t = 0; t < 10; ++t) {
    BComplex g = g_inverse(r.compatible_complex(0, static_cast<size_t>(r.range(2, 3))));
    RoofChain rc = roof_chain(b_identity(g));
    BChainMap c = canonical_iso(rc.e);
    EXPECT_TRUE(degreewise_iso(c));
    EXPECT_TRUE(is_compatible(tot(rc.e)));
    EXPECT_EQ(tot(g_inverse(tot(rc.e))), tot(rc.e));
  }
}

TEST(Transfer, D1TimesThree) {
  DecComplex d = d1();
  DecMap three = make_dec_map(d, d, 0, {times(Z(), Z(), 3), times(Z(), Z(), 3)});
  BChainMap g = g_map(three);
  EXPECT_TRUE(g.strict);
  EXPECT_TRUE(butterfly_equal(g.at(0), make_strict(times(Z(), Z(), 3), times(Z(), Z(), 3), two(), two())));
  // 3 is invertible on H^0 = Z/2, and H^{-1} = 0
  EXPECT_TRUE(classify_morphism(g.at(0)).is_iso);
  EXPECT_TRUE(tot_map(g).map.equals(three.map));
}

TEST(Transfer, MutuallyInverseOnRandomMaps) {
  Rand r(303);
  for (int t = 0; t < 40; ++t) {
    DecMap f = random_compatible_map(r);
    BChainMap g = g_map(f);
    EXPECT_TRUE(g.strict);
    DecMap back = tot_map(g);
    EXPECT_EQ(back.src, f.src);
    EXPECT_EQ(back.dst, f.dst);
    EXPECT_TRUE(back.map.equals(f.map));
  }
}

TEST(Transfer, RejectsNonCommutingSquares) {
  BComplex x = g_inverse(d1());
  EXPECT_EQ(kind_of([&] { make_b_chain_map(x, x, -1, {identity_b(two())}); }),
            ErrorKind::MismatchedEndpoints);
  BComplex y = make_b_complex(0, {two(), BObject()}, {zero_b(two(), BObject())});
  BComplex z = make_b_complex(0, {two(), two()}, {identity_b(two())});
  // identity in degree 0 would need d_z = 0
  EXPECT_EQ(kind_of([&] { make_b_chain_map(y, z, 0, {identity_b(two()), zero_b(BObject(), two())}); }),
            ErrorKind::NonCommutingSquare);
}

TEST(Roof, FactorsRandomButterflies) {
  Rand r(304);
  for (int t = 0; t < 40; ++t) {
    BObject x = r.b_object(), y = r.b_object();
    Butterfly p = r.butterfly(x, y);
    Roof ro = roof(p);
    EXPECT_TRUE(ro.s.strict && ro.g.strict);
    EXPECT_TRUE(classify_morphism(ro.s).is_iso);
    EXPECT_TRUE(butterfly_equal(compose(flip(ro.s), ro.g), p));
    CoRoof co = co_roof(p);
    EXPECT_TRUE(co.t.strict && co.h.strict);
    EXPECT_TRUE(classify_morphism(co.t).is_iso);
    EXPECT_TRUE(butterfly_equal(compose(co.h, flip(co.t)), p));
  }
}

TEST(Roof, ChainsOfRandomMaps) {
  Rand r(305);
  for (int t = 0; t < 12; ++t) {
    BChainMap f = g_map(random_compatible_map(r));
    RoofChain rc = roof_chain(f);
    EXPECT_TRUE(rc.s.strict && rc.g.strict && rc.t.strict && rc.h.strict);
    EXPECT_TRUE(degreewise_iso(rc.s));
    EXPECT_TRUE(degreewise_iso(rc.t));
    for (int n = f.src.lo() - 1; n <= f.src.hi() + 1; ++n) {
      EXPECT_TRUE(butterfly_equal(compose(flip(rc.s.at(n)), rc.g.at(n)), f.at(n)));
      EXPECT_TRUE(butterfly_equal(compose(rc.h.at(n), flip(rc.t.at(n))), f.at(n)));
    }
    // strict chain maps transfer
    EXPECT_NO_THROW(tot_map(rc.s));
    EXPECT_NO_THROW(tot_map(rc.h));
  }
}

TEST(BCohomology, MatchesHhOfTot) {
  Rand r(306);
  for (int t = 0; t < 30; ++t) {
    DecComplex d = r.compatible_complex(static_cast<int>(r.range(-1, 1)), static_cast<size_t>(r.range(1, 4)));
    BComplex x = g_inverse(d);
    BCohomology h = b_complex_cohomology(x);
    HhFunctor hh = hh_functor(forget(tot(x)));
    ASSERT_EQ(h.lo, x.lo());
    for (int n = x.lo(); n <= x.hi(); ++n) EXPECT_EQ(h.at(n), hh.hh(n));
  }
}

TEST(BCohomology, D1) {
  BCohomology h = b_complex_cohomology(g_inverse(d1()));
  EXPECT_TRUE(h.at(-1).is_zero());
  EXPECT_EQ(h.at(0).h_0().group.canonical().str(), "Z/2");
  EXPECT_TRUE(h.at(0).h_m1().group().is_zero());
  EXPECT_TRUE(h.at(1).is_zero());
  EXPECT_FALSE(is_b_exact(g_inverse(d1())));
}

TEST(BCone, QuasiIsoAgreesWithTot) {
  Rand r(307);
  int qis = 0;
  for (int t = 0; t < 30; ++t) {
    DecMap f = random_compatible_map(r);
    const bool a = is_quasi_iso(f.map);
    qis += a;
    EXPECT_EQ(is_b_quasi_iso(g_map(f)), a);
  }
  EXPECT_GT(qis, 0);
  EXPECT_LT(qis, 30);
}

TEST(BCone, IdentityIsQuasiIso) {
  BComplex x = g_inverse(d1());
  EXPECT_TRUE(is_b_quasi_iso(b_identity(x)));
  EXPECT_FALSE(is_b_quasi_iso(make_b_chain_map(x, BComplex(), 0, {})));
}
