#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "tiltkit/errors.hpp"
#include "tiltkit/zmod/linear_system.hpp"
#include "tiltkit/zmod/reduction.hpp"

using namespace tiltkit;
using tiltkit::testing::Rand;

namespace {

// Determinantal-divisor oracle: the k-th invariant factor is g_k / g_{k-1}, where g_k
// is the gcd of all k×k minors. Independent of any elimination code.
Int det(const IntMatrix& m) {
  const size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int d = 0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<size_t> rows, cols;
    for (size_t i = 1; i < n; ++i) rows.push_back(i);
    for (size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    Int t = m(0, j) * det(m.select_rows(rows).select_cols(cols));
    d += (j % 2 == 0) ? t : -t;
  }
  return d;
}

void subsets(size_t n, size_t k, size_t start, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

IntVec invariant_factors_oracle(const IntMatrix& m) {
  IntVec out;
  Int prev = 1;
  for (size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<size_t>> rs, cs;
    std::vector<size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Int g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) g = gcd(g, det(m.select_rows(r).select_cols(c)));
    if (g.is_zero()) break;
    out.push_back(exact_div(g, prev));
    prev = g;
  }
  return out;
}

// All elements of a finite group, as lifts.
std::vector<IntVec> elements(const FgGroup& g) {
  const MinimalCoords& mc = g.minimal();
  std::vector<IntVec> out{IntVec(mc.orders.size())};
  for (size_t i = 0; i < mc.orders.size(); ++i) {
    std::vector<IntVec> next;
    for (const auto& e : out)
      for (Int v = 0; v < mc.orders[i]; v += Int(1)) {
        IntVec f = e;
        f[i] = v;
        next.push_back(f);
      }
    out = std::move(next);
  }
  std::vector<IntVec> lifts;
  for (const auto& c : out) lifts.push_back(mc.from_min * c);
  return lifts;
}

Int order_of(const FgGroup& g) {
  Int o = 1;
  for (const auto& d : g.canonical().torsion) o *= d;
  return o;
}

// Brute-force count of homomorphisms between finite groups: try every assignment of
// images to the ambient generators and keep the well-defined ones.
size_t count_homs(const FgGroup& g, const FgGroup& h) {
  auto targets = elements(h);
  std::set<std::vector<std::string>> seen;
  std::vector<size_t> idx(g.ambient_rank(), 0);
  for (;;) {
    IntMatrix lift(h.ambient_rank(), g.ambient_rank());
    for (size_t j = 0; j < g.ambient_rank(); ++j) lift.set_col(j, targets[idx[j]]);
    try {
      GroupMap f(g, h, lift);
      std::vector<std::string> key;
      for (size_t j = 0; j < g.ambient_rank(); ++j)
        for (const auto& x : h.min_coords(lift.col(j))) key.push_back(x.str());
      seen.insert(key);
    } catch (const TiltError&) {
    }
    size_t p = 0;
    while (p < idx.size() && ++idx[p] == targets.size()) idx[p++] = 0;
    if (p == idx.size()) break;
  }
  return seen.size();
}

}  // namespace

TEST(Snf, IdentityAndZero) {
  SmithForm s = smith(IntMatrix::identity(3));
  EXPECT_EQ(s.U * IntMatrix::identity(3) * s.V, s.D(3, 3));
  EXPECT_EQ(s.D(3, 3), IntMatrix::identity(3));
  SmithForm z = smith(IntMatrix{{0}});
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(z.D(1, 1), (IntMatrix{{0}}));
}

TEST(Snf, WorkedExampleMatchesDeterminantalOracle) {
  IntMatrix m{{2, 4}, {6, 8}};
  EXPECT_EQ(invariant_factors_oracle(m), (IntVec{2, 4}));
  SmithForm s = smith(m);
  EXPECT_EQ(s.U * m * s.V, (IntMatrix{{2, 0}, {0, 4}}));
}

TEST(Snf, RandomRoundTripAndOracle) {
  Rand r(7);
  for (int t = 0; t < 300; ++t) {
    size_t rows = static_cast<size_t>(r.range(0, 4)), cols = static_cast<size_t>(r.range(0, 4));
    IntMatrix m = r.matrix(rows, cols, 9);
    SmithForm s = smith(m);
    EXPECT_EQ(s.U * m * s.V, s.D(rows, cols));
    EXPECT_TRUE(is_unimodular(s.U));
    EXPECT_TRUE(is_unimodular(s.V));
    EXPECT_TRUE((s.U * s.Uinv).is_identity());
    EXPECT_TRUE((s.V * s.Vinv).is_identity());
    for (size_t k = 1; k < s.rank; ++k) EXPECT_TRUE(divides(s.diag[k - 1], s.diag[k]));
    EXPECT_EQ(s.diag, invariant_factors_oracle(m));
  }
}

TEST(Snf, BignumEntriesSurvive) {
  Int big = Int::parse("123456789012345678901234567890");
  IntMatrix m(2, 2);
  m(0, 0) = big * Int(6);
  m(0, 1) = big * Int(4);
  m(1, 0) = Int(3);
  m(1, 1) = Int(2);
  SmithForm s = smith(m);
  EXPECT_EQ(s.U * m * s.V, s.D(2, 2));
  EXPECT_EQ(s.diag, invariant_factors_oracle(m));
}

TEST(Groups, MakeGroupExamples) {
  FgGroup z = FgGroup::free(1);
  EXPECT_EQ(z.canonical().free_rank, 1u);
  EXPECT_TRUE(z.canonical().torsion.empty());
  FgGroup z2(IntMatrix{{2}});
  EXPECT_EQ(z2.canonical().str(), "Z/2");
  FgGroup mixed(IntMatrix{{2, 0}, {0, 0}});
  EXPECT_EQ(mixed.canonical().free_rank, 1u);
  EXPECT_EQ(mixed.canonical().torsion, IntVec{2});
  // isomorphic presentations: equal canonical form, distinct objects
  FgGroup z2b(IntMatrix{{4, 2}});
  EXPECT_EQ(z2b.canonical(), z2.canonical());
  FgGroup z2c(IntMatrix{{1, 0}, {0, 2}});
  EXPECT_NE(z2c, z2);
}

TEST(Groups, PresentationEqualityIsLatticeEquality) {
  EXPECT_EQ(FgGroup(IntMatrix{{2, 4}}), FgGroup(IntMatrix{{2}}));
  EXPECT_EQ(FgGroup(IntMatrix(0, 3)), FgGroup());
  EXPECT_NE(FgGroup(IntMatrix{{3}}), FgGroup(IntMatrix{{2}}));
}

TEST(Groups, MakeMapExamples) {
  FgGroup z = FgGroup::free(1), z2 = FgGroup::cyclic(2), z4 = FgGroup::cyclic(4);
  EXPECT_NO_THROW(GroupMap(z, z2, IntMatrix{{1}}));
  try {
    GroupMap(z2, z, IntMatrix{{1}});
    FAIL() << "expected IllDefined";
  } catch (const TiltError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IllDefined);
  }
  EXPECT_NO_THROW(GroupMap(z4, z2, IntMatrix{{1}}));
}

TEST(Groups, KernelExamples) {
  FgGroup z = FgGroup::free(1), z4 = FgGroup::cyclic(4);
  EXPECT_TRUE(kernel(GroupMap(z, z, IntMatrix{{2}})).is_zero());
  Subgroup k = kernel(GroupMap(z4, z4, IntMatrix{{2}}));
  EXPECT_EQ(k.group().canonical().str(), "Z/2");
  // enumeration oracle: the elements of Z/4 killed by doubling
  size_t killed = 0;
  for (const auto& x : elements(z4))
    if (z4.is_zero_element(IntVec{Int(2) * x[0]})) {
      ++killed;
      EXPECT_TRUE(k.contains(x));
    }
  EXPECT_EQ(Int(static_cast<long long>(killed)), order_of(k.group()));
  Subgroup k2 = kernel(GroupMap(FgGroup::free(2), z, IntMatrix{{1, 0}}));
  EXPECT_EQ(k2.generators(), (IntMatrix{{0}, {1}}));
}

TEST(Groups, CokernelExamples) {
  FgGroup z = FgGroup::free(1);
  EXPECT_EQ(cokernel(GroupMap(z, z, IntMatrix{{2}})).group.canonical().str(), "Z/2");
  FgGroup z6 = FgGroup::cyclic(6);
  EXPECT_TRUE(cokernel(GroupMap::identity(z6)).group.is_zero());
  Quotient q = cokernel(GroupMap(z, FgGroup::free(2), IntMatrix{{2}, {-1}}));
  EXPECT_EQ(q.group.canonical().str(), "Z");
  EXPECT_EQ(q.group.ambient_rank(), 1u);
  // image(f) = kernel(quotient)
  GroupMap f(z, FgGroup::free(2), IntMatrix{{2}, {-1}});
  EXPECT_EQ(image(f), kernel(q.proj));
}

TEST(Groups, PullbackPushoutExamples) {
  FgGroup z = FgGroup::free(1);
  Pullback p = pullback(GroupMap(z, z, IntMatrix{{2}}), GroupMap(z, z, IntMatrix{{3}}));
  EXPECT_EQ(p.sub.generators(), (IntMatrix{{3}, {2}}));
  Pullback d = pullback(GroupMap::identity(z), GroupMap::identity(z));
  EXPECT_EQ(d.sub.generators(), (IntMatrix{{1}, {1}}));
  Pullback s = pullback(GroupMap::zero(z, FgGroup()), GroupMap::zero(z, FgGroup()));
  EXPECT_TRUE(s.sub.is_whole());

  Pushout po = pushout(GroupMap(z, z, IntMatrix{{2}}), GroupMap(z, z, IntMatrix{{2}}));
  EXPECT_EQ(po.group().canonical().str(), "Z/2 + Z");
  Pushout pz = pushout(GroupMap::zero(FgGroup(), z), GroupMap::zero(FgGroup(), z));
  EXPECT_EQ(pz.group().canonical().str(), "Z^2");
  Pushout pid = pushout(GroupMap::identity(z), GroupMap::identity(z));
  EXPECT_EQ(pid.group().canonical().str(), "Z");
  EXPECT_TRUE((pid.j1 - pid.j2).is_zero());
}

TEST(Groups, TorsionDecomposeExamples) {
  auto td = torsion_decompose(FgGroup::free(1));
  EXPECT_TRUE(td.t_part.is_zero());
  EXPECT_EQ(td.f_quotient.group.canonical().str(), "Z");
  auto t6 = torsion_decompose(FgGroup::cyclic(6));
  EXPECT_TRUE(t6.t_part.is_whole());
  EXPECT_TRUE(t6.f_quotient.group.is_zero());
  auto mixed = torsion_decompose(FgGroup(IntMatrix{{2, 0}, {0, 0}}));
  EXPECT_EQ(mixed.t_part.group().canonical().str(), "Z/2");
  EXPECT_EQ(mixed.f_quotient.group.canonical().str(), "Z");
}

TEST(Groups, TorsionDecomposeProperties) {
  Rand r(11);
  for (int t = 0; t < 200; ++t) {
    FgGroup g = r.group();
    auto td = torsion_decompose(g);
    EXPECT_TRUE(td.t_part.group().in_T());
    EXPECT_TRUE(td.f_quotient.group.in_F());
    EXPECT_TRUE(is_mono(td.t_part.inclusion()));
    EXPECT_TRUE(is_epi(td.f_quotient.proj));
    EXPECT_EQ(kernel(td.f_quotient.proj), td.t_part);
    EXPECT_TRUE(torsion_decompose(td.f_quotient.group).t_part.is_zero());
  }
}

TEST(Hom, Examples) {
  FgGroup z = FgGroup::free(1);
  FgGroup h(IntMatrix{{2, 0}, {0, 0}});
  EXPECT_EQ(hom_group(z, h).group().canonical(), h.canonical());
  EXPECT_TRUE(hom_group(FgGroup::cyclic(2), z).group().is_zero());
  EXPECT_EQ(hom_group(FgGroup::cyclic(4), FgGroup::cyclic(6)).group().canonical().str(), "Z/2");
  EXPECT_EQ(count_homs(FgGroup::cyclic(4), FgGroup::cyclic(6)), 2u);
}

TEST(Hom, MatchesBruteForceOnFiniteGroups) {
  Rand r(13);
  for (int t = 0; t < 60; ++t) {
    FgGroup g = r.torsion_group(2, 4), h = r.torsion_group(2, 4);
    if (order_of(h) > Int(40) || order_of(g) > Int(40)) continue;
    HomGroup hg = hom_group(g, h);
    EXPECT_EQ(Int(static_cast<long long>(count_homs(g, h))), order_of(hg.group())) << g.str() << " " << h.str();
    for (size_t k = 0; k < hg.size(); ++k) {
      IntVec e(hg.size());
      e[k] = 1;
      EXPECT_EQ(hg.coordinates(hg.generators()[k]), e);
    }
  }
}

TEST(Hom, TorsionToFreeIsZero) {
  Rand r(17);
  for (int t = 0; t < 200; ++t) EXPECT_TRUE(hom_group(r.torsion_group(), r.free_group()).group().is_zero());
}

TEST(Hom, CoordinatesRoundTrip) {
  Rand r(19);
  for (int t = 0; t < 100; ++t) {
    FgGroup g = r.group(), h = r.group();
    HomGroup hg = hom_group(g, h);
    GroupMap f = r.map(g, h);
    EXPECT_TRUE(hg.element(hg.coordinates(f)).equals(f));
  }
}

TEST(SolveCommuting, Examples) {
  FgGroup z = FgGroup::free(1);
  FgGroup g(IntMatrix{{2, 0}, {0, 0}});
  auto none = solve_commuting(g, z, {}, {});
  ASSERT_TRUE(none.particular);
  EXPECT_TRUE(none.particular->is_zero());
  EXPECT_EQ(none.homogeneous.group().canonical(), none.hom.group().canonical());

  GroupMap f(g, g, IntMatrix{{1, 1}, {0, 3}});
  auto one = solve_commuting(g, g, {{GroupMap::identity(g), f}}, {});
  ASSERT_TRUE(one.particular);
  EXPECT_TRUE(one.particular->equals(f));
  EXPECT_TRUE(one.homogeneous.is_zero());

  auto div = solve_commuting(z, z, {}, {{GroupMap(z, z, IntMatrix{{2}}), GroupMap(z, z, IntMatrix{{6}})}});
  ASSERT_TRUE(div.particular);
  EXPECT_EQ(div.particular->lift(), (IntMatrix{{3}}));
  EXPECT_TRUE(div.homogeneous.is_zero());

  auto bad = solve_commuting(z, z, {}, {{GroupMap(z, z, IntMatrix{{2}}), GroupMap(z, z, IntMatrix{{3}})}});
  EXPECT_FALSE(bad.particular);
}

TEST(SolveCommuting, MismatchedEndpoints) {
  FgGroup z = FgGroup::free(1);
  try {
    solve_commuting(z, z, {{GroupMap::identity(FgGroup::cyclic(2)), GroupMap::identity(z)}}, {});
    FAIL();
  } catch (const TiltError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MismatchedEndpoints);
  }
}

TEST(SolveCommuting, KernelCokernelUniversality) {
  Rand r(23);
  for (int t = 0; t < 150; ++t) {
    FgGroup a = r.group(), b = r.group(), w = r.group();
    GroupMap f = r.map(a, b);
    Subgroup k = kernel(f);
    // a test map into a that f kills: compose a random map into k with the inclusion
    GroupMap g = k.inclusion() * r.map(w, k.group());
    auto sol = solve_commuting(w, k.group(), {}, {{k.inclusion(), g}});
    ASSERT_TRUE(sol.particular);
    EXPECT_TRUE(sol.homogeneous.is_zero());
    EXPECT_TRUE((f * g).is_zero());

    Quotient q = cokernel(f);
    GroupMap h = r.map(q.group, w) * q.proj;
    auto sol2 = solve_commuting(q.group, w, {{q.proj, h}}, {});
    ASSERT_TRUE(sol2.particular);
    EXPECT_TRUE(sol2.homogeneous.is_zero());
  }
}

TEST(TorsionAxioms, SubgroupsOfFreeAndQuotientsOfTorsion) {
  Rand r(29);
  for (int t = 0; t < 200; ++t) {
    FgGroup f = r.free_group();
    Subgroup s = Subgroup::generated_by(f, r.matrix(f.ambient_rank(), static_cast<size_t>(r.range(0, 3)), 6));
    EXPECT_TRUE(s.group().in_F());
    FgGroup tg = r.torsion_group();
    Quotient q = quotient(tg, Lattice::span(r.matrix(tg.ambient_rank(), static_cast<size_t>(r.range(0, 3)), 6)));
    EXPECT_TRUE(q.group.in_T());
  }
}
