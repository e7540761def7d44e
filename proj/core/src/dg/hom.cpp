#include "tiltkit/dg/hom.hpp"

#include <algorithm>

#include "tiltkit/errors.hpp"
#include "tiltkit/zmod/linear_system.hpp"

namespace tiltkit {

namespace {

Int sign(int k) { return (k % 2 == 0) ? Int(1) : Int(-1); }

IntVec unit(size_t n, size_t j) {
  IntVec v(n, Int(0));
  v[j] = 1;
  return v;
}

// Coordinates in s.group() of an ambient vector lying in s.
IntVec sub_coords(const Subgroup& s, const IntVec& v) {
  return s.factor(GroupMap::unchecked(FgGroup::free(1), s.ambient(), IntMatrix::column(v))).lift().col(0);
}

IntMatrix columns(size_t rows, const std::vector<IntVec>& cols) { return IntMatrix::from_columns(rows, cols); }

// Direct sum of groups on consecutive ambient coordinates.
FgGroup stacked(const std::vector<FgGroup>& parts, std::vector<size_t>& off) {
  size_t n = 0;
  IntMatrix rel(0, 0);
  off.clear();
  for (const auto& p : parts) {
    off.push_back(n);
    n += p.ambient_rank();
    rel = block_diag(rel, p.relations());
  }
  off.push_back(n);
  return FgGroup(n, rel);
}

}  // namespace

size_t MapFamily::add(const FgGroup& src, const FgGroup& dst) {
  homs_.emplace_back(src, dst);
  off_.push_back(off_.back() + homs_.back().size());
  return homs_.size() - 1;
}

FgGroup MapFamily::group() const {
  IntVec orders;
  for (const auto& h : homs_) orders.insert(orders.end(), h.orders().begin(), h.orders().end());
  return FgGroup::from_orders(orders);
}

IntVec MapFamily::coordinates(const std::vector<GroupMap>& maps) const {
  if (maps.size() != homs_.size()) fail(ErrorKind::InvalidInput, "wrong number of maps for the family");
  IntVec v;
  for (size_t i = 0; i < maps.size(); ++i) {
    IntVec c = homs_[i].coordinates(maps[i]);
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

std::vector<GroupMap> MapFamily::element(const IntVec& coords) const {
  std::vector<GroupMap> out;
  for (size_t i = 0; i < homs_.size(); ++i)
    out.push_back(homs_[i].element(IntVec(coords.begin() + static_cast<std::ptrdiff_t>(off_[i]),
                                          coords.begin() + static_cast<std::ptrdiff_t>(off_[i + 1]))));
  return out;
}

// ---------------------------------------------------------------------------------------------

std::vector<GroupMap> DecoratedHomComplex::element(int k, const IntVec& coords) const {
  const size_t i = static_cast<size_t>(k - lo);
  return ambient[i].element(homs[i].inclusion().lift() * coords);
}

DecoratedHomComplex hom_complex_dec(const DecComplex& x, const DecComplex& y) {
  DecoratedHomComplex h{x, y, 0, {}, {}, DecComplex()};
  if (x.complex().empty() || y.complex().empty()) return h;
  h.lo = y.lo() - x.hi();
  const int hi = y.hi() - x.lo();
  const size_t len = x.complex().length();
  auto u = [&](int n) { return static_cast<size_t>(n - x.lo()); };

  std::vector<Subgroup> deco;
  for (int k = h.lo; k <= hi; ++k) {
    MapFamily fam;
    LinearMapSystem sys, msys;
    for (int n = x.lo(); n <= x.hi(); ++n) {
      fam.add(x.term(n), y.term(n + k));
      sys.add_unknown(x.term(n), y.term(n + k));
      msys.add_unknown(x.term(n), y.term(n + k));
    }
    for (int n = x.lo(); n <= x.hi(); ++n) {
      const GroupMap mi = x.deco(n).inclusion();
      const GroupMap qn = quotient(y.deco(n + k)).proj, qn1 = quotient(y.deco(n + k + 1)).proj;
      sys.add_equation({MapTerm{qn, u(n), mi}});
      std::vector<MapTerm> comm{MapTerm{qn1 * y.d(n + k), u(n), mi}};
      if (n < x.hi()) comm.push_back(MapTerm{qn1, u(n + 1), x.d(n) * mi, -sign(k)});
      sys.add_equation(comm);
      msys.add_equation({MapTerm{std::nullopt, u(n), mi}});
      msys.add_equation({MapTerm{qn, u(n), std::nullopt}});
    }
    h.homs.push_back(sys.solve().homogeneous_subgroup());
    Subgroup m = msys.solve().homogeneous_subgroup();
    const Subgroup& hk = h.homs.back();
    deco.emplace_back(hk.group(), m.lattice().preimage(hk.inclusion().lift()));
    h.ambient.push_back(std::move(fam));
  }

  std::vector<FgGroup> terms;
  std::vector<GroupMap> diffs;
  for (int k = h.lo; k <= hi; ++k) {
    const size_t i = static_cast<size_t>(k - h.lo);
    terms.push_back(h.homs[i].group());
    if (k == hi) break;
    const MapFamily& fam = h.ambient[i];
    std::vector<IntVec> cols;
    for (size_t j = 0; j < fam.rank(); ++j) {
      std::vector<GroupMap> g = fam.element(unit(fam.rank(), j));
      std::vector<GroupMap> dg;
      for (int n = x.lo(); n <= x.hi(); ++n) {
        GroupMap t = y.d(n + k) * g[u(n)];
        if (n < x.hi()) t = t - sign(k) * (g[u(n + 1)] * x.d(n));
        dg.push_back(t);
      }
      cols.push_back(h.ambient[i + 1].coordinates(dg));
    }
    GroupMap d(fam.group(), h.ambient[i + 1].group(), columns(h.ambient[i + 1].rank(), cols));
    diffs.push_back(h.homs[i + 1].factor(d * h.homs[i].inclusion()));
  }
  (void)len;
  h.complex = DecComplex(ChainComplex(h.lo, std::move(terms), std::move(diffs)), std::move(deco));
  return h;
}

bool enrich_check(const DecoratedHomComplex& h) {
  if (h.complex.complex().empty()) return true;
  DecCohomology c = dec_cohomology(h.complex);
  return std::all_of(c.h_m1.begin(), c.h_m1.end(), [](const Subgroup& s) { return s.group().is_zero(); });
}

DgQuotient dg_quotient(const DecoratedHomComplex& h) {
  if (!enrich_check(h)) fail(ErrorKind::PreconditionViolated, "𝓜 ∩ d^{-1}𝓜 is not zero");
  DgQuotient out;
  const DecComplex& c = h.complex;
  if (c.complex().empty()) return out;
  out.lo = c.lo();
  for (int k = c.lo(); k <= c.hi(); ++k)
    out.q.push_back(quotient(c.term(k), c.deco(k).lattice() +
                                            Lattice::span(c.d(k - 1).lift() * c.deco(k - 1).generators())));
  std::vector<FgGroup> terms;
  std::vector<GroupMap> diffs;
  for (size_t i = 0; i < out.q.size(); ++i) {
    terms.push_back(out.q[i].group);
    if (i + 1 < out.q.size()) diffs.push_back(out.q[i].induce(out.q[i + 1].proj * c.d(c.lo() + static_cast<int>(i))));
  }
  out.complex = ChainComplex(out.lo, std::move(terms), std::move(diffs));
  return out;
}

// ---------------------------------------------------------------------------------------------

std::vector<Butterfly> StrictHomComplex::element(int k, const IntVec& coords) const {
  std::vector<GroupMap> maps = ambient[static_cast<size_t>(k - lo)].element(coords);
  std::vector<Butterfly> out;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    const size_t i = static_cast<size_t>(n - src.lo());
    out.push_back(make_strict(maps[2 * i], maps[2 * i + 1], src.object(n), dst.object(n + k)));
  }
  return out;
}

IntVec StrictHomComplex::coordinates(int k, const std::vector<StrictParts>& h) const {
  const size_t i = static_cast<size_t>(k - lo);
  std::vector<GroupMap> maps;
  for (const auto& p : h) {
    maps.push_back(p.m1);
    maps.push_back(p.zero);
  }
  IntVec amb = ambient[i].coordinates(maps);
  if (!chains[i].lattice().contains(amb))
    fail(ErrorKind::TransferFailure, "sequence in degree " + std::to_string(k) + " admits no fill");
  return terms[i].proj.lift() * sub_coords(chains[i], amb);
}

StrictHomComplex strict_hom_complex(const BComplex& x, const BComplex& y) {
  StrictHomComplex s{x, y, 0, {}, {}, {}, {}, ChainComplex()};
  if (x.empty() || y.empty()) return s;
  s.lo = y.lo() - x.hi();
  const int hi = y.hi() - x.lo();
  const size_t len = static_cast<size_t>(x.hi() - x.lo() + 1);
  auto hm1 = [&](int n) { return 2 * static_cast<size_t>(n - x.lo()); };
  auto h0 = [&](int n) { return 2 * static_cast<size_t>(n - x.lo()) + 1; };

  for (int k = s.lo; k <= hi; ++k) {
    MapFamily fam, sf;
    LinearMapSystem sys;
    for (int n = x.lo(); n <= x.hi(); ++n) {
      const BObject a = x.object(n), b = y.object(n + k);
      fam.add(a.xm1(), b.xm1());
      fam.add(a.x0(), b.x0());
      sys.add_unknown(a.xm1(), b.xm1());
      sys.add_unknown(a.x0(), b.x0());
      sf.add(a.x0(), b.xm1());
    }
    auto phi = [&](int n) { return 2 * len + static_cast<size_t>(n - x.lo()); };
    for (int n = x.lo(); n <= x.hi() + 1; ++n) sys.add_unknown(x.middle(n), y.middle(n + k));

    for (int n = x.lo(); n <= x.hi(); ++n)
      sys.add_equation({MapTerm{std::nullopt, h0(n), x.object(n).d()}, MapTerm{y.object(n + k).d(), hm1(n), std::nullopt, -1}});
    for (int n = x.lo(); n <= x.hi() + 1; ++n) {
      const Butterfly p = x.diff(n), q = y.diff(n + k);
      std::vector<MapTerm> top{MapTerm{q.sigma, phi(n), std::nullopt}};
      if (n > x.lo()) top.push_back(MapTerm{std::nullopt, h0(n - 1), p.sigma, -1});
      sys.add_equation(top);
      std::vector<MapTerm> bottom{MapTerm{std::nullopt, phi(n), p.iota}};
      if (n <= x.hi()) bottom.push_back(MapTerm{q.iota, hm1(n), std::nullopt, -sign(k)});
      sys.add_equation(bottom);
    }
    Subgroup chains = sys.solve().homogeneous_subgroup(0, 2 * len);

    std::vector<IntVec> ncols;
    for (size_t j = 0; j < sf.rank(); ++j) {
      std::vector<GroupMap> sn = sf.element(unit(sf.rank(), j));
      std::vector<GroupMap> pairs;
      for (int n = x.lo(); n <= x.hi(); ++n) {
        const GroupMap& si = sn[static_cast<size_t>(n - x.lo())];
        pairs.push_back(si * x.object(n).d());
        pairs.push_back(y.object(n + k).d() * si);
      }
      ncols.push_back(fam.coordinates(pairs));
    }
    GroupMap nullmap(sf.group(), fam.group(), columns(fam.rank(), ncols));
    Subgroup null = image(nullmap);
    if (!chains.contains(null))
      fail(ErrorKind::TransferFailure, "null-homotopic sequences in degree " + std::to_string(k) + " admit no fill");
    s.terms.push_back(quotient(chains.group(), Lattice::span(chains.factor(nullmap).lift())));
    s.chains.push_back(std::move(chains));
    s.null.push_back(std::move(null));
    s.ambient.push_back(std::move(fam));
  }

  std::vector<FgGroup> terms;
  std::vector<GroupMap> diffs;
  for (int k = s.lo; k <= hi; ++k) {
    const size_t i = static_cast<size_t>(k - s.lo);
    terms.push_back(s.terms[i].group);
    if (k == hi) break;
    const Subgroup& ch = s.chains[i];
    std::vector<IntVec> cols;
    for (size_t j = 0; j < ch.group().ambient_rank(); ++j) {
      std::vector<Butterfly> h = s.element(k, ch.inclusion().lift().col(j));
      std::vector<StrictParts> dh;
      for (int n = x.lo(); n <= x.hi(); ++n) {
        const size_t a = static_cast<size_t>(n - x.lo());
        Butterfly c = compose_strict_before(h[a], y.diff(n + k + 1));
        if (n < x.hi()) {
          Butterfly b = compose_strict_after(x.diff(n + 1), h[a + 1]);
          c = (k % 2 == 0) ? subtract(c, b) : add(c, b);
        }
        auto parts = strict_representative(c);
        if (!parts) fail(ErrorKind::TransferFailure, "differential of a strict sequence is not strict");
        dh.push_back(*parts);
      }
      cols.push_back(s.coordinates(k + 1, dh));
    }
    GroupMap d(ch.group(), s.terms[i + 1].group, columns(s.terms[i + 1].group.ambient_rank(), cols));
    diffs.push_back(s.terms[i].induce(d));
  }
  s.complex = ChainComplex(s.lo, std::move(terms), std::move(diffs));
  return s;
}

// ---------------------------------------------------------------------------------------------

std::vector<DgEquivalenceDegree> dg_equivalence(const DecoratedHomComplex& h, const StrictHomComplex& s) {
  const DecComplex& x = h.src;
  const DecComplex& y = h.dst;
  const DecComplex& c = h.complex;
  std::vector<DgEquivalenceDegree> out;
  if (c.complex().empty() && s.complex.empty()) return out;
  const int lo = c.complex().empty() ? s.lo : std::min(c.lo(), s.lo);
  const int hi = c.complex().empty() ? s.hi() : std::max(c.hi(), s.hi());
  auto in_h = [&](int k) { return !c.complex().empty() && k >= c.lo() && k <= c.hi(); };
  auto in_s = [&](int k) { return !s.complex.empty() && k >= s.lo && k <= s.hi(); };

  for (int k = lo; k <= hi; ++k) {
    const FgGroup src = c.term(k), dst = s.complex.term(k);
    std::vector<IntVec> cols;
    if (in_h(k) && in_s(k)) {
      for (size_t j = 0; j < src.ambient_rank(); ++j) {
        std::vector<GroupMap> g = h.element(k, unit(src.ambient_rank(), j));
        auto gn = [&](int n) {
          if (n < x.lo() || n > x.hi()) return GroupMap::zero(x.term(n), y.term(n + k));
          return g[static_cast<size_t>(n - x.lo())];
        };
        std::vector<StrictParts> parts;
        for (int n = s.src.lo(); n <= s.src.hi(); ++n) {
          Subgroup m = x.deco(n), nn = y.deco(n + k);
          GroupMap under = sign(k) * nn.factor(gn(n) * m.inclusion());
          GroupMap over = quotient(x.deco(n + 1)).induce(quotient(y.deco(n + k + 1)).proj * gn(n + 1));
          parts.push_back(StrictParts{under, over});
        }
        cols.push_back(s.coordinates(k, parts));
      }
    } else {
      for (size_t j = 0; j < src.ambient_rank(); ++j) cols.push_back(IntVec(dst.ambient_rank(), Int(0)));
    }
    DgEquivalenceDegree e;
    e.k = k;
    e.map = GroupMap(src, dst, columns(dst.ambient_rank(), cols));
    e.surjective = is_epi(e.map);
    Lattice expected = c.deco(k).lattice() + Lattice::span(c.d(k - 1).lift() * c.deco(k - 1).generators());
    if (!in_h(k)) expected = src.relation_lattice();
    e.kernel_matches = kernel(e.map).lattice() == expected;
    out.push_back(std::move(e));
  }
  for (size_t i = 0; i < out.size(); ++i) {
    const int k = out[i].k;
    const GroupMap next = (i + 1 < out.size()) ? out[i + 1].map : GroupMap::zero(c.term(k + 1), s.complex.term(k + 1));
    out[i].commutes = (s.complex.d(k) * out[i].map).equals(next * c.d(k));
  }
  return out;
}

bool is_null_homotopic(const StrictParts& f, const BObject& x, const BObject& y) {
  LinearMapSystem sys;
  size_t s = sys.add_unknown(x.x0(), y.xm1());
  sys.add_equation({MapTerm{std::nullopt, s, x.d()}}, f.m1);
  sys.add_equation({MapTerm{y.d(), s, std::nullopt}}, f.zero);
  return sys.solve().solvable();
}

// ---------------------------------------------------------------------------------------------

SemiProjective semi_projective_replace(const BObject& x) {
  if (x.x0().is_free_presentation()) return {x, identity_b(x)};
  const size_t n = x.x0().ambient_rank();
  const FgGroup p = FgGroup::free(n);
  GroupMap cover(p, x.x0(), IntMatrix::identity(n));
  Pullback pb = pullback(cover, x.d());
  BObject obj = validate_b_object(pb.p1);
  Butterfly iso = make_strict(pb.p2, cover, obj, x);
  return {std::move(obj), std::move(iso)};
}

SemiProjectiveResolution semi_projective_resolution(const BComplex& x) {
  if (x.empty()) return {BComplex(), b_identity(x)};
  std::vector<SemiProjective> sp;
  std::vector<BObject> objs;
  std::vector<Butterfly> diffs, isos;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    sp.push_back(semi_projective_replace(x.object(n)));
    objs.push_back(sp.back().object);
    isos.push_back(sp.back().iso);
    if (n == x.lo()) continue;
    const size_t i = sp.size() - 1;
    diffs.push_back(compose(compose_strict_before(sp[i - 1].iso, x.diff(n)), flip(sp[i].iso)));
  }
  BComplex p = make_b_complex(x.lo(), std::move(objs), std::move(diffs));
  BChainMap iso = make_b_chain_map(p, x, x.lo(), std::move(isos));
  return {std::move(p), std::move(iso)};
}

// ---------------------------------------------------------------------------------------------

BHom hom_group_b(const BObject& x, const BObject& y) {
  BHom h{x, y, semi_projective_replace(x), MapFamily(), Subgroup(), Quotient()};
  const BObject& p = h.p.object;
  h.ambient.add(p.xm1(), y.xm1());
  h.ambient.add(p.x0(), y.x0());
  LinearMapSystem sys;
  sys.add_unknown(p.xm1(), y.xm1());
  sys.add_unknown(p.x0(), y.x0());
  sys.add_equation({MapTerm{std::nullopt, 1, p.d()}, MapTerm{y.d(), 0, std::nullopt, -1}});
  h.chains = sys.solve().homogeneous_subgroup();

  MapFamily sf;
  sf.add(p.x0(), y.xm1());
  std::vector<IntVec> cols;
  for (size_t j = 0; j < sf.rank(); ++j) {
    GroupMap s = sf.element(unit(sf.rank(), j))[0];
    cols.push_back(h.ambient.coordinates({s * p.d(), y.d() * s}));
  }
  GroupMap nullmap(sf.group(), h.ambient.group(), columns(h.ambient.rank(), cols));
  h.q = quotient(h.chains.group(), Lattice::span(h.chains.factor(nullmap).lift()));
  return h;
}

Butterfly BHom::element(const IntVec& coords) const {
  IntVec amb = chains.inclusion().lift() * (q.section * coords);
  std::vector<GroupMap> f = ambient.element(amb);
  Butterfly s = make_strict(f[0], f[1], p.object, dst);
  if (p.object == src) return s;
  return compose(flip(p.iso), s);
}

IntVec BHom::coordinates(const Butterfly& f) const {
  if (f.src != src || f.dst != dst) fail(ErrorKind::TransferFailure, "butterfly has the wrong endpoints");
  const Butterfly g = (p.object == src) ? f : compose_strict_before(p.iso, f);
  std::optional<StrictParts> parts = g.strict ? g.strict : strict_representative(g);
  if (!parts) fail(ErrorKind::TransferFailure, "morphism out of a semi-projective object is not strict");
  IntVec amb = ambient.coordinates({parts->m1, parts->zero});
  return q.proj.lift() * sub_coords(chains, amb);
}

IntVec FullHomComplex::coordinates(int k, const std::vector<Butterfly>& h) const {
  const auto& hk = homs[static_cast<size_t>(k - lo)];
  IntVec v;
  for (size_t i = 0; i < hk.size(); ++i) {
    IntVec c = hk[i].coordinates(h[i]);
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

FullHomComplex full_hom_complex(const BComplex& x, const BComplex& y) {
  FullHomComplex f{x, y, 0, {}, {}, ChainComplex()};
  if (x.empty() || y.empty()) return f;
  f.lo = y.lo() - x.hi();
  const int hi = y.hi() - x.lo();
  std::vector<FgGroup> terms;
  for (int k = f.lo; k <= hi; ++k) {
    std::vector<BHom> hk;
    std::vector<FgGroup> parts;
    for (int n = x.lo(); n <= x.hi(); ++n) {
      hk.push_back(hom_group_b(x.object(n), y.object(n + k)));
      parts.push_back(hk.back().group());
    }
    std::vector<size_t> off;
    terms.push_back(stacked(parts, off));
    f.homs.push_back(std::move(hk));
    f.off.push_back(std::move(off));
  }
  std::vector<GroupMap> diffs;
  for (int k = f.lo; k < hi; ++k) {
    const size_t i = static_cast<size_t>(k - f.lo);
    const FgGroup& src = terms[i];
    const FgGroup& dst = terms[i + 1];
    std::vector<IntVec> cols;
    for (int n = x.lo(); n <= x.hi(); ++n) {
      const size_t a = static_cast<size_t>(n - x.lo());
      const BHom& hom = f.homs[i][a];
      for (size_t j = 0; j < hom.group().ambient_rank(); ++j) {
        Butterfly h = hom.element(unit(hom.group().ambient_rank(), j));
        IntVec col(dst.ambient_rank(), Int(0));
        IntVec same = f.homs[i + 1][a].coordinates(compose(h, y.diff(n + k + 1)));
        for (size_t t = 0; t < same.size(); ++t) col[f.off[i + 1][a] + t] += same[t];
        if (n > x.lo()) {
          IntVec before = f.homs[i + 1][a - 1].coordinates(compose(x.diff(n), h));
          for (size_t t = 0; t < before.size(); ++t) col[f.off[i + 1][a - 1] + t] -= sign(k) * before[t];
        }
        cols.push_back(std::move(col));
      }
    }
    diffs.push_back(GroupMap(src, dst, columns(dst.ambient_rank(), cols)));
  }
  f.complex = ChainComplex(f.lo, std::move(terms), std::move(diffs));
  return f;
}

ChainMap strict_to_full(const StrictHomComplex& s, const FullHomComplex& f) {
  std::vector<GroupMap> comps;
  for (int k = s.lo; k <= s.hi(); ++k) {
    const size_t i = static_cast<size_t>(k - s.lo);
    const Quotient& t = s.terms[i];
    std::vector<IntVec> cols;
    for (size_t j = 0; j < t.group.ambient_rank(); ++j) {
      IntVec amb = s.chains[i].inclusion().lift() * (t.section * unit(t.group.ambient_rank(), j));
      cols.push_back(f.coordinates(k, s.element(k, amb)));
    }
    comps.push_back(GroupMap(t.group, f.complex.term(k), columns(f.complex.term(k).ambient_rank(), cols)));
  }
  return ChainMap(s.complex, f.complex, s.lo, std::move(comps));
}

RHom rhom(const BComplex& x, const BComplex& y) {
  SemiProjectiveResolution r = semi_projective_resolution(x);
  StrictHomComplex s = strict_hom_complex(r.complex, y);
  return {std::move(r), std::move(s)};
}

ChainMap rhom_comparison(const RHom& r, const FullHomComplex& f) {
  const StrictHomComplex& s = r.complex;
  std::vector<GroupMap> comps;
  for (int k = s.lo; k <= s.hi(); ++k) {
    const size_t i = static_cast<size_t>(k - s.lo);
    const Quotient& t = s.terms[i];
    std::vector<IntVec> cols;
    for (size_t j = 0; j < t.group.ambient_rank(); ++j) {
      IntVec amb = s.chains[i].inclusion().lift() * (t.section * unit(t.group.ambient_rank(), j));
      std::vector<Butterfly> h = s.element(k, amb);
      for (int n = s.src.lo(); n <= s.src.hi(); ++n) {
        const size_t a = static_cast<size_t>(n - s.src.lo());
        h[a] = compose(flip(r.resolution.iso.at(n)), h[a]);
      }
      cols.push_back(f.coordinates(k, h));
    }
    comps.push_back(GroupMap(t.group, f.complex.term(k), columns(f.complex.term(k).ambient_rank(), cols)));
  }
  return ChainMap(s.complex, f.complex, s.lo, std::move(comps));
}

}  // namespace tiltkit
