#include "tiltkit/bridge/tot.hpp"

#include <algorithm>

#include "tiltkit/errors.hpp"
#include "tiltkit/zmod/linear_system.hpp"

namespace tiltkit {

namespace {

const Butterfly& zero_zero() {
  static const Butterfly z = zero_b(BObject(), BObject());
  return z;
}

// Union of the degree ranges of several complexes, skipping empty ones; lo > hi if all are empty.
std::pair<int, int> union_range(std::initializer_list<std::pair<int, int>> rs) {
  int lo = 0, hi = -1;
  bool any = false;
  for (auto [a, b] : rs) {
    if (a > b) continue;
    lo = any ? std::min(lo, a) : a;
    hi = any ? std::max(hi, b) : b;
    any = true;
  }
  return {lo, hi};
}

std::pair<int, int> range(const BComplex& x) { return {x.lo(), x.hi()}; }

StrictParts parts(const Butterfly& p) {
  if (p.strict) return *p.strict;
  if (auto s = strict_representative(p)) return *s;
  fail(ErrorKind::TransferFailure, "component is not strict");
}

}  // namespace

std::optional<GroupMap> link(const Butterfly& p, const Butterfly& q) {
  if (p.dst != q.src) fail(ErrorKind::NotComposable, "link: target of the first butterfly is not the source of the second");
  CommutingSolution s = solve_commuting(
      p.e, q.e, {{p.iota, q.kappa}, {p.kappa, GroupMap::zero(p.src.xm1(), q.e)}},
      {{q.sigma, p.rho}, {q.rho, GroupMap::zero(p.e, q.dst.x0())}});
  if (!s.particular) return std::nullopt;
  if (!s.homogeneous.is_zero()) fail(ErrorKind::PreconditionViolated, "link is not unique");
  return s.particular;
}

BObject BComplex::object(int n) const {
  if (n < lo() || n > hi()) return BObject();
  return obj_[static_cast<size_t>(n - lo_)];
}

Butterfly BComplex::diff(int n) const {
  if (empty() || n < lo() || n > hi() + 1) return zero_zero();
  return d_[static_cast<size_t>(n - lo_)];
}

GroupMap BComplex::link(int n) const {
  if (n < lo() || n > hi()) return GroupMap::zero(middle(n), middle(n + 1));
  return links_[static_cast<size_t>(n - lo_)];
}

BComplex make_b_complex(int lo, std::vector<BObject> objects, std::vector<Butterfly> differentials) {
  BComplex x;
  if (objects.empty()) {
    if (!differentials.empty()) fail(ErrorKind::InvalidInput, "differentials without objects");
    return x;
  }
  if (differentials.size() + 1 != objects.size())
    fail(ErrorKind::InvalidInput, "a B-complex needs one differential between consecutive objects");
  for (size_t i = 0; i < differentials.size(); ++i)
    if (differentials[i].src != objects[i] || differentials[i].dst != objects[i + 1])
      fail(ErrorKind::NotComposable, "differential into degree " + std::to_string(lo + 1 + static_cast<int>(i)) +
                                         " does not match the objects");
  x.lo_ = lo;
  x.d_.push_back(zero_b(BObject(), objects.front()));
  for (auto& d : differentials) x.d_.push_back(std::move(d));
  x.d_.push_back(zero_b(objects.back(), BObject()));
  x.obj_ = std::move(objects);

  for (size_t i = 0; i + 1 < x.d_.size(); ++i) {
    const int n = lo + static_cast<int>(i);
    const Butterfly& p = x.d_[i];
    const Butterfly& q = x.d_[i + 1];
    if (i > 0 && i + 2 < x.d_.size() && !is_zero_morphism(compose(p, q)))
      fail(ErrorKind::NonZeroComposite, "composite of the differentials around degree " + std::to_string(n) +
                                            " is not zero");
    auto l = link(p, q);
    if (!l) fail(ErrorKind::TransferFailure, "no link in degree " + std::to_string(n));
    x.links_.push_back(*l);
  }
  for (size_t i = 0; i + 1 < x.links_.size(); ++i)
    if (!(x.links_[i + 1] * x.links_[i]).is_zero())
      fail(ErrorKind::TransferFailure, "δ∘δ ≠ 0 in degree " + std::to_string(lo + static_cast<int>(i)));
  return x;
}

Butterfly BChainMap::at(int n) const {
  if (n < lo || n > hi()) return zero_b(src.object(n), dst.object(n));
  return comps[static_cast<size_t>(n - lo)];
}

BChainMap make_b_chain_map(const BComplex& src, const BComplex& dst, int lo, std::vector<Butterfly> comps) {
  BChainMap f{src, dst, lo, std::move(comps), true};
  for (int n = f.lo; n <= f.hi(); ++n) {
    const Butterfly& c = f.comps[static_cast<size_t>(n - f.lo)];
    if (c.src != src.object(n) || c.dst != dst.object(n))
      fail(ErrorKind::MismatchedEndpoints, "component in degree " + std::to_string(n) + " has the wrong endpoints");
    f.strict = f.strict && c.strict.has_value();
  }
  auto [a, b] = union_range({range(src), range(dst), {f.lo, f.hi()}});
  for (int n = a; n <= b + 1; ++n)
    if (!butterfly_equal(compose(src.diff(n), f.at(n)), compose(f.at(n - 1), dst.diff(n))))
      fail(ErrorKind::NonCommutingSquare, "square into degree " + std::to_string(n) + " does not commute");
  return f;
}

BChainMap b_identity(const BComplex& x) {
  std::vector<Butterfly> c;
  for (int n = x.lo(); n <= x.hi(); ++n) c.push_back(identity_b(x.object(n)));
  return BChainMap{x, x, x.lo(), std::move(c), true};
}

DecComplex tot(const BComplex& x) {
  if (x.empty()) return DecComplex();
  std::vector<FgGroup> terms;
  std::vector<GroupMap> links;
  std::vector<Subgroup> deco;
  for (int n = x.lo(); n <= x.hi() + 1; ++n) {
    const Butterfly p = x.diff(n);
    terms.push_back(p.e);
    deco.push_back(image(p.iota));
    if (n <= x.hi()) links.push_back(x.link(n));
  }
  return DecComplex(ChainComplex(x.lo(), std::move(terms), std::move(links)), std::move(deco));
}

BComplex g_inverse(const DecComplex& d) {
  if (!is_compatible(d)) fail(ErrorKind::NotCompatible, "decorated complex is not in Ch(A, T, F)");
  if (d.complex().empty()) return BComplex();
  const int lo = d.lo() - 1, hi = d.hi();
  std::vector<BObject> objs;
  for (int n = lo; n <= hi; ++n) {
    Subgroup m = d.deco(n);
    Quotient q = quotient(d.deco(n + 1));
    objs.push_back(validate_b_object(q.proj * d.d(n) * m.inclusion()));
  }
  std::vector<Butterfly> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    Subgroup mp = d.deco(n - 1), m = d.deco(n);
    Quotient q = quotient(m), q1 = quotient(d.deco(n + 1));
    diffs.push_back(make_butterfly(objs[static_cast<size_t>(n - 1 - lo)], objs[static_cast<size_t>(n - lo)], d.term(n),
                                   d.d(n - 1) * mp.inclusion(), m.inclusion(), q.proj, q1.proj * d.d(n)));
  }
  return make_b_complex(lo, std::move(objs), std::move(diffs));
}

BChainMap canonical_iso(const BComplex& x) {
  DecComplex t = tot(x);
  BComplex g = g_inverse(t);
  auto [a, b] = union_range({range(x), range(g)});
  std::vector<Butterfly> comps;
  for (int n = a; n <= b; ++n) {
    if (n < x.lo() || n > x.hi()) {
      comps.push_back(zero_b(x.object(n), g.object(n)));
      continue;
    }
    Subgroup m = t.deco(n);
    Quotient q = quotient(t.deco(n + 1));
    const Butterfly next = x.diff(n + 1);
    CommutingSolution phi = solve_commuting(next.src.x0(), q.group, {{next.sigma, q.proj}}, {});
    if (!phi.particular) fail(ErrorKind::TransferFailure, "σ does not identify ^nX^0 with E^{n+1}/M^{n+1}");
    comps.push_back(make_strict(m.factor(x.diff(n).iota), *phi.particular, x.object(n), g.object(n)));
  }
  return make_b_chain_map(x, g, a, std::move(comps));
}

DecMap tot_map(const BChainMap& f) {
  const BComplex& x = f.src;
  const BComplex& y = f.dst;
  DecComplex tx = tot(x), ty = tot(y);
  auto [a, b] = union_range({{tx.lo(), tx.hi()}, {ty.lo(), ty.hi()}});
  std::vector<GroupMap> comps;
  for (int n = a; n <= b; ++n) {
    const Butterfly p = x.diff(n), q = y.diff(n);
    const StrictParts fn = parts(f.at(n)), fp = parts(f.at(n - 1));
    CommutingSolution s = solve_commuting(p.e, q.e, {{p.iota, q.iota * fn.m1}, {p.kappa, q.kappa * fp.m1}},
                                          {{q.sigma, fp.zero * p.sigma}, {q.rho, fn.zero * p.rho}});
    if (!s.particular) fail(ErrorKind::TransferFailure, "no component on the middle in degree " + std::to_string(n));
    if (!s.homogeneous.is_zero())
      fail(ErrorKind::TransferFailure, "component on the middle in degree " + std::to_string(n) + " is not unique");
    comps.push_back(*s.particular);
  }
  for (int n = a; n < b; ++n) {
    const GroupMap& f0 = comps[static_cast<size_t>(n - a)];
    const GroupMap& f1 = comps[static_cast<size_t>(n + 1 - a)];
    if (!(f1 * x.link(n)).equals(y.link(n) * f0))
      fail(ErrorKind::TransferFailure, "commutator with the links is not zero in degree " + std::to_string(n));
  }
  return make_dec_map(tx, ty, a, std::move(comps));
}

BChainMap g_map(const DecMap& f) {
  BComplex x = g_inverse(f.src), y = g_inverse(f.dst);
  auto [a, b] = union_range({range(x), range(y)});
  std::vector<Butterfly> comps;
  for (int n = a; n <= b; ++n) {
    Subgroup m = f.src.deco(n), nn = f.dst.deco(n);
    Quotient qx = quotient(f.src.deco(n + 1)), qy = quotient(f.dst.deco(n + 1));
    comps.push_back(make_strict(nn.factor(f.at(n) * m.inclusion()), qx.induce(qy.proj * f.at(n + 1)), x.object(n),
                                y.object(n)));
  }
  return make_b_chain_map(x, y, a, std::move(comps));
}

Roof roof(const Butterfly& p) {
  DirectSum s = direct_sum(p.src.xm1(), p.dst.xm1());
  BObject e = validate_b_object(copair(s, p.kappa, p.iota));
  Butterfly sl = make_strict(s.pr1, p.sigma, e, p.src);
  Butterfly gl = make_strict(s.pr2, p.rho, e, p.dst);
  return Roof{std::move(e), std::move(sl), std::move(gl)};
}

CoRoof co_roof(const Butterfly& p) {
  DirectSum s = direct_sum(p.src.x0(), p.dst.x0());
  // the sign on σ makes t^{-1} ∘ h equal p rather than −p
  BObject f = validate_b_object(pair(s, -p.sigma, p.rho));
  Butterfly t = make_strict(p.iota, s.in2, p.dst, f);
  Butterfly h = make_strict(-p.kappa, s.in1, p.src, f);
  return CoRoof{std::move(f), std::move(t), std::move(h)};
}

RoofChain roof_chain(const BChainMap& f) {
  const BComplex& x = f.src;
  const BComplex& y = f.dst;
  auto [a, b] = union_range({range(x), range(y)});
  RoofChain out;
  if (a > b) return out;
  std::vector<Roof> r;
  std::vector<CoRoof> c;
  for (int n = a; n <= b; ++n) {
    r.push_back(roof(f.at(n)));
    c.push_back(co_roof(f.at(n)));
  }
  std::vector<BObject> eo, fo;
  std::vector<Butterfly> ed, fd, s, g, t, h;
  for (int n = a; n <= b; ++n) {
    const size_t k = static_cast<size_t>(n - a);
    eo.push_back(r[k].e);
    fo.push_back(c[k].f);
    s.push_back(r[k].s);
    g.push_back(r[k].g);
    t.push_back(c[k].t);
    h.push_back(c[k].h);
    if (n == a) continue;
    // transport the differentials along the isomorphisms s and t
    ed.push_back(compose(compose(r[k - 1].s, x.diff(n)), flip(r[k].s)));
    fd.push_back(compose(compose(flip(c[k - 1].t), y.diff(n)), c[k].t));
  }
  out.e = make_b_complex(a, std::move(eo), std::move(ed));
  out.f = make_b_complex(a, std::move(fo), std::move(fd));
  out.s = make_b_chain_map(out.e, x, a, std::move(s));
  out.g = make_b_chain_map(out.e, y, a, std::move(g));
  out.t = make_b_chain_map(y, out.f, a, std::move(t));
  out.h = make_b_chain_map(x, out.f, a, std::move(h));
  return out;
}

BCohomology b_complex_cohomology(const BComplex& x) {
  BCohomology h;
  h.lo = x.lo();
  for (int n = x.lo(); n <= x.hi(); ++n) {
    Subgroup a = analyze(x.diff(n)).a_sub, b = analyze(x.diff(n + 1)).a_sub;
    h.objects.push_back(validate_b_object(quotient(a).induce(b.factor(x.link(n)))));
  }
  return h;
}

bool is_b_exact(const BComplex& x) {
  BCohomology h = b_complex_cohomology(x);
  return std::all_of(h.objects.begin(), h.objects.end(), [](const BObject& o) { return o.is_zero(); });
}

BComplex b_cone(const BChainMap& f) {
  const BComplex& x = f.src;
  const BComplex& y = f.dst;
  auto [lo, hi] = union_range({{x.lo() - 1, x.hi() - 1}, range(y)});
  if (x.empty()) std::tie(lo, hi) = range(y);
  if (lo > hi) return BComplex();
  std::vector<BDirectSum> sums;
  for (int n = lo; n <= hi; ++n) sums.push_back(b_direct_sum(x.object(n + 1), y.object(n)));
  std::vector<BObject> objs;
  std::vector<Butterfly> diffs;
  for (int n = lo; n <= hi; ++n) {
    const BDirectSum& cur = sums[static_cast<size_t>(n - lo)];
    objs.push_back(cur.object);
    if (n == lo) continue;
    const BDirectSum& prev = sums[static_cast<size_t>(n - 1 - lo)];
    auto through = [&](const Butterfly& pr, const Butterfly& mid, const Butterfly& in) {
      return compose_strict_after(compose_strict_before(pr, mid), in);
    };
    Butterfly d = add(add(through(prev.pr1, negate(x.diff(n + 1)), cur.in1), through(prev.pr1, f.at(n), cur.in2)),
                      through(prev.pr2, y.diff(n), cur.in2));
    diffs.push_back(std::move(d));
  }
  return make_b_complex(lo, std::move(objs), std::move(diffs));
}

bool is_b_quasi_iso(const BChainMap& f) { return is_b_exact(b_cone(f)); }

}  // namespace tiltkit
