#include "tiltkit/decorated/decorated.hpp"

#include <algorithm>
#include <optional>

#include "tiltkit/errors.hpp"
#include "tiltkit/zmod/linear_system.hpp"

namespace tiltkit {

namespace {

Int sign(int k) { return (k % 2 == 0) ? Int(1) : Int(-1); }

// A direct sum of several groups laid out on consecutive ambient coordinates.
struct Blocks {
  std::vector<FgGroup> parts;
  std::vector<size_t> off;
  FgGroup total;
};

Blocks blocks(std::vector<FgGroup> parts) {
  Blocks b;
  size_t n = 0;
  IntMatrix rel(0, 0);
  for (const auto& p : parts) {
    b.off.push_back(n);
    n += p.ambient_rank();
    rel = block_diag(rel, p.relations());
  }
  b.total = FgGroup(n, rel);
  b.parts = std::move(parts);
  return b;
}

// Builds the complex on the given block decompositions; entry(n, i, j) is the block
// from part j in degree n to part i in degree n + 1, if nonzero.
template <class Entry, class Deco>
DecComplex assemble(int lo, const std::vector<Blocks>& deg, Entry entry, Deco deco) {
  std::vector<FgGroup> terms;
  std::vector<GroupMap> d;
  std::vector<Subgroup> m;
  for (size_t k = 0; k < deg.size(); ++k) {
    const Blocks& b = deg[k];
    terms.push_back(b.total);
    IntMatrix gens(b.total.ambient_rank(), 0);
    for (size_t j = 0; j < b.parts.size(); ++j) {
      IntMatrix g = deco(lo + static_cast<int>(k), j);
      IntMatrix placed(b.total.ambient_rank(), g.cols());
      placed.set_block(b.off[j], 0, g);
      gens = hstack(gens, placed);
    }
    m.push_back(Subgroup::generated_by(b.total, gens));
    if (k + 1 == deg.size()) break;
    const Blocks& t = deg[k + 1];
    IntMatrix lift(t.total.ambient_rank(), b.total.ambient_rank());
    for (size_t i = 0; i < t.parts.size(); ++i)
      for (size_t j = 0; j < b.parts.size(); ++j)
        if (auto e = entry(lo + static_cast<int>(k), i, j)) lift.set_block(t.off[i], b.off[j], *e);
    d.push_back(GroupMap(b.total, t.total, lift));
  }
  return DecComplex(ChainComplex(lo, std::move(terms), std::move(d)), std::move(m));
}

Subgroup subgroup_or_zero(const DecCohomology& h, const FgGroup& e, int n) {
  if (n < h.lo || n > h.hi()) return Subgroup::zero(e);
  return h.m1(n);
}

Quotient quotient_or_zero(const DecCohomology& h, const FgGroup& e, int n) {
  if (n < h.lo || n > h.hi()) return quotient(Subgroup::whole(e));
  return h.zero(n);
}

GroupMap h_m1_component(const DecMap& f, const DecCohomology& s, const DecCohomology& t, int n) {
  Subgroup a = subgroup_or_zero(s, f.src.term(n), n), b = subgroup_or_zero(t, f.dst.term(n), n);
  return b.factor(f.at(n) * a.inclusion());
}

GroupMap h_0_component(const DecMap& f, const DecCohomology& s, const DecCohomology& t, int n) {
  Quotient a = quotient_or_zero(s, f.src.term(n + 1), n), b = quotient_or_zero(t, f.dst.term(n + 1), n);
  return a.induce(b.proj * f.at(n + 1));
}

std::pair<int, int> union_range(const DecCohomology& a, const DecCohomology& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi(), b.hi())};
}

// s^n: E^n → F^{n-1} with f − g = δs + sδ, and s(M^n) ⊆ N^{n-1} when decorations are given.
bool homotopy_exists(const ChainMap& f, const ChainMap& g, const DecComplex* src, const DecComplex* dst) {
  const ChainComplex& e = f.src();
  const ChainComplex& fc = f.dst();
  auto [a, b] = joint_range(e, fc);
  if (a > b) return true;
  LinearMapSystem sys;
  for (int n = a; n <= b + 1; ++n) sys.add_unknown(e.term(n), fc.term(n - 1));
  auto s = [a](int n) { return static_cast<size_t>(n - a); };
  for (int n = a; n <= b; ++n) {
    sys.add_equation({MapTerm{fc.d(n - 1), s(n), std::nullopt}, MapTerm{std::nullopt, s(n + 1), e.d(n)}},
                     f.at(n) - g.at(n));
    if (src && dst) {
      Quotient q = quotient(dst->deco(n - 1));
      sys.add_equation({MapTerm{q.proj, s(n), src->deco(n).inclusion()}});
    }
  }
  return sys.solve().solvable();
}

}  // namespace

DecComplex::DecComplex(ChainComplex c, std::vector<Subgroup> deco) : c_(std::move(c)), m_(std::move(deco)) {
  if (m_.size() != c_.length()) fail(ErrorKind::InvalidInput, "one decoration subgroup is needed per term");
  for (size_t i = 0; i < m_.size(); ++i)
    if (m_[i].ambient() != c_.term(c_.lo() + static_cast<int>(i)))
      fail(ErrorKind::InvalidInput, "decoration in degree " + std::to_string(c_.lo() + static_cast<int>(i)) +
                                        " is not a subgroup of the term");
}

DecComplex DecComplex::zero_decoration(const ChainComplex& c) {
  std::vector<Subgroup> m;
  for (int n = c.lo(); n <= c.hi(); ++n) m.push_back(Subgroup::zero(c.term(n)));
  return DecComplex(c, std::move(m));
}

DecComplex DecComplex::full_decoration(const ChainComplex& c) {
  std::vector<Subgroup> m;
  for (int n = c.lo(); n <= c.hi(); ++n) m.push_back(Subgroup::whole(c.term(n)));
  return DecComplex(c, std::move(m));
}

Subgroup DecComplex::deco(int n) const {
  if (n < lo() || n > hi()) return Subgroup::zero(term(n));
  return m_[static_cast<size_t>(n - lo())];
}

bool operator==(const DecComplex& a, const DecComplex& b) {
  if (a.c_ != b.c_) return false;
  auto [lo, hi] = joint_range(a.c_, b.c_);
  for (int n = lo; n <= hi; ++n)
    if (a.deco(n).lattice() != b.deco(n).lattice()) return false;
  return true;
}

DecMap make_dec_map(const DecComplex& src, const DecComplex& dst, int lo, std::vector<GroupMap> components) {
  ChainMap m(src.complex(), dst.complex(), lo, std::move(components));
  for (int n = m.lo(); n <= m.hi(); ++n)
    if (!dst.deco(n).contains_image(m.at(n) * src.deco(n).inclusion()))
      fail(ErrorKind::InvalidInput, "map does not carry M^" + std::to_string(n) + " into N^" + std::to_string(n));
  return DecMap{src, dst, std::move(m)};
}

DecMap dec_identity(const DecComplex& d) { return DecMap{d, d, ChainMap::identity(d.complex())}; }

DecMap dec_zero(const DecComplex& src, const DecComplex& dst) {
  return DecMap{src, dst, ChainMap::zero(src.complex(), dst.complex())};
}

DecCohomology dec_cohomology(const DecComplex& d) {
  DecCohomology h;
  h.lo = d.lo() - 1;
  for (int n = h.lo; n <= d.hi(); ++n) {
    Subgroup m = d.deco(n), m1 = d.deco(n + 1);
    const GroupMap dn = d.d(n);
    h.h_m1.emplace_back(d.term(n), m.lattice().intersect(m1.lattice().preimage(dn.lift())));
    h.h_0.push_back(quotient(d.term(n + 1), m1.lattice() + Lattice::span(dn.lift() * m.generators())));
  }
  std::vector<FgGroup> km, q0;
  std::vector<GroupMap> dm, d0;
  for (int n = h.lo; n <= h.hi(); ++n) {
    km.push_back(h.m1(n).group());
    q0.push_back(h.zero(n).group);
    if (n == h.hi()) break;
    dm.push_back(h.m1(n + 1).factor(d.d(n) * h.m1(n).inclusion()));
    d0.push_back(h.zero(n).induce(h.zero(n + 1).proj * d.d(n + 1)));
  }
  h.h_m1_complex = ChainComplex::unchecked(h.lo, std::move(km), std::move(dm));
  h.h_0_complex = ChainComplex::unchecked(h.lo, std::move(q0), std::move(d0));
  return h;
}

bool is_compatible(const DecCohomology& h) {
  for (const auto& k : h.h_m1)
    if (!k.group().in_F()) return false;
  for (const auto& q : h.h_0)
    if (!q.group.in_T()) return false;
  return true;
}

bool is_compatible(const DecComplex& d) { return is_compatible(dec_cohomology(d)); }

LoesWitness loes_witness(const DecComplex& d) {
  if (d.complex().empty()) return {ChainMap(), true};
  DecCohomology h = dec_cohomology(d);
  std::vector<Quotient> s;
  for (int n = d.lo(); n <= d.hi(); ++n) s.push_back(quotient(h.m1(n)));
  auto sq = [&](int n) -> const Quotient& { return s[static_cast<size_t>(n - d.lo())]; };

  std::vector<FgGroup> st, tt;
  std::vector<GroupMap> sd, td, comp;
  for (int n = d.lo(); n <= d.hi(); ++n) {
    st.push_back(sq(n).group);
    tt.push_back(h.zero(n - 1).group);
    comp.push_back(sq(n).induce(h.zero(n - 1).proj));
    if (n == d.hi()) continue;
    sd.push_back(sq(n).induce(sq(n + 1).proj * d.d(n)));
    td.push_back(h.h_0_complex.d(n - 1));
  }
  ChainComplex src = ChainComplex::unchecked(d.lo(), std::move(st), std::move(sd));
  ChainComplex dst = ChainComplex::unchecked(d.lo(), std::move(tt), std::move(td));
  LoesWitness w;
  w.map = ChainMap::unchecked(std::move(src), std::move(dst), d.lo(), std::move(comp));
  w.verdict = is_quasi_iso(w.map);
  return w;
}

ChainMap induced_h_m1(const DecMap& f, const DecCohomology& src, const DecCohomology& dst) {
  auto [a, b] = union_range(src, dst);
  std::vector<GroupMap> c;
  for (int n = a; n <= b; ++n) c.push_back(h_m1_component(f, src, dst, n));
  return ChainMap::unchecked(src.h_m1_complex, dst.h_m1_complex, a, std::move(c));
}

ChainMap induced_h_0(const DecMap& f, const DecCohomology& src, const DecCohomology& dst) {
  auto [a, b] = union_range(src, dst);
  std::vector<GroupMap> c;
  for (int n = a; n <= b; ++n) c.push_back(h_0_component(f, src, dst, n));
  return ChainMap::unchecked(src.h_0_complex, dst.h_0_complex, a, std::move(c));
}

MapClass classify_map(const DecMap& f) {
  MapClass c;
  c.is_qis = is_quasi_iso(f.map);
  DecCohomology s = dec_cohomology(f.src), t = dec_cohomology(f.dst);
  auto [a, b] = union_range(s, t);
  c.is_sis = true;
  for (int n = a; n <= b && c.is_sis; ++n)
    c.is_sis = is_iso(h_m1_component(f, s, t, n)) && is_iso(h_0_component(f, s, t, n));
  return c;
}

ChainComplex shift(const ChainComplex& c, int k) {
  std::vector<FgGroup> t;
  std::vector<GroupMap> d;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    t.push_back(c.term(n));
    if (n < c.hi()) d.push_back(k % 2 == 0 ? c.d(n) : -c.d(n));
  }
  return ChainComplex::unchecked(c.lo() - k, std::move(t), std::move(d));
}

DecComplex shift(const DecComplex& d, int k) {
  std::vector<Subgroup> m;
  for (int n = d.lo(); n <= d.hi(); ++n) m.push_back(d.deco(n));
  return DecComplex(shift(d.complex(), k), std::move(m));
}

DecComplex cylinder(const DecMap& f) {
  const DecComplex& e = f.src;
  const DecComplex& fc = f.dst;
  const int lo = std::min(e.lo() - 1, fc.lo()), hi = std::max(e.hi(), fc.hi());
  if (e.complex().empty() && fc.complex().empty()) return DecComplex();
  std::vector<Blocks> deg;
  for (int n = lo; n <= hi; ++n) deg.push_back(blocks({e.term(n), e.term(n + 1), fc.term(n)}));
  auto entry = [&](int n, size_t i, size_t j) -> std::optional<IntMatrix> {
    if (i == 0 && j == 0) return e.d(n).lift();
    if (i == 0 && j == 1) return -IntMatrix::identity(e.term(n + 1).ambient_rank());
    if (i == 1 && j == 1) return -e.d(n + 1).lift();
    if (i == 2 && j == 1) return f.at(n + 1).lift();
    if (i == 2 && j == 2) return fc.d(n).lift();
    return std::nullopt;
  };
  auto deco = [&](int n, size_t j) {
    return j == 0 ? e.deco(n).generators() : j == 1 ? e.deco(n + 1).generators() : fc.deco(n).generators();
  };
  return assemble(lo, deg, entry, deco);
}

DecComplex cone(const DecMap& f) {
  const DecComplex& e = f.src;
  const DecComplex& fc = f.dst;
  const int lo = std::min(e.lo() - 1, fc.lo()), hi = std::max(e.hi() - 1, fc.hi());
  if (e.complex().empty() && fc.complex().empty()) return DecComplex();
  std::vector<Blocks> deg;
  for (int n = lo; n <= hi; ++n) deg.push_back(blocks({e.term(n + 1), fc.term(n)}));
  auto entry = [&](int n, size_t i, size_t j) -> std::optional<IntMatrix> {
    if (i == 0 && j == 0) return -e.d(n + 1).lift();
    if (i == 1 && j == 0) return f.at(n + 1).lift();
    if (i == 1 && j == 1) return fc.d(n).lift();
    return std::nullopt;
  };
  auto deco = [&](int n, size_t j) { return j == 0 ? e.deco(n + 1).generators() : fc.deco(n).generators(); };
  return assemble(lo, deg, entry, deco);
}

bool is_chain_homotopic(const ChainMap& f, const ChainMap& g) {
  if (f.src() != g.src() || f.dst() != g.dst()) fail(ErrorKind::MismatchedEndpoints, "maps have different endpoints");
  return homotopy_exists(f, g, nullptr, nullptr);
}

bool is_homotopic(const DecMap& f, const DecMap& g) {
  if (f.src != g.src || f.dst != g.dst) fail(ErrorKind::MismatchedEndpoints, "maps have different endpoints");
  return homotopy_exists(f.map, g.map, &f.src, &f.dst);
}

FgGroup dec_hom_group(const DecComplex& src, const DecComplex& dst) {
  auto [a, b] = joint_range(src.complex(), dst.complex());
  if (a > b) return FgGroup();
  LinearMapSystem sys;
  for (int n = a; n <= b; ++n) sys.add_unknown(src.term(n), dst.term(n));
  auto u = [a](int n) { return static_cast<size_t>(n - a); };
  for (int n = a; n <= b; ++n) {
    if (n < b)
      sys.add_equation({MapTerm{dst.d(n), u(n), std::nullopt}, MapTerm{std::nullopt, u(n + 1), src.d(n), Int(-1)}});
    Quotient q = quotient(dst.deco(n));
    sys.add_equation({MapTerm{q.proj, u(n), src.deco(n).inclusion()}});
  }
  return sys.solve().homogeneous_subgroup().group();
}

FgGroup tensor(const FgGroup& a, const FgGroup& b) {
  const size_t n = a.ambient_rank(), m = b.ambient_rank();
  IntMatrix rel = hstack(kron(a.relations(), IntMatrix::identity(m)), kron(IntMatrix::identity(n), b.relations()));
  return FgGroup(n * m, rel);
}

DecComplex tensor(const DecComplex& x, const DecComplex& y) {
  if (x.complex().empty() || y.complex().empty()) return DecComplex();
  const int lo = x.lo() + y.lo(), hi = x.hi() + y.hi();
  // parts of degree n are indexed by p − plo(n), p running over the degrees of x
  auto plo = [&](int n) { return std::max(x.lo(), n - y.hi()); };
  auto phi = [&](int n) { return std::min(x.hi(), n - y.lo()); };
  std::vector<Blocks> deg;
  for (int n = lo; n <= hi; ++n) {
    std::vector<FgGroup> parts;
    for (int p = plo(n); p <= phi(n); ++p) parts.push_back(tensor(x.term(p), y.term(n - p)));
    deg.push_back(blocks(std::move(parts)));
  }
  auto entry = [&](int n, size_t i, size_t j) -> std::optional<IntMatrix> {
    const int p = plo(n) + static_cast<int>(j), q = n - p;
    const int p2 = plo(n + 1) + static_cast<int>(i);
    const size_t ex = x.term(p).ambient_rank(), fy = y.term(q).ambient_rank();
    if (p2 == p + 1) return kron(x.d(p).lift(), IntMatrix::identity(fy));
    if (p2 == p) return sign(p) * kron(IntMatrix::identity(ex), y.d(q).lift());
    return std::nullopt;
  };
  auto deco = [&](int n, size_t j) {
    const int p = plo(n) + static_cast<int>(j), q = n - p;
    const size_t ex = x.term(p).ambient_rank(), fy = y.term(q).ambient_rank();
    return hstack(kron(IntMatrix::identity(ex), y.deco(q).generators()),
                  kron(x.deco(p).generators(), IntMatrix::identity(fy)));
  };
  return assemble(lo, deg, entry, deco);
}

FreeCover free_cover_complex(const DecComplex& d) {
  const ChainComplex& e = d.complex();
  if (e.empty()) return {d, dec_identity(d)};

  // Built from the top degree down; level k holds degree hi − k.
  struct Level {
    size_t rank = 0;
    IntMatrix diff;  // P^n → P^{n+1}
    IntMatrix f;     // P^n → E^n
  };
  std::vector<Level> levels;
  Level above{0, IntMatrix(0, 0), IntMatrix(0, 0)};
  size_t above2 = 0;  // rank of P^{n+2}
  int n = e.hi();
  for (;; --n) {
    const FgGroup pn1 = FgGroup::free(above.rank);
    const GroupMap dn1(pn1, FgGroup::free(above2), above.diff);
    const GroupMap fn1(pn1, e.term(n + 1), above.f);
    // cycles of P^{n+1} mapping to boundaries must become boundaries
    Subgroup w(pn1, kernel(dn1).lattice().intersect(e.boundaries(n + 1).preimage(above.f)));

    const FgGroup en = e.term(n);
    const size_t g = en.ambient_rank();
    const GroupMap pi(FgGroup::free(g), en, IntMatrix::identity(g));
    CommutingSolution h = solve_commuting(FgGroup::free(g), w.group(), {}, {{fn1 * w.inclusion(), e.d(n) * pi}});
    if (!h.particular) fail(ErrorKind::PreconditionViolated, "free cover: boundaries do not lift to cycles");
    IntMatrix diff = w.inclusion().lift() * h.particular->lift();
    IntMatrix f = IntMatrix::identity(g);

    Quotient rest = quotient(w.group(), Lattice::span(h.particular->lift()));
    IntMatrix extra = w.inclusion().lift() * rest.section;
    if (extra.cols() > 0) {
      const FgGroup fe = FgGroup::free(extra.cols());
      CommutingSolution h2 = solve_commuting(fe, en, {}, {{e.d(n), GroupMap(fe, e.term(n + 1), above.f * extra)}});
      if (!h2.particular) fail(ErrorKind::PreconditionViolated, "free cover: extra boundaries do not lift");
      diff = hstack(diff, extra);
      f = hstack(f, h2.particular->lift());
    }

    // make every cycle of E^n hit
    Lattice zp = kernel(GroupMap(FgGroup::free(diff.cols()), pn1, diff)).lattice();
    Lattice hit = zp.image(f) + en.relation_lattice();
    const IntMatrix ze = e.cycles(n).lattice().basis();
    for (size_t c = 0; c < ze.cols(); ++c) {
      IntVec z = ze.col(c);
      if (hit.contains(z)) continue;
      diff = hstack(diff, IntMatrix(diff.rows(), 1));
      f = hstack(f, IntMatrix::column(z));
      hit = hit + Lattice::span(IntMatrix::column(z));
    }

    Level lv{f.cols(), diff, f};
    if (n < e.lo() && lv.rank == 0) break;
    above2 = above.rank;
    above = lv;
    levels.push_back(std::move(lv));
  }

  const int lo = n + 1;
  std::reverse(levels.begin(), levels.end());
  std::vector<FgGroup> terms;
  std::vector<GroupMap> diffs, comps;
  std::vector<Subgroup> deco;
  for (size_t k = 0; k < levels.size(); ++k) terms.push_back(FgGroup::free(levels[k].rank));
  for (size_t k = 0; k < levels.size(); ++k) {
    const int deg = lo + static_cast<int>(k);
    if (k + 1 < levels.size()) diffs.push_back(GroupMap(terms[k], terms[k + 1], levels[k].diff));
    comps.push_back(GroupMap(terms[k], e.term(deg), levels[k].f));
    deco.emplace_back(terms[k], d.deco(deg).lattice().preimage(levels[k].f));
  }
  DecComplex cover(ChainComplex(lo, std::move(terms), std::move(diffs)), std::move(deco));
  DecMap map = make_dec_map(cover, d, lo, std::move(comps));
  return {std::move(cover), std::move(map)};
}

}  // namespace tiltkit
