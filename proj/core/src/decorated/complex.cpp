#include "tiltkit/decorated/complex.hpp"

#include <algorithm>

#include "tiltkit/errors.hpp"

namespace tiltkit {

namespace {

const FgGroup& zero_group() {
  static const FgGroup z;
  return z;
}

}  // namespace

ChainComplex ChainComplex::unchecked(int lo, std::vector<FgGroup> terms, std::vector<GroupMap> d) {
  ChainComplex c;
  c.lo_ = terms.empty() ? 0 : lo;
  c.terms_ = std::move(terms);
  c.d_ = std::move(d);
  return c;
}

ChainComplex::ChainComplex(int lo, std::vector<FgGroup> terms, std::vector<GroupMap> d) {
  *this = unchecked(lo, std::move(terms), std::move(d));
  const size_t want = terms_.empty() ? 0 : terms_.size() - 1;
  if (d_.size() != want) fail(ErrorKind::InvalidInput, "a complex needs one differential between consecutive terms");
  for (size_t i = 0; i < d_.size(); ++i) {
    if (d_[i].src() != terms_[i] || d_[i].dst() != terms_[i + 1])
      fail(ErrorKind::InvalidInput, "differential in degree " + std::to_string(lo_ + static_cast<int>(i)) +
                                        " does not match the terms");
    if (i + 1 < d_.size() && !(d_[i + 1] * d_[i]).is_zero())
      fail(ErrorKind::InvalidInput, "δ∘δ ≠ 0 in degree " + std::to_string(lo_ + static_cast<int>(i)));
  }
}

FgGroup ChainComplex::term(int n) const {
  if (n < lo_ || n > hi()) return zero_group();
  return terms_[static_cast<size_t>(n - lo_)];
}

GroupMap ChainComplex::d(int n) const {
  if (n < lo_ || n >= hi()) return GroupMap::zero(term(n), term(n + 1));
  return d_[static_cast<size_t>(n - lo_)];
}

Lattice ChainComplex::boundaries(int n) const {
  return Lattice::span(d(n - 1).lift()) + term(n).relation_lattice();
}

Quotient ChainComplex::cohomology(int n) const {
  Subgroup z = cycles(n);
  return quotient(z.group(), Lattice::span(z.factor(d(n - 1)).lift()));
}

bool ChainComplex::is_acyclic() const {
  for (int n = lo_; n <= hi(); ++n)
    if (cycles(n).lattice() != boundaries(n)) return false;
  return true;
}

ChainComplex ChainComplex::normalized() const {
  size_t b = 0, e = terms_.size();
  while (b < e && terms_[b].ambient_rank() == 0) ++b;
  while (e > b && terms_[e - 1].ambient_rank() == 0) --e;
  if (b == e) return ChainComplex();
  std::vector<FgGroup> t(terms_.begin() + static_cast<std::ptrdiff_t>(b), terms_.begin() + static_cast<std::ptrdiff_t>(e));
  std::vector<GroupMap> d(d_.begin() + static_cast<std::ptrdiff_t>(b), d_.begin() + static_cast<std::ptrdiff_t>(e - 1));
  return unchecked(lo_ + static_cast<int>(b), std::move(t), std::move(d));
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  ChainComplex x = a.normalized(), y = b.normalized();
  if (x.lo_ != y.lo_ || x.terms_.size() != y.terms_.size()) return false;
  for (size_t i = 0; i < x.terms_.size(); ++i)
    if (x.terms_[i] != y.terms_[i]) return false;
  for (size_t i = 0; i < x.d_.size(); ++i)
    if (!x.d_[i].equals(y.d_[i])) return false;
  return true;
}

std::pair<int, int> joint_range(const ChainComplex& a, const ChainComplex& b) {
  if (a.empty() && b.empty()) return {0, -1};
  if (a.empty()) return {b.lo(), b.hi()};
  if (b.empty()) return {a.lo(), a.hi()};
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

namespace {

GroupMap component(const ChainComplex& src, const ChainComplex& dst, int lo, const std::vector<GroupMap>& f, int n) {
  if (n < lo || n >= lo + static_cast<int>(f.size())) return GroupMap::zero(src.term(n), dst.term(n));
  return f[static_cast<size_t>(n - lo)];
}

}  // namespace

bool is_chain_map(const ChainComplex& src, const ChainComplex& dst, int lo, const std::vector<GroupMap>& f) {
  for (size_t i = 0; i < f.size(); ++i) {
    const int n = lo + static_cast<int>(i);
    if (f[i].src() != src.term(n) || f[i].dst() != dst.term(n)) return false;
  }
  auto [a, b] = joint_range(src, dst);
  for (int n = a - 1; n <= b; ++n) {
    GroupMap lhs = dst.d(n) * component(src, dst, lo, f, n);
    GroupMap rhs = component(src, dst, lo, f, n + 1) * src.d(n);
    if (!lhs.equals(rhs)) return false;
  }
  return true;
}

ChainMap ChainMap::unchecked(ChainComplex src, ChainComplex dst, int lo, std::vector<GroupMap> components) {
  ChainMap m;
  auto [a, b] = joint_range(src, dst);
  m.lo_ = a;
  for (int n = a; n <= b; ++n) m.f_.push_back(component(src, dst, lo, components, n));
  m.src_ = std::move(src);
  m.dst_ = std::move(dst);
  return m;
}

ChainMap::ChainMap(ChainComplex src, ChainComplex dst, int lo, std::vector<GroupMap> components) {
  if (!is_chain_map(src, dst, lo, components))
    fail(ErrorKind::InvalidInput, "components do not form a chain map");
  *this = unchecked(std::move(src), std::move(dst), lo, std::move(components));
}

ChainMap ChainMap::zero(const ChainComplex& src, const ChainComplex& dst) { return unchecked(src, dst, 0, {}); }

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::vector<GroupMap> f;
  for (int n = c.lo(); n <= c.hi(); ++n) f.push_back(GroupMap::identity(c.term(n)));
  return unchecked(c, c, c.lo(), std::move(f));
}

GroupMap ChainMap::at(int n) const { return component(src_, dst_, lo_, f_, n); }

bool ChainMap::equals(const ChainMap& o) const {
  auto [a, b] = joint_range(src_, dst_);
  for (int n = a; n <= b; ++n)
    if (!at(n).equals(o.at(n))) return false;
  return true;
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  std::vector<GroupMap> f;
  for (int n = a.lo(); n <= a.hi(); ++n) f.push_back(a.at(n) + b.at(n));
  return ChainMap::unchecked(a.src(), a.dst(), a.lo(), std::move(f));
}

ChainMap operator-(const ChainMap& a, const ChainMap& b) {
  std::vector<GroupMap> f;
  for (int n = a.lo(); n <= a.hi(); ++n) f.push_back(a.at(n) - b.at(n));
  return ChainMap::unchecked(a.src(), a.dst(), a.lo(), std::move(f));
}

ChainMap operator*(const ChainMap& g, const ChainMap& f) {
  auto [a, b] = joint_range(f.src(), g.dst());
  std::vector<GroupMap> h;
  for (int n = a; n <= b; ++n) h.push_back(g.at(n) * f.at(n));
  return ChainMap::unchecked(f.src(), g.dst(), a, std::move(h));
}

bool is_quasi_iso(const ChainMap& f) {
  const ChainComplex& s = f.src();
  const ChainComplex& t = f.dst();
  auto [a, b] = joint_range(s, t);
  for (int n = a; n <= b; ++n) {
    const GroupMap fn = f.at(n);
    const IntMatrix& l = fn.lift();
    Lattice zs = s.cycles(n).lattice(), bs = s.boundaries(n);
    Lattice zt = t.cycles(n).lattice(), bt = t.boundaries(n);
    // injective: f^{-1}(B_t) ∩ Z_s ⊆ B_s; surjective: Z_t ⊆ f(Z_s) + B_t
    if (!bs.contains(bt.preimage(l).intersect(zs))) return false;
    if (!(zs.image(l) + bt).contains(zt)) return false;
  }
  return true;
}

GroupMap induced_on_cohomology(const ChainMap& f, int n) {
  Subgroup zs = f.src().cycles(n), zt = f.dst().cycles(n);
  Quotient hs = f.src().cohomology(n), ht = f.dst().cohomology(n);
  return hs.induce(ht.proj * zt.factor(f.at(n) * zs.inclusion()));
}

HhFunctor hh_functor(const ChainComplex& c) {
  HhFunctor h;
  h.complex = c;
  h.lo = c.lo() - 1;
  for (int n = h.lo; n <= c.hi() + 1; ++n)
    h.a_subs.emplace_back(c.term(n), c.cycles(n).lattice().intersect(c.boundaries(n).saturation()));
  for (int n = h.lo; n <= c.hi(); ++n) {
    Quotient q = quotient(h.a(n));
    h.objects.push_back(validate_b_object(q.induce(h.a(n + 1).factor(c.d(n)))));
  }
  return h;
}

Butterfly hh_map(const ChainMap& f, const HhFunctor& src, const HhFunctor& dst, int n) {
  Quotient qs = quotient(src.a(n)), qt = quotient(dst.a(n));
  GroupMap f_m1 = qs.induce(qt.proj * f.at(n));
  GroupMap f_0 = dst.a(n + 1).factor(f.at(n + 1) * src.a(n + 1).inclusion());
  return make_strict(f_m1, f_0, src.hh(n), dst.hh(n));
}

bool cohomology_ses_exact(const HhFunctor& h, int n) {
  if (n <= h.lo || n > h.hi()) fail(ErrorKind::PreconditionViolated, "degree outside the range of ℍ");
  const ChainComplex& c = h.complex;
  Subgroup z = c.cycles(n);
  Quotient hn = c.cohomology(n);
  const Subgroup& a = h.a(n);
  GroupMap alpha = h.hh(n - 1).h_0().induce(hn.proj * z.factor(a.inclusion()));
  Quotient q = quotient(a);
  GroupMap beta = hn.induce(h.hh(n).h_m1().factor(q.proj * z.inclusion()));
  return is_mono(alpha) && exact_at(alpha, beta) && is_epi(beta);
}

}  // namespace tiltkit
