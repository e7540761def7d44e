#include "tiltkit/zmod/ops.hpp"

#include "tiltkit/errors.hpp"
#include "tiltkit/zmod/reduction.hpp"

namespace tiltkit {

Subgroup::Subgroup(FgGroup ambient, const Lattice& lifts) : ambient_(std::move(ambient)) {
  if (lifts.dim() != ambient_.ambient_rank()) fail(ErrorKind::InvalidInput, "subgroup lifts have the wrong length");
  lattice_ = lifts + ambient_.relation_lattice();
  const IntMatrix& b = lattice_.basis();
  IntMatrix rel_coords = lattice_.coordinates(ambient_.relations());
  MinimalCoords mc = minimal_coords(b.cols(), rel_coords);
  group_ = FgGroup::from_orders(mc.orders);
  inclusion_ = GroupMap::unchecked(group_, ambient_, b * mc.from_min);
  to_group_ = std::move(mc.to_min);
}

Subgroup Subgroup::generated_by(const FgGroup& ambient, const IntMatrix& gens) {
  return Subgroup(ambient, Lattice::span(gens));
}

Subgroup Subgroup::whole(const FgGroup& ambient) { return Subgroup(ambient, Lattice::full(ambient.ambient_rank())); }

Subgroup Subgroup::zero(const FgGroup& ambient) { return Subgroup(ambient, Lattice::zero(ambient.ambient_rank())); }

IntVec Subgroup::coordinates(const IntVec& v) const {
  auto c = lattice_.coordinates(v);
  if (!c) fail(ErrorKind::PreconditionViolated, "element does not lie in the subgroup");
  return to_group_ * *c;
}

GroupMap Subgroup::factor(const GroupMap& h) const {
  if (h.dst() != ambient_) fail(ErrorKind::MismatchedTarget, "factor: map does not land in the ambient group");
  if (!lattice_.contains_columns(h.lift()))
    fail(ErrorKind::PreconditionViolated, "factor: image is not contained in the subgroup");
  return GroupMap::unchecked(h.src(), group_, to_group_ * lattice_.coordinates(h.lift()));
}

Subgroup operator+(const Subgroup& a, const Subgroup& b) {
  if (a.ambient() != b.ambient()) fail(ErrorKind::MismatchedTarget, "sum of subgroups of different groups");
  return Subgroup(a.ambient(), a.lattice() + b.lattice());
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.ambient() != b.ambient()) fail(ErrorKind::MismatchedTarget, "intersection of subgroups of different groups");
  return Subgroup(a.ambient(), a.lattice().intersect(b.lattice()));
}

GroupMap Quotient::induce(const GroupMap& g) const {
  if (g.src() != proj.src()) fail(ErrorKind::MismatchedSource, "induce: map does not start at the ambient group");
  if (!g.dst().is_zero_columns(g.lift() * kernel_lifts.basis()))
    fail(ErrorKind::IllDefined, "induce: map does not vanish on the kernel");
  return GroupMap::unchecked(group, g.dst(), g.lift() * section);
}

Quotient quotient(const FgGroup& g, const Lattice& lifts) {
  Lattice l = lifts + g.relation_lattice();
  MinimalCoords mc = minimal_coords(g.ambient_rank(), l.basis());
  Quotient q;
  q.group = FgGroup::from_orders(mc.orders);
  q.proj = GroupMap::unchecked(g, q.group, std::move(mc.to_min));
  q.section = std::move(mc.from_min);
  q.kernel_lifts = std::move(l);
  return q;
}

Quotient quotient(const Subgroup& s) { return quotient(s.ambient(), s.lattice()); }

DirectSum direct_sum(const FgGroup& a, const FgGroup& b) {
  const size_t n = a.ambient_rank(), m = b.ambient_rank();
  DirectSum s;
  s.group = FgGroup(n + m, block_diag(a.relations(), b.relations()));
  IntMatrix i1(n + m, n), i2(n + m, m);
  for (size_t k = 0; k < n; ++k) i1(k, k) = 1;
  for (size_t k = 0; k < m; ++k) i2(n + k, k) = 1;
  s.in1 = GroupMap::unchecked(a, s.group, i1);
  s.in2 = GroupMap::unchecked(b, s.group, i2);
  s.pr1 = GroupMap::unchecked(s.group, a, i1.transpose());
  s.pr2 = GroupMap::unchecked(s.group, b, i2.transpose());
  return s;
}

GroupMap copair(const DirectSum& s, const GroupMap& f, const GroupMap& g) {
  if (f.dst() != g.dst()) fail(ErrorKind::MismatchedTarget, "copair: different targets");
  if (f.src() != s.in1.src() || g.src() != s.in2.src()) fail(ErrorKind::MismatchedSource, "copair: wrong summands");
  return GroupMap::unchecked(s.group, f.dst(), hstack(f.lift(), g.lift()));
}

GroupMap pair(const DirectSum& s, const GroupMap& f, const GroupMap& g) {
  if (f.src() != g.src()) fail(ErrorKind::MismatchedSource, "pair: different sources");
  if (f.dst() != s.pr1.dst() || g.dst() != s.pr2.dst()) fail(ErrorKind::MismatchedTarget, "pair: wrong summands");
  return GroupMap::unchecked(f.src(), s.group, vstack(f.lift(), g.lift()));
}

Subgroup kernel(const GroupMap& f) {
  return Subgroup(f.src(), f.dst().relation_lattice().preimage(f.lift()));
}

Subgroup image(const GroupMap& f) { return Subgroup(f.dst(), Lattice::span(f.lift())); }

Quotient cokernel(const GroupMap& f) { return quotient(f.dst(), Lattice::span(f.lift())); }

bool is_mono(const GroupMap& f) {
  return f.dst().relation_lattice().preimage(f.lift()) == f.src().relation_lattice();
}

bool is_epi(const GroupMap& f) {
  return (Lattice::span(f.lift()) + f.dst().relation_lattice()).is_full();
}

bool is_iso(const GroupMap& f) { return is_mono(f) && is_epi(f); }

Pullback pullback(const GroupMap& f, const GroupMap& g) {
  if (f.dst() != g.dst()) fail(ErrorKind::MismatchedTarget, "pullback of maps with different targets");
  Pullback p;
  p.sum = direct_sum(f.src(), g.src());
  p.sub = kernel(copair(p.sum, f, -g));
  p.p1 = p.sum.pr1 * p.sub.inclusion();
  p.p2 = p.sum.pr2 * p.sub.inclusion();
  return p;
}

Pushout pushout(const GroupMap& f, const GroupMap& g) {
  if (f.src() != g.src()) fail(ErrorKind::MismatchedSource, "pushout of maps with different sources");
  Pushout p;
  p.sum = direct_sum(f.dst(), g.dst());
  p.quot = cokernel(pair(p.sum, f, -g));
  p.j1 = p.quot.proj * p.sum.in1;
  p.j2 = p.quot.proj * p.sum.in2;
  return p;
}

Lattice torsion_lattice(const FgGroup& g) { return g.relation_lattice().saturation(); }

TorsionDecomposition torsion_decompose(const FgGroup& g) {
  Lattice t = torsion_lattice(g);
  return TorsionDecomposition{g, Subgroup(g, t), quotient(g, t)};
}

HomGroup::HomGroup(FgGroup src, FgGroup dst) : src_(std::move(src)), dst_(std::move(dst)) {
  const MinimalCoords& ms = src_.minimal();
  const MinimalCoords& md = dst_.minimal();
  for (size_t i = 0; i < md.orders.size(); ++i)
    for (size_t j = 0; j < ms.orders.size(); ++j) {
      const Int& a = ms.orders[j];
      const Int& b = md.orders[i];
      Int step, order;
      if (b.is_zero()) {
        if (!a.is_zero()) continue;
        step = 1;
        order = 0;
      } else if (a.is_zero()) {
        step = 1;
        order = b;
      } else {
        Int g = gcd(a, b);
        if (g.is_one()) continue;
        step = exact_div(b, g);
        order = g;
      }
      IntMatrix e(md.orders.size(), ms.orders.size());
      e(i, j) = step;
      gens_.push_back(GroupMap::unchecked(src_, dst_, md.from_min * e * ms.to_min));
      orders_.push_back(order);
      slot_.emplace_back(i, j);
      step_.push_back(step);
    }
  group_ = FgGroup::from_orders(orders_);
}

IntVec HomGroup::coordinates(const GroupMap& f) const {
  if (f.src() != src_ || f.dst() != dst_) fail(ErrorKind::MismatchedEndpoints, "hom coordinates: wrong endpoints");
  IntMatrix lm = dst_.minimal().to_min * f.lift() * src_.minimal().from_min;
  IntVec c(gens_.size());
  for (size_t k = 0; k < gens_.size(); ++k) {
    auto [i, j] = slot_[k];
    Int v = lm(i, j);
    const Int& b = dst_.minimal().orders[i];
    if (!b.is_zero()) v = floor_mod(v, b);
    if (!divides(step_[k], v)) fail(ErrorKind::IllDefined, "hom coordinates: not a homomorphism");
    v = exact_div(v, step_[k]);
    if (!orders_[k].is_zero()) v = floor_mod(v, orders_[k]);
    c[k] = std::move(v);
  }
  return c;
}

GroupMap HomGroup::element(const IntVec& coords) const {
  if (coords.size() != gens_.size()) fail(ErrorKind::InvalidInput, "hom element: wrong coordinate count");
  IntMatrix l(dst_.ambient_rank(), src_.ambient_rank());
  for (size_t k = 0; k < gens_.size(); ++k)
    if (!coords[k].is_zero()) l += coords[k] * gens_[k].lift();
  return GroupMap::unchecked(src_, dst_, std::move(l));
}

HomGroup hom_group(const FgGroup& g, const FgGroup& h) { return HomGroup(g, h); }

}  // namespace tiltkit
