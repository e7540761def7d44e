#include "tiltkit/zmod/linear_system.hpp"

#include "tiltkit/errors.hpp"
#include "tiltkit/zmod/reduction.hpp"

namespace tiltkit {

size_t LinearMapSystem::add_unknown(const FgGroup& src, const FgGroup& dst) {
  homs_->emplace_back(src, dst);
  return homs_->size() - 1;
}

void LinearMapSystem::add_equation(const std::vector<MapTerm>& terms, const std::optional<GroupMap>& rhs) {
  if (terms.empty() && !rhs) return;
  std::optional<FgGroup> source, target;
  if (rhs) {
    source = rhs->src();
    target = rhs->dst();
  }
  for (const auto& t : terms) {
    if (t.unknown >= homs_->size()) fail(ErrorKind::PreconditionViolated, "equation refers to an unknown that does not exist");
    const HomGroup& h = (*homs_)[t.unknown];
    if (t.pre && t.pre->dst() != h.src()) fail(ErrorKind::MismatchedEndpoints, "pre-composed map does not land in the unknown's source");
    if (t.post && t.post->src() != h.dst()) fail(ErrorKind::MismatchedEndpoints, "post-composed map does not start at the unknown's target");
    FgGroup s = t.pre ? t.pre->src() : h.src();
    FgGroup d = t.post ? t.post->dst() : h.dst();
    if (source && *source != s) fail(ErrorKind::MismatchedEndpoints, "equation terms have different sources");
    if (target && *target != d) fail(ErrorKind::MismatchedEndpoints, "equation terms have different targets");
    source = s;
    target = d;
  }
  eqs_.push_back(Equation{terms, rhs, *source, *target});
}

LinearMapSolution LinearMapSystem::solve() const {
  LinearMapSolution sol;
  sol.homs_ = homs_;
  sol.offsets_.push_back(0);
  for (const auto& h : *homs_) sol.offsets_.push_back(sol.offsets_.back() + h.size());
  const size_t nvars = sol.offsets_.back();

  // Rows: one per (equation, source generator, target minimal coordinate).
  size_t nrows = 0, nslack = 0;
  for (const auto& e : eqs_) {
    const size_t cm = e.target.minimal().orders.size();
    nrows += e.source.ambient_rank() * cm;
    for (const auto& o : e.target.minimal().orders)
      if (!o.is_zero()) nslack += e.source.ambient_rank();
  }
  IntMatrix a(nrows, nvars + nslack);
  IntVec b(nrows);
  size_t row0 = 0, slack = nvars;
  for (const auto& e : eqs_) {
    const MinimalCoords& tc = e.target.minimal();
    const size_t cm = tc.orders.size();
    const size_t na = e.source.ambient_rank();
    auto row_of = [&](size_t t, size_t col) { return row0 + t * na + col; };
    for (const auto& term : e.terms) {
      const HomGroup& h = (*homs_)[term.unknown];
      // u = to_min(C) · post · from_min(dst_k), w = to_min(src_k) · pre
      IntMatrix u = term.post ? tc.to_min * term.post->lift() : tc.to_min;
      u = u * h.dst().minimal().from_min;
      IntMatrix w = term.pre ? h.src().minimal().to_min * term.pre->lift() : h.src().minimal().to_min;
      for (size_t g = 0; g < h.size(); ++g) {
        auto [i, j] = h.slot(g);
        Int s = term.coeff * h.step(g);
        const size_t var = sol.offsets_[term.unknown] + g;
        for (size_t t = 0; t < cm; ++t) {
          if (u(t, i).is_zero()) continue;
          Int su = s * u(t, i);
          for (size_t col = 0; col < na; ++col)
            if (!w(j, col).is_zero()) a(row_of(t, col), var).submul(-su, w(j, col));
        }
      }
    }
    if (e.rhs) {
      IntMatrix r = tc.to_min * e.rhs->lift();
      for (size_t t = 0; t < cm; ++t)
        for (size_t col = 0; col < na; ++col) b[row_of(t, col)] = r(t, col);
    }
    for (size_t t = 0; t < cm; ++t) {
      if (tc.orders[t].is_zero()) continue;
      for (size_t col = 0; col < na; ++col) a(row_of(t, col), slack++) = tc.orders[t];
    }
    row0 += na * cm;
  }

  IntSolution s = solve_integer(a, b);
  if (s.particular) sol.particular_ = IntVec(s.particular->begin(), s.particular->begin() + static_cast<std::ptrdiff_t>(nvars));
  sol.kernel_ = s.kernel.row_range(0, nvars);
  return sol;
}

std::vector<GroupMap> LinearMapSolution::maps_from(const IntVec& coords) const {
  std::vector<GroupMap> out;
  for (size_t k = 0; k < homs_->size(); ++k) {
    IntVec c(coords.begin() + static_cast<std::ptrdiff_t>(offsets_[k]),
             coords.begin() + static_cast<std::ptrdiff_t>(offsets_[k + 1]));
    out.push_back((*homs_)[k].element(c));
  }
  return out;
}

std::vector<GroupMap> LinearMapSolution::particular() const {
  if (!particular_) fail(ErrorKind::PreconditionViolated, "system has no solution");
  return maps_from(*particular_);
}

bool LinearMapSolution::homogeneous_trivial() const {
  for (size_t j = 0; j < kernel_.cols(); ++j)
    for (size_t k = 0; k < homs_->size(); ++k)
      for (size_t g = 0; g < (*homs_)[k].size(); ++g) {
        const Int& c = kernel_(offsets_[k] + g, j);
        const Int& o = (*homs_)[k].orders()[g];
        if (o.is_zero() ? !c.is_zero() : !divides(o, c)) return false;
      }
  return true;
}

FgGroup LinearMapSolution::coordinate_group() const {
  IntVec orders;
  for (const auto& h : *homs_) orders.insert(orders.end(), h.orders().begin(), h.orders().end());
  return FgGroup::from_orders(orders);
}

Subgroup LinearMapSolution::homogeneous_subgroup() const {
  return Subgroup::generated_by(coordinate_group(), kernel_);
}

Subgroup LinearMapSolution::homogeneous_subgroup(size_t k) const {
  return Subgroup::generated_by((*homs_)[k].group(), kernel_.row_range(offsets_[k], offsets_[k + 1]));
}

FgGroup LinearMapSolution::coordinate_group(size_t first, size_t last) const {
  IntVec orders;
  for (size_t k = first; k < last; ++k) orders.insert(orders.end(), (*homs_)[k].orders().begin(), (*homs_)[k].orders().end());
  return FgGroup::from_orders(orders);
}

Subgroup LinearMapSolution::homogeneous_subgroup(size_t first, size_t last) const {
  return Subgroup::generated_by(coordinate_group(first, last), kernel_.row_range(offsets_[first], offsets_[last]));
}

CommutingSolution solve_commuting(const FgGroup& src, const FgGroup& dst,
                                  const std::vector<std::pair<GroupMap, GroupMap>>& left,
                                  const std::vector<std::pair<GroupMap, GroupMap>>& right) {
  LinearMapSystem sys;
  size_t h = sys.add_unknown(src, dst);
  for (const auto& [a, b] : left) {
    if (a.dst() != src || b.dst() != dst || a.src() != b.src())
      fail(ErrorKind::MismatchedEndpoints, "left constraint h∘a = b has incompatible endpoints");
    sys.add_equation({MapTerm{std::nullopt, h, a}}, b);
  }
  for (const auto& [c, d] : right) {
    if (c.src() != dst || d.src() != src || c.dst() != d.dst())
      fail(ErrorKind::MismatchedEndpoints, "right constraint c∘h = d has incompatible endpoints");
    sys.add_equation({MapTerm{c, h, std::nullopt}}, d);
  }
  LinearMapSolution s = sys.solve();
  CommutingSolution out{sys.hom(h), std::nullopt, s.homogeneous_subgroup(h)};
  if (s.solvable()) out.particular = s.particular(h);
  return out;
}

}  // namespace tiltkit
