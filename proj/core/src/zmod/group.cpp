#include "tiltkit/zmod/group.hpp"

#include <sstream>

#include "tiltkit/errors.hpp"
#include "tiltkit/zmod/reduction.hpp"

namespace tiltkit {

std::string CanonicalForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (free_rank > 0) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

MinimalCoords minimal_coords(size_t n, const IntMatrix& relations) {
  SmithForm s = smith(relations, kTrackU | kTrackUinv);
  std::vector<size_t> keep;
  MinimalCoords mc;
  for (size_t i = 0; i < n; ++i) {
    if (i < s.rank && s.diag[i].is_one()) continue;
    keep.push_back(i);
    mc.orders.push_back(i < s.rank ? s.diag[i] : Int(0));
  }
  mc.to_min = s.U.select_rows(keep);
  mc.from_min = s.Uinv.select_cols(keep);
  return mc;
}

FgGroup::FgGroup() : FgGroup(0, IntMatrix(0, 0)) {}

FgGroup::FgGroup(const IntMatrix& relations) : FgGroup(relations.rows(), relations) {}

FgGroup::FgGroup(size_t ambient_rank, const IntMatrix& relations) {
  if (relations.rows() != ambient_rank)
    fail(ErrorKind::InvalidInput, "relation matrix has " + std::to_string(relations.rows()) +
                                      " rows for ambient rank " + std::to_string(ambient_rank));
  auto d = std::make_shared<Data>();
  d->n = ambient_rank;
  d->relations = relations;
  d->rel_lattice = Lattice::span(relations);
  d->min = minimal_coords(ambient_rank, relations);
  for (const auto& o : d->min.orders) {
    if (o.is_zero()) ++d->canonical.free_rank;
    else d->canonical.torsion.push_back(o);
  }
  d_ = std::move(d);
}

FgGroup FgGroup::free(size_t n) { return FgGroup(n, IntMatrix(n, 0)); }

FgGroup FgGroup::cyclic(const Int& d) { return from_orders({d}); }

FgGroup FgGroup::from_orders(const IntVec& orders) {
  std::vector<IntVec> cols;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (orders[i].is_zero()) continue;
    IntVec c(orders.size());
    c[i] = orders[i];
    cols.push_back(std::move(c));
  }
  return FgGroup(orders.size(), IntMatrix::from_columns(orders.size(), cols));
}

IntVec FgGroup::min_coords(const IntVec& v) const {
  IntVec c = d_->min.to_min * v;
  for (size_t i = 0; i < c.size(); ++i)
    if (!d_->min.orders[i].is_zero()) c[i] = floor_mod(c[i], d_->min.orders[i]);
  return c;
}

bool operator==(const FgGroup& a, const FgGroup& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->n == b.d_->n && a.d_->rel_lattice == b.d_->rel_lattice;
}

std::string FgGroup::str() const {
  std::ostringstream os;
  os << "<Z^" << d_->n << " / " << d_->relations.str() << " ≅ " << d_->canonical.str() << ">";
  return os.str();
}

GroupMap::GroupMap(FgGroup src, FgGroup dst, IntMatrix lift)
    : src_(std::move(src)), dst_(std::move(dst)), lift_(std::move(lift)) {
  if (lift_.rows() != dst_.ambient_rank() || lift_.cols() != src_.ambient_rank())
    fail(ErrorKind::InvalidInput, "lift is " + std::to_string(lift_.rows()) + "x" + std::to_string(lift_.cols()) +
                                      ", expected " + std::to_string(dst_.ambient_rank()) + "x" +
                                      std::to_string(src_.ambient_rank()));
  if (!dst_.is_zero_columns(lift_ * src_.relations()))
    fail(ErrorKind::IllDefined, "lift does not carry source relations into target relations");
}

GroupMap GroupMap::unchecked(FgGroup src, FgGroup dst, IntMatrix lift) {
  GroupMap f;
  f.src_ = std::move(src);
  f.dst_ = std::move(dst);
  f.lift_ = std::move(lift);
  return f;
}

GroupMap GroupMap::zero(const FgGroup& src, const FgGroup& dst) {
  return unchecked(src, dst, IntMatrix(dst.ambient_rank(), src.ambient_rank()));
}

GroupMap GroupMap::identity(const FgGroup& g) {
  return unchecked(g, g, IntMatrix::identity(g.ambient_rank()));
}

bool same_endpoints(const GroupMap& a, const GroupMap& b) { return a.src() == b.src() && a.dst() == b.dst(); }

bool GroupMap::equals(const GroupMap& o) const {
  return same_endpoints(*this, o) && dst_.is_zero_columns(lift_ - o.lift_);
}

GroupMap GroupMap::operator-() const { return unchecked(src_, dst_, -lift_); }

GroupMap operator+(const GroupMap& a, const GroupMap& b) {
  if (!same_endpoints(a, b)) fail(ErrorKind::MismatchedEndpoints, "sum of maps with different endpoints");
  return GroupMap::unchecked(a.src_, a.dst_, a.lift_ + b.lift_);
}

GroupMap operator-(const GroupMap& a, const GroupMap& b) {
  if (!same_endpoints(a, b)) fail(ErrorKind::MismatchedEndpoints, "difference of maps with different endpoints");
  return GroupMap::unchecked(a.src_, a.dst_, a.lift_ - b.lift_);
}

GroupMap operator*(const Int& k, const GroupMap& f) { return GroupMap::unchecked(f.src_, f.dst_, k * f.lift_); }

GroupMap operator*(const GroupMap& g, const GroupMap& f) {
  if (f.dst_ != g.src_) fail(ErrorKind::MismatchedEndpoints, "composition: target of first map is not source of second");
  return GroupMap::unchecked(f.src_, g.dst_, g.lift_ * f.lift_);
}

std::string GroupMap::str() const {
  return "{" + src_.str() + " -> " + dst_.str() + " by " + lift_.str() + "}";
}

}  // namespace tiltkit
