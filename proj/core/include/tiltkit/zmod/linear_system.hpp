#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tiltkit/zmod/ops.hpp"

namespace tiltkit {

// coeff · post ∘ h_unknown ∘ pre; absent post/pre mean identities.
struct MapTerm {
  std::optional<GroupMap> post;
  size_t unknown = 0;
  std::optional<GroupMap> pre;
  Int coeff = 1;
};

class LinearMapSolution;

// Simultaneous linear equations Σ terms = rhs in unknown homomorphisms h_k, each
// parametrized by the coordinates of its Hom group.
class LinearMapSystem {
 public:
  size_t add_unknown(const FgGroup& src, const FgGroup& dst);
  void add_equation(const std::vector<MapTerm>& terms, const std::optional<GroupMap>& rhs = std::nullopt);

  size_t unknowns() const { return homs_->size(); }
  const HomGroup& hom(size_t k) const { return (*homs_)[k]; }

  LinearMapSolution solve() const;

 private:
  struct Equation {
    std::vector<MapTerm> terms;
    std::optional<GroupMap> rhs;
    FgGroup source, target;
  };
  std::shared_ptr<std::vector<HomGroup>> homs_ = std::make_shared<std::vector<HomGroup>>();
  std::vector<Equation> eqs_;
};

class LinearMapSolution {
 public:
  bool solvable() const { return particular_.has_value(); }
  // One map per unknown; requires solvable().
  std::vector<GroupMap> particular() const;
  GroupMap particular(size_t k) const { return particular()[k]; }

  // Columns span the homogeneous solutions, in stacked Hom coordinates.
  const IntMatrix& homogeneous() const { return kernel_; }
  bool homogeneous_trivial() const;
  // The homogeneous solutions inside ⊕_k Hom(src_k, dst_k).
  FgGroup coordinate_group() const;
  Subgroup homogeneous_subgroup() const;
  // Projection of the homogeneous solutions to one unknown, inside its Hom group.
  Subgroup homogeneous_subgroup(size_t k) const;
  // Joint projection to the unknowns [first, last), inside their stacked coordinate group.
  Subgroup homogeneous_subgroup(size_t first, size_t last) const;
  FgGroup coordinate_group(size_t first, size_t last) const;

  std::vector<GroupMap> maps_from(const IntVec& coords) const;
  size_t offset(size_t k) const { return offsets_[k]; }
  size_t total() const { return offsets_.back(); }

 private:
  friend class LinearMapSystem;
  std::shared_ptr<std::vector<HomGroup>> homs_;
  std::vector<size_t> offsets_;
  std::optional<IntVec> particular_;
  IntMatrix kernel_;
};

struct CommutingSolution {
  HomGroup hom;
  std::optional<GroupMap> particular;
  Subgroup homogeneous;  // of hom.group()
};

// Find h: src → dst with h∘a_i = b_i and c_j∘h = d_j.
CommutingSolution solve_commuting(const FgGroup& src, const FgGroup& dst,
                                  const std::vector<std::pair<GroupMap, GroupMap>>& left,
                                  const std::vector<std::pair<GroupMap, GroupMap>>& right);

}  // namespace tiltkit
