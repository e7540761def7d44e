#pragma once

#include <optional>
#include <vector>

#include "tiltkit/zmod/int_matrix.hpp"

namespace tiltkit {

// U * M * V = D with U, V unimodular and d_1 | d_2 | ... | d_rank, all positive.
struct SmithForm {
  IntMatrix U, Uinv, V, Vinv;
  IntVec diag;  // the nonzero diagonal entries, length rank
  size_t rank = 0;
  IntMatrix D(size_t rows, size_t cols) const;
};

enum SmithTrack : unsigned {
  kTrackU = 1,
  kTrackUinv = 2,
  kTrackV = 4,
  kTrackVinv = 8,
  kTrackAll = 15,
};

SmithForm smith(const IntMatrix& m, unsigned track = kTrackAll);

// Column echelon form H = A * V: the first `rank` columns have strictly increasing
// pivot rows with positive pivots, the remaining columns are zero.
struct ColumnEchelon {
  IntMatrix H;
  IntMatrix V;  // empty unless tracked
  std::vector<size_t> pivot_rows;
  size_t rank() const { return pivot_rows.size(); }
};

ColumnEchelon column_echelon(const IntMatrix& a, bool track_transform);

// Canonical (reduced) column Hermite basis of the lattice spanned by the columns.
IntMatrix hermite_basis(const IntMatrix& gens);

// Basis (as columns) of the integer kernel {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

struct IntSolution {
  std::optional<IntVec> particular;
  IntMatrix kernel;  // columns span the homogeneous solutions
};

// All integer solutions of A x = b.
IntSolution solve_integer(const IntMatrix& a, const IntVec& b);

// Determinant-free exact test: is the integer matrix invertible over Z (square, |det| = 1)?
bool is_unimodular(const IntMatrix& m);

}  // namespace tiltkit
