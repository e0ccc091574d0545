#pragma once

#include <array>
#include <span>

#include "kron22/indices.hpp"

namespace kron22 {

// One inequality a*X + b*Y + c >= 0 of the parametric polygon whose integral
// points are counted by the reduced Kronecker coefficient gbar_{(r)(s)}^{(g1,g2)}.
struct ConstraintRow {
  long long a = 0, b = 0, c = 0;
  bool operator==(const ConstraintRow&) const = default;
};

// The seven rows, in fixed index order 0..6:
//   0: X - s            1: X - r              2: X + Y - r - s + g1
//   3: Y                4: Y - X + g1 + g2    5: -X - Y + r + s - g2
//   6: X - Y - g1
// Any integer 4-tuple is accepted; the ReducedIndex invariants are not needed
// to write the rows down.
std::array<ConstraintRow, 7> polygon_constraints(const ReducedIndex& h);

// Exact number of integer points satisfying every row.  Sweeps X over the
// feasible range and intersects the Y-interval per column; the X-range is
// obtained by eliminating Y from the row system.  Throws std::domain_error if
// the solution set is unbounded.
long long count_lattice_points(std::span<const ConstraintRow> rows);

// gbar_{(r)(s)}^{(g1,g2)} by lattice-point counting.  Throws
// std::domain_error unless h satisfies the ReducedIndex invariants
// (r, s >= 0 and g1 >= g2 >= 0); the counting formula is stated only there.
long long reduced_kron_count(const ReducedIndex& h);

}  // namespace kron22
