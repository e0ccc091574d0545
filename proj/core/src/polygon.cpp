#include "kron22/polygon.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kron22/checked_int.hpp"

namespace kron22 {

std::array<ConstraintRow, 7> polygon_constraints(const ReducedIndex& h) {
  return {{
      {1, 0, -h.s},
      {1, 0, -h.r},
      {1, 1, h.g1 - h.r - h.s},
      {0, 1, 0},
      {-1, 1, h.g1 + h.g2},
      {-1, -1, h.r + h.s - h.g2},
      {1, -1, -h.g1},
  }};
}

long long count_lattice_points(std::span<const ConstraintRow> rows) {
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  long long xlo = -kInf, xhi = kInf;
  bool infeasible = false;
  std::vector<ConstraintRow> lower, upper;  // b > 0 resp. b < 0

  auto add_pure_x = [&](long long a, long long c) {
    if (a == 0) {
      if (c < 0) infeasible = true;
    } else if (a > 0) {
      xlo = std::max(xlo, ceil_div(-c, a));
    } else {
      xhi = std::min(xhi, floor_div(c, -a));
    }
  };

  for (const ConstraintRow& row : rows) {
    if (row.b == 0)
      add_pure_x(row.a, row.c);
    else if (row.b > 0)
      lower.push_back(row);
    else
      upper.push_back(row);
  }

  // Eliminate Y: each (lower, upper) pair yields a pure-X constraint.
  for (const ConstraintRow& lo : lower)
    for (const ConstraintRow& up : upper) {
      long long a = narrow_to_i64(checked_add(checked_mul(lo.a, -up.b), checked_mul(up.a, lo.b)));
      long long c = narrow_to_i64(checked_add(checked_mul(lo.c, -up.b), checked_mul(up.c, lo.b)));
      add_pure_x(a, c);
    }

  if (infeasible || xlo > xhi) return 0;
  if (xlo == -kInf || xhi == kInf || lower.empty() || upper.empty())
    throw std::domain_error("count_lattice_points: unbounded solution set");

  long long total = 0;
  for (long long x = xlo; x <= xhi; ++x) {
    long long ylo = -kInf, yhi = kInf;
    for (const ConstraintRow& row : lower)
      ylo = std::max(ylo, ceil_div(-(row.a * x + row.c), row.b));
    for (const ConstraintRow& row : upper)
      yhi = std::min(yhi, floor_div(row.a * x + row.c, -row.b));
    if (yhi >= ylo) total += yhi - ylo + 1;
  }
  return total;
}

long long reduced_kron_count(const ReducedIndex& h) {
  if (!h.valid())
    throw std::domain_error("reduced_kron_count: index must satisfy r,s >= 0 and g1 >= g2 >= 0; got " +
                            to_string(h));
  auto rows = polygon_constraints(h);
  return count_lattice_points(rows);
}

}  // namespace kron22
