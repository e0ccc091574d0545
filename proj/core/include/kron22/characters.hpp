#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kron22/checked_int.hpp"
#include "kron22/partition.hpp"

namespace kron22 {

using BigInt = boost::multiprecision::cpp_int;

// All ways to remove a border strip of the given size from a shape, with the
// Murnaghan-Nakayama sign (-1)^height attached.
std::vector<std::pair<Partition, int>> border_strip_removals(const Partition& shape,
                                                             long long size);

// Number of standard Young tableaux of the shape (hook length formula).
BigInt syt_count(const Partition& shape);

// Centralizer order of the conjugacy class of cycle type rho.
BigInt centralizer_order(const Partition& rho);

// One irreducible character value chi_lambda(rho), by the Murnaghan-Nakayama
// border-strip recursion.  Weights must match.
BigInt mn_character(const Partition& lambda, const Partition& rho);

// One visit per conjugacy class of S_n during a batched character sweep.
// The class has cycle type prefix + 1^ones with prefix parts >= 2.
struct ClassVisit {
  std::span<const long long> prefix;
  long long ones = 0;
  const BigInt& centralizer;
  // chi[t] = chi_{shapes[t]}(class), in the order the shapes were passed.
  std::span<const int128> chi;
};

// Evaluates the characters of every requested shape on every conjugacy class
// of S_n in a single depth-first sweep over cycle types.  Shapes must all
// have weight n.  The recursion removes border strips for the parts >= 2 and
// closes the trailing fixed points with standard-tableau counts, so the cost
// is dominated by the 1-free cycle types.
void for_each_class(long long n, std::span<const Partition> shapes,
                    const std::function<void(const ClassVisit&)>& visit);

}  // namespace kron22
