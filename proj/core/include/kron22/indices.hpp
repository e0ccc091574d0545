#pragma once

#include <string>
#include <variant>
#include <vector>

#include "kron22/partition.hpp"

namespace kron22 {

// Index of a reduced (stable) Kronecker coefficient with one-row top shapes
// and a two-row bottom shape: gbar_{(r)(s)}^{(g1,g2)}.
struct ReducedIndex {
  long long r = 0, s = 0, g1 = 0, g2 = 0;

  bool valid() const { return r >= 0 && s >= 0 && g1 >= g2 && g2 >= 0; }
  ReducedIndex scaled(long long m) const { return {r * m, s * m, g1 * m, g2 * m}; }
  bool operator==(const ReducedIndex&) const = default;
  auto operator<=>(const ReducedIndex&) const = default;
};

// Normalized index of a Kronecker coefficient with two two-row shapes:
// g_{(n-r,r),(n-s,s)}^{(n-g1-g2, g1, g2)}.
struct KronIndex {
  long long n = 0, r = 0, s = 0, g1 = 0, g2 = 0;

  // True iff all three index sequences are genuine partitions of n.
  bool valid() const {
    return r >= 0 && n - r >= r && s >= 0 && n - s >= s && g2 >= 0 &&
           g1 >= g2 && n - g1 - g2 >= g1;
  }
  Partition lambda() const { return Partition({n - g1 - g2, g1, g2}); }
  Partition mu() const { return Partition({n - r, r}); }
  Partition nu() const { return Partition({n - s, s}); }
  ReducedIndex reduced() const { return {r, s, g1, g2}; }
  KronIndex scaled(long long m) const { return {n * m, r * m, s * m, g1 * m, g2 * m}; }
  bool operator==(const KronIndex&) const = default;
  auto operator<=>(const KronIndex&) const = default;
};

std::string to_string(const ReducedIndex& h);
std::string to_string(const KronIndex& idx);

// Admissibility report for a triple (lambda, mu, nu): equal weights and
// lengths within (4, 2, 2).  Total function; all failures enumerated.
struct TripleReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

TripleReport validate_triple(const Partition& lambda, const Partition& mu,
                             const Partition& nu);

// Result of normalizing a valid triple: either a KronIndex with a three-part
// lambda, or the signal that the coefficient is zero because the row/column
// reduction left the two-two-row family.
struct ZeroSignal {
  bool operator==(const ZeroSignal&) const = default;
};

using KronIndexOrZero = std::variant<KronIndex, ZeroSignal>;

// Applies g_{(m1,m2)(n1,n2)}^{(l1,l2,l3,l4)} =
// g_{(m1-2,m2-2)(n1-2,n2-2)}^{(l1-1,l2-1,l3-1,l4-1)} until lambda has at most
// three parts, then reads off (n, r, s, g1, g2).  Returns ZeroSignal when an
// intermediate sequence fails to be a partition.  Throws std::invalid_argument
// when validate_triple fails.
KronIndexOrZero to_kron_index(const Partition& lambda, const Partition& mu,
                              const Partition& nu);

// Every valid KronIndex of weight n, ordered lexicographically by
// (r, s, g1, g2).  Sweeps and reports rely on this canonical order.
std::vector<KronIndex> valid_indices_of_weight(long long n);

}  // namespace kron22
