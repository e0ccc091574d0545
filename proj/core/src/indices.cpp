#include "kron22/indices.hpp"

#include <stdexcept>

namespace kron22 {

std::string to_string(const ReducedIndex& h) {
  return "(" + std::to_string(h.r) + "," + std::to_string(h.s) + "," +
         std::to_string(h.g1) + "," + std::to_string(h.g2) + ")";
}

std::string to_string(const KronIndex& idx) {
  return "(" + std::to_string(idx.n) + "," + std::to_string(idx.r) + "," +
         std::to_string(idx.s) + "," + std::to_string(idx.g1) + "," +
         std::to_string(idx.g2) + ")";
}

TripleReport validate_triple(const Partition& lambda, const Partition& mu,
                             const Partition& nu) {
  TripleReport report;
  long long wl = lambda.weight(), wm = mu.weight(), wn = nu.weight();
  if (wm != wl)
    report.failures.push_back("|mu|=" + std::to_string(wm) +
                              " differs from |lambda|=" + std::to_string(wl));
  if (wn != wl)
    report.failures.push_back("|nu|=" + std::to_string(wn) +
                              " differs from |lambda|=" + std::to_string(wl));
  if (lambda.length() > 4)
    report.failures.push_back("lambda has " + std::to_string(lambda.length()) +
                              " parts, at most 4 allowed");
  if (mu.length() > 2)
    report.failures.push_back("mu has " + std::to_string(mu.length()) +
                              " parts, at most 2 allowed");
  if (nu.length() > 2)
    report.failures.push_back("nu has " + std::to_string(nu.length()) +
                              " parts, at most 2 allowed");
  return report;
}

KronIndexOrZero to_kron_index(const Partition& lambda, const Partition& mu,
                              const Partition& nu) {
  TripleReport report = validate_triple(lambda, mu, nu);
  if (!report.ok()) {
    std::string msg = "to_kron_index: invalid triple:";
    for (const auto& f : report.failures) msg += " " + f + ";";
    throw std::invalid_argument(msg);
  }

  long long l1 = lambda.part(0), l2 = lambda.part(1), l3 = lambda.part(2), l4 = lambda.part(3);
  long long m1 = mu.part(0), m2 = mu.part(1);
  long long n1 = nu.part(0), n2 = nu.part(1);

  // Each application peels one row off lambda's fourth part and one column
  // off mu and nu.  An intermediate non-partition means the coefficient
  // vanishes (validated against the character oracle in the test suite).
  while (l4 > 0) {
    l1 -= 1; l2 -= 1; l3 -= 1; l4 -= 1;
    m1 -= 2; m2 -= 2;
    n1 -= 2; n2 -= 2;
    if (m2 < 0 || n2 < 0) return ZeroSignal{};
  }

  KronIndex idx{l1 + l2 + l3, m2, n2, l2, l3};
  if (!idx.valid())
    throw std::logic_error("to_kron_index: reduction produced an invalid index");
  return idx;
}

std::vector<KronIndex> valid_indices_of_weight(long long n) {
  std::vector<KronIndex> out;
  if (n < 0) return out;
  for (long long r = 0; 2 * r <= n; ++r)
    for (long long s = 0; 2 * s <= n; ++s)
      for (long long g1 = 0; g1 <= n; ++g1)
        for (long long g2 = 0; g2 <= g1; ++g2) {
          if (n - g1 - g2 < g1) break;
          out.push_back({n, r, s, g1, g2});
        }
  return out;
}

}  // namespace kron22
