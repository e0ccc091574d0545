#include "kron22/kron.hpp"

#include <algorithm>
#include <stdexcept>

#include "kron22/checked_int.hpp"

namespace kron22 {

Engine parse_engine(const std::string& name) {
  if (name == "count") return Engine::Count;
  if (name == "chamber") return Engine::Chamber;
  if (name == "oracle") return Engine::Oracle;
  throw std::invalid_argument("unknown engine '" + name + "' (count|chamber|oracle)");
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::Count: return "count";
    case Engine::Chamber: return "chamber";
    case Engine::Oracle: return "oracle";
  }
  return "?";
}

long long reduced_engine_value(const ReducedIndex& h, Engine engine, Oracle* oracle) {
  switch (engine) {
    case Engine::Count: return reduced_kron_count(h);
    case Engine::Chamber: return reduced_kron_fast(h);
    case Engine::Oracle: {
      Oracle& o = oracle ? *oracle : default_oracle();
      if (!h.valid())
        throw std::domain_error("reduced_engine_value: invalid reduced index " + to_string(h));
      return o.reduced(Partition({h.r}), Partition({h.s}), Partition({h.g1, h.g2}));
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<long long> dagger(const Partition& lambda, int i) {
  if (i < 1) throw std::invalid_argument("dagger: i must be >= 1");
  std::vector<long long> out;
  for (int t = 0; t < i - 1; ++t) out.push_back(lambda.part(t) + 1);
  for (int t = i; t < lambda.length(); ++t) out.push_back(lambda.part(t));
  return out;
}

long long kron_from_reduced_general(const Partition& lambda, const Partition& mu,
                                    const Partition& nu, const ReducedProvider& gbar,
                                    int l1, int l2) {
  if (lambda.weight() != mu.weight() || lambda.weight() != nu.weight())
    throw std::invalid_argument("kron_from_reduced_general: weights differ");
  if (mu.length() > l1 || nu.length() > l2 || lambda.length() > l1 * l2)
    throw std::invalid_argument("kron_from_reduced_general: shape lengths exceed (l1*l2, l1, l2)");
  Partition alpha = mu.tail(), beta = nu.tail();
  long long acc = 0;
  for (int i = 1; i <= l1 * l2; ++i) {
    // dagger of a zero-padded partition is again a partition.
    Partition gamma(dagger(lambda, i));
    long long term = gbar(alpha, beta, gamma);
    acc = (i % 2 == 1) ? acc + term : acc - term;
  }
  return acc;
}

std::array<ReducedIndex, 3> two_row_reduced_indices(const KronIndex& idx) {
  long long l1 = idx.n - idx.g1 - idx.g2;
  return {ReducedIndex{idx.r, idx.s, idx.g1, idx.g2},
          ReducedIndex{idx.r, idx.s, l1 + 1, idx.g2},
          ReducedIndex{idx.r, idx.s, l1 + 1, idx.g1 + 1}};
}

TwoRowTerms kron_two_row_terms(const KronIndex& idx, Engine engine, Oracle* oracle) {
  if (!idx.valid())
    throw std::invalid_argument("kron_two_row: invalid index " + to_string(idx));
  auto indices = two_row_reduced_indices(idx);
  TwoRowTerms t;
  t.plain = indices[0];
  t.drop_mid = indices[1];
  t.drop_low = indices[2];
  t.value_plain = reduced_engine_value(t.plain, engine, oracle);
  t.value_drop_mid = reduced_engine_value(t.drop_mid, engine, oracle);
  t.value_drop_low = reduced_engine_value(t.drop_low, engine, oracle);
  return t;
}

long long kron_two_row(const KronIndex& idx, Engine engine, Oracle* oracle) {
  if (!idx.valid())
    throw std::invalid_argument("kron_two_row: invalid index " + to_string(idx));
  if (engine == Engine::Oracle) {
    Oracle& o = oracle ? *oracle : default_oracle();
    return o.kronecker(idx.lambda(), idx.mu(), idx.nu());
  }
  return kron_two_row_terms(idx, engine, oracle).total();
}

long long kron_full(const Partition& lambda, const Partition& mu, const Partition& nu,
                    Engine engine, Oracle* oracle) {
  TripleReport report = validate_triple(lambda, mu, nu);
  if (!report.ok()) {
    std::string msg = "kron_full: invalid triple:";
    for (const auto& f : report.failures) msg += " " + f + ";";
    throw std::invalid_argument(msg);
  }
  if (engine == Engine::Oracle) {
    Oracle& o = oracle ? *oracle : default_oracle();
    return o.kronecker(lambda, mu, nu);
  }
  KronIndexOrZero idx = to_kron_index(lambda, mu, nu);
  if (std::holds_alternative<ZeroSignal>(idx)) return 0;
  return kron_two_row(std::get<KronIndex>(idx), engine, oracle);
}

namespace {

bool odd(long long v) { return ((v % 2) + 2) % 2 == 1; }

}  // namespace

std::string vanishing_system_tag(const KronIndex& idx) {
  if (!idx.valid())
    throw std::invalid_argument("vanishing_by_conditions: invalid index " + to_string(idx));
  const long long n = idx.n, r = idx.r, s = idx.s, g1 = idx.g1, g2 = idx.g2;
  const long long gg = 2 * g1 + g2;  // |gamma| + gamma_1
  if (n == 2 * s && n == 2 * r && (odd(g1) || odd(g2))) return "S1";
  if (n == std::max(2 * r, 2 * s) && g1 == g2 && odd(r + s + g1)) return "S2";
  if (n == std::max({2 * r, 2 * s, gg}) && g2 == 0 && odd(r + s + g1)) return "S3";
  if (n == gg && n == std::max(2 * r, 2 * s) && odd(r + s + g1)) return "S4";
  // Fifth system: both g1 and g2 even (the disjunctive variant seen in print
  // admits indices with positive coefficients, e.g. (4,2,1,1,0); this form is
  // exact against the oracle on every valid index with n <= 20).
  if (n == std::max(2 * r, 2 * s) && std::abs(r - s) == 1 && std::min(2 * r, 2 * s) >= gg &&
      !odd(g1) && !odd(g2))
    return "S5";
  return "";
}

bool vanishing_by_conditions(const KronIndex& idx) {
  return !vanishing_system_tag(idx).empty();
}

}  // namespace kron22
