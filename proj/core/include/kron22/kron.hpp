#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kron22/chambers.hpp"
#include "kron22/indices.hpp"
#include "kron22/oracle.hpp"
#include "kron22/polygon.hpp"

namespace kron22 {

// Strategy for the reduced coefficients behind kron_two_row / kron_full.
// Count and Chamber must agree everywhere (tested); Oracle routes the whole
// query through the character oracle instead.
enum class Engine { Count, Chamber, Oracle };

Engine parse_engine(const std::string& name);  // "count" | "chamber" | "oracle"
std::string to_string(Engine e);

// gbar_{(r)(s)}^{(g1,g2)} under the selected engine.
long long reduced_engine_value(const ReducedIndex& h, Engine engine,
                               Oracle* oracle = nullptr);

// The sequence (1+la_1, ..., 1+la_{i-1}, la_{i+1}, ...): increment the first
// i-1 parts and drop the i-th (1-based).  For a genuine partition the result
// is again one, but it is returned as a raw sequence.
std::vector<long long> dagger(const Partition& lambda, int i);

// Reconstruction of g from reduced coefficients for shapes bounded by
// (l1*l2, l1, l2): the alternating sum of provider values over the dagger
// sequence of lambda.  The provider answers gbar_{alpha,beta}^{gamma}.
using ReducedProvider =
    std::function<long long(const Partition&, const Partition&, const Partition&)>;
long long kron_from_reduced_general(const Partition& lambda, const Partition& mu,
                                    const Partition& nu, const ReducedProvider& gbar,
                                    int l1 = 2, int l2 = 2);

// The three reduced indices whose alternating sum reconstructs a two-two-row
// Kronecker coefficient (all three are valid ReducedIndex instances whenever
// idx is valid).
std::array<ReducedIndex, 3> two_row_reduced_indices(const KronIndex& idx);

// The same indices with their values under the selected engine.
struct TwoRowTerms {
  ReducedIndex plain, drop_mid, drop_low;
  long long value_plain = 0, value_drop_mid = 0, value_drop_low = 0;
  long long total() const { return value_plain - value_drop_mid + value_drop_low; }
};
TwoRowTerms kron_two_row_terms(const KronIndex& idx, Engine engine, Oracle* oracle = nullptr);

// g_{(n-r,r),(n-s,s)}^{(n-g1-g2,g1,g2)}.  Throws std::invalid_argument on an
// invalid index.  Engine::Oracle computes the character inner product
// directly; the other engines use the three-term reconstruction.
long long kron_two_row(const KronIndex& idx, Engine engine = Engine::Chamber,
                       Oracle* oracle = nullptr);

// General entry point: validates the triple, normalizes it, and dispatches.
// A triple that normalizes to ZeroSignal yields 0.
long long kron_full(const Partition& lambda, const Partition& mu, const Partition& nu,
                    Engine engine = Engine::Chamber, Oracle* oracle = nullptr);

// The five vanishing systems for valid two-two-row indices.  Satisfying any
// of them forces g = 0; the converse holds on the support cone and is
// exercised empirically by the tests.  Throws on invalid idx.
bool vanishing_by_conditions(const KronIndex& idx);

// "S1".."S5" for the first satisfied system, "" when none is.
std::string vanishing_system_tag(const KronIndex& idx);

}  // namespace kron22
