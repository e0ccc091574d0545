#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kron22/indices.hpp"
#include "kron22/kron.hpp"
#include "kron22/quasipolynomial.hpp"

namespace kron22 {

// One point of a stretching function: value = g at scale N times the base index.
struct StretchSample {
  long long scale = 0;
  long long value = 0;
  bool operator==(const StretchSample&) const = default;
};

// Values of kron_two_row along N * idx for N = 1..scale_max.
std::vector<StretchSample> stretch_samples(const KronIndex& idx, int scale_max,
                                           Engine engine = Engine::Chamber,
                                           Oracle* oracle = nullptr);

// A sample set inconsistent with the pinned (period 2, degree <= 2) shape is a
// finding, not a crash.
struct FitFailure {
  int parity = 0;  // the violated class: scales == parity mod 2
  std::string reason;
};

// Exact rational interpolation of a univariate period-2, degree-<=2
// quasipolynomial through the samples.  Each parity class needs at least
// three samples; every remaining sample must be reproduced exactly and all
// coefficient denominators must divide 4.  Only the pinned (2, 2) shape is
// supported; other arguments throw std::invalid_argument.
std::variant<Quasipolynomial, FitFailure> fit_quasipolynomial(
    std::span<const StretchSample> samples, int period = 2, int degree = 2);

// A fitted stretching function: the fit reproduces every sample and takes the
// value 1 at scale 0.
struct StretchProfile {
  KronIndex base;
  std::vector<StretchSample> samples;
  Quasipolynomial fitted{1, std::vector<std::vector<long long>>(2, std::vector<long long>(3, 0))};
};

std::variant<StretchProfile, FitFailure> stretch_profile(const KronIndex& idx, int scale_max,
                                                         Engine engine = Engine::Chamber,
                                                         Oracle* oracle = nullptr);

// A verified counterexample to saturation of the stretching function:
// g(idx) = 0 but g(2*idx) > 0, confirmed by both the engine and the oracle.
struct Counterexample {
  KronIndex idx;
  long long engine_at_1 = 0, engine_at_2 = 0;
  long long oracle_at_1 = 0, oracle_at_2 = 0;
  std::string system;  // the satisfied vanishing system tag
};

// Sweeps every valid index with n_min <= n <= n_max.  Each candidate found by
// the engine is re-verified through the character oracle at both scales
// before inclusion; an engine/oracle mismatch throws std::logic_error (the
// two must agree).  Requires 2*n_max within the oracle cap.
std::vector<Counterexample> find_saturation_counterexamples(long long n_min, long long n_max,
                                                            Oracle& oracle,
                                                            Engine engine = Engine::Chamber);

// Versioned JSON certificate document for a counterexample sweep.
std::string counterexamples_json(std::span<const Counterexample> certificates,
                                 long long n_min, long long n_max);

}  // namespace kron22
