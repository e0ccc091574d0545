#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "kron22/characters.hpp"
#include "kron22/partition.hpp"

namespace kron22 {

/*
  Independent ground truth for the whole library: symmetric group characters
  by the Murnaghan-Nakayama rule, Kronecker coefficients as character inner
  products, and reduced Kronecker coefficients as the stable values of the
  associated stationary sequences.  Nothing in this module consults the
  lattice-point or chamber engines.

  Full character tables are built (and cached on disk) for small n; larger n
  are handled by batched class sweeps that never materialize a table.
*/

struct OracleConfig {
  // Hard ceiling on the symmetric group size the oracle will touch.
  long long cap = 20;
  // Full tables are built and cached for n up to this bound.
  long long table_build_max = 22;
  // Empty means Oracle::default_cache_dir().
  std::filesystem::path cache_dir;
  bool disk_cache = true;
};

class CharacterTable {
 public:
  long long n() const { return n_; }
  const std::vector<Partition>& classes() const { return classes_; }
  size_t index_of(const Partition& p) const;  // throws std::invalid_argument
  const std::vector<BigInt>& centralizers() const { return z_; }
  // chi_lambda(rho) with both arguments given by class index.
  long long chi(size_t lambda_index, size_t rho_index) const {
    return chi_[lambda_index * classes_.size() + rho_index];
  }

 private:
  friend class Oracle;
  long long n_ = 0;
  std::vector<Partition> classes_;
  std::vector<BigInt> z_;
  std::vector<int128> class_size_;  // n!/z per class
  std::vector<long long> chi_;      // lambda-major, classes^2 entries
};

class Oracle {
 public:
  explicit Oracle(OracleConfig cfg = {});

  const OracleConfig& config() const { return cfg_; }

  // chi_lambda(rho); weights must match.
  BigInt character(const Partition& lambda, const Partition& rho);

  // g_{mu,nu}^{lambda} as the character inner product over S_n.  Throws
  // std::domain_error when the common weight exceeds the configured cap
  // (raise OracleConfig::cap to go further) and std::invalid_argument on a
  // weight mismatch.
  long long kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

  // Same coefficients for many triples of one weight, sharing the class sweep.
  std::vector<long long> kronecker_many(long long n, std::span<const std::array<Partition, 3>> triples);

  // The reduced Kronecker coefficient gbar_{alpha,beta}^{gamma}: evaluates
  // g_{(n-|alpha|,alpha),(n-|beta|,beta)}^{(n-|gamma|,gamma)} for increasing n
  // starting at n0 = |alpha|+|beta|+|gamma| + max of the first parts, and
  // returns the first value confirmed by two consecutive agreements.  The
  // start and the two-in-a-row witness are heuristics on top of the
  // stabilization theorem, which gives no effective bound; the test suite
  // checks a wider confirmation window.  Throws std::domain_error if the cap
  // is reached before a witness is seen.
  long long reduced(const Partition& alpha, const Partition& beta, const Partition& gamma);

  struct ReducedQuery {
    Partition alpha, beta, gamma;
  };
  // Batched form of reduced(): groups the underlying evaluations by symmetric
  // group size so sweeps share class sweeps.
  std::vector<long long> reduced_many(std::span<const ReducedQuery> queries);

  // Full table for n <= table_build_max, built once and shared; loaded from
  // the disk cache when a valid file exists, rebuilt (and rewritten) when the
  // file is missing, corrupt, or version-mismatched.
  std::shared_ptr<const CharacterTable> table(long long n);

  static std::filesystem::path default_cache_dir();

 private:
  struct TableSlot {
    std::once_flag once;
    std::shared_ptr<const CharacterTable> table;
  };

  std::shared_ptr<const CharacterTable> build_table(long long n) const;
  std::filesystem::path cache_file(long long n) const;
  std::shared_ptr<const CharacterTable> try_load(long long n) const;
  void store(const CharacterTable& table) const;
  long long kron_from_table(const CharacterTable& t, const Partition& lambda,
                            const Partition& mu, const Partition& nu) const;

  OracleConfig cfg_;
  std::mutex mutex_;
  std::map<long long, std::shared_ptr<TableSlot>> tables_;
  std::map<std::array<Partition, 3>, long long> reduced_memo_;
  std::mutex memo_mutex_;
};

// Process-wide oracle with the default configuration (cache directory from
// the KRON22_CACHE_DIR environment variable when set).
Oracle& default_oracle();

}  // namespace kron22
