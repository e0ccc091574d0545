#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "kron22/indices.hpp"
#include "kron22/quasipolynomial.hpp"

namespace kron22 {

/*
  The chamber engine for reduced Kronecker coefficients gbar_{(r)(s)}^{(g1,g2)}.

  The parameter space is cut by the cone Delta' (seven facet inequalities) and
  subdivided into 26 chambers indexed by the set of constraint lines that
  support a side of the counting polygon.  On each closed chamber the
  coefficient is one quadratic quasipolynomial; all of them are recovered from
  the base chamber {1,3,5} by chasing differences along walls of the adjacency
  graph.  The wall and adjacency data are transcribed as static tables and
  cross-checked by the covering/agreement tests.
*/

// Homogeneous integer linear form over (r, s, g1, g2).
struct LinearForm4 {
  std::array<long long, 4> c{};
  long long eval(const ReducedIndex& h) const {
    return c[0] * h.r + c[1] * h.s + c[2] * h.g1 + c[3] * h.g2;
  }
  bool operator==(const LinearForm4&) const = default;
};

// The concurrence form attached to constraint lines i, j, k: minus the
// determinant of their coefficient columns.  Linear and homogeneous in h.
// Indices must be distinct and in 0..6.
long long triple_form(int i, int j, int k, const ReducedIndex& h);
LinearForm4 triple_form_coeffs(int i, int j, int k);

// Degenerate forms for the two parallel line pairs.
inline long long f25(const ReducedIndex& h) { return h.g1 - h.g2; }
inline long long f46(const ReducedIndex& h) { return h.g2; }

// Membership in the closed support cone Delta' (all seven facet
// inequalities).  Accepts any integer 4-tuple.
bool in_delta_prime(const ReducedIndex& h);

// A facet of Delta' with its strip-vanishing offsets: the chambers listed in
// `chambers` have a facet on form = 0, and their quasipolynomials vanish
// identically on form = delta for each listed delta.
struct DeltaPrimeFacet {
  std::string name;
  LinearForm4 form;
  int sign;  // +1: form >= 0 on Delta'; -1: form <= 0 on Delta'
  std::vector<std::string> chambers;
  std::vector<long long> vanishing_offsets;
};
const std::vector<DeltaPrimeFacet>& delta_prime_facets();

// The three difference-rule shapes attached to insertion walls.
enum class DiffRule {
  kHalfProduct,     // f(f-1)/2,            coincidence offsets {0, 1}
  kQuarterSquare,   // f^2/4 - [f odd]/4,   coincidence offsets {-1, 0, 1}
  kQuarterShifted,  // f(f-2)/4 + [f odd]/4, coincidence offsets {0, 1, 2}
};

struct WallRules {
  std::map<std::array<int, 3>, DiffRule> rule;
  static const WallRules& standard();
  // Test hook: reassigns every wall of `cls` to a wrong formula.
  WallRules with_flipped_class(DiffRule cls) const;
};

// q_I(h) - q_J(h) across the insertion wall (i,j,k), J = I + {j}.  Throws
// std::invalid_argument for a triple that labels no wall.
long long wall_difference(int i, int j, int k, const ReducedIndex& h);
const std::vector<long long>& coincidence_offsets(DiffRule rule);

struct Wall {
  enum class Kind { SwapRS, Insert } kind = Kind::SwapRS;
  // For Insert: the inserted index with its cyclic predecessor and successor
  // in the larger side set.
  int inserted = -1, pred = -1, succ = -1;
  bool operator==(const Wall&) const = default;
};

struct ChamberInequality {
  LinearForm4 form;  // required >= 0 on the closed cell
  std::string label;
  bool operator==(const ChamberInequality&) const = default;
};

struct Chamber {
  int id = -1;
  std::vector<int> sides;  // ascending
  struct Neighbor {
    int chamber = -1;
    Wall wall;
    bool operator==(const Neighbor&) const = default;
  };
  std::vector<Neighbor> neighbors;
  // Closed cell = Delta' intersected with these half-spaces, one per wall.
  std::vector<ChamberInequality> inequalities;
  // The chamber's quasipolynomial in the quarter-integer normal form.
  Quasipolynomial qp{4, std::vector<std::vector<long long>>(16, std::vector<long long>(15, 0))};

  std::string sides_string() const;
};

class ChamberCatalog {
 public:
  // The built-in catalog (built once, immutable, safe to share).
  static const ChamberCatalog& standard();

  // Builds the catalog from the static adjacency data under the given wall
  // rules; WallRules::standard() reproduces standard().
  explicit ChamberCatalog(const WallRules& rules);

  // Wraps externally supplied chamber data (e.g. re-imported from JSON).
  // Evaluation then uses the stored quasipolynomials only.
  struct FromParts {};
  ChamberCatalog(std::vector<Chamber> chambers, FromParts);

  const std::vector<Chamber>& chambers() const { return chambers_; }
  const Chamber& by_sides(const std::vector<int>& sides) const;
  int base_chamber() const { return base_; }  // id of {1,3,5}
  bool imported() const { return imported_; }

  // All chambers whose closed cell contains h; more than one exactly on
  // walls.  Throws std::domain_error outside Delta'.
  std::vector<int> chambers_containing(const ReducedIndex& h) const;

  // Whether h lies in the closed cell of the chamber (Delta' included).
  bool cell_contains(int chamber_id, const ReducedIndex& h) const;

  // The chamber's quasipolynomial at h (defined for every integer h).
  long long eval_q(int chamber_id, const ReducedIndex& h) const;
  // Same value from the materialized normal form.
  long long eval_q_symbolic(int chamber_id, const ReducedIndex& h) const;

  // 0 outside Delta', otherwise eval_q at any chamber whose closed cell
  // contains h (they agree on shared faces).
  long long reduced_value(const ReducedIndex& h) const;

 private:
  void build(const WallRules& rules);

  std::vector<Chamber> chambers_;
  std::map<std::vector<int>, int> by_sides_;
  int base_ = -1;
  bool imported_ = false;
  WallRules rules_;
  // Signed wall steps from the base chamber, per chamber.
  std::vector<std::vector<std::pair<std::array<int, 3>, int>>> path_;
};

// gbar_{(r)(s)}^{(g1,g2)} through the standard catalog.  Accepts any integer
// 4-tuple; zero outside Delta'.
long long reduced_kron_fast(const ReducedIndex& h);

}  // namespace kron22
