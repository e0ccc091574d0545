#pragma once

#include <optional>
#include <span>
#include <vector>

namespace kron22 {

// A degree-<=2 quasipolynomial on Z^d whose period lattice is 2Z^d: one
// polynomial per residue class of the coordinates mod 2.  Coefficients are
// rationals with denominator dividing 4 and are stored scaled by 4, so every
// stored coefficient is an integer and evaluation is exact.
//
// Monomial order for d variables x0..x{d-1}:
//   1, x0..x{d-1}, then xi*xj for i<=j in lexicographic (i,j) order.
class Quasipolynomial {
 public:
  static int monomial_count(int nvars) { return 1 + nvars + nvars * (nvars + 1) / 2; }
  static int coset_count(int nvars) { return 1 << nvars; }
  // Residue class of an integer point: bit i set iff x[i] is odd.
  static int coset_of(std::span<const long long> x);

  // scaled[c][m] = 4 * (coefficient of monomial m on coset c).
  Quasipolynomial(int nvars, std::vector<std::vector<long long>> scaled);

  int nvars() const { return nvars_; }
  const std::vector<long long>& scaled_coeffs(int coset) const { return scaled_[static_cast<size_t>(coset)]; }

  // Exact value at an integer point.  Throws std::domain_error if the scaled
  // sum is not divisible by 4 (the instance is then not integer-valued).
  long long eval(std::span<const long long> x) const;

  bool operator==(const Quasipolynomial&) const = default;

  // value = (Q(x) + 2 L(x) + M_c) / 4 with Q an integral homogeneous
  // quadratic, L an integral homogeneous linear form, both shared by all
  // cosets, and M_c an integer constant per coset.
  struct NormalForm {
    std::vector<long long> quadratic;  // nvars*(nvars+1)/2 coefficients
    std::vector<long long> linear;     // nvars coefficients
    std::vector<long long> constants;  // one per coset
    bool operator==(const NormalForm&) const = default;
  };
  // nullopt when the quadratic/linear parts differ across cosets or the
  // linear scaled coefficients are odd.
  std::optional<NormalForm> normal_form() const;

  static Quasipolynomial from_normal_form(int nvars, const NormalForm& nf);

 private:
  int nvars_ = 0;
  std::vector<std::vector<long long>> scaled_;
};

}  // namespace kron22
