#include "kron22/stretch.hpp"

#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>

#include "kron22/checked_int.hpp"

namespace kron22 {

std::vector<StretchSample> stretch_samples(const KronIndex& idx, int scale_max, Engine engine,
                                           Oracle* oracle) {
  if (!idx.valid())
    throw std::invalid_argument("stretch_samples: invalid index " + to_string(idx));
  std::vector<StretchSample> out;
  out.reserve(static_cast<size_t>(scale_max));
  for (int m = 1; m <= scale_max; ++m)
    out.push_back({m, kron_two_row(idx.scaled(m), engine, oracle)});
  return out;
}

namespace {

struct Rational {
  int128 num = 0, den = 1;
  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    int128 a = num < 0 ? -num : num, b = den;
    while (b) { int128 t = a % b; a = b; b = t; }
    if (a > 1) { num /= a; den /= a; }
  }
};

// Cramer's rule for a*x^2 + b*x + c through three integer points.
std::array<Rational, 3> solve3(const std::array<long long, 3>& x,
                               const std::array<long long, 3>& y) {
  auto det3 = [](std::array<std::array<int128, 3>, 3> m) {
    return checked_sub(
        checked_add(checked_mul(m[0][0], checked_sub(checked_mul(m[1][1], m[2][2]), checked_mul(m[1][2], m[2][1]))),
                    checked_mul(m[0][2], checked_sub(checked_mul(m[1][0], m[2][1]), checked_mul(m[1][1], m[2][0])))),
        checked_mul(m[0][1], checked_sub(checked_mul(m[1][0], m[2][2]), checked_mul(m[1][2], m[2][0]))));
  };
  std::array<std::array<int128, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    m[static_cast<size_t>(i)] = {int128(x[static_cast<size_t>(i)]) * x[static_cast<size_t>(i)],
                                 int128(x[static_cast<size_t>(i)]), int128(1)};
  int128 d = det3(m);
  if (d == 0) throw std::invalid_argument("fit: interpolation nodes coincide");
  std::array<Rational, 3> out;
  for (int col = 0; col < 3; ++col) {
    auto mc = m;
    for (int i = 0; i < 3; ++i) mc[static_cast<size_t>(i)][static_cast<size_t>(col)] = y[static_cast<size_t>(i)];
    out[static_cast<size_t>(col)] = Rational{det3(mc), d};
    out[static_cast<size_t>(col)].reduce();
  }
  return out;
}

}  // namespace

std::variant<Quasipolynomial, FitFailure> fit_quasipolynomial(
    std::span<const StretchSample> samples, int period, int degree) {
  if (period != 2 || degree != 2)
    throw std::invalid_argument("fit_quasipolynomial: only the pinned (period 2, degree 2) shape is supported");

  std::array<std::vector<StretchSample>, 2> classes;
  for (const StretchSample& s : samples)
    classes[static_cast<size_t>(((s.scale % 2) + 2) % 2)].push_back(s);
  for (int parity = 0; parity < 2; ++parity)
    if (classes[static_cast<size_t>(parity)].size() < 3)
      throw std::invalid_argument(
          "fit_quasipolynomial: need at least three samples per parity class");

  std::vector<std::vector<long long>> scaled(2, std::vector<long long>(3, 0));
  for (int parity = 0; parity < 2; ++parity) {
    const auto& cls = classes[static_cast<size_t>(parity)];
    std::array<long long, 3> xs{cls[0].scale, cls[1].scale, cls[2].scale};
    std::array<long long, 3> ys{cls[0].value, cls[1].value, cls[2].value};
    auto [a, b, c] = solve3(xs, ys);
    for (const Rational& coeff : {a, b, c})
      if (4 % coeff.den != 0)
        return FitFailure{parity,
                          "coefficient denominator exceeds 4 on class scale=" +
                              std::to_string(parity) + " mod 2"};
    // scaled-by-4 layout: constant, linear, quadratic
    scaled[static_cast<size_t>(parity)][0] = narrow_to_i64(c.num * (4 / c.den));
    scaled[static_cast<size_t>(parity)][1] = narrow_to_i64(b.num * (4 / b.den));
    scaled[static_cast<size_t>(parity)][2] = narrow_to_i64(a.num * (4 / a.den));
  }
  Quasipolynomial fit(1, std::move(scaled));

  for (const StretchSample& s : samples) {
    long long predicted;
    try {
      predicted = fit.eval(std::array<long long, 1>{s.scale});
    } catch (const std::domain_error&) {
      return FitFailure{static_cast<int>(((s.scale % 2) + 2) % 2),
                        "interpolant is not integer-valued at scale " + std::to_string(s.scale)};
    }
    if (predicted != s.value)
      return FitFailure{static_cast<int>(((s.scale % 2) + 2) % 2),
                        "sample at scale " + std::to_string(s.scale) +
                            " is inconsistent with a (period 2, degree 2) quasipolynomial"};
  }
  return fit;
}

std::variant<StretchProfile, FitFailure> stretch_profile(const KronIndex& idx, int scale_max,
                                                         Engine engine, Oracle* oracle) {
  StretchProfile profile;
  profile.base = idx;
  profile.samples = stretch_samples(idx, scale_max, engine, oracle);
  bool all_zero = true;
  for (const StretchSample& s : profile.samples) all_zero &= (s.value == 0);
  if (all_zero)
    return FitFailure{0,
                      "every sample vanishes: the index lies outside the support cone and has "
                      "no unit-constant profile"};
  auto fit = fit_quasipolynomial(profile.samples);
  if (std::holds_alternative<FitFailure>(fit)) return std::get<FitFailure>(fit);
  profile.fitted = std::get<Quasipolynomial>(fit);
  long long at_zero = profile.fitted.eval(std::array<long long, 1>{0});
  if (at_zero != 1)
    return FitFailure{0, "fitted value at scale 0 is " + std::to_string(at_zero) + ", expected 1"};
  return profile;
}

std::vector<Counterexample> find_saturation_counterexamples(long long n_min, long long n_max,
                                                            Oracle& oracle, Engine engine) {
  if (2 * n_max > oracle.config().cap)
    throw std::domain_error(
        "find_saturation_counterexamples: verification at scale 2 needs cap >= " +
        std::to_string(2 * n_max));
  std::vector<Counterexample> out;
  for (long long n = std::max(0LL, n_min); n <= n_max; ++n) {
    for (const KronIndex& idx : valid_indices_of_weight(n)) {
      long long at1 = kron_two_row(idx, engine);
      if (at1 != 0) continue;
      long long at2 = kron_two_row(idx.scaled(2), engine);
      if (at2 <= 0) continue;
      Counterexample cert;
      cert.idx = idx;
      cert.engine_at_1 = at1;
      cert.engine_at_2 = at2;
      cert.oracle_at_1 = oracle.kronecker(idx.lambda(), idx.mu(), idx.nu());
      KronIndex dbl = idx.scaled(2);
      cert.oracle_at_2 = oracle.kronecker(dbl.lambda(), dbl.mu(), dbl.nu());
      if (cert.oracle_at_1 != at1 || cert.oracle_at_2 != at2)
        throw std::logic_error("counterexample verification: engine and oracle disagree at " +
                               to_string(idx));
      cert.system = vanishing_system_tag(idx);
      out.push_back(std::move(cert));
    }
  }
  return out;
}

std::string counterexamples_json(std::span<const Counterexample> certificates,
                                 long long n_min, long long n_max) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["kind"] = "saturation-counterexamples";
  doc["box"] = {{"n_min", n_min}, {"n_max", n_max}};
  doc["certificates"] = nlohmann::ordered_json::array();
  for (const Counterexample& c : certificates) {
    nlohmann::ordered_json rec;
    rec["index"] = {{"n", c.idx.n}, {"r", c.idx.r}, {"s", c.idx.s}, {"g1", c.idx.g1}, {"g2", c.idx.g2}};
    rec["engine"] = {{"at_scale_1", c.engine_at_1}, {"at_scale_2", c.engine_at_2}};
    rec["oracle"] = {{"at_scale_1", c.oracle_at_1}, {"at_scale_2", c.oracle_at_2}};
    rec["vanishing_system"] = c.system;
    doc["certificates"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

}  // namespace kron22
