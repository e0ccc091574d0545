#include "kron22/quasipolynomial.hpp"

#include <stdexcept>

#include "kron22/checked_int.hpp"

namespace kron22 {

int Quasipolynomial::coset_of(std::span<const long long> x) {
  int c = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (((x[i] % 2) + 2) % 2 == 1) c |= 1 << i;
  return c;
}

Quasipolynomial::Quasipolynomial(int nvars, std::vector<std::vector<long long>> scaled)
    : nvars_(nvars), scaled_(std::move(scaled)) {
  if (nvars_ < 0 || nvars_ > 8)
    throw std::invalid_argument("Quasipolynomial: unsupported variable count");
  if (scaled_.size() != static_cast<size_t>(coset_count(nvars_)))
    throw std::invalid_argument("Quasipolynomial: wrong coset count");
  for (const auto& row : scaled_)
    if (row.size() != static_cast<size_t>(monomial_count(nvars_)))
      throw std::invalid_argument("Quasipolynomial: wrong monomial count");
}

long long Quasipolynomial::eval(std::span<const long long> x) const {
  if (x.size() != static_cast<size_t>(nvars_))
    throw std::invalid_argument("Quasipolynomial::eval: wrong dimension");
  const auto& co = scaled_[static_cast<size_t>(coset_of(x))];
  int128 acc = co[0];
  int m = 1;
  for (int i = 0; i < nvars_; ++i)
    acc = checked_add(acc, checked_mul(co[static_cast<size_t>(m++)], x[static_cast<size_t>(i)]));
  for (int i = 0; i < nvars_; ++i)
    for (int j = i; j < nvars_; ++j) {
      int128 xij = checked_mul(x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]);
      acc = checked_add(acc, checked_mul(co[static_cast<size_t>(m++)], xij));
    }
  if (acc % 4 != 0)
    throw std::domain_error("Quasipolynomial::eval: value is not an integer");
  return narrow_to_i64(acc / 4);
}

std::optional<Quasipolynomial::NormalForm> Quasipolynomial::normal_form() const {
  const int nlin = nvars_;
  const int nquad = nvars_ * (nvars_ + 1) / 2;
  NormalForm nf;
  nf.quadratic.assign(scaled_[0].begin() + 1 + nlin, scaled_[0].end());
  nf.linear.resize(static_cast<size_t>(nlin));
  for (int i = 0; i < nlin; ++i) {
    long long c = scaled_[0][static_cast<size_t>(1 + i)];
    if (c % 2 != 0) return std::nullopt;
    nf.linear[static_cast<size_t>(i)] = c / 2;
  }
  nf.constants.reserve(scaled_.size());
  for (const auto& row : scaled_) {
    nf.constants.push_back(row[0]);
    for (int i = 0; i < nlin; ++i)
      if (row[static_cast<size_t>(1 + i)] != scaled_[0][static_cast<size_t>(1 + i)]) return std::nullopt;
    for (int q = 0; q < nquad; ++q)
      if (row[static_cast<size_t>(1 + nlin + q)] != nf.quadratic[static_cast<size_t>(q)]) return std::nullopt;
  }
  return nf;
}

Quasipolynomial Quasipolynomial::from_normal_form(int nvars, const NormalForm& nf) {
  const int nmono = monomial_count(nvars);
  const int ncoset = coset_count(nvars);
  if (nf.linear.size() != static_cast<size_t>(nvars) ||
      nf.quadratic.size() != static_cast<size_t>(nmono - 1 - nvars) ||
      nf.constants.size() != static_cast<size_t>(ncoset))
    throw std::invalid_argument("Quasipolynomial::from_normal_form: wrong sizes");
  std::vector<std::vector<long long>> scaled(static_cast<size_t>(ncoset));
  for (int c = 0; c < ncoset; ++c) {
    auto& row = scaled[static_cast<size_t>(c)];
    row.reserve(static_cast<size_t>(nmono));
    row.push_back(nf.constants[static_cast<size_t>(c)]);
    for (long long l : nf.linear) row.push_back(2 * l);
    for (long long q : nf.quadratic) row.push_back(q);
  }
  return Quasipolynomial(nvars, std::move(scaled));
}

}  // namespace kron22
