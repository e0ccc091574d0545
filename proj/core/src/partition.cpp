#include "kron22/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kron22 {

bool Partition::is_weakly_decreasing_nonnegative(std::span<const long long> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

Partition::Partition(std::vector<long long> parts) {
  if (!is_weakly_decreasing_nonnegative(parts))
    throw std::invalid_argument("Partition: parts must be weakly decreasing and nonnegative");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
}

std::optional<Partition> Partition::try_make(std::vector<long long> parts) {
  if (!is_weakly_decreasing_nonnegative(parts)) return std::nullopt;
  return Partition(std::move(parts));
}

long long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::tail() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<long long>(parts_.begin() + 1, parts_.end()));
}

std::optional<Partition> prepend_row(long long n, const Partition& alpha) {
  long long first = n - alpha.weight();
  if (first < alpha.part(0)) return std::nullopt;
  std::vector<long long> parts;
  parts.reserve(alpha.parts().size() + 1);
  parts.push_back(first);
  parts.insert(parts.end(), alpha.parts().begin(), alpha.parts().end());
  return Partition(std::move(parts));
}

Partition parse_partition(std::string_view text) {
  std::vector<long long> parts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("parse_partition: bad part '" + std::string(tok) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (!Partition::is_weakly_decreasing_nonnegative(parts))
    throw std::invalid_argument("parse_partition: parts must be weakly decreasing and nonnegative");
  return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

size_t PartitionHash::operator()(const Partition& p) const noexcept {
  size_t h = 0x9e3779b97f4a7c15ULL;
  for (long long v : p.parts())
    h = (h ^ static_cast<size_t>(v)) * 0x100000001b3ULL;
  return h;
}

static void enumerate(long long remaining, long long max_part, int max_len,
                      std::vector<long long>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (max_len == 0) return;
  for (long long p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    enumerate(remaining - p, p, max_len - 1, acc, out);
    acc.pop_back();
  }
}

std::vector<Partition> partitions_of(long long n) {
  return partitions_of_max_length(n, n < 0 ? 0 : static_cast<int>(n));
}

std::vector<Partition> partitions_of_max_length(long long n, int max_len) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<long long> acc;
  if (n == 0) {
    out.push_back(Partition{});
    return out;
  }
  enumerate(n, n, max_len, acc, out);
  return out;
}

}  // namespace kron22
