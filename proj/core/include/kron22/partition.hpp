#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kron22 {

// An integer partition: weakly decreasing nonnegative parts.  Stored in
// normalized form (trailing zeros stripped), so two partitions compare equal
// iff they agree after zero-stripping.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are weakly decreasing and >= 0.
  explicit Partition(std::vector<long long> parts);

  static std::optional<Partition> try_make(std::vector<long long> parts);
  static bool is_weakly_decreasing_nonnegative(std::span<const long long> parts);

  long long weight() const;
  // Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 0-based access; indices beyond length() read as 0.
  long long part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
  }
  const std::vector<long long>& parts() const { return parts_; }

  // The partition with the first part removed.
  Partition tail() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<long long> parts_;
};

// (n - |alpha|, alpha1, alpha2, ...) when that is a partition, i.e. when
// n >= |alpha| + alpha1.
std::optional<Partition> prepend_row(long long n, const Partition& alpha);

// Parses comma-separated parts, e.g. "3,1".  "0" and "" denote the empty
// partition.  Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

std::string to_string(const Partition& p);

struct PartitionHash {
  size_t operator()(const Partition& p) const noexcept;
};

// All partitions of n, in descending lexicographic order starting at (n).
std::vector<Partition> partitions_of(long long n);

// All partitions of n with at most max_len parts, same order.
std::vector<Partition> partitions_of_max_length(long long n, int max_len);

}  // namespace kron22
