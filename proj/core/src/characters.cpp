#include "kron22/characters.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace kron22 {

std::vector<std::pair<Partition, int>> border_strip_removals(const Partition& shape,
                                                             long long size) {
  std::vector<std::pair<Partition, int>> out;
  const int k = shape.length();
  if (k == 0 || size <= 0) return out;

  // First-column beta numbers: beta_i = lambda_i + k - i, strictly decreasing.
  std::vector<long long> beta(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) beta[static_cast<size_t>(i)] = shape.part(i) + (k - 1 - i);

  for (int i = 0; i < k; ++i) {
    long long b = beta[static_cast<size_t>(i)] - size;
    if (b < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      if (beta[static_cast<size_t>(j)] == b) { occupied = true; break; }
      if (beta[static_cast<size_t>(j)] > b && beta[static_cast<size_t>(j)] < beta[static_cast<size_t>(i)]) ++height;
    }
    if (occupied) continue;

    std::vector<long long> nb = beta;
    nb[static_cast<size_t>(i)] = b;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<long long> parts(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) parts[static_cast<size_t>(j)] = nb[static_cast<size_t>(j)] - (k - 1 - j);
    out.emplace_back(Partition(std::move(parts)), (height % 2 == 0) ? 1 : -1);
  }
  return out;
}

BigInt syt_count(const Partition& shape) {
  const int k = shape.length();
  BigInt num = 1;
  for (long long i = 2; i <= shape.weight(); ++i) num *= i;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    for (long long j = 0; j < shape.part(i); ++j) {
      long long arm = shape.part(i) - 1 - j;
      long long leg = 0;
      for (int t = i + 1; t < k; ++t)
        if (shape.part(t) > j) ++leg;
      den *= BigInt(arm + leg + 1);
    }
  }
  return num / den;
}

BigInt centralizer_order(const Partition& rho) {
  BigInt z = 1;
  long long run = 0, prev = -1;
  for (long long p : rho.parts()) {
    z *= p;
    run = (p == prev) ? run + 1 : 1;
    z *= run;
    prev = p;
  }
  return z;
}

namespace {

struct MNKey {
  Partition shape;
  size_t consumed;
  bool operator==(const MNKey&) const = default;
};

struct MNKeyHash {
  size_t operator()(const MNKey& k) const noexcept {
    return PartitionHash{}(k.shape) * 1000003u + k.consumed;
  }
};

BigInt mn_rec(const Partition& shape, const std::vector<long long>& parts, size_t consumed,
              std::unordered_map<MNKey, BigInt, MNKeyHash>& memo) {
  if (consumed == parts.size()) return shape.empty() ? 1 : 0;
  MNKey key{shape, consumed};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt acc = 0;
  for (const auto& [sub, sign] : border_strip_removals(shape, parts[consumed]))
    acc += sign * mn_rec(sub, parts, consumed + 1, memo);
  memo.emplace(std::move(key), acc);
  return acc;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight())
    throw std::invalid_argument("mn_character: weights differ");
  std::unordered_map<MNKey, BigInt, MNKeyHash> memo;
  return mn_rec(lambda, rho.parts(), 0, memo);
}

namespace {

// Interned shapes with memoized strip removals and tableau counts, shared by
// one batched sweep.
class StripMachine {
 public:
  int32_t intern(const Partition& p) {
    auto [it, inserted] = index_.try_emplace(p, static_cast<int32_t>(shapes_.size()));
    if (inserted) {
      shapes_.push_back(p);
      syt_.push_back({false, 0});
    }
    return it->second;
  }

  const Partition& shape(int32_t id) const { return shapes_[static_cast<size_t>(id)]; }
  size_t size() const { return shapes_.size(); }

  const std::vector<std::pair<int32_t, int8_t>>& removals(int32_t id, long long p) {
    uint64_t key = (static_cast<uint64_t>(id) << 8) | static_cast<uint64_t>(p);
    auto it = removal_cache_.find(key);
    if (it != removal_cache_.end()) return it->second;
    std::vector<std::pair<int32_t, int8_t>> out;
    for (const auto& [sub, sign] : border_strip_removals(shapes_[static_cast<size_t>(id)], p))
      out.emplace_back(intern(sub), static_cast<int8_t>(sign));
    return removal_cache_.emplace(key, std::move(out)).first->second;
  }

  int128 syt(int32_t id) {
    auto& entry = syt_[static_cast<size_t>(id)];
    if (!entry.first) {
      BigInt f = syt_count(shapes_[static_cast<size_t>(id)]);
      if (f > BigInt(1) << 126) throw_overflow();
      entry = {true, static_cast<int128>(f)};
    }
    return entry.second;
  }

 private:
  std::unordered_map<Partition, int32_t, PartitionHash> index_;
  std::vector<Partition> shapes_;
  std::vector<std::pair<bool, int128>> syt_;
  std::unordered_map<uint64_t, std::vector<std::pair<int32_t, int8_t>>> removal_cache_;
};

struct Level {
  std::vector<int32_t> ids;
  std::vector<int128> coeffs;  // ids.size() * width, row-major
  std::vector<int32_t> row_of_id;
  std::vector<uint32_t> stamp;
  uint32_t epoch = 0;

  void reset(size_t nids) {
    ids.clear();
    coeffs.clear();
    if (row_of_id.size() < nids) {
      row_of_id.resize(nids, -1);
      stamp.resize(nids, 0);
    }
    ++epoch;
  }

  int32_t row_for(int32_t id, size_t width) {
    if (stamp[static_cast<size_t>(id)] != epoch) {
      stamp[static_cast<size_t>(id)] = epoch;
      row_of_id[static_cast<size_t>(id)] = static_cast<int32_t>(ids.size());
      ids.push_back(id);
      coeffs.resize(coeffs.size() + width, 0);
    }
    return row_of_id[static_cast<size_t>(id)];
  }
};

class ClassSweep {
 public:
  ClassSweep(long long n, std::span<const Partition> shapes,
             const std::function<void(const ClassVisit&)>& visit)
      : n_(n), width_(shapes.size()), visit_(visit) {
    factorial_.resize(static_cast<size_t>(n + 1));
    factorial_[0] = 1;
    for (long long i = 1; i <= n; ++i)
      factorial_[static_cast<size_t>(i)] = factorial_[static_cast<size_t>(i - 1)] * i;

    levels_.resize(static_cast<size_t>(n / 2 + 2));
    Level& root = levels_[0];
    root.reset(machine_.size() + shapes.size());
    for (size_t t = 0; t < shapes.size(); ++t) {
      int32_t id = machine_.intern(shapes[t]);
      int32_t row = root.row_for(id, width_);
      root.coeffs[static_cast<size_t>(row) * width_ + t] += 1;
    }
    chi_.resize(width_);
  }

  void run() { descend(0, n_, n_, BigInt(1)); }

 private:
  void emit(size_t depth, long long ones, const BigInt& z_prefix) {
    const Level& level = levels_[depth];
    std::fill(chi_.begin(), chi_.end(), int128(0));
    for (size_t row = 0; row < level.ids.size(); ++row) {
      int128 f = machine_.syt(level.ids[row]);
      if (f == 0) continue;
      const int128* c = &level.coeffs[row * width_];
      for (size_t t = 0; t < width_; ++t)
        if (c[t] != 0) chi_[t] = checked_add(chi_[t], checked_mul(c[t], f));
    }
    BigInt z = z_prefix * factorial_[static_cast<size_t>(ones)];
    visit_(ClassVisit{std::span<const long long>(prefix_), ones, z,
                      std::span<const int128>(chi_)});
  }

  void descend(size_t depth, long long remaining, long long max_part, const BigInt& z) {
    emit(depth, remaining, z);
    Level& parent = levels_[depth];
    if (parent.ids.empty()) return;
    for (long long p = std::min(remaining, max_part); p >= 2; --p) {
      Level& child = levels_[depth + 1];
      child.reset(machine_.size() + 8 * parent.ids.size());
      bool any = false;
      for (size_t row = 0; row < parent.ids.size(); ++row) {
        const auto& moves = machine_.removals(parent.ids[row], p);
        if (moves.empty()) continue;
        // removals() may intern new shapes; make sure the child index covers them
        if (child.row_of_id.size() < machine_.size()) {
          child.row_of_id.resize(machine_.size(), -1);
          child.stamp.resize(machine_.size(), 0);
        }
        for (const auto& [sub, sign] : moves) {
          int32_t crow = child.row_for(sub, width_);
          const int128* src = &parent.coeffs[row * width_];
          int128* dst = &child.coeffs[static_cast<size_t>(crow) * width_];
          for (size_t t = 0; t < width_; ++t)
            if (src[t] != 0)
              dst[t] = checked_add(dst[t], sign > 0 ? src[t] : -src[t]);
          any = true;
        }
      }
      if (!any) continue;
      long long run = (!prefix_.empty() && prefix_.back() == p) ? run_length_back(p) : 0;
      prefix_.push_back(p);
      BigInt zc = z * p * (run + 1);
      descend(depth + 1, remaining - p, p, zc);
      prefix_.pop_back();
    }
  }

  long long run_length_back(long long p) const {
    long long c = 0;
    for (auto it = prefix_.rbegin(); it != prefix_.rend() && *it == p; ++it) ++c;
    return c;
  }

  long long n_;
  size_t width_;
  const std::function<void(const ClassVisit&)>& visit_;
  StripMachine machine_;
  std::vector<Level> levels_;
  std::vector<long long> prefix_;
  std::vector<int128> chi_;
  std::vector<BigInt> factorial_;
};

}  // namespace

void for_each_class(long long n, std::span<const Partition> shapes,
                    const std::function<void(const ClassVisit&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_class: negative weight");
  for (const Partition& s : shapes)
    if (s.weight() != n)
      throw std::invalid_argument("for_each_class: shape weight mismatch");
  ClassSweep sweep(n, shapes, visit);
  sweep.run();
}

}  // namespace kron22
