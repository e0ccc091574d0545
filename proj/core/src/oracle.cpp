#include "kron22/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

namespace kron22 {

namespace {

constexpr char kMagic[8] = {'K', 'R', '2', '2', 'C', 'H', 'T', '1'};
constexpr uint32_t kVersion = 1;

uint64_t class_order_checksum(const std::vector<Partition>& classes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const Partition& p : classes) {
    h = (h ^ 0x7fULL) * 0x100000001b3ULL;
    for (long long v : p.parts()) h = (h ^ static_cast<uint64_t>(v)) * 0x100000001b3ULL;
  }
  return h;
}

BigInt factorial_big(long long n) {
  BigInt f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

void write_bytes(std::ofstream& out, const void* data, size_t size) {
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
}

bool read_bytes(std::ifstream& in, void* data, size_t size) {
  in.read(static_cast<char*>(data), static_cast<std::streamsize>(size));
  return static_cast<size_t>(in.gcount()) == size;
}

}  // namespace

size_t CharacterTable::index_of(const Partition& p) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), p,
                             [](const Partition& a, const Partition& b) { return a.parts() > b.parts(); });
  if (it == classes_.end() || !(*it == p))
    throw std::invalid_argument("CharacterTable::index_of: not a partition of " + std::to_string(n_));
  return static_cast<size_t>(it - classes_.begin());
}

Oracle::Oracle(OracleConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.cache_dir.empty()) cfg_.cache_dir = default_cache_dir();
}

std::filesystem::path Oracle::default_cache_dir() {
  if (const char* env = std::getenv("KRON22_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "kron22";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "kron22";
  return std::filesystem::path(".kron22-cache");
}

std::filesystem::path Oracle::cache_file(long long n) const {
  return cfg_.cache_dir / ("chartable-n" + std::to_string(n) + ".bin");
}

std::shared_ptr<const CharacterTable> Oracle::build_table(long long n) const {
  auto table = std::make_shared<CharacterTable>();
  table->n_ = n;
  table->classes_ = partitions_of(n);
  const size_t nc = table->classes_.size();
  table->z_.assign(nc, 0);
  table->class_size_.assign(nc, 0);
  table->chi_.assign(nc * nc, 0);

  std::unordered_map<Partition, size_t, PartitionHash> where;
  where.reserve(nc * 2);
  for (size_t i = 0; i < nc; ++i) where.emplace(table->classes_[i], i);

  const BigInt nfact = factorial_big(n);
  std::vector<long long> rho_parts;
  for_each_class(n, table->classes_, [&](const ClassVisit& v) {
    rho_parts.assign(v.prefix.begin(), v.prefix.end());
    rho_parts.insert(rho_parts.end(), static_cast<size_t>(v.ones), 1);
    size_t rho = where.at(Partition(rho_parts));
    table->z_[rho] = v.centralizer;
    BigInt cs = nfact / v.centralizer;
    if (cs > BigInt(1) << 126) throw_overflow();
    table->class_size_[rho] = static_cast<int128>(cs);
    for (size_t t = 0; t < nc; ++t)
      table->chi_[t * nc + rho] = narrow_to_i64(v.chi[t]);
  });
  // Every class is visited when the batch contains all shapes: the trivial
  // shape (n) has a strip of every size.
  for (size_t i = 0; i < nc; ++i)
    if (table->z_[i] == 0) throw std::logic_error("character table build missed a class");
  return table;
}

void Oracle::store(const CharacterTable& table) const {
  std::error_code ec;
  std::filesystem::create_directories(cfg_.cache_dir, ec);
  if (ec) return;
  std::filesystem::path tmp = cache_file(table.n());
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    write_bytes(out, kMagic, sizeof kMagic);
    write_bytes(out, &kVersion, sizeof kVersion);
    int64_t n = table.n();
    write_bytes(out, &n, sizeof n);
    uint64_t nc = table.classes().size();
    write_bytes(out, &nc, sizeof nc);
    uint64_t checksum = class_order_checksum(table.classes());
    write_bytes(out, &checksum, sizeof checksum);
    for (const BigInt& z : table.centralizers()) {
      std::vector<uint8_t> bytes;
      export_bits(z, std::back_inserter(bytes), 8);
      uint32_t len = static_cast<uint32_t>(bytes.size());
      write_bytes(out, &len, sizeof len);
      write_bytes(out, bytes.data(), bytes.size());
    }
    write_bytes(out, table.chi_.data(), table.chi_.size() * sizeof(long long));
    if (!out) return;
  }
  std::filesystem::rename(tmp, cache_file(table.n()), ec);
}

std::shared_ptr<const CharacterTable> Oracle::try_load(long long n) const {
  std::ifstream in(cache_file(n), std::ios::binary);
  if (!in) return nullptr;
  char magic[8];
  uint32_t version = 0;
  int64_t file_n = 0;
  uint64_t nc = 0, checksum = 0;
  if (!read_bytes(in, magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof magic) != 0)
    return nullptr;
  if (!read_bytes(in, &version, sizeof version) || version != kVersion) return nullptr;
  if (!read_bytes(in, &file_n, sizeof file_n) || file_n != n) return nullptr;
  if (!read_bytes(in, &nc, sizeof nc)) return nullptr;
  if (!read_bytes(in, &checksum, sizeof checksum)) return nullptr;

  auto table = std::make_shared<CharacterTable>();
  table->n_ = n;
  table->classes_ = partitions_of(n);
  if (table->classes_.size() != nc) return nullptr;
  if (class_order_checksum(table->classes_) != checksum) return nullptr;

  const BigInt nfact = factorial_big(n);
  table->z_.resize(nc);
  table->class_size_.resize(nc);
  for (size_t i = 0; i < nc; ++i) {
    uint32_t len = 0;
    if (!read_bytes(in, &len, sizeof len) || len > 64) return nullptr;
    std::vector<uint8_t> bytes(len);
    if (!read_bytes(in, bytes.data(), len)) return nullptr;
    BigInt z;
    import_bits(z, bytes.begin(), bytes.end(), 8);
    if (z <= 0 || nfact % z != 0) return nullptr;
    table->z_[i] = z;
    BigInt cs = nfact / z;
    if (cs > BigInt(1) << 126) return nullptr;
    table->class_size_[i] = static_cast<int128>(cs);
  }
  table->chi_.resize(nc * nc);
  if (!read_bytes(in, table->chi_.data(), table->chi_.size() * sizeof(long long))) return nullptr;
  char extra;
  if (in.read(&extra, 1).gcount() != 0) return nullptr;
  return table;
}

std::shared_ptr<const CharacterTable> Oracle::table(long long n) {
  if (n < 0) throw std::invalid_argument("Oracle::table: negative n");
  if (n > cfg_.table_build_max)
    throw std::domain_error("Oracle::table: n exceeds table_build_max");
  std::shared_ptr<TableSlot> slot;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& entry = tables_[n];
    if (!entry) entry = std::make_shared<TableSlot>();
    slot = entry;
  }
  std::call_once(slot->once, [&] {
    if (cfg_.disk_cache) slot->table = try_load(n);
    if (!slot->table) {
      slot->table = build_table(n);
      if (cfg_.disk_cache) store(*slot->table);
    }
  });
  return slot->table;
}

BigInt Oracle::character(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight())
    throw std::invalid_argument("Oracle::character: |lambda| != |rho|");
  long long n = lambda.weight();
  if (n <= cfg_.table_build_max) {
    auto t = table(n);
    return BigInt(t->chi(t->index_of(lambda), t->index_of(rho)));
  }
  return mn_character(lambda, rho);
}

long long Oracle::kron_from_table(const CharacterTable& t, const Partition& lambda,
                                  const Partition& mu, const Partition& nu) const {
  size_t il = t.index_of(lambda), im = t.index_of(mu), in = t.index_of(nu);
  const size_t nc = t.classes().size();
  const BigInt nfact = factorial_big(t.n());
  try {
    int128 acc = 0;
    for (size_t rho = 0; rho < nc; ++rho) {
      int128 term = checked_mul(t.class_size_[rho], t.chi(il, rho));
      term = checked_mul(term, t.chi(im, rho));
      term = checked_mul(term, t.chi(in, rho));
      acc = checked_add(acc, term);
    }
    BigInt total(acc);
    if (total % nfact != 0)
      throw std::logic_error("Oracle: inner product not divisible by n!");
    return narrow_to_i64(static_cast<int128>(total / nfact));
  } catch (const std::overflow_error&) {
    BigInt acc = 0;
    for (size_t rho = 0; rho < nc; ++rho)
      acc += BigInt(t.class_size_[rho]) * t.chi(il, rho) * t.chi(im, rho) * t.chi(in, rho);
    if (acc % nfact != 0)
      throw std::logic_error("Oracle: inner product not divisible by n!");
    return narrow_to_i64(static_cast<int128>(acc / nfact));
  }
}

long long Oracle::kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
  std::array<Partition, 3> triple{lambda, mu, nu};
  return kronecker_many(lambda.weight(), std::span<const std::array<Partition, 3>>(&triple, 1))[0];
}

std::vector<long long> Oracle::kronecker_many(long long n,
                                              std::span<const std::array<Partition, 3>> triples) {
  for (const auto& t : triples)
    for (const Partition& p : t)
      if (p.weight() != n)
        throw std::invalid_argument("Oracle::kronecker: triple weights differ");
  if (n > cfg_.cap)
    throw std::domain_error("Oracle: weight " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cfg_.cap) + "; raise OracleConfig::cap (--cap)");
  std::vector<long long> out(triples.size(), 0);
  if (triples.empty()) return out;

  if (n <= cfg_.table_build_max) {
    auto t = table(n);
    for (size_t i = 0; i < triples.size(); ++i)
      out[i] = kron_from_table(*t, triples[i][0], triples[i][1], triples[i][2]);
    return out;
  }

  // Batched sweep: one pass over the classes of S_n for all triples.
  std::unordered_map<Partition, size_t, PartitionHash> shape_index;
  std::vector<Partition> shapes;
  auto intern = [&](const Partition& p) {
    auto [it, inserted] = shape_index.try_emplace(p, shapes.size());
    if (inserted) shapes.push_back(p);
    return it->second;
  };
  struct Target {
    size_t ic;
    size_t out_index;
  };
  std::map<std::pair<size_t, size_t>, std::vector<Target>> groups;
  for (size_t i = 0; i < triples.size(); ++i) {
    size_t ia = intern(triples[i][1]), ib = intern(triples[i][2]), ic = intern(triples[i][0]);
    if (ia > ib) std::swap(ia, ib);
    groups[{ia, ib}].push_back({ic, i});
  }

  const BigInt nfact = factorial_big(n);
  std::vector<BigInt> acc(triples.size(), 0);
  for_each_class(n, shapes, [&](const ClassVisit& v) {
    BigInt cs = nfact / v.centralizer;
    for (const auto& [pair, targets] : groups) {
      if (v.chi[pair.first] == 0 || v.chi[pair.second] == 0) continue;
      BigInt w = cs * BigInt(v.chi[pair.first]) * BigInt(v.chi[pair.second]);
      for (const Target& target : targets) {
        if (v.chi[target.ic] == 0) continue;
        acc[target.out_index] += w * BigInt(v.chi[target.ic]);
      }
    }
  });
  for (size_t i = 0; i < triples.size(); ++i) {
    if (acc[i] % nfact != 0)
      throw std::logic_error("Oracle: inner product not divisible by n!");
    out[i] = narrow_to_i64(static_cast<int128>(acc[i] / nfact));
  }
  return out;
}

long long Oracle::reduced(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  ReducedQuery q{alpha, beta, gamma};
  return reduced_many(std::span<const ReducedQuery>(&q, 1))[0];
}

std::vector<long long> Oracle::reduced_many(std::span<const ReducedQuery> queries) {
  struct State {
    long long next_n = 0;
    bool have_prev = false;
    long long prev = 0;
    bool done = false;
    long long value = 0;
  };
  std::vector<State> states(queries.size());
  std::vector<long long> out(queries.size(), 0);

  for (size_t i = 0; i < queries.size(); ++i) {
    const auto& q = queries[i];
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = reduced_memo_.find({q.alpha, q.beta, q.gamma});
      if (it != reduced_memo_.end()) {
        states[i].done = true;
        states[i].value = it->second;
        continue;
      }
    }
    long long n0 = q.alpha.weight() + q.beta.weight() + q.gamma.weight() +
                   std::max({q.alpha.part(0), q.beta.part(0), q.gamma.part(0)});
    states[i].next_n = n0;
  }

  auto pad = [](const Partition& p, long long n) {
    auto padded = prepend_row(n, p);
    if (!padded)
      throw std::logic_error("Oracle::reduced: padding below the stabilization start");
    return *padded;
  };

  for (;;) {
    // Gather the pending evaluations of this round, grouped by weight.
    std::map<long long, std::vector<size_t>> by_n;
    for (size_t i = 0; i < queries.size(); ++i)
      if (!states[i].done) by_n[states[i].next_n].push_back(i);
    if (by_n.empty()) break;

    for (const auto& [n, members] : by_n) {
      if (n > cfg_.cap)
        throw std::domain_error(
            "Oracle::reduced: cap " + std::to_string(cfg_.cap) +
            " reached before a stabilization witness; raise OracleConfig::cap (--cap)");
      std::vector<std::array<Partition, 3>> triples;
      triples.reserve(members.size());
      for (size_t i : members) {
        const auto& q = queries[i];
        triples.push_back({pad(q.gamma, n), pad(q.alpha, n), pad(q.beta, n)});
      }
      std::vector<long long> values = kronecker_many(n, triples);
      for (size_t k = 0; k < members.size(); ++k) {
        State& st = states[members[k]];
        if (st.have_prev && st.prev == values[k]) {
          st.done = true;
          st.value = values[k];
          const auto& q = queries[members[k]];
          std::lock_guard<std::mutex> lock(memo_mutex_);
          reduced_memo_[{q.alpha, q.beta, q.gamma}] = st.value;
        } else {
          st.have_prev = true;
          st.prev = values[k];
          st.next_n = n + 1;
        }
      }
    }
  }

  for (size_t i = 0; i < queries.size(); ++i) out[i] = states[i].value;
  return out;
}

Oracle& default_oracle() {
  static Oracle oracle{};
  return oracle;
}

}  // namespace kron22
