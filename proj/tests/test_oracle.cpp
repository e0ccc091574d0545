#include <doctest.h>

#include <fstream>
#include <map>
#include <random>

#include "kron22/oracle.hpp"
#include "test_support.hpp"

using namespace kron22;

TEST_CASE("border strip removals and tableau counts") {
  // (2,1) has no border strip of size 2: the two candidate cells only touch
  // diagonally (and indeed chi_{(2,1)}(2,1) = 0)
  CHECK(border_strip_removals(Partition({2, 1}), 2).empty());

  // (2,2) has two: the top row (height 0) and the right column (height 1)
  auto moves = border_strip_removals(Partition({2, 2}), 2);
  REQUIRE(moves.size() == 2);
  CHECK(((moves[0].first == Partition({1, 1}) && moves[0].second == -1) ||
         (moves[1].first == Partition({1, 1}) && moves[1].second == -1)));
  CHECK(((moves[0].first == Partition({2}) && moves[0].second == 1) ||
         (moves[1].first == Partition({2}) && moves[1].second == 1)));

  CHECK(border_strip_removals(Partition({2, 2}), 3).size() == 1);
  CHECK(border_strip_removals(Partition({2, 2}), 3)[0].first == Partition({1}));
  CHECK(border_strip_removals(Partition({2, 2}), 3)[0].second == -1);

  CHECK(syt_count(Partition({2, 1})) == 2);
  CHECK(syt_count(Partition({3, 2})) == 5);
  CHECK(syt_count(Partition({5, 4, 3, 2, 1})) == 292864);
  CHECK(syt_count(Partition{}) == 1);

  CHECK(centralizer_order(Partition({1, 1, 1})) == 6);
  CHECK(centralizer_order(Partition({2, 1})) == 2);
  CHECK(centralizer_order(Partition({3})) == 3);
}

TEST_CASE("character values") {
  Oracle oracle(testing::test_oracle_config(20));
  for (const Partition& mu : partitions_of(6)) CHECK(oracle.character(Partition({6}), mu) == 1);
  CHECK(oracle.character(Partition({1, 1, 1}), Partition({2, 1})) == -1);
  CHECK(oracle.character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  for (const Partition& mu : partitions_of(7)) {
    int sign = (7 - mu.length()) % 2 == 0 ? 1 : -1;
    CHECK(oracle.character(Partition({1, 1, 1, 1, 1, 1, 1}), mu) == sign);
  }
  CHECK_THROWS_AS(oracle.character(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("batched sweep agrees with the plain recursion") {
  for (long long n = 0; n <= 8; ++n) {
    auto shapes = partitions_of(n);
    Oracle oracle(testing::test_oracle_config(20));
    auto table = oracle.table(n);
    for (size_t l = 0; l < shapes.size(); ++l)
      for (size_t r = 0; r < shapes.size(); ++r)
        CHECK(BigInt(table->chi(l, r)) == mn_character(shapes[l], shapes[r]));
  }
}

TEST_CASE("column orthogonality") {
  Oracle oracle(testing::test_oracle_config(20));
  for (long long n = 1; n <= 12; ++n) {
    auto table = oracle.table(n);
    const size_t nc = table->classes().size();
    for (size_t mu = 0; mu < nc; ++mu) {
      BigInt sum = 0;
      for (size_t la = 0; la < nc; ++la) sum += BigInt(table->chi(la, mu)) * table->chi(la, mu);
      CHECK(sum == table->centralizers()[mu]);
    }
  }
}

TEST_CASE("kronecker inner products") {
  Oracle oracle(testing::test_oracle_config(20));
  CHECK(oracle.kronecker(Partition({5}), Partition({5}), Partition({5})) == 1);
  CHECK(oracle.kronecker(Partition({2}), Partition({1, 1}), Partition({1, 1})) == 1);
  CHECK(oracle.kronecker(Partition({2, 2}), Partition({2, 2}), Partition({2, 2})) == 1);
  CHECK(oracle.kronecker(Partition({3, 1}), Partition({2, 2}), Partition({3, 1})) == 1);
  CHECK(oracle.kronecker(Partition({1, 1}), Partition({1, 1}), Partition({1, 1})) == 0);

  CHECK_THROWS_AS(oracle.kronecker(Partition({2}), Partition({1, 1}), Partition({1})),
                  std::invalid_argument);

  Oracle small(testing::test_oracle_config(6));
  CHECK_THROWS_WITH_AS(
      (void)small.kronecker(Partition({7}), Partition({7}), Partition({7})),
      doctest::Contains("cap"), std::domain_error);
}

TEST_CASE("kronecker is symmetric in all three shapes") {
  Oracle oracle(testing::test_oracle_config(12));
  std::mt19937_64 rng(7);
  for (long long n : {4LL, 6LL, 9LL, 12LL}) {
    auto shapes = partitions_of(n);
    std::uniform_int_distribution<size_t> pick(0, shapes.size() - 1);
    for (int k = 0; k < 50; ++k) {
      Partition a = shapes[pick(rng)], b = shapes[pick(rng)], c = shapes[pick(rng)];
      long long base = oracle.kronecker(a, b, c);
      CHECK(base == oracle.kronecker(a, c, b));
      CHECK(base == oracle.kronecker(b, a, c));
      CHECK(base == oracle.kronecker(b, c, a));
      CHECK(base == oracle.kronecker(c, a, b));
      CHECK(base == oracle.kronecker(c, b, a));
    }
  }
}

TEST_CASE("batched path agrees with the table path") {
  OracleConfig forced = testing::test_oracle_config(12);
  forced.table_build_max = 3;  // push everything through the class sweep
  forced.disk_cache = false;
  Oracle swept(forced);
  Oracle tabled(testing::test_oracle_config(12));
  for (long long n : {4LL, 6LL, 8LL}) {
    auto shapes = partitions_of(n);
    for (const Partition& la : shapes)
      for (const Partition& mu : shapes)
        CHECK(swept.kronecker(la, mu, mu) == tabled.kronecker(la, mu, mu));
  }
}

TEST_CASE("reduced coefficients stabilize") {
  Oracle oracle(testing::test_oracle_config(24));
  CHECK(oracle.reduced(Partition{}, Partition{}, Partition{}) == 1);
  CHECK(oracle.reduced(Partition({1}), Partition{}, Partition({1})) == 1);
  CHECK(oracle.reduced(Partition({1}), Partition{}, Partition{}) == 0);
  CHECK(oracle.reduced(Partition({1}), Partition{}, Partition({2})) == 0);
  CHECK(oracle.reduced(Partition({1}), Partition({1}), Partition({1, 1})) == 1);

  Oracle tiny(testing::test_oracle_config(3));
  CHECK_THROWS_WITH_AS((void)tiny.reduced(Partition({2}), Partition({2}), Partition({2})),
                       doctest::Contains("cap"), std::domain_error);
}

TEST_CASE("stabilization witness holds three steps past the first agreement") {
  Oracle oracle(testing::test_oracle_config(34));
  // all alpha, beta with |.| <= 4 and gamma with |.| <= 8
  std::vector<Partition> small_shapes, gammas;
  for (long long w = 0; w <= 4; ++w)
    for (const Partition& p : partitions_of(w)) small_shapes.push_back(p);
  for (long long w = 0; w <= 8; ++w)
    for (const Partition& p : partitions_of(w)) gammas.push_back(p);

  struct State {
    Partition alpha, beta, gamma;
    long long n0 = 0;
    std::vector<long long> values;
  };
  std::vector<State> states;
  for (const Partition& alpha : small_shapes)
    for (const Partition& beta : small_shapes)
      for (const Partition& gamma : gammas) {
        State st{alpha, beta, gamma, 0, {}};
        st.n0 = alpha.weight() + beta.weight() + gamma.weight() +
                std::max({alpha.part(0), beta.part(0), gamma.part(0)});
        states.push_back(std::move(st));
      }

  // evaluate the whole sequence window in rounds grouped by weight
  const int kWindow = 9;  // room for the first agreement plus three confirmations
  for (int step = 0; step < kWindow; ++step) {
    std::map<long long, std::vector<size_t>> by_n;
    for (size_t i = 0; i < states.size(); ++i) by_n[states[i].n0 + step].push_back(i);
    for (const auto& [n, members] : by_n) {
      std::vector<std::array<Partition, 3>> triples;
      triples.reserve(members.size());
      for (size_t i : members) {
        const State& st = states[i];
        triples.push_back({*prepend_row(n, st.gamma), *prepend_row(n, st.alpha),
                           *prepend_row(n, st.beta)});
      }
      auto values = oracle.kronecker_many(n, triples);
      for (size_t k = 0; k < members.size(); ++k)
        states[members[k]].values.push_back(values[k]);
    }
  }

  long long witnessed = 0;
  for (const State& st : states) {
    for (int i = 0; i + 4 < kWindow; ++i) {
      if (st.values[static_cast<size_t>(i)] != st.values[static_cast<size_t>(i + 1)]) continue;
      ++witnessed;
      for (int j = i + 2; j <= i + 4; ++j)
        CHECK(st.values[static_cast<size_t>(j)] == st.values[static_cast<size_t>(i)]);
      break;
    }
  }
  // every swept triple reaches its two-in-a-row witness early enough that
  // three confirmation steps fit in the window
  CHECK(witnessed == static_cast<long long>(states.size()));
}

TEST_CASE("disk cache round trip, corruption, and version mismatch") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "kron22-test-cache-io";
  fs::remove_all(dir);
  OracleConfig cfg;
  cfg.cap = 12;
  cfg.cache_dir = dir;

  std::vector<long long> reference;
  {
    Oracle writer(cfg);
    auto table = writer.table(9);
    for (size_t i = 0; i < table->classes().size(); ++i)
      reference.push_back(table->chi(3, i));
  }
  fs::path file = dir / "chartable-n9.bin";
  REQUIRE(fs::exists(file));

  {
    Oracle reader(cfg);
    auto table = reader.table(9);
    for (size_t i = 0; i < table->classes().size(); ++i)
      CHECK(table->chi(3, i) == reference[i]);
  }

  // corrupt the payload: the loader must reject and rebuild
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(-9, std::ios::end);
    const char junk[] = "XXXXXXXX";
    f.write(junk, 8);
  }
  {
    Oracle reader(cfg);
    auto table = reader.table(9);
    for (size_t i = 0; i < table->classes().size(); ++i)
      CHECK(table->chi(3, i) == reference[i]);
  }

  // flip the version field (bytes 8..11): same story
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(8, std::ios::beg);
    uint32_t bogus = 999;
    f.write(reinterpret_cast<const char*>(&bogus), sizeof bogus);
  }
  {
    Oracle reader(cfg);
    auto table = reader.table(9);
    for (size_t i = 0; i < table->classes().size(); ++i)
      CHECK(table->chi(3, i) == reference[i]);
  }
  fs::remove_all(dir);
}
