#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "stoplat/mwi.hpp"
#include "stoplat/random.hpp"
#include "oracles.hpp"

using namespace stoplat;

TEST_CASE("brute force minimum weight ideal on small instances") {
  const WeightVector w{5, 1, 3};
  const MwiResult discrete = mwi_bruteforce(Poset(3), w, 2);
  CHECK(discrete.value == 4);
  CHECK(discrete.witness == (bit(1) | bit(2)));
  CHECK(discrete.searched == 8);

  const MwiResult empty = mwi_bruteforce(Poset(3), w, 0);
  CHECK(empty.value == 0);
  CHECK(empty.witness == 0);

  // The chain forces the heavy bottom element in.
  const MwiResult chained = mwi_bruteforce(chain_poset(3), w, 2);
  CHECK(chained.value == 6);
  CHECK(chained.witness == (bit(0) | bit(1)));
}

TEST_CASE("reduced search over the target matches brute force") {
  const MwiResult reduced = mwi_reduced(Poset(2), chain_poset(2), {1, 2}, 1);
  CHECK(reduced.value == 1);
  CHECK(reduced.witness == bit(0));
  CHECK(reduced.value == mwi_bruteforce(Poset(2), {1, 2}, 1).value);

  // Reducing a poset to itself changes nothing at all.
  const Poset p = make_poset(3, {{0, 2}});
  const MwiResult a = mwi_reduced(p, p, {2, 1, 3}, 2);
  const MwiResult b = mwi_bruteforce(p, {2, 1, 3}, 2);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  CHECK(a.searched == b.searched);
}

TEST_CASE("reduced search validates its inputs") {
  CHECK_THROWS_AS(mwi_reduced(chain_poset(2), Poset(2), {1, 2}, 1), NotAnExtension);
  CHECK_THROWS_AS(mwi_reduced(Poset(2), chain_poset(2), {2, 1}, 1), NotIncreasing);
  CHECK_THROWS_AS(mwi_reduced(Poset(2), chain_poset(3), {1, 2}, 1), SizeMismatch);
  CHECK_THROWS_AS(mwi_bruteforce(Poset(2), {1, 2, 3}, 1), SizeMismatch);
  CHECK_THROWS_AS(mwi_bruteforce(Poset(2), {1, 2}, 3), BoundsError);
  CHECK_THROWS_AS(mwi_bruteforce(Poset(2), {1, 2}, -1), BoundsError);
}

TEST_CASE("check_increasing matches the order") {
  CHECK(check_increasing({1, 2}, chain_poset(2)));
  CHECK_FALSE(check_increasing({2, 1}, chain_poset(2)));
  CHECK(check_increasing({2, 1}, Poset(2)));
  CHECK(check_increasing({3, 3, 3}, chain_poset(3)));
  CHECK_THROWS_AS(check_increasing({1, 2}, chain_poset(3)), SizeMismatch);
}

TEST_CASE("shifting weights moves optima by exactly k times the shift") {
  const auto [shifted, c] = shift_nonnegative({-2, 3});
  CHECK(shifted == WeightVector{0, 5});
  CHECK(c == 2);
  CHECK(shift_nonnegative({1, 0, 4}).second == 0);

  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long long> draw(-30, 30);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 6;
    const Poset p = random_poset(rng, n, 0.4);
    WeightVector w(n);
    for (auto& x : w) x = draw(rng);
    const auto [sw, shift] = shift_nonnegative(w);
    for (long long x : sw) CHECK(x >= 0);
    for (int k = 0; k <= n; ++k) {
      const MwiResult raw = mwi_bruteforce(p, w, k);
      const MwiResult moved = mwi_bruteforce(p, sw, k);
      CHECK(moved.value == raw.value + k * shift);
      CHECK(moved.witness == raw.witness);
    }
  }
}

TEST_CASE("minimizing is the mirror image of maximizing") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long long> draw(-10, 10);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 5;
    const Poset p = random_poset(rng, n, 0.5);
    WeightVector w(n), neg(n);
    for (int i = 0; i < n; ++i) {
      w[static_cast<std::size_t>(i)] = draw(rng);
      neg[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
    }
    const IdealFamily family = enumerate_ideals(p);
    for (int k = 0; k <= n; ++k) {
      long long best_max = 0;
      bool found = false;
      for (Subset m : family.members()) {
        if (popcount(m) != k) continue;
        long long total = 0;
        for_each_bit(m, [&](int v) { total += w[static_cast<std::size_t>(v)]; });
        if (!found || total > best_max) {
          best_max = total;
          found = true;
        }
      }
      CHECK(mwi_bruteforce(p, neg, k).value == -best_max);
    }
  }
}

TEST_CASE("greedy selection solves the discrete order exactly") {
  const MwiResult g = greedy_discrete({5, 1, 3}, 2);
  CHECK(g.value == 4);
  CHECK(g.witness == (bit(1) | bit(2)));
  CHECK(greedy_discrete({5, 1, 3}, 3).value == 9);
  CHECK(greedy_discrete({5, 1, 3}, 3).witness == full_set(3));
  CHECK(greedy_discrete({5, 1, 3}, 0).witness == 0);
  CHECK_THROWS_AS(greedy_discrete({5, 1, 3}, 4), BoundsError);

  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long long> draw(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 10;
    WeightVector w(n);
    for (auto& x : w) x = draw(rng);
    for (int k = 0; k <= n; ++k) {
      const MwiResult fast = greedy_discrete(w, k);
      const MwiResult slow = mwi_bruteforce(Poset(n), w, k);
      CHECK(fast.value == slow.value);
      CHECK(fast.witness == slow.witness);
    }
  }
}

TEST_CASE("reduced search never enumerates more than brute force") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    const Poset target = random_poset(rng, n, 0.5);
    const Poset base = random_subposet(rng, target, 0.5);
    const WeightVector w = random_increasing_weights(rng, target);
    const MwiResult fast = mwi_reduced(base, target, w, n / 2);
    const MwiResult slow = mwi_bruteforce(base, w, n / 2);
    CHECK(fast.value == slow.value);
    CHECK(fast.searched <= slow.searched);
    if (base == target) CHECK(fast.searched == slow.searched);
  }
}

TEST_CASE("independent reference agrees on random instances") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const Poset p = random_poset(rng, n, 0.4);
    WeightVector w(n);
    std::uniform_int_distribution<long long> draw(-7, 7);
    for (auto& x : w) x = draw(rng);
    const auto closed = oracle::relation_of(p);
    for (int k = 0; k <= n; ++k) {
      const auto expect = oracle::mwi(n, closed, w, k);
      REQUIRE(expect.found);
      const MwiResult got = mwi_bruteforce(p, w, k);
      CHECK(got.value == expect.value);
      CHECK(got.witness == expect.witness);
    }
  }
}
