#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

#include "stoplat/npo.hpp"

using namespace stoplat;

namespace {

std::set<std::pair<int, int>> strict_pairs(const Poset& p) {
  std::set<std::pair<int, int>> rel;
  for (int x = 0; x < p.size(); ++x)
    for_each_bit(p.above(x), [&](int y) { rel.emplace(x, y); });
  return rel;
}

}  // namespace

TEST_CASE("natural order counts match the known sequence") {
  CHECK(count_npo(0) == 1);
  CHECK(count_npo(1) == 1);
  CHECK(count_npo(2) == 2);
  CHECK(count_npo(3) == 7);
  CHECK(count_npo(4) == 40);
  CHECK(count_npo(5) == 357);
  CHECK_THROWS_AS(count_npo(11, 10), LimitExceeded);
  CHECK_THROWS_AS(count_npo(12, 12), LimitExceeded);
  CHECK_THROWS_AS(NpoIterator(12), LimitExceeded);
}

TEST_CASE("enumeration yields each natural order exactly once") {
  const std::vector<Poset> three = all_npo(3);
  REQUIRE(three.size() == 7);
  std::set<std::set<std::pair<int, int>>> seen;
  for (const Poset& p : three) {
    CHECK(is_natural(p));
    seen.insert(strict_pairs(p));
  }
  CHECK(seen.size() == 7);

  // Streaming order matches the materialized order.
  NpoIterator it(4);
  for (const Poset& p : all_npo(4)) {
    auto q = it.next();
    REQUIRE(q.has_value());
    CHECK(*q == p);
  }
  CHECK_FALSE(it.next().has_value());

  std::set<std::set<std::pair<int, int>>> six;
  NpoIterator big(6);
  while (auto p = big.next()) six.insert(strict_pairs(*p));
  CHECK(six.size() == 4824);
}

TEST_CASE("ranks count the strict pairs") {
  CHECK(npo_rank(chain_poset(3)) == 3);
  CHECK(npo_rank(Poset(4)) == 0);
  const Poset vee = make_poset(3, {{0, 2}, {1, 2}});
  CHECK(npo_rank(vee) == 2);
  CHECK(ndl_rank(vee) == 1);
  CHECK(ndl_rank(Poset(3)) == 3);
  CHECK(ndl_rank(chain_poset(3)) == 0);
}

TEST_CASE("meet and join form a lattice on the natural orders") {
  CHECK(npo_meet(chain_poset(3), Poset(3)) == Poset(3));
  CHECK(npo_join(chain_poset(3), Poset(3)) == chain_poset(3));
  CHECK(npo_join(make_poset(3, {{0, 1}}), make_poset(3, {{1, 2}})) == chain_poset(3));
  CHECK(npo_meet(chain_poset(4), chain_poset(4)) == chain_poset(4));
  CHECK_THROWS_AS(npo_meet(Poset(2), Poset(3)), SizeMismatch);
  CHECK_THROWS_AS(npo_join(Poset(2), Poset(3)), SizeMismatch);

  const std::vector<Poset> family = all_npo(4);
  for (std::size_t i = 0; i < family.size(); i += 3)
    for (std::size_t j = i; j < family.size(); j += 5) {
      const Poset& p = family[i];
      const Poset& q = family[j];
      CHECK(npo_meet(p, q) == npo_meet(q, p));
      CHECK(npo_join(p, q) == npo_join(q, p));
      CHECK(npo_meet(p, npo_join(p, q)) == p);
      CHECK(npo_join(p, npo_meet(p, q)) == p);
      for (std::size_t k = j; k < family.size(); k += 7) {
        const Poset& r = family[k];
        CHECK(npo_meet(npo_meet(p, q), r) == npo_meet(p, npo_meet(q, r)));
        CHECK(npo_join(npo_join(p, q), r) == npo_join(p, npo_join(q, r)));
      }
    }
}

TEST_CASE("the lattice is graded and lower semimodular") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(check_jordan_dedekind(n));
    CHECK(check_semimodular(n));
  }
  CHECK_THROWS_AS(check_jordan_dedekind(6), LimitExceeded);
  CHECK_THROWS_AS(check_semimodular(6), LimitExceeded);
}

TEST_CASE("asymptotic estimate and its ratio table") {
  CHECK(bps(0) == 0.0);
  CHECK_THAT(bps(1), Catch::Matchers::WithinRel(15.179, 1e-3));
  CHECK_THAT(bps(2), Catch::Matchers::WithinRel(51.055, 1e-3));
  CHECK_THROWS_AS(bps(61), Overflow);
  CHECK_THROWS_AS(bps(-1), BoundsError);

  const std::vector<BpsRow> rows = bps_ratio_table(12, 6);
  REQUIRE(rows.size() == 13);
  CHECK(rows[7].n == 7);
  CHECK(rows[7].npo_count == 96428);
  CHECK(rows[7].published);
  CHECK_FALSE(rows[6].published);
  CHECK_THAT(rows[7].bps_value, Catch::Matchers::WithinRel(4.3520e5, 1e-3));
  CHECK_THAT(rows[7].ratio, Catch::Matchers::WithinRel(4.5132, 1e-3));
  CHECK_THAT(rows[10].ratio, Catch::Matchers::WithinRel(0.62470, 1e-3));
  CHECK_THAT(rows[12].ratio, Catch::Matchers::WithinRel(0.16236, 1e-3));
  CHECK_THROWS_AS(bps_ratio_table(13), LimitExceeded);
}

TEST_CASE("worker sharding does not change counts") {
  char saved[16] = {0};
  const char* old = std::getenv("STOPLAT_THREADS");
  if (old) std::snprintf(saved, sizeof saved, "%s", old);
  setenv("STOPLAT_THREADS", "3", 1);
  CHECK(count_npo(6) == 4824);
  CHECK(count_npo(4) == 40);
  if (old)
    setenv("STOPLAT_THREADS", saved, 1);
  else
    unsetenv("STOPLAT_THREADS");
}
