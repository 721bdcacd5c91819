#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "stoplat/npo.hpp"
#include "stoplat/random.hpp"
#include "stoplat/reductions.hpp"

using namespace stoplat;

namespace {

TotalExtension identity_tau(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  return TotalExtension(perm);
}

}  // namespace

TEST_CASE("apply_reduction moves one element toward the target") {
  const ReductionSpec spec(Poset(2), chain_poset(2), identity_tau(2), 1);
  // {1} lacks 0, which sits below the anchor in the target: swap them.
  CHECK(apply_reduction(spec, bit(1)) == bit(0));
  // {0} has an empty removable part, {0,1} an empty deficit.
  CHECK(apply_reduction(spec, bit(0)) == bit(0));
  CHECK(apply_reduction(spec, bit(0) | bit(1)) == (bit(0) | bit(1)));
  CHECK_THROWS_AS(apply_reduction(ReductionSpec(chain_poset(2), chain_poset(2), identity_tau(2), 0), bit(1)),
                  NotAnIdeal);
}

TEST_CASE("build_reduction_stop tabulates the reduction over all ideals") {
  const StOpMap phi = build_reduction_stop(ReductionSpec(Poset(2), chain_poset(2), identity_tau(2), 1));
  CHECK(phi.apply(0) == 0);
  CHECK(phi.apply(bit(0)) == bit(0));
  CHECK(phi.apply(bit(1)) == bit(0));
  CHECK(phi.apply(bit(0) | bit(1)) == (bit(0) | bit(1)));

  // An anchor with no target relations acts as the identity.
  const StOpMap noop = build_reduction_stop(ReductionSpec(Poset(3), make_poset(3, {{0, 1}}), identity_tau(3), 2));
  CHECK(noop == StOpMap::identity(Poset(3)));

  // No anchor exists on an empty ground set; the cyclic composition
  // starts from the identity and stays there.
  const StOpMap empty = superreduction(Poset(0), Poset(0), TotalExtension(std::vector<int>{}));
  CHECK(empty.domain().size() == 1);
  CHECK(empty.apply(0) == 0);
}

TEST_CASE("reduction specs validate their extension chain") {
  CHECK_THROWS_AS(ReductionSpec(chain_poset(2), Poset(2), identity_tau(2), 0), NotAnExtension);
  CHECK_THROWS_AS(ReductionSpec(Poset(2), chain_poset(2), TotalExtension(std::vector<int>{1, 0}), 0),
                  NotAnExtension);
  CHECK_THROWS_AS(ReductionSpec(Poset(2), chain_poset(2), identity_tau(2), 2), BoundsError);
  CHECK_THROWS_AS(ReductionSpec(Poset(2), chain_poset(2), identity_tau(2), -1), BoundsError);
}

TEST_CASE("single reductions satisfy all four axioms") {
  for (const Poset& target : all_npo(3)) {
    const TotalExtension tau = identity_tau(3);
    std::vector<long long> omega(3);
    for (int x = 0; x < 3; ++x) omega[x] = tau.at(x);
    for (int a = 0; a < 3; ++a) {
      const StOpMap phi = build_reduction_stop(ReductionSpec(Poset(3), target, tau, a));
      CHECK(check_axiom1(phi));
      CHECK(check_axiom2(phi, BoundaryFunctional::additive_weight(omega)));
      CHECK(check_axiom3(phi));
      CHECK(check_axiom4(phi, tau));
    }
  }
}

TEST_CASE("reductions never raise the tau potential") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    const Poset target = random_natural_poset(rng, n, 0.5);
    const TotalExtension tau = identity_tau(n);
    const IdealFamily ideals = enumerate_ideals(Poset(n));
    for (int a = 0; a < n; ++a) {
      const ReductionSpec spec(Poset(n), target, tau, a);
      for (Subset s : ideals.members()) {
        const Subset t = apply_reduction(spec, s);
        CHECK(popcount(t) == popcount(s));
        CHECK(tau.set_weight(t) <= tau.set_weight(s));
        if (tau.set_weight(t) == tau.set_weight(s)) CHECK(t == s);
      }
    }
  }
}

TEST_CASE("superreduction collapses the ideal lattice onto the target") {
  const StOpMap same = superreduction(chain_poset(3), chain_poset(3), identity_tau(3));
  CHECK(same == StOpMap::identity(chain_poset(3)));

  const StOpMap phi = superreduction(Poset(2), chain_poset(2), identity_tau(2));
  CHECK(phi.is_idempotent());
  CHECK(range_of(phi).members() == std::vector<Subset>{0, 1, 3});

  const Poset flipped = make_poset(2, {{1, 0}});
  const StOpMap psi = superreduction(Poset(2), flipped, TotalExtension(std::vector<int>{1, 0}));
  CHECK(range_of(psi) == enumerate_ideals(flipped));
}

TEST_CASE("superreduction range is independent of anchor order") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 4;
    const Poset target = random_natural_poset(rng, n, 0.5);
    const TotalExtension tau = identity_tau(n);
    const StOpMap forward = superreduction(Poset(n), target, tau);

    // Rebuild by cycling anchors in descending tau position instead.
    StOpMap current = StOpMap::identity(Poset(n));
    const int cap = 2 + static_cast<int>(current.domain().size()) * n * (n - 1) / 2;
    for (int round = 0; round < cap; ++round) {
      StOpMap next = current;
      for (int pos = n - 1; pos >= 0; --pos)
        next = compose(build_reduction_stop(ReductionSpec(Poset(n), target, tau, tau.element_at(pos))), next);
      if (next == current) break;
      current = next;
    }
    CHECK(range_of(idempotent_closure(current)) == range_of(forward));
    CHECK(range_of(forward) == enumerate_ideals(target));
  }
}

TEST_CASE("order recovery round-trips superreduction targets") {
  CHECK(verify_theorem5(Poset(4)));
  CHECK(verify_theorem5(chain_poset(4)));
  CHECK(range_of(superreduction(Poset(4), chain_poset(4), identity_tau(4))).size() == 5);
  for (const Poset& target : all_npo(3)) CHECK(verify_theorem5(target));
}

TEST_CASE("superreduction fixpoints are exactly the target ideals") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const Poset target = random_poset(rng, n, 0.4);
    const Poset base = random_subposet(rng, target, 0.5);
    const TotalExtension tau = default_linear_extension(target);
    const StOpMap phi = superreduction(base, target, tau);
    CHECK(range_of(phi) == enumerate_ideals(target));
    CHECK(stop_order(phi) == target);
  }
}
