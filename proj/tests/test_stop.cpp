#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "stoplat/boundary.hpp"
#include "stoplat/random.hpp"
#include "stoplat/reductions.hpp"
#include "stoplat/stop.hpp"

using namespace stoplat;

namespace {

// Ideals of the discrete order on two elements are all four subsets, so
// subset values double as table indices: 0, {0}=1, {1}=2, {0,1}=3.
StOpMap delta2_map(Subset f0, Subset f1, Subset f2, Subset f3) {
  return StOpMap::from_subsets(Poset(2), {{0, f0}, {1, f1}, {2, f2}, {3, f3}});
}

const TotalExtension kIdentity2(std::vector<int>{0, 1});

}  // namespace

TEST_CASE("from_subsets requires a complete single-valued table") {
  const StOpMap swap = delta2_map(0, 2, 1, 3);
  CHECK(swap.apply(1) == 2);
  CHECK(swap.apply(3) == 3);
  CHECK_THROWS_AS(StOpMap::from_subsets(Poset(2), {{0, 0}, {0, 1}}), Error);
  CHECK_THROWS_AS(StOpMap::from_subsets(Poset(2), {{0, 0}, {1, 1}, {2, 2}}), Error);
  // Sources and images must be ideals of the base.
  CHECK_THROWS_AS(StOpMap::from_subsets(chain_poset(2), {{0, 0}, {1, 1}, {2, 2}, {3, 3}}), NotAMember);
}

TEST_CASE("identity map satisfies every axiom") {
  const StOpMap id = StOpMap::identity(chain_poset(3));
  CHECK(id.is_idempotent());
  CHECK(check_axiom1(id));
  CHECK(check_axiom2(id, BoundaryFunctional::additive_weight({5, 1, 3})));
  CHECK(check_axiom3(id));
  CHECK(check_axiom4(id, TotalExtension(std::vector<int>{0, 1, 2})));
  CHECK(range_of(id).size() == 4);
  CHECK(stop_order(id) == chain_poset(3));
}

TEST_CASE("axiom 1 rejects size changes") {
  CHECK_FALSE(check_axiom1(delta2_map(0, 0, 0, 0)));
  CHECK(check_axiom1(delta2_map(0, 2, 1, 3)));
}

TEST_CASE("boundary functionals evaluate weights and graph boundaries") {
  const BoundaryFunctional additive = BoundaryFunctional::additive_weight({5, 1, 3});
  CHECK(additive.evaluate(bit(1) | bit(2)) == 4);
  CHECK(additive.evaluate(0) == 0);

  const Graph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const BoundaryFunctional edges = BoundaryFunctional::edge_boundary(cycle);
  const BoundaryFunctional vertices = BoundaryFunctional::vertex_boundary(cycle);
  CHECK(edges.evaluate(bit(0) | bit(1)) == 2);
  CHECK(vertices.evaluate(bit(0) | bit(1)) == 2);
  CHECK(edges.evaluate(0) == 0);
  CHECK(vertices.evaluate(0) == 0);
  CHECK(edges.evaluate(full_set(4)) == 0);

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), BoundsError);
}

TEST_CASE("axiom 2 rejects boundary increases") {
  const StOpMap id = StOpMap::identity(Poset(2));
  CHECK(check_axiom2(id, BoundaryFunctional::additive_weight({1, 5})));
  const StOpMap bump = delta2_map(0, 2, 2, 3);
  CHECK_FALSE(check_axiom2(bump, BoundaryFunctional::additive_weight({1, 5})));
}

TEST_CASE("axiom 3 rejects non-monotone maps") {
  CHECK(check_axiom3(StOpMap::identity(Poset(3))));
  CHECK(check_axiom3(delta2_map(0, 2, 1, 3)));
  // {0} maps above {2}, but {0,1} stays put, breaking monotonicity.
  const StOpMap phi = StOpMap::from_subsets(
      Poset(3), {{0, 0}, {1, 4}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}});
  CHECK_FALSE(check_axiom3(phi));
}

TEST_CASE("axiom 4 needs a weight decrease or a fixpoint") {
  const StOpMap swap = delta2_map(0, 2, 1, 3);
  CHECK_FALSE(check_axiom4(swap, kIdentity2));
  CHECK(check_axiom4(StOpMap::identity(Poset(2)), kIdentity2));
  CHECK_THROWS_AS(check_axiom4(StOpMap::identity(chain_poset(2)), TotalExtension(std::vector<int>{1, 0})),
                  NotAnExtension);
}

TEST_CASE("compose applies left after right") {
  const ReductionSpec spec0(Poset(2), chain_poset(2), kIdentity2, 0);
  const ReductionSpec spec1(Poset(2), chain_poset(2), kIdentity2, 1);
  const StOpMap phi0 = build_reduction_stop(spec0);
  const StOpMap phi1 = build_reduction_stop(spec1);
  const StOpMap both = compose(phi1, phi0);
  for (std::size_t i = 0; i < both.domain().size(); ++i)
    CHECK(both.image_of_index(i) == phi1.apply(phi0.image_of_index(i)));

  const StOpMap id = StOpMap::identity(Poset(2));
  CHECK(compose(id, phi1) == phi1);
  CHECK(compose(phi1, id) == phi1);
  CHECK_THROWS_AS(compose(id, StOpMap::identity(chain_poset(2))), BaseMismatch);
}

TEST_CASE("idempotent_closure stabilizes terminating maps") {
  const StOpMap id = StOpMap::identity(chain_poset(3));
  CHECK(idempotent_closure(id) == id);

  // A single reduction that needs more than one pass: anchored at 2
  // toward the 4-chain, {2,3} first becomes {0,2}, then {0,1}.
  const ReductionSpec spec(Poset(4), chain_poset(4), TotalExtension(std::vector<int>{0, 1, 2, 3}), 2);
  const StOpMap phi = build_reduction_stop(spec);
  CHECK_FALSE(phi.is_idempotent());
  CHECK(phi.apply(bit(2) | bit(3)) == (bit(0) | bit(2)));
  const StOpMap stable = idempotent_closure(phi);
  CHECK(stable.is_idempotent());
  CHECK(stable.apply(bit(2) | bit(3)) == (bit(0) | bit(1)));
  CHECK(idempotent_closure(stable) == stable);

  CHECK_THROWS_AS(idempotent_closure(delta2_map(0, 2, 1, 3)), NonTerminating);
}

TEST_CASE("range_of reads the fixpoints of an idempotent map") {
  CHECK(range_of(StOpMap::identity(chain_poset(3))).members() == std::vector<Subset>{0, 1, 3, 7});
  CHECK_THROWS_AS(range_of(delta2_map(0, 2, 1, 3)), NotIdempotent);
  const StOpMap sup = superreduction(Poset(2), chain_poset(2), kIdentity2);
  CHECK(range_of(sup).members() == std::vector<Subset>{0, 1, 3});
}

TEST_CASE("stop_order recovers the base for the identity and validates axioms") {
  const Poset vee = make_poset(3, {{0, 2}, {1, 2}});
  CHECK(stop_order(StOpMap::identity(vee)) == vee);
  CHECK_THROWS_AS(stop_order(delta2_map(0, 2, 1, 3)), NotIdempotent);

  // Idempotent but size-changing.
  CHECK_THROWS_AS(stop_order(delta2_map(0, 3, 2, 3)), AxiomViolation);

  // Idempotent, size-preserving, but not monotone: {0} -> {2} while
  // {0,1} stays fixed.
  const StOpMap bad = StOpMap::from_subsets(
      Poset(3), {{0, 0}, {1, 4}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}});
  CHECK(bad.is_idempotent());
  CHECK_THROWS_AS(stop_order(bad), AxiomViolation);
}

TEST_CASE("fixpoints of an idempotent stop are closed under union and intersection") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const Poset target = random_poset(rng, 2 + i % 5, 0.4);
    const StOpMap phi = superreduction(Poset(target.size()), target, default_linear_extension(target));
    REQUIRE(phi.is_idempotent());
    const auto fixed = range_of(phi).members();
    for (Subset s : fixed)
      for (Subset t : fixed) {
        CHECK(phi.apply(s | t) == (s | t));
        CHECK(phi.apply(s & t) == (s & t));
      }
  }
}

TEST_CASE("stop_order is deterministic across repeated runs") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 20; ++i) {
    const Poset target = random_poset(rng, 2 + i % 5, 0.5);
    const StOpMap phi = superreduction(Poset(target.size()), target, default_linear_extension(target));
    CHECK(stop_order(phi) == stop_order(phi));
  }
}
