#ifndef STOPLAT_RANDOM_HPP
#define STOPLAT_RANDOM_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "stoplat/bits.hpp"
#include "stoplat/poset.hpp"

// Instance generators for property suites. Deterministic for a fixed
// engine state within one build; no expected value anywhere depends on
// the exact draws.

namespace stoplat {

/// Random suborder of the natural total order: each candidate pair kept
/// independently, then closed transitively.
inline Poset random_natural_poset(std::mt19937_64& rng, int n, double density = 0.3) {
  std::bernoulli_distribution keep(density);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (keep(rng)) pairs.emplace_back(i, j);
  return make_poset(n, pairs);
}

/// Random poset with arbitrary labels: a random natural poset conjugated
/// by a random permutation.
inline Poset random_poset(std::mt19937_64& rng, int n, double density = 0.3) {
  const Poset natural = random_natural_poset(rng, n, density);
  std::vector<int> relabel(static_cast<std::size_t>(n));
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for_each_bit(natural.above(x), [&](int y) {
      pairs.emplace_back(relabel[static_cast<std::size_t>(x)], relabel[static_cast<std::size_t>(y)]);
    });
  return make_poset(n, pairs);
}

/// Random suborder of the given poset: keeps a random subset of the
/// strict pairs and closes. The closure never leaves the target
/// relation, so the result is always extended by the target.
inline Poset random_subposet(std::mt19937_64& rng, const Poset& target, double keep_probability = 0.5) {
  std::bernoulli_distribution keep(keep_probability);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < target.size(); ++x)
    for_each_bit(target.above(x), [&](int y) {
      if (keep(rng)) pairs.emplace_back(x, y);
    });
  return make_poset(target.size(), pairs);
}

/// Random weights increasing along q: sorted draws assigned in the order
/// of a linear extension of q.
inline std::vector<long long> random_increasing_weights(std::mt19937_64& rng, const Poset& q,
                                                        long long lo = -20, long long hi = 20) {
  std::uniform_int_distribution<long long> draw(lo, hi);
  std::vector<long long> values(static_cast<std::size_t>(q.size()));
  for (auto& v : values) v = draw(rng);
  std::sort(values.begin(), values.end());
  const TotalExtension tau = default_linear_extension(q);
  std::vector<long long> weights(values.size());
  for (int position = 0; position < q.size(); ++position)
    weights[static_cast<std::size_t>(tau.element_at(position))] = values[static_cast<std::size_t>(position)];
  return weights;
}

}  // namespace stoplat

#endif
