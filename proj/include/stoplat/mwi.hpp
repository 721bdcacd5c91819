#ifndef STOPLAT_MWI_HPP
#define STOPLAT_MWI_HPP

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "stoplat/bits.hpp"
#include "stoplat/errors.hpp"
#include "stoplat/ideal_family.hpp"
#include "stoplat/poset.hpp"

namespace stoplat {

/// One exact integer weight per ground-set element; negative allowed.
using WeightVector = std::vector<long long>;

struct MwiResult {
  long long value = 0;
  Subset witness = 0;
  /// Number of ideals in the family the solver enumerated.
  std::size_t searched = 0;
};

/// u <= v in q implies w(u) <= w(v).
inline bool check_increasing(const WeightVector& weights, const Poset& q) {
  if (static_cast<int>(weights.size()) != q.size()) throw SizeMismatch("weight vector length does not match the poset");
  for (int u = 0; u < q.size(); ++u) {
    bool ok = true;
    for_each_bit(q.above(u), [&](int v) {
      ok = ok && weights[static_cast<std::size_t>(u)] <= weights[static_cast<std::size_t>(v)];
    });
    if (!ok) return false;
  }
  return true;
}

namespace detail {

inline long long subset_weight(const WeightVector& weights, Subset s) {
  long long total = 0;
  for_each_bit(s, [&](int v) { total += weights[static_cast<std::size_t>(v)]; });
  return total;
}

// Minimum over the family members of the given size; members are sorted,
// so the first witness hit on a tie is the canonically least one.
inline MwiResult minimize_over(const IdealFamily& family, const WeightVector& weights, int k) {
  MwiResult best;
  best.searched = family.size();
  bool found = false;
  for (Subset m : family.members()) {
    if (popcount(m) != k) continue;
    const long long value = subset_weight(weights, m);
    if (!found || value < best.value) {
      best.value = value;
      best.witness = m;
      found = true;
    }
  }
  // Every poset has an ideal of each size 0..n: any linear-extension prefix.
  assert(found);
  return best;
}

}  // namespace detail

/// Minimum weight over ideals of p with exactly k elements, with the
/// canonically least witness.
inline MwiResult mwi_bruteforce(const Poset& p, const WeightVector& weights, int k) {
  if (static_cast<int>(weights.size()) != p.size()) throw SizeMismatch("weight vector length does not match the poset");
  if (k < 0 || k > p.size()) throw BoundsError("cardinality out of range");
  return detail::minimize_over(enumerate_ideals(p), weights, k);
}

/// Solves the same problem by searching only the ideals of the target
/// extension; requires weights increasing on the target. The optimal
/// value always equals the brute-force value over the base.
inline MwiResult mwi_reduced(const Poset& base, const Poset& target, const WeightVector& weights, int k) {
  if (base.size() != target.size()) throw SizeMismatch("base and target have different ground sets");
  if (static_cast<int>(weights.size()) != base.size()) throw SizeMismatch("weight vector length does not match the poset");
  if (!is_extension(base, target)) throw NotAnExtension("target does not extend the base poset");
  if (!check_increasing(weights, target)) throw NotIncreasing("weights are not increasing on the target");
  if (k < 0 || k > base.size()) throw BoundsError("cardinality out of range");
  return detail::minimize_over(enumerate_ideals(target), weights, k);
}

/// Shifts weights to be nonnegative; optima move by exactly k*C.
inline std::pair<WeightVector, long long> shift_nonnegative(const WeightVector& weights) {
  long long shift = 0;
  for (long long w : weights) shift = std::max(shift, -w);
  WeightVector shifted = weights;
  for (long long& w : shifted) w += shift;
  return {std::move(shifted), shift};
}

/// The discrete-order solution: take the k lightest elements (index
/// ascending on ties).
inline MwiResult greedy_discrete(const WeightVector& weights, int k) {
  const int n = static_cast<int>(weights.size());
  if (k < 0 || k > n) throw BoundsError("cardinality out of range");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[static_cast<std::size_t>(a)] < weights[static_cast<std::size_t>(b)]; });
  MwiResult result;
  result.searched = 1;
  for (int i = 0; i < k; ++i) {
    result.witness |= bit(order[static_cast<std::size_t>(i)]);
    result.value += weights[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
  }
  return result;
}

}  // namespace stoplat

#endif
