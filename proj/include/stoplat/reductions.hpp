#ifndef STOPLAT_REDUCTIONS_HPP
#define STOPLAT_REDUCTIONS_HPP

#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stoplat/bits.hpp"
#include "stoplat/errors.hpp"
#include "stoplat/ideal_family.hpp"
#include "stoplat/poset.hpp"
#include "stoplat/stop.hpp"

namespace stoplat {

/// Parameters of a single weight-reduction: a base poset, a target
/// extension of it, a total extension of the target, and an anchor
/// element. The operator itself is weight-free.
struct ReductionSpec {
  Poset base;
  Poset target;
  TotalExtension tau;
  int anchor;

  ReductionSpec(Poset base_in, Poset target_in, TotalExtension tau_in, int anchor_in)
      : base(std::move(base_in)), target(std::move(target_in)), tau(std::move(tau_in)), anchor(anchor_in) {
    if (!is_extension(base, target)) throw NotAnExtension("target does not extend the base poset");
    if (!tau.extends(target)) throw NotAnExtension("tau does not extend the target poset");
    if (anchor < 0 || anchor >= base.size()) throw BoundsError("anchor out of range");
  }
};

/// One application: remove the tau-largest member of the ideal above the
/// anchor, insert the tau-smallest missing element below the anchor. If
/// either side is empty the ideal is returned unchanged.
inline Subset apply_reduction(const ReductionSpec& spec, Subset ideal) {
  if (!is_subset(ideal, spec.base.ground_set()) || !is_ideal(spec.base, ideal))
    throw NotAnIdeal("argument is not an ideal of the base poset");
  const int a = spec.anchor;
  const Subset up = ideal & (bit(a) | spec.target.above(a));
  const Subset down = ~ideal & spec.target.below(a);
  if (up == 0 || down == 0) return ideal;
  int v_max = -1, v_min = -1;
  for_each_bit(up, [&](int v) {
    if (v_max < 0 || spec.tau.at(v) > spec.tau.at(v_max)) v_max = v;
  });
  for_each_bit(down, [&](int u) {
    if (v_min < 0 || spec.tau.at(u) < spec.tau.at(v_min)) v_min = u;
  });
  const Subset result = (ideal & ~bit(v_max)) | bit(v_min);
  assert(is_ideal(spec.base, result));
  return result;
}

/// The reduction as an explicit table over all ideals of the base.
inline StOpMap build_reduction_stop(const ReductionSpec& spec) {
  IdealFamily domain = enumerate_ideals(spec.base);
  std::vector<std::uint32_t> table(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i)
    table[i] = static_cast<std::uint32_t>(domain.index_of(apply_reduction(spec, domain.member(i))));
  return StOpMap(spec.base, std::move(table));
}

/// Stable cyclic composition of the reductions for every anchor, taken
/// in ascending tau order, repeated until a full cycle changes nothing.
/// The result is idempotent and fixes exactly the common fixpoints of
/// the constituents.
inline StOpMap superreduction(const Poset& base, const Poset& target, const TotalExtension& tau) {
  if (!is_extension(base, target)) throw NotAnExtension("target does not extend the base poset");
  if (!tau.extends(target)) throw NotAnExtension("tau does not extend the target poset");
  const int n = base.size();
  IdealFamily domain = enumerate_ideals(base);

  std::vector<std::vector<std::uint32_t>> anchor_tables;
  anchor_tables.reserve(static_cast<std::size_t>(n));
  for (int position = 0; position < n; ++position) {
    const ReductionSpec spec(base, target, tau, tau.element_at(position));
    std::vector<std::uint32_t> t(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i)
      t[i] = static_cast<std::uint32_t>(domain.index_of(apply_reduction(spec, domain.member(i))));
    anchor_tables.push_back(std::move(t));
  }

  std::vector<std::uint32_t> table(domain.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<std::uint32_t>(i);

  // Every changed cycle strictly drops the summed tau-potential of all
  // images, which caps the number of cycles.
  const long long cycle_cap = 2 + static_cast<long long>(domain.size()) * n * (n - 1) / 2;
  for (long long cycle = 0; cycle < cycle_cap; ++cycle) {
    bool changed = false;
    for (const auto& t : anchor_tables)
      for (std::size_t i = 0; i < table.size(); ++i) {
        const std::uint32_t next = t[table[i]];
        if (next != table[i]) {
          table[i] = next;
          changed = true;
        }
      }
    if (!changed) {
      StOpMap result(base, std::move(table));
      if (!result.is_idempotent()) throw Error("internal consistency failure: stable cyclic composition is not idempotent");
      return result;
    }
  }
  throw Error("internal consistency failure: cyclic composition exceeded its certified cycle bound");
}

/// Realizes the target as a stop-order: builds the superreduction from
/// the discrete order and checks that the recovered order equals the
/// target element-for-element.
inline bool verify_theorem5(const Poset& target) {
  const Poset discrete(target.size());
  const StOpMap phi = superreduction(discrete, target, default_linear_extension(target));
  return stop_order(phi) == target;
}

}  // namespace stoplat

#endif
