#ifndef STOPLAT_STOP_HPP
#define STOPLAT_STOP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stoplat/bits.hpp"
#include "stoplat/boundary.hpp"
#include "stoplat/errors.hpp"
#include "stoplat/ideal_family.hpp"
#include "stoplat/poset.hpp"

namespace stoplat {

/// A Steiner operation materialized as an explicit self-map on the ideal
/// family of its base poset. The table maps domain indices to domain
/// indices, so axiom checks, composition equality and idempotence are
/// plain table scans.
class StOpMap {
 public:
  StOpMap(Poset base, std::vector<std::uint32_t> table)
      : base_(std::move(base)), domain_(enumerate_ideals(base_)), table_(std::move(table)) {
    if (table_.size() != domain_.size()) throw Error("table size does not match the ideal family of the base");
    for (std::uint32_t t : table_)
      if (t >= domain_.size()) throw Error("table image index out of range");
  }

  /// Builds from explicit subset-to-subset mappings; the sources must be
  /// exactly the ideals of the base and every image must be an ideal.
  static StOpMap from_subsets(Poset base, const std::vector<std::pair<Subset, Subset>>& mappings) {
    IdealFamily domain = enumerate_ideals(base);
    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    std::vector<std::uint32_t> table(domain.size(), kUnset);
    for (auto [from, to] : mappings) {
      const std::size_t i = domain.index_of(from);
      const std::size_t j = domain.index_of(to);
      if (table[i] != kUnset) throw Error("duplicate mapping for a domain member");
      table[i] = static_cast<std::uint32_t>(j);
    }
    for (std::uint32_t t : table)
      if (t == kUnset) throw Error("mapping table does not cover every ideal of the base");
    return StOpMap(std::move(base), std::move(table));
  }

  static StOpMap identity(Poset base) {
    IdealFamily domain = enumerate_ideals(base);
    std::vector<std::uint32_t> table(domain.size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<std::uint32_t>(i);
    return StOpMap(std::move(base), std::move(table));
  }

  const Poset& base() const { return base_; }
  const IdealFamily& domain() const { return domain_; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  Subset apply(Subset s) const { return domain_.member(table_[domain_.index_of(s)]); }
  Subset image_of_index(std::size_t i) const { return domain_.member(table_[i]); }

  bool is_idempotent() const {
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (table_[table_[i]] != table_[i]) return false;
    return true;
  }

  bool operator==(const StOpMap& other) const { return base_ == other.base_ && table_ == other.table_; }
  bool operator!=(const StOpMap& other) const { return !(*this == other); }

 private:
  Poset base_;
  IdealFamily domain_;
  std::vector<std::uint32_t> table_;
};

/// Axiom 1: the map preserves subset size.
inline bool check_axiom1(const StOpMap& phi) {
  for (std::size_t i = 0; i < phi.domain().size(); ++i)
    if (popcount(phi.image_of_index(i)) != popcount(phi.domain().member(i))) return false;
  return true;
}

/// Axiom 2': the map never increases the boundary functional.
inline bool check_axiom2(const StOpMap& phi, const BoundaryFunctional& boundary) {
  for (std::size_t i = 0; i < phi.domain().size(); ++i)
    if (boundary.evaluate(phi.image_of_index(i)) > boundary.evaluate(phi.domain().member(i))) return false;
  return true;
}

/// Axiom 3: the map is monotone under inclusion.
inline bool check_axiom3(const StOpMap& phi) {
  const auto& members = phi.domain().members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j || !is_subset(members[i], members[j])) continue;
      if (!is_subset(phi.image_of_index(i), phi.image_of_index(j))) return false;
    }
  return true;
}

/// Axiom 4: tau-weight never increases, and staying equal forces a
/// fixpoint. tau must extend the base poset.
inline bool check_axiom4(const StOpMap& phi, const TotalExtension& tau) {
  if (!tau.extends(phi.base())) throw NotAnExtension("tau does not extend the base poset");
  for (std::size_t i = 0; i < phi.domain().size(); ++i) {
    const Subset s = phi.domain().member(i);
    const Subset image = phi.image_of_index(i);
    const long long before = tau.set_weight(s);
    const long long after = tau.set_weight(image);
    if (after > before) return false;
    if (after == before && image != s) return false;
  }
  return true;
}

/// Table of S -> phi(psi(S)).
inline StOpMap compose(const StOpMap& phi, const StOpMap& psi) {
  if (phi.base() != psi.base()) throw BaseMismatch("composed maps have different base posets");
  std::vector<std::uint32_t> table(phi.domain().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = phi.table()[psi.table()[i]];
  return StOpMap(phi.base(), std::move(table));
}

/// Repeats phi against itself until the table stops changing. The
/// iteration count is certified by the tau-potential: a non-fixed step
/// strictly drops a sum bounded by n(n-1)/2, so a valid map stabilizes
/// within 1 + n(n-1)/2 rounds. Exceeding the bound means no total
/// extension witnesses termination.
inline StOpMap idempotent_closure(const StOpMap& phi) {
  const int n = phi.base().size();
  const int bound = 1 + n * (n - 1) / 2;
  StOpMap current = phi;
  for (int round = 0; round < bound + 1; ++round) {
    StOpMap next = compose(phi, current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw NonTerminating("map does not stabilize under repeated composition");
}

/// Fixpoints of an idempotent map; equals the image of its table.
inline IdealFamily range_of(const StOpMap& phi) {
  if (!phi.is_idempotent()) throw NotIdempotent("range is only defined for idempotent maps");
  std::vector<Subset> fixed;
  for (std::size_t i = 0; i < phi.domain().size(); ++i)
    if (phi.table()[i] == i) fixed.push_back(phi.domain().member(i));
  return IdealFamily(phi.base().size(), std::move(fixed));
}

/// The unique poset Q extending the base with Range(phi) = ideals of Q.
/// Validates idempotence and axioms 1 and 3 first.
inline Poset stop_order(const StOpMap& phi) {
  if (!phi.is_idempotent()) throw NotIdempotent("stop order requires an idempotent map");
  if (!check_axiom1(phi)) throw AxiomViolation("axiom 1 (size preservation) fails");
  if (!check_axiom3(phi)) throw AxiomViolation("axiom 3 (monotonicity) fails");
  const IdealFamily range = range_of(phi);
  const Poset q = recover_order(range);
  if (!is_extension(phi.base(), q) || enumerate_ideals(q) != range)
    throw Error("internal consistency failure: range is not the ideal family of the recovered order");
  return q;
}

}  // namespace stoplat

#endif
