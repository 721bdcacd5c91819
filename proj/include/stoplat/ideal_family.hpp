#ifndef STOPLAT_IDEAL_FAMILY_HPP
#define STOPLAT_IDEAL_FAMILY_HPP

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "stoplat/bits.hpp"
#include "stoplat/errors.hpp"
#include "stoplat/poset.hpp"

namespace stoplat {

/// A finite family of subsets of {0,...,n-1}, kept sorted ascending by
/// unsigned bitset value with no duplicates.
class IdealFamily {
 public:
  IdealFamily() = default;

  IdealFamily(int n, std::vector<Subset> members) : n_(n), members_(std::move(members)) {
    if (n < 0 || n > kMaxGroundSet) throw BoundsError("family ground set out of range");
    for (Subset m : members_)
      if (!is_subset(m, full_set(n))) throw BoundsError("family member exceeds ground set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  int ground_size() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Subset>& members() const { return members_; }
  Subset member(std::size_t i) const { return members_[i]; }

  bool contains(Subset s) const { return std::binary_search(members_.begin(), members_.end(), s); }

  /// Position of s in the canonical order; throws NotAMember.
  std::size_t index_of(Subset s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it == members_.end() || *it != s) throw NotAMember("subset is not a member of the family");
    return static_cast<std::size_t>(it - members_.begin());
  }

  bool operator==(const IdealFamily& other) const { return n_ == other.n_ && members_ == other.members_; }
  bool operator!=(const IdealFamily& other) const { return !(*this == other); }

 private:
  int n_ = 0;
  std::vector<Subset> members_;
};

/// All order ideals of p, canonically sorted. Always contains the empty
/// set and the whole ground set.
inline IdealFamily enumerate_ideals(const Poset& p) {
  const int n = p.size();
  const TotalExtension order = default_linear_extension(p);
  std::vector<Subset> out;
  // Decide elements in linear-extension order; an element may join only
  // when all its strict predecessors are already in.
  struct Rec {
    const Poset& p;
    const TotalExtension& order;
    std::vector<Subset>& out;
    void walk(int position, Subset current) {
      if (position == p.size()) {
        out.push_back(current);
        return;
      }
      const int x = order.element_at(position);
      walk(position + 1, current);
      if (is_subset(p.below(x), current)) walk(position + 1, current | bit(x));
    }
  } rec{p, order, out};
  rec.walk(0, 0);
  return IdealFamily(n, std::move(out));
}

/// True iff the family is closed under pairwise union and intersection.
/// Quadratic in the family size.
inline bool is_union_intersection_closed(const IdealFamily& f) {
  const auto& m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!f.contains(m[i] | m[j])) return false;
      if (!f.contains(m[i] & m[j])) return false;
    }
  return true;
}

/// Members of f, other than the minimum, with exactly one immediate
/// predecessor in the inclusion order restricted to f.
inline std::vector<Subset> join_irreducibles(const IdealFamily& f) {
  if (f.empty() || !is_union_intersection_closed(f)) throw NotALattice("family is not union/intersection closed and nonempty");
  const auto& m = f.members();
  // The minimum in inclusion order is the intersection of everything,
  // which closure guarantees is a member.
  Subset meet_all = m.front();
  for (Subset s : m) meet_all &= s;
  assert(f.contains(meet_all));

  std::vector<Subset> result;
  for (Subset x : m) {
    if (x == meet_all) continue;
    // Immediate predecessors: maximal members strictly below x.
    std::vector<Subset> strictly_below;
    for (Subset y : m)
      if (y != x && is_subset(y, x)) strictly_below.push_back(y);
    int immediate = 0;
    for (Subset y : strictly_below) {
      bool maximal = true;
      for (Subset z : strictly_below)
        if (z != y && is_subset(y, z)) {
          maximal = false;
          break;
        }
      if (maximal) ++immediate;
    }
    if (immediate == 1) result.push_back(x);
  }
  return result;
}

/// Birkhoff map: the join-irreducibles of f contained in x.
inline std::vector<Subset> birkhoff_eta(const IdealFamily& f, Subset x) {
  if (!f.contains(x)) throw NotAMember("eta argument is not a member of the family");
  std::vector<Subset> result;
  for (Subset j : join_irreducibles(f))
    if (is_subset(j, x)) result.push_back(j);
  return result;
}

/// Recovers the poset Q with x <= y iff every member containing y also
/// contains x. For a genuine ideal family this inverts enumerate_ideals;
/// in general the ideals of the result form a superset of f.
inline Poset recover_order(const IdealFamily& f) {
  const int n = f.ground_size();
  if (!f.contains(0) || !f.contains(full_set(n))) throw MissingBounds("family lacks the empty set or the ground set");
  // meet_of[y]: intersection of all members containing y. Then x <= y
  // iff x lies in meet_of[y]; transitivity is automatic.
  std::vector<Subset> meet_of(static_cast<std::size_t>(n), full_set(n));
  for (Subset m : f.members())
    for_each_bit(m, [&](int y) { meet_of[y] &= m; });
  std::vector<Subset> above(static_cast<std::size_t>(n), 0);
  for (int y = 0; y < n; ++y)
    for_each_bit(meet_of[y] & ~bit(y), [&](int x) {
      if (has_bit(meet_of[x], y))
        throw NotAntisymmetric("elements " + std::to_string(x) + " and " + std::to_string(y) + " are never separated");
      above[x] |= bit(y);
    });
  return Poset::from_closed(n, std::move(above));
}

/// True iff f round-trips: the ideals of recover_order(f) are exactly f.
inline bool verify_birkhoff(const IdealFamily& f) {
  return enumerate_ideals(recover_order(f)) == f;
}

/// Checks that relation inclusion and ideal-family inclusion agree in
/// opposite directions; must hold for every pair of posets.
inline bool check_theorem2(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw SizeMismatch("check_theorem2: posets have different ground sets");
  const bool extension = is_extension(p, q);
  const auto ip = enumerate_ideals(p).members();
  const auto iq = enumerate_ideals(q).members();
  const bool reversed_inclusion = std::includes(ip.begin(), ip.end(), iq.begin(), iq.end());
  return extension == reversed_inclusion;
}

}  // namespace stoplat

#endif
