#ifndef STOPLAT_POSET_HPP
#define STOPLAT_POSET_HPP

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "stoplat/bits.hpp"
#include "stoplat/errors.hpp"

namespace stoplat {

/// A strict partial order on {0,...,n-1}, stored transitively closed as
/// per-element successor and predecessor bitsets. Immutable once built.
class Poset {
 public:
  /// The discrete order on n elements (no strict pairs).
  explicit Poset(int n = 0) {
    if (n < 0 || n > kMaxGroundSet) throw BoundsError("poset size out of range: " + std::to_string(n));
    n_ = n;
    above_.assign(static_cast<std::size_t>(n), 0);
    below_.assign(static_cast<std::size_t>(n), 0);
  }

  /// Wraps an already transitively closed, acyclic successor table.
  static Poset from_closed(int n, std::vector<Subset> above) {
    Poset p(n);
    p.above_ = std::move(above);
    assert(static_cast<int>(p.above_.size()) == n);
    p.rebuild_below();
#ifndef NDEBUG
    for (int x = 0; x < n; ++x) {
      assert(!has_bit(p.above_[x], x));
      assert(is_subset(p.above_[x], full_set(n)));
      for_each_bit(p.above_[x], [&](int y) { assert(is_subset(p.above_[y], p.above_[x])); });
    }
#endif
    return p;
  }

  int size() const { return n_; }
  Subset ground_set() const { return full_set(n_); }

  /// Strict comparison x < y.
  bool less(int x, int y) const { return has_bit(above_[x], y); }
  bool leq(int x, int y) const { return x == y || less(x, y); }

  /// {y : x < y}, strict successors of x.
  Subset above(int x) const { return above_[x]; }
  /// {y : y < x}, strict predecessors of x.
  Subset below(int x) const { return below_[x]; }

  /// Number of strict related pairs |<|.
  int pair_count() const {
    int c = 0;
    for (Subset s : above_) c += popcount(s);
    return c;
  }

  bool operator==(const Poset& other) const { return n_ == other.n_ && above_ == other.above_; }
  bool operator!=(const Poset& other) const { return !(*this == other); }

 private:
  void rebuild_below() {
    below_.assign(static_cast<std::size_t>(n_), 0);
    for (int x = 0; x < n_; ++x)
      for_each_bit(above_[x], [&](int y) { below_[y] |= bit(x); });
  }

  friend Poset make_poset(int n, const std::vector<std::pair<int, int>>& pairs);

  int n_ = 0;
  std::vector<Subset> above_;
  std::vector<Subset> below_;
};

/// Builds the transitive closure of the given strict pairs (x < y).
/// Throws CycleError if the closure would contain a directed cycle and
/// BoundsError on out-of-range indices or n > 64.
inline Poset make_poset(int n, const std::vector<std::pair<int, int>>& pairs) {
  Poset p(n);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw BoundsError("pair (" + std::to_string(x) + "," + std::to_string(y) + ") out of range for n=" + std::to_string(n));
    if (x == y) throw CycleError("reflexive pair (" + std::to_string(x) + "," + std::to_string(x) + ")");
    p.above_[x] |= bit(y);
  }
  // Warshall with bitset rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (has_bit(p.above_[i], k)) p.above_[i] |= p.above_[k];
  for (int x = 0; x < n; ++x)
    if (has_bit(p.above_[x], x)) throw CycleError("generating pairs contain a directed cycle through " + std::to_string(x));
  p.rebuild_below();
  return p;
}

inline Poset chain_poset(int n) {
  std::vector<Subset> above(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) above[x] = full_set(n) & ~full_set(x + 1);
  return Poset::from_closed(n, std::move(above));
}

/// Cover pairs (x,y): x < y with nothing strictly between. Sorted
/// lexicographically; the transitive closure of the result is the
/// original strict relation.
inline std::vector<std::pair<int, int>> hasse(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < p.size(); ++x)
    for_each_bit(p.above(x), [&](int y) {
      if ((p.above(x) & p.below(y)) == 0) covers.emplace_back(x, y);
    });
  return covers;
}

/// True iff every strict pair of p is a strict pair of q.
inline bool is_extension(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw SizeMismatch("is_extension: posets have different ground sets");
  for (int x = 0; x < p.size(); ++x)
    if (!is_subset(p.above(x), q.above(x))) return false;
  return true;
}

/// True iff s is downward closed: y in s and x < y imply x in s.
inline bool is_ideal(const Poset& p, Subset s) {
  assert(is_subset(s, p.ground_set()));
  Subset rest = s;
  while (rest) {
    int y = std::countr_zero(rest);
    if (!is_subset(p.below(y), s)) return false;
    rest &= rest - 1;
  }
  return true;
}

/// A bijection tau: {0,...,n-1} -> {0,...,n-1} used as a total order
/// (x comes before y iff tau(x) < tau(y)).
class TotalExtension {
 public:
  explicit TotalExtension(std::vector<int> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    if (n > kMaxGroundSet) throw BoundsError("total extension larger than 64 elements");
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
      int v = perm_[static_cast<std::size_t>(x)];
      if (v < 0 || v >= n || inverse_[static_cast<std::size_t>(v)] != -1)
        throw Error("total extension is not a bijection onto {0,...,n-1}");
      inverse_[static_cast<std::size_t>(v)] = x;
    }
  }

  int size() const { return static_cast<int>(perm_.size()); }

  /// tau(x), the position of element x.
  int at(int x) const { return perm_[static_cast<std::size_t>(x)]; }
  /// tau^{-1}(position).
  int element_at(int position) const { return inverse_[static_cast<std::size_t>(position)]; }

  const std::vector<int>& values() const { return perm_; }

  /// x < y in p implies tau(x) < tau(y).
  bool extends(const Poset& p) const {
    if (p.size() != size()) return false;
    for (int x = 0; x < p.size(); ++x) {
      bool ok = true;
      for_each_bit(p.above(x), [&](int y) { ok = ok && at(x) < at(y); });
      if (!ok) return false;
    }
    return true;
  }

  /// tau(S) = sum of tau(x) over x in S.
  long long set_weight(Subset s) const {
    long long total = 0;
    for_each_bit(s, [&](int x) { total += at(x); });
    return total;
  }

  bool operator==(const TotalExtension& other) const { return perm_ == other.perm_; }

 private:
  std::vector<int> perm_;
  std::vector<int> inverse_;
};

/// Deterministic linear extension: repeatedly place the minimal-index
/// element whose strict predecessors are all already placed.
inline TotalExtension default_linear_extension(const Poset& p) {
  const int n = p.size();
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  Subset placed = 0;
  for (int position = 0; position < n; ++position) {
    int chosen = -1;
    for (int x = 0; x < n; ++x) {
      if (has_bit(placed, x)) continue;
      if (is_subset(p.below(x), placed)) {
        chosen = x;
        break;
      }
    }
    assert(chosen >= 0);  // every finite poset has a linear extension
    perm[static_cast<std::size_t>(chosen)] = position;
    placed |= bit(chosen);
  }
  return TotalExtension(std::move(perm));
}

/// Side-by-side union; q's elements are relabeled to p.n,...,p.n+q.n-1.
inline Poset disjoint_union(const Poset& p, const Poset& q) {
  if (p.size() + q.size() > kMaxGroundSet) throw BoundsError("disjoint union exceeds 64 elements");
  const int n = p.size() + q.size();
  std::vector<Subset> above(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < p.size(); ++x) above[x] = p.above(x);
  for (int x = 0; x < q.size(); ++x) above[p.size() + x] = q.above(x) << p.size();
  return Poset::from_closed(n, std::move(above));
}

/// Coordinatewise order on the pair grid; (a,b) maps to index a*q.n+b.
inline Poset poset_product(const Poset& p, const Poset& q) {
  if (p.size() > 0 && q.size() > 0 && p.size() > kMaxGroundSet / q.size())
    throw BoundsError("product exceeds 64 elements");
  const int n = p.size() * q.size();
  std::vector<Subset> above(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < q.size(); ++b) {
      const int idx = a * q.size() + b;
      for (int c = 0; c < p.size(); ++c)
        for (int d = 0; d < q.size(); ++d) {
          if (p.leq(a, c) && q.leq(b, d) && (a != c || b != d)) above[idx] |= bit(c * q.size() + d);
        }
    }
  return Poset::from_closed(n, std::move(above));
}

}  // namespace stoplat

#endif
