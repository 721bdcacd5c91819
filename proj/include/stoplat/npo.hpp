#ifndef STOPLAT_NPO_HPP
#define STOPLAT_NPO_HPP

#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stoplat/bits.hpp"
#include "stoplat/errors.hpp"
#include "stoplat/parallel.hpp"
#include "stoplat/poset.hpp"

namespace stoplat {

/// x < y in p implies x < y as integers.
inline bool is_natural(const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    if (!is_subset(p.above(x), ~full_set(x + 1))) return false;
  return true;
}

namespace detail {

// Depth-first decision over the candidate pairs (i,j), i<j, in
// lexicographic order. The running relation is kept transitively closed;
// including a pair adds the full down(i) x up(j) product, and the branch
// dies if that product meets an already excluded pair.
struct NpoEngine {
  int n = 0;
  int m = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pair_index;

  explicit NpoEngine(int size) : n(size) {
    if (n < 0) throw BoundsError("negative ground set");
    m = n * (n - 1) / 2;
    if (m > 64) throw LimitExceeded("natural order enumeration supports at most 11 elements");
    pair_index.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        pair_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
      }
  }

  struct State {
    std::vector<Subset> above;
    std::vector<Subset> below;
    std::uint64_t excluded = 0;
    int next = 0;
  };

  State initial() const {
    State st;
    st.above.assign(static_cast<std::size_t>(n), 0);
    st.below.assign(static_cast<std::size_t>(n), 0);
    return st;
  }

  // Adds pairs[st.next] and everything transitivity forces. Returns
  // false (state unspecified) if a forced pair was already excluded.
  bool try_include(State& st) const {
    const auto [i, j] = pairs[static_cast<std::size_t>(st.next)];
    const Subset sources = st.below[static_cast<std::size_t>(i)] | bit(i);
    const Subset targets = st.above[static_cast<std::size_t>(j)] | bit(j);
    bool ok = true;
    for_each_bit(sources, [&](int a) {
      if (!ok) return;
      for_each_bit(targets & ~st.above[static_cast<std::size_t>(a)], [&](int b) {
        if (has_bit(st.excluded, pair_index[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])) ok = false;
      });
    });
    if (!ok) return false;
    for_each_bit(sources, [&](int a) { st.above[static_cast<std::size_t>(a)] |= targets; });
    for_each_bit(targets, [&](int b) { st.below[static_cast<std::size_t>(b)] |= sources; });
    return true;
  }

  // Skips over pairs already forced in by the closure.
  void advance_forced(State& st) const {
    while (st.next < m) {
      const auto [i, j] = pairs[static_cast<std::size_t>(st.next)];
      if (!has_bit(st.above[static_cast<std::size_t>(i)], j)) break;
      ++st.next;
    }
  }

  template <typename Leaf>
  void run_from(State st, Leaf&& leaf) const {
    advance_forced(st);
    if (st.next == m) {
      leaf(st);
      return;
    }
    State included = st;
    st.excluded |= std::uint64_t{1} << st.next;
    ++st.next;
    run_from(std::move(st), leaf);
    if (try_include(included)) {
      ++included.next;
      run_from(std::move(included), leaf);
    }
  }

  template <typename Leaf>
  void run(Leaf&& leaf) const {
    run_from(initial(), leaf);
  }

  std::uint64_t relation_mask(const State& st) const {
    std::uint64_t mask = 0;
    for (int k = 0; k < m; ++k) {
      const auto [i, j] = pairs[static_cast<std::size_t>(k)];
      if (has_bit(st.above[static_cast<std::size_t>(i)], j)) mask |= std::uint64_t{1} << k;
    }
    return mask;
  }

  std::vector<Subset> mask_to_above(std::uint64_t mask) const {
    std::vector<Subset> above(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < m; ++k)
      if ((mask >> k) & 1u) above[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].first)] |= bit(pairs[static_cast<std::size_t>(k)].second);
    return above;
  }
};

inline std::uint64_t count_npo_sequential(const NpoEngine& engine, NpoEngine::State start) {
  std::uint64_t total = 0;
  engine.run_from(std::move(start), [&](const NpoEngine::State&) { ++total; });
  return total;
}

inline std::vector<std::uint64_t> collect_relation_masks(int n) {
  NpoEngine engine(n);
  std::vector<std::uint64_t> masks;
  engine.run([&](const NpoEngine::State& st) { masks.push_back(engine.relation_mask(st)); });
  return masks;
}

}  // namespace detail

/// |NPO(n)|: the number of partial orders contained in the natural total
/// order on {0,...,n-1}. Sharded across workers by the first branching
/// decisions when more than one worker is available.
inline std::uint64_t count_npo(int n, int limit = 10) {
  if (n > limit) throw LimitExceeded("count limit is " + std::to_string(limit) + " (requested n=" + std::to_string(n) + ")");
  const detail::NpoEngine engine(n);
  const int workers = worker_count();
  if (workers <= 1 || n < 4) return detail::count_npo_sequential(engine, engine.initial());

  // Breadth-first expansion until there are enough independent branches.
  std::vector<detail::NpoEngine::State> frontier{engine.initial()};
  std::uint64_t settled = 0;
  const std::size_t target = static_cast<std::size_t>(8) * static_cast<std::size_t>(workers);
  while (frontier.size() < target) {
    std::vector<detail::NpoEngine::State> next_frontier;
    bool expanded = false;
    for (auto& st : frontier) {
      engine.advance_forced(st);
      if (st.next == engine.m) {
        ++settled;
        continue;
      }
      detail::NpoEngine::State included = st;
      st.excluded |= std::uint64_t{1} << st.next;
      ++st.next;
      next_frontier.push_back(std::move(st));
      if (engine.try_include(included)) {
        ++included.next;
        next_frontier.push_back(std::move(included));
      }
      expanded = true;
    }
    frontier = std::move(next_frontier);
    if (!expanded) break;
  }

  std::atomic<std::size_t> cursor{0};
  std::atomic<std::uint64_t> total{settled};
  run_workers(workers, [&](int) {
    for (;;) {
      const std::size_t claim = cursor.fetch_add(1);
      if (claim >= frontier.size()) return;
      total.fetch_add(detail::count_npo_sequential(engine, frontier[claim]));
    }
  });
  return total.load();
}

/// Streams every natural partial order of order n exactly once, in a
/// fixed depth-first order (pair excluded before included).
class NpoIterator {
 public:
  explicit NpoIterator(int n) : engine_(n) { work_.push_back(engine_.initial()); }

  std::optional<Poset> next() {
    while (!work_.empty()) {
      detail::NpoEngine::State st = std::move(work_.back());
      work_.pop_back();
      engine_.advance_forced(st);
      if (st.next == engine_.m) return Poset::from_closed(engine_.n, std::move(st.above));
      detail::NpoEngine::State included = st;
      if (engine_.try_include(included)) {
        ++included.next;
        work_.push_back(std::move(included));
      }
      st.excluded |= std::uint64_t{1} << st.next;
      ++st.next;
      work_.push_back(std::move(st));
    }
    return std::nullopt;
  }

 private:
  detail::NpoEngine engine_;
  std::vector<detail::NpoEngine::State> work_;
};

/// Materializes NPO(n); guarded because the families grow fast.
inline std::vector<Poset> all_npo(int n, int limit = 6) {
  if (n > limit) throw LimitExceeded("collection limit is " + std::to_string(limit));
  std::vector<Poset> result;
  NpoIterator it(n);
  while (auto p = it.next()) result.push_back(std::move(*p));
  return result;
}

/// Rank in NPO(n): the number of strict related pairs.
inline int npo_rank(const Poset& p) {
  assert(is_natural(p));
  return p.pair_count();
}

/// Rank of the dual lattice: n(n-1)/2 minus the NPO rank.
inline int ndl_rank(const Poset& p) {
  return p.size() * (p.size() - 1) / 2 - npo_rank(p);
}

/// Meet in NPO(n): intersection of the strict relations.
inline Poset npo_meet(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw SizeMismatch("meet of natural orders of different size");
  std::vector<Subset> above(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) above[static_cast<std::size_t>(x)] = p.above(x) & q.above(x);
  return Poset::from_closed(p.size(), std::move(above));
}

/// Join in NPO(n): transitive closure of the union of the relations.
inline Poset npo_join(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw SizeMismatch("join of natural orders of different size");
  std::vector<std::pair<int, int>> generating;
  for (int x = 0; x < p.size(); ++x)
    for_each_bit(p.above(x) | q.above(x), [&](int y) { generating.emplace_back(x, y); });
  return make_poset(p.size(), generating);
}

/// Lower semimodularity of NPO(n), checked over every ordered pair:
/// r(P) + r(Q) <= r(P meet Q) + r(P join Q).
inline bool check_semimodular(int n, int limit = 5) {
  if (n > limit) throw LimitExceeded("semimodularity check limit is " + std::to_string(limit));
  const detail::NpoEngine engine(n);
  const auto masks = detail::collect_relation_masks(n);
  for (std::uint64_t u : masks)
    for (std::uint64_t v : masks) {
      const int rank_u = popcount(u);
      const int rank_v = popcount(v);
      const int rank_meet = popcount(u & v);
      // Closure of the union, on successor bitsets.
      std::vector<Subset> above = engine.mask_to_above(u | v);
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          if (has_bit(above[static_cast<std::size_t>(i)], k)) above[static_cast<std::size_t>(i)] |= above[static_cast<std::size_t>(k)];
      int rank_join = 0;
      for (Subset s : above) rank_join += popcount(s);
      if (rank_u + rank_v > rank_meet + rank_join) return false;
    }
  return true;
}

/// Rank-graded Jordan-Dedekind condition: every covering pair in the
/// inclusion order on NPO(n) raises the pair count by exactly one.
/// Equivalently, any gap of two or more has an intermediate element.
inline bool check_jordan_dedekind(int n, int limit = 5) {
  if (n > limit) throw LimitExceeded("chain condition check limit is " + std::to_string(limit));
  const auto masks = detail::collect_relation_masks(n);
  for (std::uint64_t u : masks)
    for (std::uint64_t v : masks) {
      if (u == v || (u & ~v) != 0) continue;  // need u strictly below v
      if (popcount(v) - popcount(u) < 2) continue;
      bool has_intermediate = false;
      for (std::uint64_t w : masks)
        if (w != u && w != v && (u & ~w) == 0 && (w & ~v) == 0) {
          has_intermediate = true;
          break;
        }
      if (!has_intermediate) return false;
    }
  return true;
}

/// Constants of the Brightwell-Proemel-Steger asymptotic count.
struct BpsConstants {
  static constexpr double kEven = 12.7636300;
  static constexpr double kOdd = 12.7635965;
};

/// BPS(n) = C_n * n * 2^(n^2/4).
inline double bps(int n) {
  if (n < 0) throw BoundsError("negative ground set");
  if (n > 60) throw Overflow("exponent guard: bps defined here only up to n=60");
  const double c = (n % 2 == 0) ? BpsConstants::kEven : BpsConstants::kOdd;
  return c * static_cast<double>(n) * std::exp2(static_cast<double>(n) * static_cast<double>(n) / 4.0);
}

// Known terms of OEIS A006455 (partial orders contained in the natural
// total order). Entries beyond the live enumeration limit are inputs
// taken from the sequence, not recomputed.
inline constexpr std::uint64_t kKnownNpoCounts[] = {
    1ull,      1ull,         2ull,          7ull,           40ull,           357ull,          4824ull,
    96428ull,  2800472ull,   116473461ull,  6855780268ull,  565505147444ull, 64824245807684ull};
inline constexpr int kKnownNpoCountMax = 12;

struct BpsRow {
  int n = 0;
  std::uint64_t npo_count = 0;
  bool published = false;  // taken from the sequence rather than computed
  double bps_value = 0.0;
  double ratio = 0.0;
};

/// Rows (n, |NPO(n)|, BPS(n), ratio) for n = 0..n_max. Counts are
/// computed live up to live_limit and taken from the known sequence
/// beyond it.
inline std::vector<BpsRow> bps_ratio_table(int n_max, int live_limit = 7) {
  if (n_max < 0) throw BoundsError("negative table size");
  if (n_max > kKnownNpoCountMax) throw LimitExceeded("no known counts beyond n=12");
  std::vector<BpsRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    BpsRow row;
    row.n = n;
    row.published = n > live_limit;
    row.npo_count = row.published ? kKnownNpoCounts[n] : count_npo(n);
    row.bps_value = bps(n);
    row.ratio = row.bps_value / static_cast<double>(row.npo_count);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace stoplat

#endif
