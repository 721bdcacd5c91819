#ifndef STOPLAT_BITS_HPP
#define STOPLAT_BITS_HPP

#include <bit>
#include <cstdint>

namespace stoplat {

// A subset of the ground set {0,...,n-1}, element i at bit i.
using Subset = std::uint64_t;

inline constexpr int kMaxGroundSet = 64;

constexpr Subset bit(int i) { return Subset{1} << i; }

constexpr bool has_bit(Subset s, int i) { return (s >> i) & 1u; }

constexpr Subset full_set(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

constexpr int popcount(Subset s) { return std::popcount(s); }

constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

template <typename Fn>
void for_each_bit(Subset s, Fn&& fn) {
  while (s) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

}  // namespace stoplat

#endif
