#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace omc {

/// A subset of at most 64 indexed items; bit i set means item i is a member.
using Mask = std::uint64_t;

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool is_subset(Mask sub, Mask super) { return (sub & ~super) == 0; }

constexpr Mask reverse_bits(Mask x) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
  return (x >> 32) | (x << 32);
}

/// Lexicographic order of the sorted index lists of two masks: at the
/// smallest index where they differ, the mask containing it comes first.
constexpr bool index_lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

inline std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

/// Calls f(mask) for every k-subset of the n items {0..n-1}, in lexicographic
/// order of index lists.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    f(m);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

/// k-subsets of the members of `ground`, as masks over the same index space.
inline std::vector<Mask> k_subsets_of(Mask ground, int k) {
  const std::vector<int> items = indices_of(ground);
  std::vector<Mask> out;
  for_each_k_subset(static_cast<int>(items.size()), k, [&](Mask local) {
    Mask m = 0;
    for (int i : indices_of(local)) m |= Mask{1} << items[static_cast<std::size_t>(i)];
    out.push_back(m);
  });
  return out;
}

}  // namespace omc
