#ifndef KLAB_BITS_HPP
#define KLAB_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace klab {

/// Subsets of a ground set with at most 64 elements.
using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool contains(Mask set, int i) { return (set >> i) & 1U; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

/// Index of the lowest set bit; m must be non-zero.
constexpr int lowest(Mask m) { return std::countr_zero(m); }

constexpr int highest(Mask m) { return 63 - std::countl_zero(m); }

inline std::vector<int> elements(Mask m) {
    std::vector<int> out;
    out.reserve(popcount(m));
    while (m != 0) {
        out.push_back(lowest(m));
        m &= m - 1;
    }
    return out;
}

inline Mask mask_of(const std::vector<int>& xs) {
    Mask m = 0;
    for (int x : xs) m |= bit(x);
    return m;
}

/// Next subset with the same popcount (Gosper's hack); 0 after the last one
/// that fits in `n` bits.
constexpr Mask next_same_size(Mask m, int n) {
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    const Mask next = (((r ^ m) >> 2) / c) | r;
    if (r == 0 || (n < 64 && next >= bit(n))) return 0;
    return next;
}

/// Calls f(s) for every s ⊆ [0,n) with |s| == size.
template <typename F>
void for_each_subset_of_size(int n, int size, F&& f) {
    if (size < 0 || size > n) return;
    if (size == 0) {
        f(Mask{0});
        return;
    }
    for (Mask s = low_mask(size); s != 0; s = next_same_size(s, n)) f(s);
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

} // namespace klab

#endif // KLAB_BITS_HPP
