// Brute-force oracles, independent of the library code paths they check.
// Everything here works on raw (numerator, denominator) pairs with its own
// gcd, comparison, and enumeration logic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<std::int64_t, std::int64_t>; // (h, k)

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool less(const Pair& x, const Pair& y) {
    return static_cast<__int128>(x.first) * y.second <
           static_cast<__int128>(y.first) * x.second;
}

// All irreducible h/k with 0 <= h <= k <= n, ascending.
inline std::vector<Pair> farey(std::int64_t n) {
    std::vector<Pair> out;
    for (std::int64_t k = 1; k <= n; ++k)
        for (std::int64_t h = 0; h <= k; ++h)
            if (gcd(h, k) == 1) out.emplace_back(h, k);
    std::sort(out.begin(), out.end(), less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Mobius function by trial factorization.
inline int mobius(std::int64_t d) {
    int sign = 1;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            sign = -sign;
        }
    }
    if (d > 1) sign = -sign;
    return sign;
}

template <typename Pred>
std::vector<Pair> filter(const std::vector<Pair>& terms, Pred pred) {
    std::vector<Pair> out;
    for (const Pair& t : terms)
        if (pred(t.first, t.second)) out.push_back(t);
    return out;
}

// Membership predicates of the subsequence families.
inline std::vector<Pair> f_upper(std::int64_t n, std::int64_t m) {
    return filter(farey(n), [&](std::int64_t h, std::int64_t) { return h <= m; });
}
inline std::vector<Pair> g_lower(std::int64_t n, std::int64_t m) {
    return filter(farey(n), [&](std::int64_t h, std::int64_t k) { return m + k - n <= h; });
}
inline std::vector<Pair> boolean(std::int64_t n, std::int64_t m) {
    return filter(farey(n),
                  [&](std::int64_t h, std::int64_t k) { return m + k - n <= h && h <= m; });
}

} // namespace oracle
