#pragma once

// Brute-force reference computations for tests. These deliberately avoid the
// library's own algorithms: lengths come from exhaustive coefficient
// enumeration, representability from dynamic programming, Apery values from
// an upward scan.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

namespace brute {

inline void length_rec(const std::vector<std::int64_t>& gens, std::size_t i,
                       std::int64_t remaining, std::int64_t used,
                       std::int64_t cap, std::optional<std::int64_t>& best) {
    if (best && used >= *best) return;
    if (i + 1 == gens.size()) {
        if (remaining % gens[i] == 0) {
            const std::int64_t total = used + std::abs(remaining) / gens[i];
            if (total <= cap && (!best || total < *best)) best = total;
        }
        return;
    }
    const std::int64_t lim = cap - used;
    for (std::int64_t x = -lim; x <= lim; ++x) {
        length_rec(gens, i + 1, remaining - x * gens[i], used + std::abs(x), cap,
                   best);
    }
}

// Minimal sum of |coefficients| expressing c, capped; nullopt if no
// expression within the cap exists.
inline std::optional<std::int64_t> length(const std::vector<std::int64_t>& gens,
                                          std::int64_t c, std::int64_t cap) {
    std::optional<std::int64_t> best;
    length_rec(gens, 0, c, 0, cap, best);
    return best;
}

inline bool positively_generated(const std::vector<std::int64_t>& gens,
                                 std::int64_t c) {
    if (c < 0) return false;
    std::vector<char> dp(static_cast<std::size_t>(c) + 1, 0);
    dp[0] = 1;
    for (std::int64_t g : gens) {
        for (std::int64_t v = g; v <= c; ++v) {
            if (dp[static_cast<std::size_t>(v - g)]) {
                dp[static_cast<std::size_t>(v)] = 1;
            }
        }
    }
    return dp[static_cast<std::size_t>(c)] != 0;
}

// least[r] for r mod min(gens); every least value is at most
// (min - 1) * max, so scanning that far suffices.
inline std::vector<std::int64_t> apery(const std::vector<std::int64_t>& gens) {
    std::int64_t m = gens.front(), top = gens.front();
    for (std::int64_t g : gens) {
        m = std::min(m, g);
        top = std::max(top, g);
    }
    const std::int64_t hi = (m - 1) * top + 1;
    std::vector<char> dp(static_cast<std::size_t>(hi) + 1, 0);
    dp[0] = 1;
    for (std::int64_t g : gens) {
        for (std::int64_t v = g; v <= hi; ++v) {
            if (dp[static_cast<std::size_t>(v - g)]) {
                dp[static_cast<std::size_t>(v)] = 1;
            }
        }
    }
    std::vector<std::int64_t> least(static_cast<std::size_t>(m), -1);
    std::int64_t found = 0;
    for (std::int64_t v = 0; v <= hi && found < m; ++v) {
        if (dp[static_cast<std::size_t>(v)] && least[static_cast<std::size_t>(v % m)] == -1) {
            least[static_cast<std::size_t>(v % m)] = v;
            ++found;
        }
    }
    return least;
}

} // namespace brute
