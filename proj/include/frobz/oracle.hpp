#pragma once

#include <cstdint>
#include <vector>

#include "frobz/genset.hpp"

namespace frobz {

/*
 * Exact word lengths over a symmetric window, computed by breadth-first
 * search from 0 with steps +-s. The search itself runs on the padded window
 * |c| <= radius + max(S); any minimal combination summing to a target in the
 * reported range can be reordered so its partial sums stay inside the padded
 * window, so every reported entry is the true length, not a windowed
 * approximation.
 */
class LengthTable {
public:
    static constexpr std::size_t kDefaultMaxCells = std::size_t{1} << 25;

    LengthTable(GenSet set, std::int64_t radius,
                std::size_t max_cells = kDefaultMaxCells);

    const GenSet& genset() const { return set_; }
    std::int64_t valid_radius() const { return radius_; }
    bool covers(std::int64_t c) const;

    // Exact length of c; throws InsufficientRadius when |c| > valid_radius.
    std::int64_t length(std::int64_t c) const;

private:
    GenSet set_;
    std::int64_t radius_;
    std::int64_t window_;
    std::vector<std::int32_t> len_;
};

// No neighbor c +- s is longer than c. Requires |c| + max(S) <= valid_radius.
bool is_dead_end(const LengthTable& table, std::int64_t c);

// Every neighbor is strictly shorter.
bool is_strict_dead_end(const LengthTable& table, std::int64_t c);

struct DeadEndReport {
    std::int64_t value;
    std::int64_t length;
    bool strict;
    std::int64_t depth;
};

// Scan radius that provably contains every dead end: (max(S) - 1) times the
// sum of the remaining generators.
std::int64_t dead_end_search_bound(const GenSet& set);

// Every dead end, found by exhaustive scan up to the search bound, sorted by
// value and closed under negation.
std::vector<DeadEndReport> find_dead_ends(const GenSet& set);

// Graph distance from the dead end d to the first strictly longer sphere,
// minus 1. The search window starts at 2*(n+1)*max(S) and doubles whenever
// the answer could depend on cells outside it.
std::int64_t dead_end_depth(const GenSet& set, std::int64_t d);

// g precedes h in the geodesic order: some geodesic from 0 to h passes
// through g, equivalently length(g) + length(h - g) == length(h).
bool cayley_leq(const LengthTable& table, std::int64_t g, std::int64_t h);

// Frobenius values dominated by no other Frobenius value in the geodesic
// order. Throws NoFrobeniusValues when 1 is a generator.
std::vector<std::int64_t> maximal_frobenius_values(const GenSet& set);

// All values of length exactly n. Requires valid_radius >= n * max(S) so the
// sphere is complete.
std::vector<std::int64_t> sphere(const LengthTable& table, std::int64_t n);

} // namespace frobz
