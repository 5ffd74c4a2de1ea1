#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frobz {

struct SweepResult {
    bool pass = true;
    std::string counterexample; // first failure, empty while pass
    std::int64_t pairs_checked = 0;
    std::int64_t lengths_checked = 0;
    std::int64_t sets_checked = 0;
    std::int64_t dead_ends_seen = 0;
    std::vector<std::string> lines; // per-unit detail for verbose output
};

// For every coprime pair b < a <= max_a: the closed-form dead ends, the BFS
// dead ends, and the geodesic-maximal Frobenius values coincide element for
// element; counts, strictness, and lengths follow the parity rule; the
// positive Frobenius count is (a-1)(b-1)/2; and the closed length formula
// matches BFS for every |c| <= (a+b)^2. Work is split over `jobs` workers;
// output does not depend on the worker count.
SweepResult verify_pairs(std::int64_t max_a = 60, int jobs = 1);

// Fuzzed generating sets of size 2..max_size with elements <= max_gen:
// scanning to twice the dead-end search bound (plus slack) finds nothing
// beyond the bound, and the dead-end set is finite and negation-symmetric.
SweepResult verify_bound(int sets = 200, std::int64_t max_gen = 40,
                         int max_size = 5,
                         std::uint64_t seed = 0x20260810u);

// m is a dead end for {2m, 2m+1} and for {2m-1, 2m} when m >= 2; {1, 2} has
// no dead ends at all.
SweepResult verify_riley_warshall(int max_m = 20);

// Every bundled group: the constructed generating set makes the witness a
// dead end of length exactly 2, with the advertised case selection.
SweepResult verify_groups();

} // namespace frobz
