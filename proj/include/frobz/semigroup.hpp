#pragma once

#include <cstdint>
#include <vector>

#include "frobz/genset.hpp"
#include "frobz/pair.hpp"

namespace frobz {

/*
 * For each residue r mod m, where m = min(S), the least non-negative integer
 * congruent to r that is a non-negative combination of S. Built once by a
 * shortest-path search on the residue graph; all queries are then O(1).
 */
class AperyTable {
public:
    explicit AperyTable(const GenSet& set);

    std::int64_t modulus() const { return modulus_; }
    const std::vector<std::int64_t>& least() const { return least_; }

    // c is a non-negative combination of the generators.
    bool positively_generated(std::int64_t c) const;

    Classification classify(std::int64_t c) const;

    // max over residues of least[r] - m; the largest value that is neither a
    // non-negative nor a non-positive combination. Throws NoFrobeniusValues
    // when 1 is a generator.
    std::int64_t frobenius_number() const;

private:
    std::int64_t modulus_;
    std::vector<std::int64_t> least_;
};

// One-shot conveniences; sweeps should hold an AperyTable instead.
bool is_positively_generated(const GenSet& set, std::int64_t c);
Classification classify(const GenSet& set, std::int64_t c);
std::int64_t frobenius_number(const GenSet& set);

// Every value classified Frobenius, sorted ascending; empty when 1 is a
// generator. Symmetric under negation.
std::vector<std::int64_t> frobenius_values(const GenSet& set);

} // namespace frobz
