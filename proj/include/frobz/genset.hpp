#pragma once

#include <cstdint>
#include <vector>

#include "frobz/errors.hpp"

namespace frobz {

/*
 * A validated finite generating set of Z: strictly increasing positive
 * integers with gcd 1. Normalization replaces negative inputs by their
 * absolute values (the step set is symmetric anyway), drops zeros and
 * duplicates, and sorts.
 */
class GenSet {
public:
    explicit GenSet(std::vector<std::int64_t> raw);

    const std::vector<std::int64_t>& gens() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    std::int64_t min() const { return gens_.front(); }
    std::int64_t max() const { return gens_.back(); }
    std::int64_t sum() const { return sum_; }
    bool contains(std::int64_t v) const;

    bool operator==(const GenSet& other) const { return gens_ == other.gens_; }

private:
    std::vector<std::int64_t> gens_;
    std::int64_t sum_;
};

} // namespace frobz
