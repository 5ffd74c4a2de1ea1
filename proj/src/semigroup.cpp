#include "frobz/semigroup.hpp"

#include <algorithm>
#include <queue>

namespace frobz {

AperyTable::AperyTable(const GenSet& set) : modulus_(set.min()) {
    // Shortest path on residues mod m: node r, edge r -> (r + s) mod m of
    // weight s. The distance from 0 to r is the least representable value
    // congruent to r.
    const std::int64_t m = modulus_;
    least_.assign(static_cast<std::size_t>(m), -1);
    using Item = std::pair<std::int64_t, std::int64_t>; // (value, residue)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0, 0});
    while (!heap.empty()) {
        const auto [value, r] = heap.top();
        heap.pop();
        if (least_[static_cast<std::size_t>(r)] != -1) continue;
        least_[static_cast<std::size_t>(r)] = value;
        for (std::int64_t s : set.gens()) {
            if (s % m == 0) continue; // stays in the same class
            const std::int64_t nr = (r + s) % m;
            if (least_[static_cast<std::size_t>(nr)] == -1) {
                heap.push({value + s, nr});
            }
        }
    }
    // gcd 1 guarantees the residue graph is connected
    for (std::int64_t v : least_) {
        if (v == -1) throw Error("internal: apery residue unreachable");
    }
}

bool AperyTable::positively_generated(std::int64_t c) const {
    if (c < 0) return false;
    return c >= least_[static_cast<std::size_t>(c % modulus_)];
}

Classification AperyTable::classify(std::int64_t c) const {
    if (c == 0) return Classification::Both;
    if (c > 0) {
        return positively_generated(c) ? Classification::PositivelyGenerated
                                       : Classification::Frobenius;
    }
    return positively_generated(-c) ? Classification::NegativelyGenerated
                                    : Classification::Frobenius;
}

std::int64_t AperyTable::frobenius_number() const {
    if (modulus_ == 1) {
        throw NoFrobeniusValues("1 is a generator; every integer is representable");
    }
    return *std::max_element(least_.begin(), least_.end()) - modulus_;
}

bool is_positively_generated(const GenSet& set, std::int64_t c) {
    return AperyTable(set).positively_generated(c);
}

Classification classify(const GenSet& set, std::int64_t c) {
    return AperyTable(set).classify(c);
}

std::int64_t frobenius_number(const GenSet& set) {
    return AperyTable(set).frobenius_number();
}

std::vector<std::int64_t> frobenius_values(const GenSet& set) {
    AperyTable table(set);
    std::vector<std::int64_t> out;
    if (table.modulus() == 1) return out;
    const std::int64_t top = table.frobenius_number();
    for (std::int64_t c = -top; c <= top; ++c) {
        if (table.classify(c) == Classification::Frobenius) out.push_back(c);
    }
    return out;
}

} // namespace frobz
