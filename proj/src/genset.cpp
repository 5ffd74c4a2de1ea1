#include "frobz/genset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace frobz {

GenSet::GenSet(std::vector<std::int64_t> raw) {
    for (std::int64_t& v : raw) {
        if (v < 0) v = -v;
    }
    std::erase(raw, 0);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (raw.empty()) {
        throw EmptySet("generating set is empty after normalization");
    }
    std::int64_t g = 0;
    for (std::int64_t v : raw) g = std::gcd(g, v);
    if (g != 1) {
        throw NotCoprime(g, "generators are not coprime (gcd = " +
                                std::to_string(g) + ")");
    }
    gens_ = std::move(raw);
    sum_ = std::accumulate(gens_.begin(), gens_.end(), std::int64_t{0});
}

bool GenSet::contains(std::int64_t v) const {
    return std::binary_search(gens_.begin(), gens_.end(), v);
}

} // namespace frobz
