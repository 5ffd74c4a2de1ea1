#include "frobz/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "frobz/semigroup.hpp"

namespace frobz {

LengthTable::LengthTable(GenSet set, std::int64_t radius, std::size_t max_cells)
    : set_(std::move(set)), radius_(radius) {
    if (radius < 0) {
        throw std::invalid_argument("table radius must be non-negative");
    }
    window_ = radius_ + set_.max();
    const std::size_t cells = static_cast<std::size_t>(2 * window_ + 1);
    if (cells > max_cells) {
        throw WindowTooLarge("length table would need " + std::to_string(cells) +
                             " cells (cap " + std::to_string(max_cells) + ")");
    }
    len_.assign(cells, -1);
    // BFS from 0 with steps +-s over the padded window.
    std::vector<std::int64_t> queue;
    queue.reserve(cells);
    len_[static_cast<std::size_t>(window_)] = 0;
    queue.push_back(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::int64_t c = queue[head];
        const std::int32_t next = len_[static_cast<std::size_t>(c + window_)] + 1;
        for (std::int64_t s : set_.gens()) {
            for (std::int64_t v : {c + s, c - s}) {
                if (v < -window_ || v > window_) continue;
                std::int32_t& cell = len_[static_cast<std::size_t>(v + window_)];
                if (cell == -1) {
                    cell = next;
                    queue.push_back(v);
                }
            }
        }
    }
}

bool LengthTable::covers(std::int64_t c) const {
    return c >= -radius_ && c <= radius_;
}

std::int64_t LengthTable::length(std::int64_t c) const {
    if (!covers(c)) {
        throw InsufficientRadius("length(" + std::to_string(c) +
                                 ") outside table radius " +
                                 std::to_string(radius_));
    }
    return len_[static_cast<std::size_t>(c + window_)];
}

namespace {

void require_neighbors_covered(const LengthTable& table, std::int64_t c) {
    if (std::abs(c) + table.genset().max() > table.valid_radius()) {
        throw InsufficientRadius("dead-end test at " + std::to_string(c) +
                                 " needs radius " +
                                 std::to_string(std::abs(c) + table.genset().max()) +
                                 ", table has " +
                                 std::to_string(table.valid_radius()));
    }
}

} // namespace

bool is_dead_end(const LengthTable& table, std::int64_t c) {
    require_neighbors_covered(table, c);
    const std::int64_t lc = table.length(c);
    for (std::int64_t s : table.genset().gens()) {
        if (table.length(c + s) > lc || table.length(c - s) > lc) return false;
    }
    return true;
}

bool is_strict_dead_end(const LengthTable& table, std::int64_t c) {
    require_neighbors_covered(table, c);
    const std::int64_t lc = table.length(c);
    for (std::int64_t s : table.genset().gens()) {
        if (table.length(c + s) >= lc || table.length(c - s) >= lc) return false;
    }
    return true;
}

std::int64_t dead_end_search_bound(const GenSet& set) {
    return (set.max() - 1) * (set.sum() - set.max());
}

namespace {

// Distance from d to the first element one longer than d, minus 1, using
// only cells of the given table. Returns -1 when the answer might depend on
// cells outside the table, in which case the caller must widen it.
std::int64_t depth_within(const LengthTable& table, std::int64_t d) {
    const std::int64_t target = table.length(d) + 1;
    const std::int64_t radius = table.valid_radius();
    const std::size_t cells = static_cast<std::size_t>(2 * radius + 1);
    std::vector<char> seen(cells, 0);
    seen[static_cast<std::size_t>(d + radius)] = 1;
    std::vector<std::int64_t> frontier{d};
    std::int64_t level = 0;
    // First BFS level at which an out-of-window cell was dropped; finds at
    // levels <= skip_level cannot be beaten by paths through dropped cells.
    std::int64_t skip_level = std::numeric_limits<std::int64_t>::max();
    while (!frontier.empty() && level < skip_level) {
        ++level;
        std::vector<std::int64_t> next;
        bool found = false;
        for (std::int64_t c : frontier) {
            for (std::int64_t s : table.genset().gens()) {
                for (std::int64_t v : {c + s, c - s}) {
                    if (v < -radius || v > radius) {
                        skip_level = std::min(skip_level, level);
                        continue;
                    }
                    char& mark = seen[static_cast<std::size_t>(v + radius)];
                    if (mark) continue;
                    mark = 1;
                    if (table.length(v) == target) found = true;
                    next.push_back(v);
                }
            }
        }
        if (found && level <= skip_level) return level - 1;
        frontier = std::move(next);
    }
    return -1;
}

} // namespace

std::int64_t dead_end_depth(const GenSet& set, std::int64_t d) {
    const std::int64_t m = set.max();
    LengthTable probe(set, std::abs(d) + m);
    if (!is_dead_end(probe, d)) {
        throw NotADeadEnd(std::to_string(d) + " is not a dead end");
    }
    std::int64_t radius = std::max(2 * (probe.length(d) + 1) * m, std::abs(d) + m);
    for (;;) {
        LengthTable wide(set, radius);
        const std::int64_t depth = depth_within(wide, d);
        if (depth >= 0) return depth;
        radius *= 2; // longer spheres are never empty, so this terminates
    }
}

std::vector<DeadEndReport> find_dead_ends(const GenSet& set) {
    const std::int64_t bound = dead_end_search_bound(set);
    LengthTable table(set, bound + set.max());
    std::vector<DeadEndReport> out;
    for (std::int64_t c = -bound; c <= bound; ++c) {
        if (!is_dead_end(table, c)) continue;
        out.push_back({c, table.length(c), is_strict_dead_end(table, c), -1});
    }
    // Depths share one window, widened until every answer is conclusive.
    std::int64_t radius = set.max();
    for (const DeadEndReport& r : out) {
        radius = std::max(radius, 2 * (r.length + 1) * set.max());
    }
    for (bool all_done = out.empty(); !all_done; radius *= 2) {
        LengthTable wide(set, radius);
        all_done = true;
        for (DeadEndReport& r : out) {
            if (r.depth < 0) r.depth = depth_within(wide, r.value);
            if (r.depth < 0) all_done = false;
        }
    }
    return out;
}

bool cayley_leq(const LengthTable& table, std::int64_t g, std::int64_t h) {
    return table.length(g) + table.length(h - g) == table.length(h);
}

std::vector<std::int64_t> maximal_frobenius_values(const GenSet& set) {
    AperyTable apery(set);
    if (apery.modulus() == 1) {
        throw NoFrobeniusValues("1 is a generator; there are no Frobenius values");
    }
    const std::vector<std::int64_t> values = frobenius_values(set);
    // Differences of Frobenius values stay within twice the largest one.
    LengthTable table(set, 2 * apery.frobenius_number());
    struct Entry {
        std::int64_t value;
        std::int64_t length;
    };
    std::vector<Entry> by_length;
    by_length.reserve(values.size());
    for (std::int64_t v : values) by_length.push_back({v, table.length(v)});
    std::sort(by_length.begin(), by_length.end(), [](const Entry& l, const Entry& r) {
        return l.length != r.length ? l.length < r.length : l.value < r.value;
    });
    std::vector<std::int64_t> out;
    for (const Entry& c : by_length) {
        bool dominated = false;
        // Anything above c in the geodesic order is strictly longer.
        for (auto it = std::upper_bound(
                 by_length.begin(), by_length.end(), c.length,
                 [](std::int64_t len, const Entry& e) { return len < e.length; });
             it != by_length.end(); ++it) {
            if (c.length + table.length(it->value - c.value) == it->length) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(c.value);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> sphere(const LengthTable& table, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("sphere radius must be non-negative");
    const std::int64_t reach = n * table.genset().max();
    if (reach > table.valid_radius()) {
        throw InsufficientRadius("sphere " + std::to_string(n) +
                                 " may extend to " + std::to_string(reach) +
                                 ", table radius is " +
                                 std::to_string(table.valid_radius()));
    }
    std::vector<std::int64_t> out;
    for (std::int64_t c = -reach; c <= reach; ++c) {
        if (table.length(c) == n) out.push_back(c);
    }
    return out;
}

} // namespace frobz
