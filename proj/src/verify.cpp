#include "frobz/verify.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <sstream>

#include "frobz/group.hpp"
#include "frobz/oracle.hpp"
#include "frobz/pair.hpp"
#include "frobz/semigroup.hpp"

namespace frobz {

namespace {

struct PairOutcome {
    std::string failure; // empty on success
    std::int64_t lengths_checked = 0;
    std::int64_t dead_ends = 0;
};

std::string describe(std::int64_t a, std::int64_t b) {
    std::ostringstream os;
    os << "pair {" << a << ", " << b << "}";
    return os.str();
}

// The full cross-check for one coprime pair: the closed-form dead ends, the
// searched dead ends, and the geodesic-maximal Frobenius values must agree
// element for element, with the expected count, strictness, and length; the
// positive Frobenius count must match (a-1)(b-1)/2; and the closed length
// formula must match the search on |c| <= (a+b)^2.
PairOutcome check_pair(std::int64_t a, std::int64_t b) {
    PairOutcome out;
    const GenPair pair(a, b);
    const GenSet set({a, b});
    std::ostringstream err;

    const std::vector<DeadEnd> closed = dead_ends_closed(pair);
    const std::vector<DeadEndReport> searched = find_dead_ends(set);
    std::vector<std::int64_t> maximal;
    if (pair.has_frobenius_values()) maximal = maximal_frobenius_values(set);

    const bool even = (a + b) % 2 == 0;
    const std::size_t expected_count =
        static_cast<std::size_t>(even ? b - 1 : 2 * (b - 1));
    const std::int64_t expected_length = (a + b) / 2;
    out.dead_ends = static_cast<std::int64_t>(searched.size());

    if (closed.size() != expected_count || searched.size() != expected_count ||
        maximal.size() != expected_count) {
        err << describe(a, b) << ": counts differ (closed " << closed.size()
            << ", search " << searched.size() << ", maximal " << maximal.size()
            << ", expected " << expected_count << ")";
        out.failure = err.str();
        return out;
    }
    for (std::size_t i = 0; i < expected_count; ++i) {
        if (closed[i].value != searched[i].value ||
            closed[i].value != maximal[i]) {
            err << describe(a, b) << ": element " << i << " differs (closed "
                << closed[i].value << ", search " << searched[i].value
                << ", maximal " << maximal[i] << ")";
            out.failure = err.str();
            return out;
        }
        if (closed[i].length != expected_length ||
            searched[i].length != expected_length) {
            err << describe(a, b) << ": dead end " << closed[i].value
                << " has length " << searched[i].length << ", expected "
                << expected_length;
            out.failure = err.str();
            return out;
        }
        if (closed[i].strict != even || searched[i].strict != even) {
            err << describe(a, b) << ": dead end " << closed[i].value
                << " strictness disagrees with the parity rule";
            out.failure = err.str();
            return out;
        }
    }

    const std::vector<std::int64_t> by_scan = frobenius_values(set);
    const std::vector<std::int64_t> by_form = frobenius_values(pair);
    if (by_scan != by_form) {
        err << describe(a, b) << ": Frobenius enumerations disagree";
        out.failure = err.str();
        return out;
    }
    const std::int64_t positives = static_cast<std::int64_t>(std::count_if(
        by_scan.begin(), by_scan.end(), [](std::int64_t v) { return v > 0; }));
    if (positives != (a - 1) * (b - 1) / 2) {
        err << describe(a, b) << ": " << positives
            << " positive Frobenius values, expected " << (a - 1) * (b - 1) / 2;
        out.failure = err.str();
        return out;
    }

    const std::int64_t window = (a + b) * (a + b);
    const LengthTable table(set, window);
    for (std::int64_t c = -window; c <= window; ++c) {
        ++out.lengths_checked;
        if (word_length(pair, c) != table.length(c)) {
            err << describe(a, b) << ": closed length of " << c << " is "
                << word_length(pair, c) << ", search says " << table.length(c);
            out.failure = err.str();
            return out;
        }
    }
    return out;
}

} // namespace

SweepResult verify_pairs(std::int64_t max_a, int jobs) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t a = 2; a <= max_a; ++a) {
        for (std::int64_t b = 1; b < a; ++b) {
            if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
        }
    }
    std::vector<PairOutcome> outcomes(pairs.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            outcomes[i] = check_pair(pairs[i].first, pairs[i].second);
        }
    } else {
        // Interleaved partition; results land in pair order, so the merged
        // output is identical for any worker count.
        std::vector<std::future<void>> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = static_cast<std::size_t>(w);
                     i < pairs.size(); i += static_cast<std::size_t>(jobs)) {
                    outcomes[i] = check_pair(pairs[i].first, pairs[i].second);
                }
            }));
        }
        for (auto& f : workers) f.get();
    }
    SweepResult result;
    result.pairs_checked = static_cast<std::int64_t>(pairs.size());
    for (const PairOutcome& o : outcomes) {
        result.lengths_checked += o.lengths_checked;
        result.dead_ends_seen += o.dead_ends;
        if (!o.failure.empty() && result.pass) {
            result.pass = false;
            result.counterexample = o.failure;
        }
    }
    return result;
}

SweepResult verify_bound(int sets, std::int64_t max_gen, int max_size,
                         std::uint64_t seed) {
    SweepResult result;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(2, max_size);
    std::vector<std::int64_t> all(static_cast<std::size_t>(max_gen));
    std::iota(all.begin(), all.end(), 1);
    for (int trial = 0; trial < sets; ++trial) {
        std::vector<std::int64_t> chosen;
        do {
            const int k = size_dist(rng);
            std::vector<std::int64_t> pool = all;
            std::shuffle(pool.begin(), pool.end(), rng);
            chosen.assign(pool.begin(), pool.begin() + k);
        } while (std::reduce(chosen.begin(), chosen.end(), std::int64_t{0},
                             [](std::int64_t g, std::int64_t v) {
                                 return std::gcd(g, v);
                             }) != 1);
        const GenSet set(chosen);
        const std::int64_t bound = dead_end_search_bound(set);
        const std::int64_t audit = 2 * bound + 2 * set.max();
        const LengthTable table(set, audit + set.max());
        std::vector<std::int64_t> dead;
        for (std::int64_t c = -audit; c <= audit; ++c) {
            if (is_dead_end(table, c)) dead.push_back(c);
        }
        ++result.sets_checked;
        result.dead_ends_seen += static_cast<std::int64_t>(dead.size());
        for (std::int64_t d : dead) {
            if (std::abs(d) > bound) {
                result.pass = false;
                std::ostringstream os;
                os << "set {";
                for (std::size_t i = 0; i < set.gens().size(); ++i) {
                    os << (i ? ", " : "") << set.gens()[i];
                }
                os << "}: dead end " << d << " beyond bound " << bound;
                result.counterexample = os.str();
                return result;
            }
        }
        std::vector<std::int64_t> mirrored(dead.rbegin(), dead.rend());
        for (std::int64_t& v : mirrored) v = -v;
        if (mirrored != dead) {
            result.pass = false;
            result.counterexample = "dead-end set is not symmetric under negation";
            return result;
        }
    }
    return result;
}

SweepResult verify_riley_warshall(int max_m) {
    SweepResult result;
    auto values_of = [](const GenSet& s) {
        std::vector<std::int64_t> out;
        for (const DeadEndReport& d : find_dead_ends(s)) out.push_back(d.value);
        return out;
    };
    const auto contains = [](const std::vector<std::int64_t>& v, std::int64_t x) {
        return std::binary_search(v.begin(), v.end(), x);
    };
    {
        const std::vector<std::int64_t> none = values_of(GenSet({1, 2}));
        if (!none.empty()) {
            result.pass = false;
            result.counterexample = "{1, 2} unexpectedly has dead ends";
            return result;
        }
        result.lines.push_back("m=1: {1, 2} has no dead ends (exception holds)");
        if (!contains(values_of(GenSet({2, 3})), 1)) {
            result.pass = false;
            result.counterexample = "1 is not a dead end for {2, 3}";
            return result;
        }
        result.lines.push_back("m=1: 1 is a dead end for {2, 3}");
        ++result.sets_checked;
    }
    for (std::int64_t m = 2; m <= max_m; ++m) {
        for (const GenSet& set :
             {GenSet({2 * m, 2 * m + 1}), GenSet({2 * m - 1, 2 * m})}) {
            if (!contains(values_of(set), m)) {
                std::ostringstream os;
                os << m << " is not a dead end for {" << set.gens()[0] << ", "
                   << set.gens()[1] << "}";
                result.pass = false;
                result.counterexample = os.str();
                return result;
            }
        }
        std::ostringstream os;
        os << "m=" << m << ": dead end for {" << 2 * m << ", " << 2 * m + 1
           << "} and {" << 2 * m - 1 << ", " << 2 * m << "}";
        result.lines.push_back(os.str());
        ++result.sets_checked;
    }
    return result;
}

SweepResult verify_groups() {
    SweepResult result;
    for (const CorpusEntry& entry : builtin_corpus()) {
        const ConstructionReport report =
            verify_construction(entry.group, entry.witness_source, entry.base_gens);
        const bool case_ok = report.construction.kind == entry.expected_case;
        std::ostringstream os;
        os << entry.name << ": case " << to_string(report.construction.kind)
           << ", witness " << entry.group.name_of(report.construction.witness)
           << ", |S| = " << report.construction.genset.size() << ", "
           << (report.pass && case_ok ? "pass" : "FAIL");
        result.lines.push_back(os.str());
        ++result.sets_checked;
        if (!(report.pass && case_ok) && result.pass) {
            result.pass = false;
            result.counterexample = os.str();
        }
    }
    return result;
}

} // namespace frobz
