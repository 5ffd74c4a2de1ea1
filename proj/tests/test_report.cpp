#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "frobz/report.hpp"
#include "frobz/verify.hpp"

using namespace frobz;
using nlohmann::json;

TEST_CASE("analysis report for {3,5} reproduces the worked example") {
    const AnalysisReport r = analyze(GenSet({3, 5}));
    REQUIRE(r.frobenius_number.has_value());
    CHECK(*r.frobenius_number == 7);
    CHECK(r.frobenius_values ==
          std::vector<std::int64_t>{-7, -4, -2, -1, 1, 2, 4, 7});
    CHECK(r.sylvester_count == 4);
    REQUIRE(r.dead_ends.size() == 2);
    CHECK(r.dead_ends[0].value == -4);
    CHECK(r.dead_ends[1].value == 4);
    CHECK(r.dead_ends[0].length == 4);
    CHECK(r.dead_ends[0].strict);
    CHECK(r.maximal_frobenius_values == std::vector<std::int64_t>{-4, 4});
    CHECK(r.agreement_flags.at("closed_vs_bfs"));
    CHECK(r.agreement_flags.at("deadends_vs_maximal_frobenius"));
}

TEST_CASE("analysis report when 1 generates") {
    const AnalysisReport r = analyze(GenSet({1, 9}));
    CHECK_FALSE(r.frobenius_number.has_value());
    CHECK(r.frobenius_values.empty());
    CHECK(r.dead_ends.empty());
    CHECK(r.maximal_frobenius_values.empty());
    CHECK(r.agreement_flags.at("closed_vs_bfs"));
}

TEST_CASE("analysis reports round-trip through JSON") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> size_dist(1, 3);
    std::uniform_int_distribution<std::int64_t> gen_dist(1, 15);
    int cases = 0;
    while (cases < 25) {
        std::vector<std::int64_t> raw;
        const int k = size_dist(rng);
        for (int i = 0; i < k; ++i) raw.push_back(gen_dist(rng));
        std::int64_t g = 0;
        for (std::int64_t v : raw) g = std::gcd(g, v);
        if (g != 1) continue;
        const AnalysisReport r = analyze(GenSet(raw));
        const json emitted = to_json(r);
        const json reparsed = json::parse(emitted.dump());
        CHECK(analysis_report_from_json(reparsed) == r);
        ++cases;
    }
}

TEST_CASE("sphere report matches the {3,5} diagram and round-trips") {
    const SphereReport r = sphere_report(GenSet({3, 5}), 4);
    REQUIRE(r.levels.size() == 5);
    CHECK(r.levels[0] == std::vector<std::int64_t>{0});
    CHECK(r.levels[1] == std::vector<std::int64_t>{-5, -3, 3, 5});
    CHECK(r.levels[4] ==
          std::vector<std::int64_t>{-20, -18, -16, -14, -12, -4, 4, 12, 14, 16,
                                    18, 20});
    CHECK(r.frobenius_values ==
          std::vector<std::int64_t>{-7, -4, -2, -1, 1, 2, 4, 7});
    CHECK(sphere_report_from_json(json::parse(to_json(r).dump())) == r);

    const SphereReport r0 = sphere_report(GenSet({3, 5}), 0);
    REQUIRE(r0.levels.size() == 1);
    CHECK(r0.levels[0] == std::vector<std::int64_t>{0});

    const SphereReport r45 = sphere_report(GenSet({4, 5}), 4);
    CHECK(std::binary_search(r45.levels[4].begin(), r45.levels[4].end(), 2));
    CHECK(std::binary_search(r45.levels[4].begin(), r45.levels[4].end(), 7));
    CHECK(std::binary_search(r45.levels[4].begin(), r45.levels[4].end(), 11));
}

TEST_CASE("dot output is structurally sound") {
    const SphereReport r = sphere_report(GenSet({3, 5}), 3);
    const std::string dot = to_dot(r);
    CHECK(dot.substr(0, 5) == "graph");
    CHECK(std::count(dot.begin(), dot.end(), '{') ==
          std::count(dot.begin(), dot.end(), '}'));
    // one rank block per level
    std::size_t ranks = 0, pos = 0;
    while ((pos = dot.find("rank=same", pos)) != std::string::npos) {
        ++ranks;
        pos += 9;
    }
    CHECK(ranks == r.levels.size());
    // every displayed element appears exactly once inside a rank block
    std::size_t shown = 0;
    for (const auto& level : r.levels) shown += level.size();
    std::size_t declared = 0;
    std::istringstream in(dot);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("rank=same") == std::string::npos) continue;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') {
                ++declared;
                i = line.find('"', i + 1);
            }
        }
    }
    CHECK(declared == shown);
    // diamonds exactly for the Frobenius values within the ball
    std::size_t diamonds = 0;
    pos = 0;
    while ((pos = dot.find("shape=diamond", pos)) != std::string::npos) {
        ++diamonds;
        pos += 13;
    }
    CHECK(diamonds == r.frobenius_values.size());
    // edges reference declared nodes only
    std::set<std::int64_t> ball;
    for (const auto& level : r.levels) ball.insert(level.begin(), level.end());
    std::istringstream in2(dot);
    while (std::getline(in2, line)) {
        const std::size_t dash = line.find("--");
        if (dash == std::string::npos) continue;
        std::int64_t u = 0, v = 0;
        std::sscanf(line.c_str(), " \"%ld\" -- \"%ld\";", &u, &v);
        CHECK(ball.count(u));
        CHECK(ball.count(v));
        CHECK(std::abs(
                  static_cast<long long>(*std::max_element(
                      r.genset.begin(), r.genset.end()))) >= std::abs(v - u));
    }
}

TEST_CASE("length reports with witnesses") {
    const LengthReport pair_report = length_report(GenSet({3, 5}), 7, true);
    CHECK(pair_report.length == 3);
    REQUIRE(pair_report.coefficients.has_value());
    const auto& pc = *pair_report.coefficients;
    REQUIRE(pc.size() == 2);
    CHECK(pc[0] * 3 + pc[1] * 5 == 7);
    CHECK(std::abs(pc[0]) + std::abs(pc[1]) == 3);

    const LengthReport triple = length_report(GenSet({4, 5, 7}), 23, true);
    REQUIRE(triple.coefficients.has_value());
    const auto& tc = *triple.coefficients;
    std::int64_t sum = 0, steps = 0;
    for (std::size_t i = 0; i < tc.size(); ++i) {
        sum += tc[i] * triple.genset[i];
        steps += std::abs(tc[i]);
    }
    CHECK(sum == 23);
    CHECK(steps == triple.length);

    const LengthReport bare = length_report(GenSet({3, 5}), -7, false);
    CHECK(bare.length == 3);
    CHECK_FALSE(bare.coefficients.has_value());
}

TEST_CASE("dead-ends report methods and agreement") {
    const DeadEndsReport both = dead_ends_report(GenSet({4, 5}), "both");
    REQUIRE(both.closed.has_value());
    REQUIRE(both.bfs.has_value());
    REQUIRE(both.methods_agree.has_value());
    CHECK(*both.methods_agree);
    CHECK(both.closed->size() == 6);

    const DeadEndsReport closed_only = dead_ends_report(GenSet({3, 5}), "closed");
    CHECK(closed_only.closed.has_value());
    CHECK_FALSE(closed_only.bfs.has_value());

    const DeadEndsReport auto_general = dead_ends_report(GenSet({6, 10, 15}), "auto");
    REQUIRE(auto_general.bfs.has_value());
    CHECK_FALSE(auto_general.closed.has_value());

    CHECK_THROWS_AS(dead_ends_report(GenSet({6, 10, 15}), "closed"),
                    std::invalid_argument);
}

TEST_CASE("frobenius report") {
    const FrobeniusReport r = frobenius_report(GenSet({6, 10, 15}));
    REQUIRE(r.frobenius_number.has_value());
    CHECK(*r.frobenius_number == 29);
    CHECK(r.values.back() == 29);
    const FrobeniusReport none = frobenius_report(GenSet({1, 4}));
    CHECK_FALSE(none.frobenius_number.has_value());
    CHECK(none.values.empty());
}

TEST_CASE("verification sweeps pass at reduced scale") {
    const SweepResult pairs = verify_pairs(25);
    CHECK(pairs.pass);
    CHECK(pairs.counterexample.empty());
    const SweepResult pairs_parallel = verify_pairs(25, 4);
    CHECK(pairs_parallel.pass);
    CHECK(pairs_parallel.pairs_checked == pairs.pairs_checked);
    CHECK(pairs_parallel.lengths_checked == pairs.lengths_checked);
    const SweepResult bound = verify_bound(40, 30, 4);
    CHECK(bound.pass);
    const SweepResult rw = verify_riley_warshall(8);
    CHECK(rw.pass);
    const SweepResult groups = verify_groups();
    CHECK(groups.pass);
}
