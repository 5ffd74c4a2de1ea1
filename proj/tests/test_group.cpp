#include <doctest.h>

#include <set>
#include <sstream>

#include "frobz/group.hpp"

using namespace frobz;

namespace {

// Latin square with identity that is not a group: (1*1)*2 = 2 but
// 1*(1*2) = 4, and element 2 has right inverse 3 but left inverse 4.
const std::vector<std::vector<int>> kLoop5 = {
    {0, 1, 2, 3, 4},
    {1, 0, 3, 4, 2},
    {2, 3, 4, 0, 1},
    {3, 4, 1, 2, 0},
    {4, 2, 0, 1, 3},
};

std::string to_file(const std::vector<std::vector<int>>& rows,
                    const std::string& labels = "") {
    std::ostringstream os;
    os << rows.size() << '\n';
    if (!labels.empty()) os << "# labels: " << labels << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
        os << '\n';
    }
    return os.str();
}

FiniteGroup load_string(const std::string& text, bool check_assoc = false) {
    std::istringstream in(text);
    return FiniteGroup::load(in, check_assoc);
}

} // namespace

TEST_CASE("corpus builders produce genuine groups") {
    for (const CorpusEntry& entry : builtin_corpus()) {
        std::vector<std::vector<int>> rows(
            static_cast<std::size_t>(entry.group.order()),
            std::vector<int>(static_cast<std::size_t>(entry.group.order())));
        for (int i = 0; i < entry.group.order(); ++i) {
            for (int j = 0; j < entry.group.order(); ++j) {
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    entry.group.mul(i, j);
            }
        }
        CHECK_NOTHROW(FiniteGroup::from_table(rows, {}, true));
    }
}

TEST_CASE("table loading accepts the documented format") {
    const FiniteGroup z7 = load_string(to_file(
        {{0, 1, 2, 3, 4, 5, 6},
         {1, 2, 3, 4, 5, 6, 0},
         {2, 3, 4, 5, 6, 0, 1},
         {3, 4, 5, 6, 0, 1, 2},
         {4, 5, 6, 0, 1, 2, 3},
         {5, 6, 0, 1, 2, 3, 4},
         {6, 0, 1, 2, 3, 4, 5}}));
    CHECK(z7.order() == 7);
    CHECK(z7.mul(3, 5) == 1);
    CHECK(z7.inv(2) == 5);

    const FiniteGroup klein = load_string(
        to_file({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                "e a b ab"));
    CHECK(klein.order() == 4);
    CHECK(klein.name_of(3) == "ab");
    CHECK(klein.element_order(1) == 2);
}

TEST_CASE("bundled table files load") {
    const std::string dir = std::string(FROBZ_DATA_DIR) + "/groups/";
    CHECK(FiniteGroup::load_file(dir + "z7.tbl", true).order() == 7);
    CHECK(FiniteGroup::load_file(dir + "z3.tbl", true).order() == 3);
    const FiniteGroup klein = FiniteGroup::load_file(dir + "klein4.tbl", true);
    CHECK(klein.order() == 4);
    CHECK(klein.has_labels());
    CHECK_THROWS_AS(FiniteGroup::load_file(dir + "missing.tbl"), Error);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        load_string("x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }
    try {
        load_string("2\n0 1\n1 0 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        load_string("2\n0 1\n1 7\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        load_string("2\n# labels: only_one\n0 1\n1 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        load_string("2\n0 1\n1 0\nextra\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    // trailing whitespace and blank lines are fine
    CHECK_NOTHROW(load_string("2\n0 1 \n1 0\n\n  \n"));
}

TEST_CASE("structural validation errors") {
    CHECK_THROWS_AS(
        FiniteGroup::from_table({{1, 0}, {0, 1}}), // row 0 not identity
        NoIdentity);
    CHECK_THROWS_AS(
        FiniteGroup::from_table({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}),
        NotLatinSquare);
    // the 5x5 loop fails associativity when asked, two-sided inverses otherwise
    CHECK_THROWS_AS(FiniteGroup::from_table(kLoop5, {}, true), NotAssociative);
    CHECK_THROWS_AS(FiniteGroup::from_table(kLoop5, {}, false), NoInverse);
}

TEST_CASE("element orders") {
    const FiniteGroup z7 = cyclic_group(7);
    CHECK(z7.element_order(1) == 7);
    CHECK(z7.element_order(0) == 1);
    const FiniteGroup s4 = symmetric_group(4);
    const int four_cycle = find_element_of_order(s4, 4);
    REQUIRE(four_cycle >= 0);
    CHECK(s4.element_order(four_cycle) == 4);
    CHECK(find_element_of_order(cyclic_group(5), 4) == -1);
}

TEST_CASE("group length tables") {
    const FiniteGroup z7 = cyclic_group(7);
    const auto len = group_length_table(z7, {2, 3});
    CHECK(len[0] == 0);
    CHECK(len[1] == 2);
    CHECK(len[2] == 1);
    CHECK(len[4] == 1); // inverse of 3

    const FiniteGroup klein = klein_four_group();
    const auto all = group_length_table(klein, {1, 2, 3});
    CHECK(all == std::vector<int>{0, 1, 1, 1});
    CHECK_THROWS_AS(group_length_table(klein, {1}), DoesNotGenerate);
}

TEST_CASE("construction cases on the named examples") {
    const FiniteGroup z7 = cyclic_group(7);
    const Construction c7 = construct_genset(z7, 1, {1});
    CHECK(c7.kind == ConstructionCase::OrderAtLeast5);
    CHECK(c7.genset == std::vector<int>{2, 3});
    CHECK(c7.witness == 1);
    CHECK(c7.size_bound_ok);

    const FiniteGroup klein = klein_four_group();
    const Construction ck = construct_genset(klein, 2, {1, 2, 3});
    CHECK(ck.kind == ConstructionCase::ComplementExponent23);
    CHECK(ck.genset == std::vector<int>{1, 3});
    CHECK(ck.witness == 2);

    const FiniteGroup s4 = symmetric_group(4);
    const int four_cycle = find_element_of_order(s4, 4);
    const int transposition = find_element_of_order(s4, 2);
    const Construction cs = construct_genset(s4, four_cycle, {transposition, four_cycle});
    CHECK(cs.kind == ConstructionCase::Order4);
    CHECK(cs.witness == s4.mul(four_cycle, four_cycle));
}

TEST_CASE("construction refusals") {
    CHECK_THROWS_AS(construct_genset(cyclic_group(3), 1, {1}), GroupTooSmall);
    // a reflection in D4 has order 2 while the rotation has order 4
    const FiniteGroup d4 = dihedral_group(4);
    CHECK_THROWS_AS(construct_genset(d4, 4, {1, 4}), OrderTooSmallForCase);
    CHECK_THROWS_AS(construct_genset(d4, 0, {1, 4}), std::invalid_argument);
    // base {1} alone cannot reach the reflections of D4
    CHECK_THROWS_AS(construct_genset(d4, 1, {1}), DoesNotGenerate);
}

TEST_CASE("verification over the bundled corpus") {
    for (const CorpusEntry& entry : builtin_corpus()) {
        const ConstructionReport report =
            verify_construction(entry.group, entry.witness_source, entry.base_gens);
        INFO(entry.name);
        CHECK(report.pass);
        CHECK(report.construction.kind == entry.expected_case);
        CHECK(report.witness_length == 2);
        for (const auto& [neighbor, len] : report.neighbor_lengths) {
            CHECK(len <= 2);
        }
        if (report.construction.kind != ConstructionCase::ComplementExponent23) {
            CHECK(static_cast<int>(report.construction.genset.size()) <=
                  4 * report.base_size + 2);
        }
    }
}

TEST_CASE("every admissible witness source passes") {
    for (const CorpusEntry& entry : builtin_corpus()) {
        for (int a = 1; a < entry.group.order(); ++a) {
            std::vector<int> base = entry.base_gens;
            base.push_back(a);
            try {
                const ConstructionReport report =
                    verify_construction(entry.group, a, base);
                INFO(entry.name << " with witness source " << a);
                CHECK(report.pass);
            } catch (const OrderTooSmallForCase&) {
                // mixed orders: the case split does not cover this choice
                CHECK(entry.group.element_order(a) <= 3);
                bool has_higher_order = false;
                for (int i = 0; i < entry.group.order(); ++i) {
                    if (entry.group.element_order(i) > 3) has_higher_order = true;
                }
                CHECK(has_higher_order);
            }
        }
    }
}

TEST_CASE("bundle identities used by the order >= 5 construction hold") {
    for (const CorpusEntry& entry : builtin_corpus()) {
        if (entry.expected_case != ConstructionCase::OrderAtLeast5) continue;
        const FiniteGroup& g = entry.group;
        const int a = entry.witness_source;
        const int a2 = g.mul(a, a);
        const int a3 = g.mul(a2, a);
        CHECK(g.mul(a, a2) == a3);
        CHECK(g.mul(a, g.inv(a2)) == g.mul(a2, g.inv(a3)));
        CHECK(g.mul(a, a3) == g.mul(a2, a2));
        CHECK(g.mul(a, g.inv(a3)) == g.inv(a2));
        for (int b : entry.base_gens) {
            const int ab = g.mul(a, b);
            const int ab_inv = g.mul(a, g.inv(b));
            const int conj = g.mul(ab, g.inv(a));
            CHECK(g.mul(a, ab) == g.mul(a2, b));
            CHECK(g.mul(a, g.inv(ab)) == g.inv(conj));
            CHECK(g.mul(a, ab_inv) == g.mul(a2, g.inv(b)));
            CHECK(g.mul(a, g.inv(ab_inv)) == conj);
            CHECK(g.mul(a, conj) == g.mul(a2, g.inv(ab_inv)));
            CHECK(g.mul(a, g.inv(conj)) == g.mul(a2, g.inv(ab)));
        }
    }
}

TEST_CASE("labels survive products and reports") {
    const FiniteGroup q8 = quaternion_group();
    CHECK(q8.name_of(0) == "1");
    CHECK(q8.name_of(2) == "i");
    CHECK(q8.element_order(2) == 4);
    CHECK(q8.mul(2, 4) == 6);        // i * j = k
    CHECK(q8.mul(4, 2) == 7);        // j * i = -k
    CHECK(q8.inv(2) == 3);           // i^-1 = -i
    const ConstructionReport report = verify_construction(q8, 2, {2, 4});
    CHECK(report.pass);
    CHECK(report.construction.witness == 1); // -1 = i^2
}
