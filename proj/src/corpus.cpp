#include <algorithm>
#include <map>
#include <numeric>

#include "frobz/group.hpp"

namespace frobz {

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
    }
    return FiniteGroup::from_table(std::move(rows));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
    // r^i s^j with index i + n*j; s r = r^-1 s.
    const int order = 2 * n;
    auto idx = [n](int i, int j) { return i + n * j; };
    std::vector<std::vector<int>> rows(order, std::vector<int>(order));
    for (int i1 = 0; i1 < n; ++i1) {
        for (int j1 = 0; j1 < 2; ++j1) {
            for (int i2 = 0; i2 < n; ++i2) {
                for (int j2 = 0; j2 < 2; ++j2) {
                    const int i = ((j1 ? n - i2 : i2) + i1) % n;
                    rows[idx(i1, j1)][idx(i2, j2)] = idx(i, j1 ^ j2);
                }
            }
        }
    }
    return FiniteGroup::from_table(std::move(rows));
}

FiniteGroup quaternion_group() {
    // index = 2*axis + (negative ? 1 : 0), axes ordered 1, i, j, k
    static const int axis_mul[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    static const int sign_mul[4][4] = {
        {+1, +1, +1, +1},
        {+1, -1, +1, -1},
        {+1, -1, -1, +1},
        {+1, +1, -1, -1},
    };
    std::vector<std::vector<int>> rows(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            const int ax = x / 2, sx = x % 2 ? -1 : 1;
            const int ay = y / 2, sy = y % 2 ? -1 : 1;
            const int axis = axis_mul[ax][ay];
            const int sign = sign_mul[ax][ay] * sx * sy;
            rows[x][y] = 2 * axis + (sign < 0 ? 1 : 0);
        }
    }
    return FiniteGroup::from_table(
        std::move(rows), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool is_even_permutation(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j]) ++inversions;
        }
    }
    return inversions % 2 == 0;
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& perms) {
    const int order = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> rank;
    for (int i = 0; i < order; ++i) rank[perms[i]] = i;
    std::vector<std::vector<int>> rows(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j < order; ++j) {
            std::vector<int> prod(perms[i].size());
            for (std::size_t x = 0; x < prod.size(); ++x) {
                prod[x] = perms[i][static_cast<std::size_t>(perms[j][x])];
            }
            rows[i][j] = rank.at(prod);
        }
    }
    return FiniteGroup::from_table(std::move(rows));
}

} // namespace

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5) {
        throw std::invalid_argument("symmetric group supported for 1 <= n <= 5");
    }
    return permutation_group(permutations_lex(n));
}

FiniteGroup alternating_group_4() {
    std::vector<std::vector<int>> evens;
    for (auto& p : permutations_lex(4)) {
        if (is_even_permutation(p)) evens.push_back(std::move(p));
    }
    return permutation_group(evens);
}

FiniteGroup klein_four_group() {
    return FiniteGroup::from_table(
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
        {"e", "a", "b", "ab"});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int order = g.order() * h.order();
    auto idx = [&h](int i, int j) { return i * h.order() + j; };
    std::vector<std::vector<int>> rows(order, std::vector<int>(order));
    for (int i1 = 0; i1 < g.order(); ++i1) {
        for (int j1 = 0; j1 < h.order(); ++j1) {
            for (int i2 = 0; i2 < g.order(); ++i2) {
                for (int j2 = 0; j2 < h.order(); ++j2) {
                    rows[idx(i1, j1)][idx(i2, j2)] =
                        idx(g.mul(i1, i2), h.mul(j1, j2));
                }
            }
        }
    }
    std::vector<std::string> labels;
    if (g.has_labels() && h.has_labels()) {
        labels.reserve(static_cast<std::size_t>(order));
        for (int i = 0; i < g.order(); ++i) {
            for (int j = 0; j < h.order(); ++j) {
                labels.push_back("(" + g.name_of(i) + "," + h.name_of(j) + ")");
            }
        }
    }
    return FiniteGroup::from_table(std::move(rows), std::move(labels));
}

int find_element_of_order(const FiniteGroup& g, int order) {
    for (int i = 0; i < g.order(); ++i) {
        if (g.element_order(i) == order) return i;
    }
    return -1;
}

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> out;
        for (int n = 4; n <= 12; ++n) {
            out.push_back({"C" + std::to_string(n), cyclic_group(n), 1, {1},
                           n == 4 ? ConstructionCase::Order4
                                  : ConstructionCase::OrderAtLeast5});
        }
        out.push_back({"Klein4", klein_four_group(), 2, {1, 2, 3},
                       ConstructionCase::ComplementExponent23});
        {
            FiniteGroup s3 = symmetric_group(3);
            const int rot = find_element_of_order(s3, 3);
            const int flip = find_element_of_order(s3, 2);
            out.push_back({"S3", std::move(s3), rot, {flip, rot},
                           ConstructionCase::ComplementExponent23});
        }
        out.push_back({"D4", dihedral_group(4), 1, {1, 4},
                       ConstructionCase::Order4});
        out.push_back({"D5", dihedral_group(5), 1, {1, 5},
                       ConstructionCase::OrderAtLeast5});
        out.push_back({"Q8", quaternion_group(), 2, {2, 4},
                       ConstructionCase::Order4});
        {
            FiniteGroup a4 = alternating_group_4();
            const int three = find_element_of_order(a4, 3);
            const int two = find_element_of_order(a4, 2);
            out.push_back({"A4", std::move(a4), three, {two, three},
                           ConstructionCase::ComplementExponent23});
        }
        {
            FiniteGroup s4 = symmetric_group(4);
            const int four = find_element_of_order(s4, 4);
            const int two = find_element_of_order(s4, 2);
            out.push_back({"S4", std::move(s4), four, {two, four},
                           ConstructionCase::Order4});
        }
        {
            FiniteGroup c3c3 = direct_product(cyclic_group(3), cyclic_group(3));
            out.push_back({"C3xC3", std::move(c3c3), 3, {1, 3},
                           ConstructionCase::ComplementExponent23});
        }
        return out;
    }();
    return corpus;
}

} // namespace frobz
