#include "frobz/group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace frobz {

const char* to_string(ConstructionCase c) {
    switch (c) {
    case ConstructionCase::OrderAtLeast5: return "order-at-least-5";
    case ConstructionCase::Order4: return "order-4";
    case ConstructionCase::ComplementExponent23: return "complement-exponent-2-3";
    }
    return "?";
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> rows,
                                    std::vector<std::string> labels,
                                    bool check_associativity) {
    const int n = static_cast<int>(rows.size());
    if (n < 1) throw std::invalid_argument("group table is empty");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("group table is not square");
        }
        for (int v : row) {
            if (v < 0 || v >= n) {
                throw std::invalid_argument("table entry out of range [0, n)");
            }
        }
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
        throw std::invalid_argument("label count does not match group order");
    }
    for (int j = 0; j < n; ++j) {
        if (rows[0][j] != j) {
            throw NoIdentity("row 0 is not the identity at column " +
                             std::to_string(j));
        }
    }
    for (int i = 0; i < n; ++i) {
        if (rows[i][0] != i) {
            throw NoIdentity("column 0 is not the identity at row " +
                             std::to_string(i));
        }
    }
    for (int i = 0; i < n; ++i) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int j = 0; j < n; ++j) {
            if (seen_row[rows[i][j]]++) {
                throw NotLatinSquare("row " + std::to_string(i) +
                                     " repeats element " +
                                     std::to_string(rows[i][j]));
            }
            if (seen_col[rows[j][i]]++) {
                throw NotLatinSquare("column " + std::to_string(i) +
                                     " repeats element " +
                                     std::to_string(rows[j][i]));
            }
        }
    }
    if (check_associativity) {
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                for (int z = 0; z < n; ++z) {
                    if (rows[rows[x][y]][z] != rows[x][rows[y][z]]) {
                        throw NotAssociative(
                            "(" + std::to_string(x) + "*" + std::to_string(y) +
                            ")*" + std::to_string(z) + " != " +
                            std::to_string(x) + "*(" + std::to_string(y) + "*" +
                            std::to_string(z) + ")");
                    }
                }
            }
        }
    }
    FiniteGroup g;
    g.n_ = n;
    g.table_.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        g.table_.insert(g.table_.end(), row.begin(), row.end());
    }
    g.inverse_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (g.mul(i, j) == 0 && g.mul(j, i) == 0) {
                g.inverse_[i] = j;
                break;
            }
        }
        if (g.inverse_[i] == -1) {
            throw NoInverse("element " + std::to_string(i) +
                            " has no two-sided inverse");
        }
    }
    g.labels_ = std::move(labels);
    return g;
}

FiniteGroup FiniteGroup::load(std::istream& in, bool check_associativity) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError(1, "line 1: missing group order");
    long n_raw = 0;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n_raw) || n_raw < 1 || (ss >> extra)) {
            throw ParseError(lineno, "line " + std::to_string(lineno) +
                                         ": expected a single positive order");
        }
    }
    const int n = static_cast<int>(n_raw);
    std::vector<std::string> labels;
    bool pending_row = false;
    if (next_line()) {
        std::istringstream ss(line);
        std::string first;
        ss >> first;
        if (first == "#") {
            std::string tag;
            ss >> tag;
            if (tag != "labels:") {
                throw ParseError(lineno, "line " + std::to_string(lineno) +
                                             ": expected '# labels: ...'");
            }
            std::string name;
            while (ss >> name) labels.push_back(name);
            if (static_cast<int>(labels.size()) != n) {
                throw ParseError(lineno,
                                 "line " + std::to_string(lineno) + ": expected " +
                                     std::to_string(n) + " labels, got " +
                                     std::to_string(labels.size()));
            }
        } else {
            pending_row = true; // first table row already read
        }
    } else {
        throw ParseError(lineno + 1, "line " + std::to_string(lineno + 1) +
                                         ": missing table rows");
    }
    std::vector<std::vector<int>> rows;
    rows.reserve(n);
    while (static_cast<int>(rows.size()) < n) {
        if (!pending_row && !next_line()) {
            throw ParseError(lineno + 1, "line " + std::to_string(lineno + 1) +
                                             ": missing table row " +
                                             std::to_string(rows.size() + 1));
        }
        pending_row = false;
        std::istringstream ss(line);
        std::vector<int> row;
        long v = 0;
        while (ss >> v) row.push_back(static_cast<int>(v));
        if (!ss.eof()) {
            throw ParseError(lineno, "line " + std::to_string(lineno) +
                                         ": non-numeric table entry");
        }
        if (static_cast<int>(row.size()) != n) {
            throw ParseError(lineno, "line " + std::to_string(lineno) +
                                         ": expected " + std::to_string(n) +
                                         " entries, got " +
                                         std::to_string(row.size()));
        }
        for (int e : row) {
            if (e < 0 || e >= n) {
                throw ParseError(lineno, "line " + std::to_string(lineno) +
                                             ": entry " + std::to_string(e) +
                                             " out of range [0, " +
                                             std::to_string(n) + ")");
            }
        }
        rows.push_back(std::move(row));
    }
    while (next_line()) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            throw ParseError(lineno, "line " + std::to_string(lineno) +
                                         ": unexpected content after table");
        }
    }
    return from_table(std::move(rows), std::move(labels), check_associativity);
}

FiniteGroup FiniteGroup::load_file(const std::string& path,
                                   bool check_associativity) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group table file: " + path);
    return load(in, check_associativity);
}

int FiniteGroup::element_order(int a) const {
    if (a < 0 || a >= n_) throw std::invalid_argument("element index out of range");
    int x = a;
    int k = 1;
    while (x != 0) {
        x = mul(x, a);
        if (++k > n_) throw Error("powers of element never reach the identity");
    }
    return k;
}

std::string FiniteGroup::name_of(int i) const {
    if (has_labels()) return labels_[static_cast<std::size_t>(i)];
    return std::to_string(i);
}

std::vector<int> group_length_table(const FiniteGroup& g,
                                    const std::vector<int>& gens) {
    for (int s : gens) {
        if (s < 0 || s >= g.order()) {
            throw std::invalid_argument("generator index out of range");
        }
    }
    std::vector<int> len(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> queue;
    len[0] = 0;
    queue.push_back(0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int c = queue[head];
        for (int s : gens) {
            for (int v : {g.mul(c, s), g.mul(c, g.inv(s))}) {
                if (len[static_cast<std::size_t>(v)] == -1) {
                    len[static_cast<std::size_t>(v)] =
                        len[static_cast<std::size_t>(c)] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    for (int i = 0; i < g.order(); ++i) {
        if (len[static_cast<std::size_t>(i)] == -1) {
            throw DoesNotGenerate("element " + g.name_of(i) +
                                  " is not reachable from the given generators");
        }
    }
    return len;
}

namespace {

std::vector<int> cyclic_subgroup(const FiniteGroup& g, int a) {
    std::vector<int> out{0};
    int x = a;
    while (x != 0) {
        out.push_back(x);
        x = g.mul(x, a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Construction construct_genset(const FiniteGroup& g, int a,
                              const std::vector<int>& base_gens) {
    if (a <= 0 || a >= g.order()) {
        throw std::invalid_argument("witness source must be a non-identity element");
    }
    std::set<int> base(base_gens.begin(), base_gens.end());
    base.erase(0);
    for (int b : base) {
        if (b < 0 || b >= g.order()) {
            throw std::invalid_argument("base generator index out of range");
        }
    }
    {
        std::vector<int> all(base.begin(), base.end());
        all.push_back(a);
        group_length_table(g, all); // throws unless base + a generates
    }
    const int ord = g.element_order(a);
    std::set<int> genset;
    Construction result;
    if (ord >= 4) {
        const std::vector<int> powers = cyclic_subgroup(g, a);
        for (int b : base) {
            if (std::binary_search(powers.begin(), powers.end(), b)) continue;
            genset.insert(b);
            genset.insert(g.mul(a, b));
            genset.insert(g.mul(a, g.inv(b)));
            genset.insert(g.mul(g.mul(a, b), g.inv(a)));
        }
        if (ord >= 5) {
            genset.insert(g.mul(a, a));
            genset.insert(g.mul(g.mul(a, a), a));
            result.witness = a;
            result.kind = ConstructionCase::OrderAtLeast5;
        } else {
            genset.insert(a);
            result.witness = g.mul(a, a);
            result.kind = ConstructionCase::Order4;
        }
        result.size_bound_ok =
            genset.size() <= 4 * base.size() + 2;
    } else {
        if (g.order() < 4) {
            throw GroupTooSmall("complement construction needs at least 4 elements");
        }
        for (int i = 1; i < g.order(); ++i) {
            if (g.element_order(i) > 3) {
                throw OrderTooSmallForCase(
                    "witness source has order " + std::to_string(ord) +
                    " but element " + g.name_of(i) + " has order " +
                    std::to_string(g.element_order(i)) +
                    "; pick a witness source of order at least 4");
            }
        }
        for (int i = 1; i < g.order(); ++i) {
            if (i != a && i != g.inv(a)) genset.insert(i);
        }
        result.witness = a;
        result.kind = ConstructionCase::ComplementExponent23;
        result.size_bound_ok = true; // no size claim in this case
    }
    result.genset.assign(genset.begin(), genset.end());
    group_length_table(g, result.genset); // closure check
    return result;
}

ConstructionReport verify_construction(const FiniteGroup& g, int a,
                                       const std::vector<int>& base_gens) {
    ConstructionReport report;
    report.construction = construct_genset(g, a, base_gens);
    std::set<int> base(base_gens.begin(), base_gens.end());
    base.erase(0);
    report.base_size = static_cast<int>(base.size());
    const std::vector<int> lengths = group_length_table(g, report.construction.genset);
    const int w = report.construction.witness;
    report.witness_length = lengths[static_cast<std::size_t>(w)];
    report.offending_neighbor = -1;
    std::set<int> neighbors;
    for (int s : report.construction.genset) {
        neighbors.insert(g.mul(w, s));
        neighbors.insert(g.mul(w, g.inv(s)));
    }
    for (int v : neighbors) {
        const int len = lengths[static_cast<std::size_t>(v)];
        report.neighbor_lengths.emplace_back(v, len);
        if (len > 2 && report.offending_neighbor == -1) {
            report.offending_neighbor = v;
        }
    }
    report.pass = report.witness_length == 2 &&
                  report.offending_neighbor == -1 &&
                  report.construction.size_bound_ok;
    return report;
}

} // namespace frobz
