#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "frobz/errors.hpp"

namespace frobz {

/*
 * A finite group given by its multiplication table. Index 0 is the
 * identity. Validation checks the identity row/column, the Latin-square
 * property, and two-sided inverses; the O(n^3) associativity check is
 * opt-in.
 */
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<int>> rows,
                                  std::vector<std::string> labels = {},
                                  bool check_associativity = false);

    // Text format: line 1 holds n, an optional second line holds
    // "# labels: ..." with n names, then n rows of n indices in [0, n).
    static FiniteGroup load(std::istream& in, bool check_associativity = false);
    static FiniteGroup load_file(const std::string& path,
                                 bool check_associativity = false);

    int order() const { return n_; }
    int mul(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }
    int inv(int i) const { return inverse_[static_cast<std::size_t>(i)]; }
    int element_order(int a) const;

    bool has_labels() const { return !labels_.empty(); }
    // Label when present, otherwise the decimal index.
    std::string name_of(int i) const;

private:
    FiniteGroup() = default;

    int n_ = 0;
    std::vector<int> table_; // row-major, table_[i*n + j] = i*j
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
};

enum class ConstructionCase {
    OrderAtLeast5,
    Order4,
    ComplementExponent23,
};

const char* to_string(ConstructionCase c);

/*
 * A generating set built so that the witness element is a dead end of
 * length 2:
 *   order(a) >= 5:  S = union of {b, ab, ab^-1, aba^-1} over the base
 *                   generators outside <a>, plus {a^2, a^3}; witness a.
 *   order(a) == 4:  same bundles plus {a}; witness a^2.
 *   order(a) in {2,3} and every element of order <= 3: S = G - {1, a, a^-1};
 *                   witness a.
 */
struct Construction {
    std::vector<int> genset; // sorted element indices, identity excluded
    int witness;
    ConstructionCase kind;
    bool size_bound_ok; // |genset| <= 4m+2 in the first two cases
};

Construction construct_genset(const FiniteGroup& g, int a,
                              const std::vector<int>& base_gens);

// Word length of every element with respect to gens and their inverses.
// Throws DoesNotGenerate when some element is unreachable.
std::vector<int> group_length_table(const FiniteGroup& g,
                                    const std::vector<int>& gens);

struct ConstructionReport {
    Construction construction;
    int base_size; // deduplicated input generators
    int witness_length;
    std::vector<std::pair<int, int>> neighbor_lengths; // (element, length)
    int offending_neighbor; // -1 when all neighbors have length <= 2
    bool pass;
};

// Builds the construction, BFSes the whole group, and checks that the
// witness has length exactly 2, no neighbor is longer, and the size bound
// holds where it applies.
ConstructionReport verify_construction(const FiniteGroup& g, int a,
                                       const std::vector<int>& base_gens);

// Builders for the bundled verification corpus.
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);    // order 2n
FiniteGroup quaternion_group();       // order 8, labeled
FiniteGroup symmetric_group(int n);   // n <= 5
FiniteGroup alternating_group_4();
FiniteGroup klein_four_group();       // labeled
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// First element of the given order, by index; -1 if none.
int find_element_of_order(const FiniteGroup& g, int order);

struct CorpusEntry {
    std::string name;
    FiniteGroup group;
    int witness_source; // the element a handed to construct_genset
    std::vector<int> base_gens;
    ConstructionCase expected_case;
};

const std::vector<CorpusEntry>& builtin_corpus();

} // namespace frobz
