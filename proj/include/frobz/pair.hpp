#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobz/errors.hpp"

namespace frobz {

struct Bezout {
    std::int64_t g; // gcd, always positive for positive inputs
    std::int64_t x; // x*a + y*b == g
    std::int64_t y;
};

Bezout extended_gcd(std::int64_t a, std::int64_t b);

enum class Classification {
    PositivelyGenerated,
    NegativelyGenerated,
    Both,
    Frobenius,
};

const char* to_string(Classification c);

// One representation value == alpha*a + beta*b of an integer over a pair.
struct Representation {
    std::int64_t alpha;
    std::int64_t beta;
    std::int64_t value;
};

/*
 * A pair of coprime generators, stored with a > b >= 1 regardless of the
 * order the caller passed them in. Construction rejects a*b > 2^31 so that
 * every intermediate product in the closed forms fits comfortably in 64-bit
 * signed arithmetic.
 */
class GenPair {
public:
    GenPair(std::int64_t first, std::int64_t second);

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }

    // Largest non-representable value a*b - a - b. Throws NoFrobeniusValues
    // when b == 1 (everything is representable).
    std::int64_t frobenius_number() const;
    bool has_frobenius_values() const { return b_ >= 2; }

    // No value outside the positive/negative cones has length above this.
    std::int64_t max_frobenius_length() const { return (a_ + b_) / 2; }

    std::int64_t inv_a_mod_b() const { return inv_a_mod_b_; }
    std::int64_t inv_b_mod_a() const { return inv_b_mod_a_; }

private:
    std::int64_t a_;
    std::int64_t b_;
    std::int64_t inv_a_mod_b_; // in [0, b)
    std::int64_t inv_b_mod_a_; // in [0, a)
};

// Unique representation with 0 <= alpha < b.
Representation a_normal_form(const GenPair& pair, std::int64_t c);

// Unique representation with 0 <= beta < a.
Representation b_normal_form(const GenPair& pair, std::int64_t c);

Classification classify(const GenPair& pair, std::int64_t c);

// Exact word length of c over steps {+-a, +-b}, by minimizing
// |alpha + b*t| + |beta - a*t| over integer t.
std::int64_t word_length(const GenPair& pair, std::int64_t c);

// Word length together with a minimizing representation c == x*a + y*b,
// |x| + |y| == length. When the two candidate minimizers tie, the one with
// the parameter t closer to zero is reported.
struct LengthWitness {
    std::int64_t length;
    std::int64_t x; // coefficient of a
    std::int64_t y; // coefficient of b
};

LengthWitness word_length_witness(const GenPair& pair, std::int64_t c);

// All values that are neither non-negative nor non-positive combinations,
// sorted ascending. There are exactly (a-1)*(b-1) of them, half positive.
std::vector<std::int64_t> frobenius_values(const GenPair& pair);

struct DeadEnd {
    std::int64_t value;
    std::int64_t length;
    bool strict;
};

// The closed-form dead ends: b-1 strict ones of length (a+b)/2 when a+b is
// even, 2*(b-1) non-strict ones of length (a+b-1)/2 when a+b is odd, none
// when b == 1. Sorted by value.
std::vector<DeadEnd> dead_ends_closed(const GenPair& pair);

} // namespace frobz
