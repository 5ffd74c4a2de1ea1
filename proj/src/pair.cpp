#include "frobz/pair.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <string>

namespace frobz {

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) {
        throw std::invalid_argument("extended_gcd requires positive inputs");
    }
    std::int64_t old_r = a, r = b;
    std::int64_t old_x = 1, x = 0;
    std::int64_t old_y = 0, y = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_x - q * x;
        old_x = x;
        x = tmp;
        tmp = old_y - q * y;
        old_y = y;
        y = tmp;
    }
    return {old_r, old_x, old_y};
}

const char* to_string(Classification c) {
    switch (c) {
    case Classification::PositivelyGenerated: return "positively-generated";
    case Classification::NegativelyGenerated: return "negatively-generated";
    case Classification::Both: return "both";
    case Classification::Frobenius: return "frobenius";
    }
    return "?";
}

namespace {

std::int64_t mod_floor(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

std::int64_t div_floor(std::int64_t v, std::int64_t m) {
    std::int64_t q = v / m;
    if (v % m != 0 && (v < 0) != (m < 0)) --q;
    return q;
}

} // namespace

GenPair::GenPair(std::int64_t first, std::int64_t second) {
    if (first < 1 || second < 1) {
        throw std::invalid_argument("pair generators must be positive");
    }
    a_ = std::max(first, second);
    b_ = std::min(first, second);
    const std::int64_t g = std::gcd(a_, b_);
    if (g != 1) {
        throw NotCoprime(g, "pair generators are not coprime (gcd = " +
                                std::to_string(g) + ")");
    }
    if (a_ == b_) {
        throw std::invalid_argument("pair requires two distinct generators");
    }
    // Keep a*b <= 2^31 so products like alpha*a stay far from overflow.
    if (a_ > (std::int64_t{1} << 31) / b_) {
        throw std::invalid_argument("pair too large: product of generators exceeds 2^31");
    }
    const Bezout bez = extended_gcd(a_, b_);
    inv_a_mod_b_ = mod_floor(bez.x, b_);
    inv_b_mod_a_ = mod_floor(bez.y, a_);
}

std::int64_t GenPair::frobenius_number() const {
    if (b_ == 1) {
        throw NoFrobeniusValues("every integer is representable over {" +
                                std::to_string(a_) + ", 1}");
    }
    return a_ * b_ - a_ - b_;
}

Representation a_normal_form(const GenPair& pair, std::int64_t c) {
    const std::int64_t b = pair.b();
    const std::int64_t alpha = mod_floor(c, b) * pair.inv_a_mod_b() % b;
    const std::int64_t rest = c - alpha * pair.a();
    assert(rest % b == 0);
    return {alpha, rest / b, c};
}

Representation b_normal_form(const GenPair& pair, std::int64_t c) {
    const std::int64_t a = pair.a();
    const std::int64_t beta = mod_floor(c, a) * pair.inv_b_mod_a() % a;
    const std::int64_t rest = c - beta * pair.b();
    assert(rest % a == 0);
    return {rest / a, beta, c};
}

Classification classify(const GenPair& pair, std::int64_t c) {
    if (c == 0) return Classification::Both;
    const Representation rep = a_normal_form(pair, c);
    if (rep.alpha > 0 && rep.beta < 0 && rep.beta > -pair.a()) {
        return Classification::Frobenius;
    }
    return rep.beta >= 0 ? Classification::PositivelyGenerated
                         : Classification::NegativelyGenerated;
}

namespace {

// |alpha + b*t| + |beta - a*t| for the t-th representation of the value.
std::int64_t coefficient_weight(const Representation& rep, const GenPair& pair,
                                std::int64_t t) {
    return std::abs(rep.alpha + pair.b() * t) + std::abs(rep.beta - pair.a() * t);
}

} // namespace

LengthWitness word_length_witness(const GenPair& pair, std::int64_t c) {
    // The weight is convex piecewise-linear in t with its real minimum at
    // beta/a (the slopes away from it are at least a - b > 0), so only the
    // two integers bracketing beta/a can minimize.
    const Representation rep = a_normal_form(pair, c);
    const std::int64_t lo = div_floor(rep.beta, pair.a());
    const std::int64_t hi = lo + (rep.beta % pair.a() == 0 ? 0 : 1);
    const std::int64_t w_lo = coefficient_weight(rep, pair, lo);
    const std::int64_t w_hi = coefficient_weight(rep, pair, hi);
    std::int64_t t = w_lo < w_hi ? lo : hi;
    if (w_lo == w_hi) {
        t = std::abs(lo) <= std::abs(hi) ? lo : hi; // tie: pick t closer to 0
    }
    return {std::min(w_lo, w_hi), rep.alpha + pair.b() * t,
            rep.beta - pair.a() * t};
}

std::int64_t word_length(const GenPair& pair, std::int64_t c) {
    return word_length_witness(pair, c).length;
}

std::vector<std::int64_t> frobenius_values(const GenPair& pair) {
    std::vector<std::int64_t> out;
    if (pair.b() == 1) return out;
    out.reserve(static_cast<std::size_t>((pair.a() - 1) * (pair.b() - 1)));
    for (std::int64_t alpha = 1; alpha < pair.b(); ++alpha) {
        for (std::int64_t beta = -(pair.a() - 1); beta <= -1; ++beta) {
            out.push_back(alpha * pair.a() + beta * pair.b());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DeadEnd> dead_ends_closed(const GenPair& pair) {
    const std::int64_t a = pair.a();
    const std::int64_t b = pair.b();
    std::vector<DeadEnd> out;
    if (b == 1) return out;
    if ((a + b) % 2 == 0) {
        const std::int64_t len = (a + b) / 2;
        for (std::int64_t alpha = 1; alpha <= b - 1; ++alpha) {
            out.push_back({(a + b) * (2 * alpha - b) / 2, len, true});
        }
    } else {
        const std::int64_t len = (a + b - 1) / 2;
        for (std::int64_t alpha = 1; alpha <= b - 1; ++alpha) {
            out.push_back({((a + b) * (2 * alpha - b) + b) / 2, len, false});
            out.push_back({((a + b) * (2 * alpha - b) - b) / 2, len, false});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const DeadEnd& l, const DeadEnd& r) { return l.value < r.value; });
    return out;
}

} // namespace frobz
