#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobz {

// Base for every library-specific failure. Contract violations that a caller
// could have checked (bad indices, non-positive generators) use
// std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Generating set reduces to nothing after normalization.
class EmptySet : public Error {
public:
    using Error::Error;
};

// Generators share a common divisor > 1; carries the offending gcd.
class NotCoprime : public Error {
public:
    NotCoprime(std::int64_t gcd, const std::string& what)
        : Error(what), gcd_(gcd) {}
    std::int64_t gcd() const { return gcd_; }

private:
    std::int64_t gcd_;
};

// 1 generates everything, so there is no largest non-representable value.
class NoFrobeniusValues : public Error {
public:
    using Error::Error;
};

// A length-table window would exceed the configured cell cap.
class WindowTooLarge : public Error {
public:
    using Error::Error;
};

// A query fell outside the radius for which a table is exact.
class InsufficientRadius : public Error {
public:
    using Error::Error;
};

class NotADeadEnd : public Error {
public:
    using Error::Error;
};

// Cayley-table file errors carry the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what) : Error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class NotLatinSquare : public Error {
public:
    using Error::Error;
};

class NoIdentity : public Error {
public:
    using Error::Error;
};

class NoInverse : public Error {
public:
    using Error::Error;
};

class NotAssociative : public Error {
public:
    using Error::Error;
};

class DoesNotGenerate : public Error {
public:
    using Error::Error;
};

// The witness element has order 2 or 3 but the group has elements of order
// >= 4; no construction is defined for that combination.
class OrderTooSmallForCase : public Error {
public:
    using Error::Error;
};

class GroupTooSmall : public Error {
public:
    using Error::Error;
};

} // namespace frobz
