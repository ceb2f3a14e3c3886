#pragma once

#include "divlog/error.hpp"
#include "divlog/factorization.hpp"
#include "divlog/natural.hpp"

namespace divlog {

// meet = gcd and join = lcm in the divisibility order. Both use integer
// arithmetic; exponent vectors are only used to cross-check them.

inline Natural meet(const Natural& a, const Natural& b) {
    return Natural(boost::multiprecision::gcd(a.value(), b.value()));
}

inline Natural join(const Natural& a, const Natural& b) {
    const BigInt g = boost::multiprecision::gcd(a.value(), b.value());
    return Natural(a.value() / g * b.value());
}

/// Textbook remainder-sequence gcd. Kept separate from meet() so each can check the other.
inline Natural meet_euclid(const Natural& a, const Natural& b) {
    BigInt x = a.value();
    BigInt y = b.value();
    while (y != 0) {
        BigInt r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return Natural(std::move(x));
}

/// x ∧ (z ∨ y) == (x ∧ z) ∨ y, defined for y | x.
inline bool projective_identity_holds(const Natural& x, const Natural& y, const Natural& z) {
    if (!divides(y, x))
        throw PreconditionViolated(y.str() + " does not divide " + x.str());
    return meet(x, join(z, y)) == join(meet(x, z), y);
}

}  // namespace divlog
