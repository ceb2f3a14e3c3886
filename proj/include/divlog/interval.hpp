#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "divlog/error.hpp"
#include "divlog/factorization.hpp"
#include "divlog/lattice.hpp"
#include "divlog/natural.hpp"

namespace divlog {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000;

/// A member of some interval, carried together with its factorization.
/// Elements do not remember their interval; operations re-check membership.
struct IntervalElement {
    Natural value;
    ExponentVector exponents;

    friend bool operator==(const IntervalElement& a, const IntervalElement& b) { return a.value == b.value; }
};

/// The closed divisibility interval Q_{bottom,top} = { a : bottom | a, a | top }.
/// It is a finite distributive lattice, hence a Heyting algebra with zero
/// `bottom` and one `top`.
class Interval {
public:
    Interval(const Natural& bottom, const Natural& top) : bottom_(bottom), top_(top) {
        if (!divides(bottom, top))
            throw InvalidInterval(bottom.str() + " does not divide " + top.str());
        bottom_exp_ = factorize(bottom);
        top_exp_ = factorize(top);
    }

    const Natural& bottom() const noexcept { return bottom_; }
    const Natural& top() const noexcept { return top_; }
    const ExponentVector& bottom_exponents() const noexcept { return bottom_exp_; }
    const ExponentVector& top_exponents() const noexcept { return top_exp_; }

    /// Number of members: product over primes of (top_j - bottom_j + 1).
    /// Computed without enumerating; saturates at uint64 max.
    std::uint64_t size() const {
        std::uint64_t n = 1;
        for (const auto& [p, hi] : top_exp_.terms()) {
            const std::uint64_t width = hi - bottom_exp_.exponent(p) + 1;
            if (n > std::numeric_limits<std::uint64_t>::max() / width) return std::numeric_limits<std::uint64_t>::max();
            n *= width;
        }
        return n;
    }

    bool contains(const Natural& a) const { return divides(bottom_, a) && divides(a, top_); }

    bool contains(const IntervalElement& a) const {
        // Exponentwise: bottom_j <= a_j <= top_j for every prime.
        for (const auto& [p, e] : a.exponents.terms())
            if (e > top_exp_.exponent(p)) return false;
        for (const auto& [p, e] : bottom_exp_.terms())
            if (a.exponents.exponent(p) < e) return false;
        return true;
    }

    /// Validates membership and attaches the factorization.
    IntervalElement element(const Natural& a) const {
        if (!contains(a)) throw NotMember(a.str() + " is not a member of " + describe());
        return IntervalElement{a, factorize(a)};
    }

    IntervalElement bottom_element() const { return {bottom_, bottom_exp_}; }
    IntervalElement top_element() const { return {top_, top_exp_}; }

    std::string describe() const { return "Q_{" + bottom_.str() + "," + top_.str() + "}"; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.bottom_ == b.bottom_ && a.top_ == b.top_;
    }

private:
    Natural bottom_;
    Natural top_;
    ExponentVector bottom_exp_;
    ExponentVector top_exp_;
};

inline Interval make_interval(const Natural& bottom, const Natural& top) { return Interval(bottom, top); }

inline bool contains(const Interval& q, const Natural& a) { return q.contains(a); }

namespace detail {

inline void require_member(const Interval& q, const IntervalElement& a) {
    if (!q.contains(a)) throw NotMember(a.value.str() + " is not a member of " + q.describe());
}

// Builds the element whose exponent at each prime p of top is exponent_at(p, top_j).
// Primes outside top's support cannot occur in a member.
template <class ExponentAt>
IntervalElement build_coordinatewise(const Interval& q, ExponentAt&& exponent_at) {
    std::vector<ExponentVector::Term> terms;
    for (const auto& [p, hi] : q.top_exponents().terms()) {
        const std::uint64_t e = exponent_at(p, hi);
        if (e != 0) terms.push_back({p, e});
    }
    auto v = ExponentVector::assume_canonical(std::move(terms));
    Natural value = reconstruct(v);
    return {std::move(value), std::move(v)};
}

}  // namespace detail

/// Members of q in ascending numeric order. Raises EnumerationLimit when
/// q.size() exceeds cap.
inline std::vector<IntervalElement> enumerate(const Interval& q, std::uint64_t cap = kDefaultEnumerationCap) {
    const std::uint64_t count = q.size();
    if (count > cap)
        throw EnumerationLimit(q.describe() + " has " + std::to_string(count) + " elements, cap is " + std::to_string(cap));

    const auto top_terms = q.top_exponents().terms();
    std::vector<std::uint64_t> lo, hi;
    for (const auto& [p, e] : top_terms) {
        lo.push_back(q.bottom_exponents().exponent(p));
        hi.push_back(e);
    }

    std::vector<IntervalElement> out;
    out.reserve(count);
    std::vector<std::uint64_t> cur = lo;
    while (true) {
        std::vector<ExponentVector::Term> terms;
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (cur[i] != 0) terms.push_back({top_terms[i].prime, cur[i]});
        auto v = ExponentVector::assume_canonical(std::move(terms));
        Natural value = reconstruct(v);
        out.push_back({std::move(value), std::move(v)});

        std::size_t i = 0;
        while (i < cur.size() && cur[i] == hi[i]) cur[i] = lo[i], ++i;
        if (i == cur.size()) break;
        ++cur[i];
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    return out;
}

/// Pseudocomplement: per prime, bottom_j where a_j > bottom_j, top_j where a_j == bottom_j.
inline IntervalElement neg(const Interval& q, const IntervalElement& a) {
    detail::require_member(q, a);
    return detail::build_coordinatewise(q, [&](const Natural& p, std::uint64_t top_j) {
        const std::uint64_t bottom_j = q.bottom_exponents().exponent(p);
        return a.exponents.exponent(p) > bottom_j ? bottom_j : top_j;
    });
}

/// Relative pseudocomplement a -> b: per prime, b_j where a_j > b_j, top_j otherwise.
/// Does not depend on q.bottom().
inline IntervalElement imp(const Interval& q, const IntervalElement& a, const IntervalElement& b) {
    detail::require_member(q, a);
    detail::require_member(q, b);
    return detail::build_coordinatewise(q, [&](const Natural& p, std::uint64_t top_j) {
        const std::uint64_t a_j = a.exponents.exponent(p);
        const std::uint64_t b_j = b.exponents.exponent(p);
        return a_j > b_j ? b_j : top_j;
    });
}

/// True iff no prime's exponent in top exceeds its exponent in bottom by more than one.
inline bool is_boolean(const Interval& q) {
    for (const auto& [p, hi] : q.top_exponents().terms())
        if (hi - q.bottom_exponents().exponent(p) > 1) return false;
    return true;
}

/// Complement in a Boolean interval via top * bottom / a.
inline IntervalElement boolean_complement(const Interval& q, const IntervalElement& a) {
    if (!is_boolean(q)) throw NotBoolean(q.describe() + " is not a Boolean algebra");
    detail::require_member(q, a);
    const BigInt product = q.top().value() * q.bottom().value();
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(product, a.value.value(), quotient, remainder);
    if (remainder != 0)
        throw std::logic_error("top*bottom not divisible by " + a.value.str() + " in " + q.describe());
    return q.element(Natural(std::move(quotient)));
}

}  // namespace divlog
