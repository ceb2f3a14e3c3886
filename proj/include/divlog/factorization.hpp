#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "divlog/error.hpp"
#include "divlog/natural.hpp"

namespace divlog {

/// All primes <= limit, ascending (sieve of Eratosthenes).
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        if (i <= limit / i)
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

namespace detail {

inline constexpr std::uint64_t kSieveLimit = 1u << 16;

// Built once under the static-initialization guard and read-only afterwards.
inline const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> primes = primes_up_to(kSieveLimit);
    return primes;
}

// Calls on_factor(p) for each prime factor of n with multiplicity, ascending.
// Trial division by the cached sieve, then by 6k+-1 candidates past it.
template <class OnFactor>
void trial_divide(std::uint64_t n, OnFactor&& on_factor) {
    for (std::uint64_t p : small_primes()) {
        if (p > n / p) break;
        while (n % p == 0) {
            on_factor(p);
            n /= p;
        }
    }
    std::uint64_t d = kSieveLimit + 1;
    while (d % 6 != 5) ++d;
    for (; d <= n / d; d += 6) {
        for (std::uint64_t c : {d, d + 2}) {
            while (n % c == 0) {
                on_factor(c);
                n /= c;
            }
        }
    }
    if (n > 1) on_factor(n);
}

}  // namespace detail

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    bool prime = true;
    detail::trial_divide(n, [&](std::uint64_t p) { prime = prime && p == n; });
    return prime;
}

/// Finitely supported map prime -> positive exponent, sorted by prime.
/// An absent prime has exponent 0, so 1 is the empty vector.
class ExponentVector {
public:
    struct Term {
        Natural prime;
        std::uint64_t exponent;
        friend bool operator==(const Term&, const Term&) = default;
    };

    ExponentVector() = default;

    /// Validating constructor: every key must be a prime that fits in 64 bits
    /// and appear once. Zero exponents are dropped.
    explicit ExponentVector(std::vector<Term> terms) {
        std::erase_if(terms, [](const Term& t) { return t.exponent == 0; });
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.prime < b.prime; });
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const auto p = terms[i].prime.to_u64();
            if (!p || !is_prime(*p))
                throw InvalidExponentVector("key " + terms[i].prime.str() + " is not a (64-bit) prime");
            if (i > 0 && terms[i - 1].prime == terms[i].prime)
                throw InvalidExponentVector("duplicate key " + terms[i].prime.str());
        }
        terms_ = std::move(terms);
    }

    /// Skips validation; terms must already be sorted by prime, prime-keyed and nonzero.
    static ExponentVector assume_canonical(std::vector<Term> terms) {
        ExponentVector v;
        v.terms_ = std::move(terms);
        return v;
    }

    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    std::uint64_t exponent(const Natural& prime) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), prime,
                                   [](const Term& t, const Natural& p) { return t.prime < p; });
        return (it != terms_.end() && it->prime == prime) ? it->exponent : 0;
    }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<Term> terms_;
};

inline Natural default_factorization_ceiling() {
    return Natural(std::numeric_limits<std::int64_t>::max());
}

/// Prime factorization by deterministic trial division. Inputs above `ceiling`
/// (or above 2^64-1 regardless of ceiling) raise FactorizationLimit.
inline ExponentVector factorize(const Natural& n, const Natural& ceiling = default_factorization_ceiling()) {
    const auto small = n.to_u64();
    if (n > ceiling || !small)
        throw FactorizationLimit(n.str() + " exceeds the factorization ceiling " + ceiling.str());
    std::vector<ExponentVector::Term> terms;
    detail::trial_divide(*small, [&](std::uint64_t p) {
        if (!terms.empty() && terms.back().prime == Natural(p))
            ++terms.back().exponent;
        else
            terms.push_back({Natural(p), 1});
    });
    return ExponentVector::assume_canonical(std::move(terms));
}

inline Natural reconstruct(const ExponentVector& v) {
    BigInt product = 1;
    for (const auto& [prime, exponent] : v.terms()) {
        if (exponent > std::numeric_limits<unsigned>::max())
            throw FactorizationLimit("exponent " + std::to_string(exponent) + " is too large to reconstruct");
        product *= boost::multiprecision::pow(prime.value(), static_cast<unsigned>(exponent));
    }
    return Natural(std::move(product));
}

/// a | b, i.e. a precedes b in the divisibility order.
inline bool divides(const Natural& a, const Natural& b) {
    return b.value() % a.value() == 0;
}

}  // namespace divlog
