#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "divlog/error.hpp"

namespace divlog {

using BigInt = boost::multiprecision::cpp_int;

/// An arbitrary-precision positive integer. Zero is not a Natural: the
/// divisibility lattice lives on 1, 2, 3, ... and 0 appears only as an exponent.
class Natural {
public:
    Natural() : value_(1) {}

    template <std::integral I>
    Natural(I v) : value_(v) {  // NOLINT(google-explicit-constructor)
        bool positive = v != 0;
        if constexpr (std::is_signed_v<I>) positive = v > 0;
        if (!positive) throw InvalidNatural("natural numbers start at 1, got " + std::to_string(v));
    }

    explicit Natural(BigInt v) : value_(std::move(v)) {
        if (value_ <= 0) throw InvalidNatural("natural numbers start at 1, got " + value_.str());
    }

    /// Parses a plain decimal literal (digits only, no sign).
    static Natural parse(std::string_view text) {
        if (text.empty()) throw InvalidNatural("empty number");
        for (char c : text) {
            if (c < '0' || c > '9') throw InvalidNatural("not a decimal number: '" + std::string(text) + "'");
        }
        return Natural(BigInt(std::string(text)));
    }

    const BigInt& value() const noexcept { return value_; }
    std::string str() const { return value_.str(); }

    bool is_one() const noexcept { return value_ == 1; }

    std::optional<std::uint64_t> to_u64() const {
        if (value_ > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        return static_cast<std::uint64_t>(value_);
    }

    friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend Natural operator*(const Natural& a, const Natural& b) { return Natural(a.value_ * b.value_); }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value_; }

private:
    BigInt value_;
};

}  // namespace divlog

template <>
struct std::hash<divlog::Natural> {
    std::size_t operator()(const divlog::Natural& n) const noexcept {
        return boost::multiprecision::hash_value(n.value());
    }
};
