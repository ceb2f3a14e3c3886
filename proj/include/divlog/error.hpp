#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace divlog {

// Base of every domain error. name() is the stable identifier surfaced by the CLI.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual std::string_view name() const noexcept = 0;
};

#define DIVLOG_DEFINE_ERROR(Type)                                              \
    class Type : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
        std::string_view name() const noexcept override { return #Type; }      \
    }

DIVLOG_DEFINE_ERROR(InvalidNatural);
DIVLOG_DEFINE_ERROR(InvalidExponentVector);
DIVLOG_DEFINE_ERROR(FactorizationLimit);
DIVLOG_DEFINE_ERROR(PreconditionViolated);
DIVLOG_DEFINE_ERROR(InvalidInterval);
DIVLOG_DEFINE_ERROR(NotMember);
DIVLOG_DEFINE_ERROR(NotBoolean);
DIVLOG_DEFINE_ERROR(EnumerationLimit);
DIVLOG_DEFINE_ERROR(NoGreatestElement);
DIVLOG_DEFINE_ERROR(UnboundVariable);
DIVLOG_DEFINE_ERROR(SearchLimit);

#undef DIVLOG_DEFINE_ERROR

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error("at position " + std::to_string(position) + ": " + what), position_(position) {}

    std::string_view name() const noexcept override { return "SyntaxError"; }

    // Zero-based character offset into the parsed text.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace divlog
