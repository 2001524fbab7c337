#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lzhb {

// Texts are raw byte strings. Positions exposed by the library are 1-based.
using Pos = std::uint32_t;
using OptPos = std::optional<Pos>;

inline constexpr std::size_t kMaxTextLength = std::numeric_limits<Pos>::max() - 2;

inline std::uint8_t byte_at(std::string_view text, Pos pos1)
{
    return static_cast<std::uint8_t>(text[pos1 - 1]);
}

// Upper bound on the referencing height of every position, or unbounded.
class HeightBound {
public:
    constexpr HeightBound() = default;
    constexpr explicit HeightBound(std::uint32_t h) : value_(h) {}

    static constexpr HeightBound unbounded() { return HeightBound{}; }

    constexpr bool is_unbounded() const { return value_ == kInf; }
    constexpr std::uint32_t value() const { return value_; }
    constexpr bool admits(std::uint32_t height) const { return height <= value_; }
    // Heights strictly below the bound may still be referenced.
    constexpr bool referenceable(std::uint32_t height) const { return height < value_; }

    std::string to_string() const { return is_unbounded() ? "inf" : std::to_string(value_); }
    static HeightBound parse(std::string_view s);

    constexpr bool operator==(const HeightBound&) const = default;

private:
    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t value_ = kInf;
};

// Caller passed arguments outside an operation's domain.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace lzhb
