#pragma once

#include <lzhb/encoding.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace lzhb {

// Canonical text format:
//   LZHB <variant> v1 n=<n> h=<h|inf> z=<phrases>
//   L <byte> | C <len> <src> | R <len> <byte> | P <len> <src> <period>
// one phrase per line, LF line endings, 1-based positions.
std::string serialize(const Encoding& encoding);

class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Throws FormatError on any deviation from the canonical format.
Encoding deserialize(std::string_view data);

} // namespace lzhb
