#pragma once

#include <lzhb/encoding.hpp>

#include <map>
#include <string>
#include <vector>

namespace lzhb {

/// Random access to the text behind an encoding without decompressing it.
///
/// Holds only the phrase starts and payloads (O(z) space). access(i) walks the
/// referencing forest from i to a root phrase, locating each phrase by binary
/// search over the starts, so it costs (height(i) + 1) predecessor queries.
class RandomAccessIndex {
public:
    explicit RandomAccessIndex(const Encoding& encoding);

    struct Symbol {
        std::uint8_t symbol;
        std::uint32_t steps; // parent links followed; equals the position's height
        bool operator==(const Symbol&) const = default;
    };

    Symbol access(Pos i) const;
    // text[i..i+len); throws UsageError when the range leaves [1, n+1).
    std::string extract(Pos i, Pos len) const;

    Pos length() const { return length_; }
    HeightBound declared_bound() const { return bound_; }
    const std::vector<Pos>& starts() const { return starts_; }
    // Number of stored entries; proportional to the phrase count.
    std::size_t footprint() const { return starts_.size() + phrases_.size(); }

private:
    std::size_t phrase_of(Pos i) const;

    std::vector<Pos> starts_;
    std::vector<Phrase> phrases_;
    Pos length_;
    HeightBound bound_;
};

struct HeightStats {
    std::uint32_t max_height = 0;
    double mean_height = 0.0;
    std::map<std::uint32_t, std::size_t> histogram; // height -> number of positions
};

HeightStats height_stats(const Encoding& encoding);

} // namespace lzhb
