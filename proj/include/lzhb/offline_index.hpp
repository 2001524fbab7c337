#pragma once

#include <lzhb/range_min.hpp>
#include <lzhb/types.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lzhb {

/// Static index over a whole text answering longest-previous-factor and
/// leftmost-occurrence queries.
///
/// Built from the suffix array, its inverse and the LCP array. lpf is tabulated;
/// lmocc(i, len) locates the LCP interval of suffix i with depth >= len by two
/// nearest-smaller-value searches and returns the interval's minimum suffix.
/// Immutable after construction.
class OfflineIndex {
public:
    explicit OfflineIndex(std::string text);

    OfflineIndex(const OfflineIndex&) = delete;
    OfflineIndex& operator=(const OfflineIndex&) = delete;

    std::string_view text() const { return text_; }
    Pos size() const { return static_cast<Pos>(text_.size()); }

    // Longest previous factor at 1-based position i.
    Pos lpf(Pos i) const;
    // Leftmost j < i with text[j..j+len) == text[i..i+len); overlap allowed.
    OptPos lmocc(Pos i, Pos len) const;

    /// Incremental lmocc(i, 1), lmocc(i, 2), ... for a fixed i.
    ///
    /// Re-locates the suffix interval only when len exceeds the current
    /// interval's string depth, so a walk to length L costs one interval search
    /// per distinct branching depth crossed.
    class Cursor {
    public:
        Cursor(const OfflineIndex& index, Pos i);
        // Leftmost previous occurrence of text[i..i+len); len must not decrease
        // between calls and must satisfy i + len - 1 <= n.
        OptPos lmocc(Pos len);

    private:
        void locate(Pos len);

        const OfflineIndex* index_;
        Pos pos0_;
        std::size_t rank_;
        std::size_t lo_ = 0;
        std::size_t hi_ = 0;
        Pos depth_ = 0;
        Pos min_start_ = 0;
        bool located_ = false;
    };

    Cursor cursor(Pos i) const { return Cursor{*this, i}; }

private:
    friend class Cursor;
    void check_range(Pos i, Pos len) const;

    std::string text_;
    std::vector<std::uint32_t> sa_;
    std::vector<std::uint32_t> isa_;
    std::vector<std::uint32_t> lcp_;
    std::vector<std::uint32_t> lpf_;
    RangeMin lcp_min_;
    RangeMin sa_min_;
};

} // namespace lzhb
