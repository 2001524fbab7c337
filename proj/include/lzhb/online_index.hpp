#pragma once

#include <lzhb/types.hpp>

#include <cstdint>
#include <string_view>
#include <vector>

namespace lzhb {

/// Append-only suffix tree (Ukkonen) over a text in which some positions are
/// masked.
///
/// A masked position behaves as a sentinel unique to that position: it matches
/// no query symbol and no other masked position. Every edge carries the
/// leftmost starting position of the suffixes below it, so a prefix query
/// reports the leftmost occurrence of the longest matched prefix.
///
/// Single writer; no queries may run concurrently with append().
class OnlineIndex {
public:
    explicit OnlineIndex(std::size_t expected_length = 0);

    void append(std::uint8_t symbol, bool masked);

    Pos size() const { return static_cast<Pos>(text_.size()); }
    bool masked(Pos i) const { return text_[i - 1] == kSentinel; }

    struct Match {
        Pos length = 0;
        OptPos start; // leftmost occurrence; empty iff length == 0
        bool operator==(const Match&) const = default;
    };

    // Longest prefix of query occurring in the indexed text without touching a
    // masked position, with its leftmost start.
    Match prefix_query(std::string_view query) const;

    /// Incremental descent from the root, one symbol at a time. Invalidated by
    /// append().
    class Cursor {
    public:
        explicit Cursor(const OnlineIndex& index) : index_(&index) {}
        // Extends the matched string by symbol; false (and no change) when the
        // extension does not occur.
        bool extend(std::uint8_t symbol);
        Pos length() const { return depth_; }
        OptPos leftmost() const;

    private:
        const OnlineIndex* index_;
        std::uint32_t node_ = 0;
        std::uint32_t next_ = 0;
        Pos offset_ = 0;
        Pos depth_ = 0;
    };

    Cursor cursor() const { return Cursor{*this}; }

    std::size_t node_count() const { return start_.size(); }

private:
    static constexpr std::uint16_t kSentinel = 256;
    static constexpr std::uint32_t kNoNode = 0xFFFFFFFFu;
    static constexpr std::uint32_t kOpenEnd = 0xFFFFFFFFu;

    // (node, symbol) -> child, open addressing with linear probing.
    class ChildMap {
    public:
        explicit ChildMap(std::size_t expected);
        std::uint32_t find(std::uint32_t node, std::uint16_t symbol) const;
        void set(std::uint32_t node, std::uint16_t symbol, std::uint32_t child);

    private:
        static constexpr std::uint64_t kEmptyKey = ~std::uint64_t{0};
        std::size_t slot(std::uint64_t key) const;
        void grow();

        std::vector<std::uint64_t> keys_;
        std::vector<std::uint32_t> values_;
        std::size_t used_ = 0;
        int shift_ = 0;
    };

    std::uint32_t new_node(std::uint32_t start, std::uint32_t end, std::uint32_t leftmost);
    Pos edge_length(std::uint32_t node) const
    {
        const std::uint32_t end = end_[node] == kOpenEnd ? static_cast<std::uint32_t>(text_.size()) : end_[node];
        return end - start_[node];
    }

    std::vector<std::uint16_t> text_;
    std::vector<std::uint32_t> start_;
    std::vector<std::uint32_t> end_;
    std::vector<std::uint32_t> link_;
    std::vector<std::uint32_t> leftmost_; // 0-based
    ChildMap children_;

    std::uint32_t active_node_ = 0;
    std::uint32_t active_edge_ = 0;
    std::uint32_t active_length_ = 0;
    std::uint32_t remainder_ = 0;
};

/// Minimum period of a string that grows by appending, via its border array.
class MinPeriodTracker {
public:
    // Appends symbol and returns the minimum period of the tracked string.
    std::size_t push(std::uint8_t symbol);
    std::size_t period() const { return border_.empty() ? 0 : border_.size() - border_.back(); }
    std::size_t size() const { return symbols_.size(); }
    void clear()
    {
        symbols_.clear();
        border_.clear();
    }

private:
    std::vector<std::uint8_t> symbols_;
    std::vector<std::size_t> border_;
};

// Border (failure) array of pattern: border[k] = longest proper border of pattern[0..k].
std::vector<std::size_t> border_array(std::string_view pattern);

// Leftmost k in [window_start, window_end) with text[k..k+len) equal to
// text[pattern_start..pattern_start+len); positions 1-based, linear time.
OptPos window_leftmost_occurrence(std::string_view text, Pos pattern_start, Pos pattern_len, Pos window_start,
                                  Pos window_end);

} // namespace lzhb
