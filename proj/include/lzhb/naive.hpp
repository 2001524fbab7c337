#pragma once

// Quadratic-time reference implementations used as ground truth for the
// indexes. Same 1-based contracts as OfflineIndex / OnlineIndex.

#include <lzhb/online_index.hpp>
#include <lzhb/types.hpp>

#include <string_view>
#include <vector>

namespace lzhb::naive {

Pos lpf(std::string_view text, Pos i);
OptPos lmocc(std::string_view text, Pos i, Pos len);

// Masked text for the prefix-query oracle: symbols 0..255, or a negative
// value that is unique per masked position.
class MaskedText {
public:
    void append(std::uint8_t symbol, bool masked)
    {
        symbols_.push_back(masked ? -static_cast<int>(symbols_.size()) - 1 : symbol);
    }
    const std::vector<int>& symbols() const { return symbols_; }
    OnlineIndex::Match prefix_query(std::string_view query) const;

private:
    std::vector<int> symbols_;
};

// Smallest p >= 1 with w[i] == w[i + p] for all valid i; 0 for the empty string.
std::size_t min_period(std::string_view w);

} // namespace lzhb::naive
