#include <lzhb/online_index.hpp>

#include <algorithm>

namespace lzhb {

std::size_t MinPeriodTracker::push(std::uint8_t symbol)
{
    std::size_t k = border_.empty() ? 0 : border_.back();
    if (!symbols_.empty()) {
        while (k > 0 && symbols_[k] != symbol) k = border_[k - 1];
        if (symbols_[k] == symbol && k < symbols_.size()) ++k;
    }
    symbols_.push_back(symbol);
    // A one-symbol string has no proper border.
    border_.push_back(symbols_.size() == 1 ? 0 : k);
    return period();
}

std::vector<std::size_t> border_array(std::string_view pattern)
{
    std::vector<std::size_t> border(pattern.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < pattern.size(); ++i) {
        while (k > 0 && pattern[k] != pattern[i]) k = border[k - 1];
        if (pattern[k] == pattern[i]) ++k;
        border[i] = k;
    }
    return border;
}

OptPos window_leftmost_occurrence(std::string_view text, Pos pattern_start, Pos pattern_len, Pos window_start,
                                  Pos window_end)
{
    const std::size_t n = text.size();
    if (pattern_len == 0 || window_start < 1 || window_start >= window_end) return std::nullopt;
    if (pattern_start < 1 || static_cast<std::size_t>(pattern_start) + pattern_len - 1 > n)
        throw UsageError("window search: pattern out of range");
    const std::string_view pattern = text.substr(pattern_start - 1, pattern_len);
    const std::size_t lo = window_start - 1;
    const std::size_t hi = std::min(n, static_cast<std::size_t>(window_end) - 1 + pattern_len - 1);
    if (lo >= hi) return std::nullopt;

    const auto border = border_array(pattern);
    std::size_t matched = 0;
    for (std::size_t j = lo; j < hi; ++j) {
        while (matched > 0 && pattern[matched] != text[j]) matched = border[matched - 1];
        if (pattern[matched] == text[j]) ++matched;
        if (matched == pattern_len) {
            const std::size_t start = j + 1 - pattern_len; // 0-based
            if (start + 1 >= window_end) return std::nullopt;
            return static_cast<Pos>(start + 1);
        }
    }
    return std::nullopt;
}

} // namespace lzhb
