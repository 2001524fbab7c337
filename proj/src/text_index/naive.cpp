#include <lzhb/naive.hpp>

namespace lzhb::naive {

Pos lpf(std::string_view text, Pos i)
{
    if (i < 1 || i > text.size()) throw UsageError("lpf: position out of range");
    const std::size_t b = i - 1;
    std::size_t best = 0;
    for (std::size_t j = 0; j < b; ++j) {
        std::size_t k = 0;
        while (b + k < text.size() && text[j + k] == text[b + k]) ++k;
        if (k > best) best = k;
    }
    return static_cast<Pos>(best);
}

OptPos lmocc(std::string_view text, Pos i, Pos len)
{
    if (i < 1 || len < 1 || static_cast<std::size_t>(i) + len - 1 > text.size())
        throw UsageError("lmocc: position/length out of range");
    const std::string_view pattern = text.substr(i - 1, len);
    for (std::size_t j = 0; j + 1 < i; ++j)
        if (text.substr(j, len) == pattern) return static_cast<Pos>(j + 1);
    return std::nullopt;
}

OnlineIndex::Match MaskedText::prefix_query(std::string_view query) const
{
    OnlineIndex::Match best;
    for (std::size_t j = 0; j < symbols_.size(); ++j) {
        std::size_t k = 0;
        while (k < query.size() && j + k < symbols_.size() &&
               symbols_[j + k] == static_cast<int>(static_cast<std::uint8_t>(query[k])))
            ++k;
        if (k > best.length) {
            best.length = static_cast<Pos>(k);
            best.start = static_cast<Pos>(j + 1);
        }
    }
    return best;
}

std::size_t min_period(std::string_view w)
{
    for (std::size_t p = 1; p <= w.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < w.size() && ok; ++i) ok = w[i] == w[i + p];
        if (ok) return p;
    }
    return 0;
}

} // namespace lzhb::naive
