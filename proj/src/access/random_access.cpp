#include <lzhb/access.hpp>

#include <algorithm>

namespace lzhb {

RandomAccessIndex::RandomAccessIndex(const Encoding& encoding)
    : starts_(encoding.starts()), phrases_(encoding.phrases()), length_(encoding.length()), bound_(encoding.bound())
{
}

std::size_t RandomAccessIndex::phrase_of(Pos i) const
{
    // Predecessor of i among the phrase starts.
    return static_cast<std::size_t>(std::upper_bound(starts_.begin(), starts_.end(), i) - starts_.begin()) - 1;
}

RandomAccessIndex::Symbol RandomAccessIndex::access(Pos i) const
{
    if (i < 1 || i > length_) throw UsageError("access: position " + std::to_string(i) + " out of range");
    std::uint32_t steps = 0;
    for (;;) {
        const std::size_t j = phrase_of(i);
        const Phrase& ph = phrases_[j];
        if (ph.is_root()) return {ph.symbol, steps};
        i = ph.reference(starts_[j], i);
        ++steps;
    }
}

std::string RandomAccessIndex::extract(Pos i, Pos len) const
{
    if (i < 1 || static_cast<std::uint64_t>(i) + len > static_cast<std::uint64_t>(length_) + 1)
        throw UsageError("extract: range out of bounds");
    std::string out;
    out.reserve(len);
    for (Pos k = 0; k < len; ++k) out.push_back(static_cast<char>(access(i + k).symbol));
    return out;
}

HeightStats height_stats(const Encoding& encoding)
{
    const HeightProfile profile = compute_heights(encoding);
    HeightStats stats;
    stats.max_height = profile.max_height;
    stats.mean_height = profile.mean_height();
    for (std::uint32_t h : profile.heights) ++stats.histogram[h];
    return stats;
}

} // namespace lzhb
