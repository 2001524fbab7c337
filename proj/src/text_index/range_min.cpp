#include <lzhb/kernels.hpp>
#include <lzhb/range_min.hpp>

#include <algorithm>
#include <bit>

namespace lzhb {

RangeMin::RangeMin(std::span<const std::uint32_t> values) : values_(values)
{
    blocks_ = (values_.size() + kBlock - 1) / kBlock;
    if (blocks_ == 0) return;
    std::vector<std::uint32_t> level0(blocks_);
    for (std::size_t b = 0; b < blocks_; ++b) {
        const std::size_t lo = b * kBlock;
        const std::size_t hi = std::min(values_.size(), lo + kBlock);
        level0[b] = kernels::min_value(values_.subspan(lo, hi - lo));
    }
    table_.push_back(std::move(level0));
    for (std::size_t k = 1; (std::size_t{1} << k) <= blocks_; ++k) {
        const auto& prev = table_.back();
        const std::size_t half = std::size_t{1} << (k - 1);
        std::vector<std::uint32_t> level(blocks_ - (std::size_t{1} << k) + 1);
        for (std::size_t b = 0; b < level.size(); ++b) level[b] = std::min(prev[b], prev[b + half]);
        table_.push_back(std::move(level));
    }
}

std::uint32_t RangeMin::block_range_min(std::size_t first_block, std::size_t last_block) const
{
    const std::size_t len = last_block - first_block + 1;
    const std::size_t k = std::bit_width(len) - 1;
    return std::min(table_[k][first_block], table_[k][last_block + 1 - (std::size_t{1} << k)]);
}

std::uint32_t RangeMin::min(std::size_t lo, std::size_t hi) const
{
    const std::size_t blo = lo / kBlock;
    const std::size_t bhi = hi / kBlock;
    if (blo == bhi) return kernels::min_value(values_.subspan(lo, hi - lo + 1));
    std::uint32_t m = std::min(kernels::min_value(values_.subspan(lo, (blo + 1) * kBlock - lo)),
                               kernels::min_value(values_.subspan(bhi * kBlock, hi - bhi * kBlock + 1)));
    if (blo + 1 < bhi) m = std::min(m, block_range_min(blo + 1, bhi - 1));
    return m;
}

std::size_t RangeMin::prev_less(std::size_t pos, std::uint32_t x) const
{
    const std::size_t blk = pos / kBlock;
    const std::size_t base = blk * kBlock;
    const std::size_t k = kernels::find_last_below(values_.subspan(base, pos - base + 1), x);
    if (k != pos - base + 1) return base + k;
    if (blk == 0) return npos;

    // Largest block c < blk whose minimum is below x: skip all-at-least-x runs.
    std::ptrdiff_t c = static_cast<std::ptrdiff_t>(blk) - 1;
    for (std::size_t lvl = table_.size(); lvl-- > 0;) {
        const std::ptrdiff_t width = std::ptrdiff_t{1} << lvl;
        if (c - width + 1 >= 0 && table_[lvl][static_cast<std::size_t>(c - width + 1)] >= x) c -= width;
    }
    if (c < 0) return npos;
    const std::size_t cb = static_cast<std::size_t>(c) * kBlock;
    const std::size_t len = std::min(kBlock, values_.size() - cb);
    return cb + kernels::find_last_below(values_.subspan(cb, len), x);
}

std::size_t RangeMin::next_less(std::size_t pos, std::uint32_t x) const
{
    const std::size_t blk = pos / kBlock;
    const std::size_t end = std::min(values_.size(), (blk + 1) * kBlock);
    const std::size_t k = kernels::find_first_below(values_.subspan(pos, end - pos), x);
    if (k != end - pos) return pos + k;

    std::size_t c = blk + 1;
    for (std::size_t lvl = table_.size(); lvl-- > 0;) {
        const std::size_t width = std::size_t{1} << lvl;
        if (c + width <= blocks_ && table_[lvl][c] >= x) c += width;
    }
    if (c >= blocks_) return npos;
    const std::size_t cb = c * kBlock;
    const std::size_t len = std::min(kBlock, values_.size() - cb);
    return cb + kernels::find_first_below(values_.subspan(cb, len), x);
}

} // namespace lzhb
