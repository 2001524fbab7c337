#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lzhb {

/// Range-minimum and nearest-smaller-value queries over an immutable u32 array.
///
/// Blocks of kBlock values are scanned with the vector kernels; a sparse table
/// over block minima answers the rest. Space is O(n / kBlock * log n) on top of
/// the referenced array, which must outlive this object.
class RangeMin {
public:
    static constexpr std::size_t kBlock = 64;

    RangeMin() = default;
    explicit RangeMin(std::span<const std::uint32_t> values);

    std::size_t size() const { return values_.size(); }

    // Minimum over [lo, hi]; requires lo <= hi < size().
    std::uint32_t min(std::size_t lo, std::size_t hi) const;
    // Largest k <= pos with values[k] < x, or npos.
    std::size_t prev_less(std::size_t pos, std::uint32_t x) const;
    // Smallest k >= pos with values[k] < x, or npos.
    std::size_t next_less(std::size_t pos, std::uint32_t x) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::uint32_t block_range_min(std::size_t first_block, std::size_t last_block) const;

    std::span<const std::uint32_t> values_;
    std::size_t blocks_ = 0;
    // table_[k][b] = min of block minima b .. b + 2^k - 1.
    std::vector<std::vector<std::uint32_t>> table_;
};

} // namespace lzhb
