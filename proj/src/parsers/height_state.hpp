#pragma once

#include <lzhb/types.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace lzhb::detail {

// Heights of the already parsed prefix plus the next-saturated-position array:
// next_saturated(i) = min{ j >= i | H[j] == bound } or npos.
class HeightState {
public:
    static constexpr Pos npos = 0xFFFFFFFFu;

    HeightState(std::size_t n, HeightBound bound) : bound_(bound), next_sat_(n, npos) { heights_.reserve(n); }

    HeightBound bound() const { return bound_; }
    Pos parsed() const { return static_cast<Pos>(heights_.size()); }
    std::uint32_t height(Pos i) const { return heights_[i - 1]; }
    std::span<const std::uint32_t> heights() const { return heights_; }
    // Last position whose height equals the bound; 0 if none.
    Pos last_saturated() const { return last_saturated_; }
    bool saturated(Pos i) const { return heights_[i - 1] == bound_.value(); }

    Pos next_saturated(Pos i) const { return i <= last_saturated_ ? next_sat_[i - 1] : npos; }
    // True iff every position in [lo, hi) may be referenced.
    bool referenceable(Pos lo, Pos hi) const { return lo >= hi || next_saturated(lo) >= hi; }

    // Appends the next position with the given height.
    void push(std::uint32_t h)
    {
        heights_.push_back(h);
        if (h == bound_.value()) {
            const Pos j = parsed();
            for (Pos k = last_saturated_ + 1; k <= j; ++k) next_sat_[k - 1] = j;
            last_saturated_ = j;
        }
    }

private:
    HeightBound bound_;
    std::vector<std::uint32_t> heights_;
    std::vector<Pos> next_sat_;
    Pos last_saturated_ = 0;
};

} // namespace lzhb::detail
