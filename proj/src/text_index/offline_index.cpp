#include <lzhb/offline_index.hpp>
#include <lzhb/suffix_array.hpp>

#include <algorithm>
#include <string>

namespace lzhb {

OfflineIndex::OfflineIndex(std::string text) : text_(std::move(text))
{
    if (text_.size() > kMaxTextLength) throw UsageError("text too long");
    const std::size_t n = text_.size();
    sa_ = build_suffix_array(text_);
    lcp_ = build_lcp_array(text_, sa_);
    isa_.resize(n);
    for (std::size_t r = 0; r < n; ++r) isa_[sa_[r]] = static_cast<std::uint32_t>(r);
    lcp_min_ = RangeMin{lcp_};
    sa_min_ = RangeMin{sa_};

    // lpf from the nearest suffixes to the left/right in SA order that start
    // earlier in the text.
    lpf_.assign(n, 0);
    std::vector<std::uint32_t> stack;
    constexpr std::uint32_t kNone = 0xFFFFFFFFu;
    std::vector<std::uint32_t> psv(n, kNone);
    for (std::size_t r = 0; r < n; ++r) {
        while (!stack.empty() && sa_[stack.back()] > sa_[r]) stack.pop_back();
        psv[r] = stack.empty() ? kNone : stack.back();
        stack.push_back(static_cast<std::uint32_t>(r));
    }
    stack.clear();
    for (std::size_t r = n; r-- > 0;) {
        while (!stack.empty() && sa_[stack.back()] > sa_[r]) stack.pop_back();
        std::uint32_t best = 0;
        if (psv[r] != kNone) best = lcp_min_.min(psv[r] + 1, r);
        if (!stack.empty()) best = std::max(best, lcp_min_.min(r + 1, stack.back()));
        lpf_[sa_[r]] = best;
        stack.push_back(static_cast<std::uint32_t>(r));
    }
}

void OfflineIndex::check_range(Pos i, Pos len) const
{
    if (i < 1 || len < 1 || static_cast<std::size_t>(i) + len - 1 > text_.size())
        throw UsageError("lmocc: position/length out of range");
}

Pos OfflineIndex::lpf(Pos i) const
{
    if (i < 1 || i > text_.size()) throw UsageError("lpf: position out of range");
    return lpf_[i - 1];
}

OptPos OfflineIndex::lmocc(Pos i, Pos len) const
{
    check_range(i, len);
    const std::size_t r = isa_[i - 1];
    const std::size_t lo = lcp_min_.prev_less(r, len);
    const std::size_t hi = lcp_min_.next_less(r + 1, len) - 1;
    const std::uint32_t leftmost = sa_min_.min(lo, hi);
    if (leftmost < i - 1) return leftmost + 1;
    return std::nullopt;
}

OfflineIndex::Cursor::Cursor(const OfflineIndex& index, Pos i)
    : index_(&index), pos0_(i - 1), rank_(0)
{
    index.check_range(i, 1);
    rank_ = index.isa_[pos0_];
}

void OfflineIndex::Cursor::locate(Pos len)
{
    const auto& ix = *index_;
    lo_ = ix.lcp_min_.prev_less(rank_, len);
    hi_ = ix.lcp_min_.next_less(rank_ + 1, len) - 1;
    depth_ = lo_ == hi_ ? static_cast<Pos>(ix.text_.size() - pos0_) : ix.lcp_min_.min(lo_ + 1, hi_);
    min_start_ = ix.sa_min_.min(lo_, hi_);
    located_ = true;
}

OptPos OfflineIndex::Cursor::lmocc(Pos len)
{
    index_->check_range(pos0_ + 1, len);
    if (!located_ || len > depth_) locate(len);
    if (min_start_ < pos0_) return min_start_ + 1;
    return std::nullopt;
}

} // namespace lzhb
