#include <lzhb/suffix_array.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lzhb {
namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

// Induced sorting over s[0..n) where s[n-1] == 0 is the unique smallest symbol
// and every symbol is < alphabet.
class InducedSorter {
public:
    InducedSorter(const std::uint32_t* s, std::uint32_t* sa, std::size_t n, std::size_t alphabet)
        : s_(s), sa_(sa), n_(n), alphabet_(alphabet), stype_(n), bucket_(alphabet)
    {
    }

    void run()
    {
        if (n_ == 1) {
            sa_[0] = 0;
            return;
        }
        classify();

        std::fill(sa_, sa_ + n_, kEmpty);
        bucket_ends();
        for (std::size_t i = 1; i < n_; ++i)
            if (is_lms(i)) sa_[--bucket_[s_[i]]] = static_cast<std::uint32_t>(i);
        induce();

        // Sorted LMS substrings to the front, then name them.
        std::size_t lms_count = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (is_lms(sa_[i])) sa_[lms_count++] = sa_[i];
        std::fill(sa_ + lms_count, sa_ + n_, kEmpty);

        std::uint32_t names = 0;
        std::size_t prev = kEmpty;
        for (std::size_t r = 0; r < lms_count; ++r) {
            const std::size_t pos = sa_[r];
            bool differs = prev == kEmpty;
            for (std::size_t d = 0; !differs; ++d) {
                if (s_[pos + d] != s_[prev + d] || stype_[pos + d] != stype_[prev + d]) {
                    differs = true;
                } else if (d > 0 && (is_lms(pos + d) || is_lms(prev + d))) {
                    break;
                }
            }
            if (differs) {
                ++names;
                prev = pos;
            }
            sa_[lms_count + pos / 2] = names - 1;
        }
        std::size_t j = n_;
        for (std::size_t i = n_; i-- > lms_count;)
            if (sa_[i] != kEmpty) sa_[--j] = sa_[i];

        std::uint32_t* reduced = sa_ + n_ - lms_count;
        if (names < lms_count) {
            InducedSorter{reduced, sa_, lms_count, names}.run();
        } else {
            for (std::size_t i = 0; i < lms_count; ++i) sa_[reduced[i]] = static_cast<std::uint32_t>(i);
        }

        j = 0;
        for (std::size_t i = 1; i < n_; ++i)
            if (is_lms(i)) reduced[j++] = static_cast<std::uint32_t>(i);
        for (std::size_t i = 0; i < lms_count; ++i) sa_[i] = reduced[sa_[i]];
        std::fill(sa_ + lms_count, sa_ + n_, kEmpty);

        bucket_ends();
        for (std::size_t i = lms_count; i-- > 0;) {
            const std::uint32_t p = sa_[i];
            sa_[i] = kEmpty;
            sa_[--bucket_[s_[p]]] = p;
        }
        induce();
    }

private:
    void classify()
    {
        stype_[n_ - 1] = true;
        for (std::size_t i = n_ - 1; i-- > 0;)
            stype_[i] = s_[i] < s_[i + 1] || (s_[i] == s_[i + 1] && stype_[i + 1]);
    }

    bool is_lms(std::size_t i) const { return i != kEmpty && i > 0 && i < n_ && stype_[i] && !stype_[i - 1]; }

    void count()
    {
        std::fill(bucket_.begin(), bucket_.end(), 0);
        for (std::size_t i = 0; i < n_; ++i) ++bucket_[s_[i]];
    }

    void bucket_starts()
    {
        count();
        std::uint32_t sum = 0;
        for (auto& b : bucket_) {
            const std::uint32_t c = b;
            b = sum;
            sum += c;
        }
    }

    void bucket_ends()
    {
        count();
        std::uint32_t sum = 0;
        for (auto& b : bucket_) {
            sum += b;
            b = sum;
        }
    }

    void induce()
    {
        bucket_starts();
        for (std::size_t i = 0; i < n_; ++i) {
            const std::uint32_t p = sa_[i];
            if (p != kEmpty && p > 0 && !stype_[p - 1]) sa_[bucket_[s_[p - 1]]++] = p - 1;
        }
        bucket_ends();
        for (std::size_t i = n_; i-- > 0;) {
            const std::uint32_t p = sa_[i];
            if (p != kEmpty && p > 0 && stype_[p - 1]) sa_[--bucket_[s_[p - 1]]] = p - 1;
        }
    }

    const std::uint32_t* s_;
    std::uint32_t* sa_;
    std::size_t n_;
    std::size_t alphabet_;
    std::vector<bool> stype_;
    std::vector<std::uint32_t> bucket_;
};

} // namespace

std::vector<std::uint32_t> build_suffix_array(std::string_view text)
{
    const std::size_t n = text.size();
    if (n >= std::numeric_limits<std::uint32_t>::max() - 1) throw std::length_error("text too long for 32-bit suffix array");
    std::vector<std::uint32_t> s(n + 1);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::uint32_t>(static_cast<unsigned char>(text[i])) + 1;
    s[n] = 0;
    std::vector<std::uint32_t> sa(n + 1);
    InducedSorter{s.data(), sa.data(), n + 1, 257}.run();
    sa.erase(sa.begin()); // drop the sentinel suffix
    return sa;
}

std::vector<std::uint32_t> build_lcp_array(std::string_view text, const std::vector<std::uint32_t>& sa)
{
    const std::size_t n = sa.size();
    std::vector<std::uint32_t> lcp(n + 1, 0);
    if (n == 0) return lcp;
    // phi[sa[r]] = sa[r-1]; plcp computed in text order then permuted.
    std::vector<std::uint32_t> phi(n);
    phi[sa[0]] = kEmpty;
    for (std::size_t r = 1; r < n; ++r) phi[sa[r]] = sa[r - 1];
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (phi[i] == kEmpty) {
            h = 0;
            phi[i] = 0;
            continue;
        }
        const std::size_t j = phi[i];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        phi[i] = static_cast<std::uint32_t>(h);
        if (h > 0) --h;
    }
    for (std::size_t r = 1; r < n; ++r) lcp[r] = phi[sa[r]];
    return lcp;
}

} // namespace lzhb
