#include <lzhb/naive.hpp>
#include <lzhb/optimal.hpp>

#include <algorithm>
#include <array>

namespace lzhb {
namespace {

constexpr std::size_t N = kOptimalMaxLength;

class OptimalSearch {
public:
    OptimalSearch(std::string_view text, HeightBound bound, bool modified)
        : text_(text), n_(text.size()), bound_(bound), modified_(modified)
    {
        for (std::size_t s = 0; s < n_; ++s)
            for (std::size_t b = 0; b < n_; ++b) {
                std::size_t k = 0;
                while (b + k < n_ && text_[s + k] == text_[b + k]) ++k;
                lce_[s][b] = k;
            }
        for (std::size_t b = 0; b < n_; ++b)
            for (std::size_t len = 1; b + len <= n_; ++len) period_[b][len] = naive::min_period(text_.substr(b, len));

        // Optimal size of every suffix cover with heights ignored: a valid
        // lower bound for the height-constrained search.
        lower_[n_] = 0;
        for (std::size_t b = n_; b-- > 0;) {
            std::size_t best = n_ + 1;
            for (std::size_t len = 1; b + len <= n_; ++len)
                if (admissible_ignoring_heights(b, len)) best = std::min(best, 1 + lower_[b + len]);
            lower_[b] = best;
        }
        best_size_ = n_ + 1;
    }

    std::vector<Phrase> run()
    {
        dfs(0);
        return best_;
    }

private:
    bool has_earlier_occurrence(std::size_t b, std::size_t len) const
    {
        for (std::size_t s = 0; s < b; ++s)
            if (lce_[s][b] >= len) return true;
        return false;
    }

    bool admissible_ignoring_heights(std::size_t b, std::size_t len) const
    {
        if (modified_) {
            const std::size_t p = period_[b][len];
            return p == 1 || has_earlier_occurrence(b, p);
        }
        return len == 1 || has_earlier_occurrence(b, len);
    }

    // Heights of a referencing phrase at b; false if any exceeds the bound.
    bool phrase_heights(const Phrase& ph, std::size_t b, std::array<std::uint32_t, N>& out)
    {
        const Pos b1 = static_cast<Pos>(b + 1);
        for (std::size_t x = 0; x < ph.length; ++x) {
            const std::uint32_t h = heights_[ph.reference(b1, b1 + static_cast<Pos>(x)) - 1] + 1;
            if (!bound_.admits(h)) return false;
            out[x] = h;
            heights_[b + x] = h; // later positions of a self-referencing phrase read earlier ones
        }
        return true;
    }

    void descend(const Phrase& ph, std::size_t b)
    {
        current_.push_back(ph);
        dfs(b + ph.length);
        current_.pop_back();
    }

    // Candidates of one length, dropping any whose heights are pointwise no
    // better than an earlier candidate's.
    void try_sources(std::size_t b, std::size_t len, std::size_t need, bool periodic, std::size_t p)
    {
        std::vector<std::pair<Phrase, std::array<std::uint32_t, N>>> kept;
        for (std::size_t s = 0; s < b; ++s) {
            if (lce_[s][b] < need) continue;
            const Phrase ph = periodic ? Phrase::periodic(static_cast<Pos>(len), static_cast<Pos>(s + 1), static_cast<Pos>(p))
                                       : Phrase::copy(static_cast<Pos>(len), static_cast<Pos>(s + 1));
            std::array<std::uint32_t, N> h{};
            if (!phrase_heights(ph, b, h)) continue;
            bool dominated = false;
            for (auto& [other, oh] : kept) {
                dominated = std::equal(oh.begin(), oh.begin() + static_cast<std::ptrdiff_t>(len), h.begin(),
                                       [](std::uint32_t a, std::uint32_t c) { return a <= c; });
                if (dominated) break;
            }
            if (dominated) continue;
            std::erase_if(kept, [&](const auto& e) {
                return std::equal(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(len), e.second.begin(),
                                  [](std::uint32_t a, std::uint32_t c) { return a <= c; });
            });
            kept.emplace_back(ph, h);
        }
        std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& c) { return a.first.source < c.first.source; });
        for (const auto& [ph, h] : kept) {
            std::copy(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(len), heights_.begin() + static_cast<std::ptrdiff_t>(b));
            descend(ph, b);
            if (current_.size() + 1 + lower_[b + len] >= best_size_) return;
        }
    }

    void dfs(std::size_t b)
    {
        if (b == n_) {
            if (current_.size() < best_size_) {
                best_size_ = current_.size();
                best_ = current_;
            }
            return;
        }
        if (current_.size() + lower_[b] >= best_size_) return;

        for (std::size_t len = n_ - b; len >= 1; --len) {
            if (current_.size() + 1 + lower_[b + len] >= best_size_) continue;
            const auto c = static_cast<std::uint8_t>(text_[b]);
            if (modified_) {
                const std::size_t p = period_[b][len];
                if (p == 1) {
                    std::fill_n(heights_.begin() + static_cast<std::ptrdiff_t>(b), len, 0);
                    descend(Phrase::run(static_cast<Pos>(len), c), b);
                } else {
                    try_sources(b, len, p, true, p);
                }
            } else if (len == 1) {
                heights_[b] = 0;
                descend(Phrase::literal(c), b);
            } else {
                try_sources(b, len, len, false, 0);
            }
        }
    }

    std::string_view text_;
    std::size_t n_;
    HeightBound bound_;
    bool modified_;
    std::array<std::array<std::size_t, N>, N> lce_{};
    std::array<std::array<std::size_t, N + 1>, N> period_{};
    std::array<std::size_t, N + 1> lower_{};
    std::array<std::uint32_t, N> heights_{};
    std::vector<Phrase> current_;
    std::vector<Phrase> best_;
    std::size_t best_size_ = 0;
};

} // namespace

Encoding optimal_bruteforce(std::string_view text, HeightBound bound, bool modified)
{
    if (text.size() > kOptimalMaxLength)
        throw UsageError("optimal_bruteforce: text length " + std::to_string(text.size()) + " exceeds budget of " +
                         std::to_string(kOptimalMaxLength));
    std::vector<Phrase> phrases;
    if (!text.empty()) phrases = OptimalSearch{text, bound, modified}.run();
    return Encoding{modified ? Variant::LZHB4 : Variant::LZ77, bound, std::move(phrases)};
}

} // namespace lzhb
