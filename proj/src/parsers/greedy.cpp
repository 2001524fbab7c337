#include "height_state.hpp"

#include <lzhb/kernels.hpp>
#include <lzhb/online_index.hpp>
#include <lzhb/parsers.hpp>

#include <algorithm>

namespace lzhb {
namespace {

using detail::HeightState;

// Emits a copy phrase (len >= 2) or a literal and records its heights.
void emit(std::vector<Phrase>& out, HeightState& state, std::string_view text, Pos b, Pos len, Pos src)
{
    if (len >= 2) {
        const Phrase ph = Phrase::copy(len, src);
        for (Pos i = b; i < b + len; ++i) state.push(state.height(ph.reference(b, i)) + 1);
        out.push_back(ph);
    } else {
        state.push(0);
        out.push_back(Phrase::literal(byte_at(text, b)));
    }
}

} // namespace

Encoding parse_lz77(const OfflineIndex& index)
{
    const std::string_view text = index.text();
    const Pos n = index.size();
    std::vector<Phrase> out;
    for (Pos b = 1; b <= n;) {
        const Pos len = index.lpf(b);
        if (len >= 2) {
            out.push_back(Phrase::copy(len, *index.lmocc(b, len)));
            b += len;
        } else {
            out.push_back(Phrase::literal(byte_at(text, b)));
            ++b;
        }
    }
    return Encoding{Variant::LZ77, HeightBound::unbounded(), std::move(out)};
}

Encoding parse_lzhb1(const OfflineIndex& index, HeightBound bound)
{
    const std::string_view text = index.text();
    const Pos n = index.size();
    HeightState state{n, bound};
    std::vector<Phrase> out;
    for (Pos b = 1; b <= n;) {
        const Pos lpf = index.lpf(b);
        Pos len = 0;
        Pos src = 0;
        if (lpf >= 2) {
            src = *index.lmocc(b, lpf);
            // Positions at or beyond b repeat the first period, already checked.
            const Pos scan_end = std::min<Pos>(b, src + lpf);
            const auto window = state.heights().subspan(src - 1, scan_end - src);
            const std::size_t first_bad = kernels::find_first_at_least(window, bound.value());
            len = first_bad == window.size() ? lpf : static_cast<Pos>(first_bad);
        }
        emit(out, state, text, b, len, src);
        b += len >= 2 ? len : 1;
    }
    return Encoding{Variant::LZHB1, bound, std::move(out)};
}

Encoding parse_lzhb2(const OfflineIndex& index, HeightBound bound)
{
    const std::string_view text = index.text();
    const Pos n = index.size();
    HeightState state{n, bound};
    std::vector<Phrase> out;
    for (Pos b = 1; b <= n;) {
        auto cursor = index.cursor(b);
        Pos best_len = 0;
        Pos best_src = 0;
        for (Pos len = 1; b + len - 1 <= n; ++len) {
            const OptPos src = cursor.lmocc(len);
            if (!src || !state.referenceable(*src, std::min<Pos>(b, *src + len))) break;
            best_len = len;
            best_src = *src;
        }
        emit(out, state, text, b, best_len, best_src);
        b += best_len >= 2 ? best_len : 1;
    }
    return Encoding{Variant::LZHB2, bound, std::move(out)};
}

Encoding parse_lzhb3(std::string_view text, HeightBound bound)
{
    if (text.size() > kMaxTextLength) throw UsageError("text too long");
    const Pos n = static_cast<Pos>(text.size());
    HeightState state{n, bound};
    OnlineIndex tree{n};
    std::vector<Phrase> out;
    for (Pos b = 1; b <= n;) {
        // Longest prefix of text[b..] with an unmasked occurrence inside text[1..b).
        auto cursor = tree.cursor();
        while (b + cursor.length() <= n && cursor.extend(byte_at(text, b + cursor.length()))) {}
        Pos len = cursor.length();
        Pos src = len > 0 ? *cursor.leftmost() : 0;

        if (len > 0 && b + len <= n) {
            // A longer match must overlap the phrase itself and start after the
            // last saturated position.
            const Pos window_start = std::max<Pos>(state.last_saturated() + 1, b - len);
            const OptPos k = window_leftmost_occurrence(text, b, len, window_start, b);
            if (k && byte_at(text, *k + len) == byte_at(text, b + len)) {
                src = *k;
                len += static_cast<Pos>(kernels::common_prefix(text.substr(src - 1 + len), text.substr(b - 1 + len)));
            }
        }

        const Pos phrase_len = len >= 2 ? len : 1;
        emit(out, state, text, b, len, src);
        for (Pos i = b; i < b + phrase_len; ++i) tree.append(byte_at(text, i), state.saturated(i));
        b += phrase_len;
    }
    return Encoding{Variant::LZHB3, bound, std::move(out)};
}

Encoding parse_lzhb4(std::string_view text, HeightBound bound)
{
    if (text.size() > kMaxTextLength) throw UsageError("text too long");
    const Pos n = static_cast<Pos>(text.size());
    HeightState state{n, bound};
    OnlineIndex tree{n};
    MinPeriodTracker tracker;
    std::vector<Phrase> out;
    for (Pos b = 1; b <= n;) {
        const std::uint8_t c = byte_at(text, b);
        const Pos run = static_cast<Pos>(kernels::run_length(text.substr(b - 1), static_cast<char>(c)));

        // Longest prefix whose minimum-period prefix, at every length, has a
        // height-valid occurrence. The tree is only descended when the period
        // grows.
        auto cursor = tree.cursor();
        tracker.clear();
        Pos best_len = 0;
        Pos best_period = 0;
        Pos best_src = 0;
        for (Pos len = 1; b + len - 1 <= n; ++len) {
            const auto p = static_cast<Pos>(tracker.push(byte_at(text, b + len - 1)));
            bool found = true;
            while (found && cursor.length() < p) found = cursor.extend(byte_at(text, b + cursor.length()));
            if (!found) break;
            best_len = len;
            best_period = p;
            best_src = *cursor.leftmost();
        }

        Phrase ph = Phrase::run(run, c);
        if (best_len > run) ph = Phrase::periodic(best_len, best_src, best_period);
        for (Pos i = b; i < b + ph.length; ++i) {
            state.push(ph.is_root() ? 0 : state.height(ph.reference(b, i)) + 1);
            tree.append(byte_at(text, i), state.saturated(i));
        }
        out.push_back(ph);
        b += ph.length;
    }
    return Encoding{Variant::LZHB4, bound, std::move(out)};
}

Encoding parse(const OfflineIndex& index, Variant variant, HeightBound bound)
{
    switch (variant) {
    case Variant::LZ77:
        return parse_lz77(index);
    case Variant::LZHB1:
        return parse_lzhb1(index, bound);
    case Variant::LZHB2:
        return parse_lzhb2(index, bound);
    case Variant::LZHB3:
        return parse_lzhb3(index.text(), bound);
    case Variant::LZHB4:
        return parse_lzhb4(index.text(), bound);
    }
    throw UsageError("unknown variant");
}

Encoding parse(std::string_view text, Variant variant, HeightBound bound)
{
    switch (variant) {
    case Variant::LZHB3:
        return parse_lzhb3(text, bound);
    case Variant::LZHB4:
        return parse_lzhb4(text, bound);
    default: {
        const OfflineIndex index{std::string{text}};
        return parse(index, variant, bound);
    }
    }
}

} // namespace lzhb
