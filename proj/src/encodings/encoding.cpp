#include <lzhb/encoding.hpp>

#include <charconv>
#include <numeric>

namespace lzhb {

HeightBound HeightBound::parse(std::string_view s)
{
    if (s == "inf") return unbounded();
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || v == unbounded().value())
        throw UsageError("invalid height bound '" + std::string{s} + "' (expected a non-negative integer or inf)");
    return HeightBound{v};
}

std::string_view variant_name(Variant v)
{
    switch (v) {
    case Variant::LZ77:
        return "lz77";
    case Variant::LZHB1:
        return "lzhb1";
    case Variant::LZHB2:
        return "lzhb2";
    case Variant::LZHB3:
        return "lzhb3";
    case Variant::LZHB4:
        return "lzhb4";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name)
{
    for (Variant v : {Variant::LZ77, Variant::LZHB1, Variant::LZHB2, Variant::LZHB3, Variant::LZHB4})
        if (variant_name(v) == name) return v;
    return std::nullopt;
}

Encoding::Encoding(Variant variant, HeightBound bound, std::vector<Phrase> phrases)
    : variant_(variant), bound_(bound), phrases_(std::move(phrases))
{
    const bool modified = uses_modified_phrases(variant_);
    std::uint64_t b = 1;
    for (std::size_t j = 0; j < phrases_.size(); ++j) {
        const Phrase& ph = phrases_[j];
        if (ph.is_modified() != modified)
            throw MalformedEncoding(j, "phrase kind does not match variant " + std::string{variant_name(variant_)});
        switch (ph.kind) {
        case PhraseKind::Literal:
            if (ph.length != 1) throw MalformedEncoding(j, "literal of length != 1");
            break;
        case PhraseKind::Run:
            if (ph.length < 1) throw MalformedEncoding(j, "empty run");
            break;
        case PhraseKind::Copy:
            if (ph.length < 2) throw MalformedEncoding(j, "copy shorter than 2");
            if (ph.source < 1 || ph.source >= b) throw MalformedEncoding(j, "source not before phrase start");
            break;
        case PhraseKind::PeriodicCopy:
            if (ph.period < 2) throw MalformedEncoding(j, "period below 2");
            if (ph.length < ph.period) throw MalformedEncoding(j, "length shorter than period");
            if (ph.source < 1 || ph.source >= b) throw MalformedEncoding(j, "source not before phrase start");
            break;
        }
        b += ph.length;
        if (b - 1 > kMaxTextLength) throw MalformedEncoding(j, "total length overflow");
    }
    length_ = static_cast<Pos>(b - 1);
}

std::vector<Pos> Encoding::starts() const
{
    std::vector<Pos> out;
    out.reserve(phrases_.size());
    Pos b = 1;
    for (const Phrase& ph : phrases_) {
        out.push_back(b);
        b += ph.length;
    }
    return out;
}

double HeightProfile::mean_height() const
{
    if (heights.empty()) return 0.0;
    const double sum = std::accumulate(heights.begin(), heights.end(), 0.0);
    return sum / static_cast<double>(heights.size());
}

std::string decode(const Encoding& encoding)
{
    std::string out;
    out.reserve(encoding.length());
    for (const Phrase& ph : encoding.phrases()) {
        const Pos b = static_cast<Pos>(out.size()) + 1;
        if (ph.is_root()) {
            out.append(ph.length, static_cast<char>(ph.symbol));
            continue;
        }
        for (Pos i = b; i < b + ph.length; ++i) out.push_back(out[ph.reference(b, i) - 1]);
    }
    return out;
}

HeightProfile compute_heights(const Encoding& encoding)
{
    HeightProfile profile;
    auto& h = profile.heights;
    h.reserve(encoding.length());
    for (const Phrase& ph : encoding.phrases()) {
        const Pos b = static_cast<Pos>(h.size()) + 1;
        if (ph.is_root()) {
            h.insert(h.end(), ph.length, 0);
            continue;
        }
        for (Pos i = b; i < b + ph.length; ++i) {
            const std::uint32_t v = h[ph.reference(b, i) - 1] + 1;
            h.push_back(v);
            if (v > profile.max_height) profile.max_height = v;
        }
    }
    return profile;
}

} // namespace lzhb
