#pragma once

#include <lzhb/types.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lzhb {

enum class Variant { LZ77, LZHB1, LZHB2, LZHB3, LZHB4 };

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
// LZHB4 produces run / periodic-copy phrases; the others literal / copy phrases.
constexpr bool uses_modified_phrases(Variant v) { return v == Variant::LZHB4; }

enum class PhraseKind : std::uint8_t { Literal, Copy, Run, PeriodicCopy };

/// One parsed unit. Positions are 1-based; a phrase's own start is implied by
/// the lengths of the phrases before it.
struct Phrase {
    PhraseKind kind = PhraseKind::Literal;
    std::uint8_t symbol = 0; // Literal, Run
    Pos length = 1;
    Pos source = 0; // Copy, PeriodicCopy
    Pos period = 0; // PeriodicCopy

    static constexpr Phrase literal(std::uint8_t c) { return {PhraseKind::Literal, c, 1, 0, 0}; }
    static constexpr Phrase copy(Pos len, Pos src) { return {PhraseKind::Copy, 0, len, src, 0}; }
    static constexpr Phrase run(Pos len, std::uint8_t c) { return {PhraseKind::Run, c, len, 0, 0}; }
    static constexpr Phrase periodic(Pos len, Pos src, Pos p) { return {PhraseKind::PeriodicCopy, 0, len, src, p}; }

    constexpr bool is_root() const { return kind == PhraseKind::Literal || kind == PhraseKind::Run; }
    constexpr bool is_modified() const { return kind == PhraseKind::Run || kind == PhraseKind::PeriodicCopy; }

    // Position referenced by position i of this phrase, which starts at b.
    constexpr Pos reference(Pos b, Pos i) const
    {
        const Pos cycle = kind == PhraseKind::Copy ? b - source : period;
        return source + (i - b) % cycle;
    }

    constexpr bool operator==(const Phrase&) const = default;
};

class MalformedEncoding : public std::runtime_error {
public:
    MalformedEncoding(std::size_t phrase_index, const std::string& what)
        : std::runtime_error("phrase " + std::to_string(phrase_index) + ": " + what), phrase_index_(phrase_index)
    {
    }
    std::size_t phrase_index() const { return phrase_index_; }

private:
    std::size_t phrase_index_;
};

/// Ordered phrase list with its variant tag and the height bound it was
/// produced under. Structurally validated on construction and immutable after.
class Encoding {
public:
    Encoding(Variant variant, HeightBound bound, std::vector<Phrase> phrases);

    Variant variant() const { return variant_; }
    HeightBound bound() const { return bound_; }
    const std::vector<Phrase>& phrases() const { return phrases_; }
    std::size_t size() const { return phrases_.size(); }
    Pos length() const { return length_; }
    // 1-based start of every phrase.
    std::vector<Pos> starts() const;

    bool operator==(const Encoding&) const = default;

private:
    Variant variant_;
    HeightBound bound_;
    std::vector<Phrase> phrases_;
    Pos length_ = 0;
};

struct HeightProfile {
    std::vector<std::uint32_t> heights; // heights[i-1] is the height of position i
    std::uint32_t max_height = 0;
    double mean_height() const;
};

std::string decode(const Encoding& encoding);
HeightProfile compute_heights(const Encoding& encoding);

} // namespace lzhb
