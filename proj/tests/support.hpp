#pragma once

// Test-only helpers: random texts and slow reference parsers written straight
// from the variant definitions, independent of the indexes used by the library.

#include <lzhb/encoding.hpp>
#include <lzhb/generators.hpp>
#include <lzhb/naive.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace lzhb::testing {

inline const std::vector<Variant>& all_variants()
{
    static const std::vector<Variant> v{Variant::LZ77, Variant::LZHB1, Variant::LZHB2, Variant::LZHB3, Variant::LZHB4};
    return v;
}

inline std::string random_text(std::mt19937_64& rng, std::size_t max_len, std::size_t sigma)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    return gen_random_text(len(rng), sigma, rng);
}

// Random text that tends to repeat itself: pastes earlier substrings.
inline std::string repetitive_text(std::mt19937_64& rng, std::size_t n, std::size_t sigma)
{
    std::string s = gen_random_text(std::min<std::size_t>(n, 3), sigma, rng);
    while (s.size() < n) {
        std::uniform_int_distribution<std::size_t> coin(0, 3);
        if (coin(rng) == 0 || s.empty()) {
            s += gen_random_text(1, sigma, rng);
            continue;
        }
        std::uniform_int_distribution<std::size_t> from(0, s.size() - 1);
        const std::size_t a = from(rng);
        std::uniform_int_distribution<std::size_t> len(1, std::min<std::size_t>(s.size() - a, 40));
        s += s.substr(a, len(rng));
    }
    s.resize(n);
    return s;
}

inline std::string all_binary_string(std::size_t n, std::uint64_t bits)
{
    std::string s(n, 'a');
    for (std::size_t k = 0; k < n; ++k)
        if (bits >> k & 1) s[k] = 'b';
    return s;
}

namespace reference {

// Heights kept alongside the phrases being produced.
struct Builder {
    std::string_view text;
    HeightBound bound;
    std::vector<Phrase> phrases;
    std::vector<std::uint32_t> H; // H[i-1] for position i

    Pos next() const { return static_cast<Pos>(H.size()) + 1; }

    bool valid_range(Pos lo, Pos hi) const // every H in [lo, hi) < bound
    {
        for (Pos x = lo; x < hi; ++x)
            if (!bound.referenceable(H[x - 1])) return false;
        return true;
    }

    void add(const Phrase& ph)
    {
        const Pos b = next();
        phrases.push_back(ph);
        for (Pos i = b; i < b + ph.length; ++i) H.push_back(ph.is_root() ? 0 : H[ph.reference(b, i) - 1] + 1);
    }

    void add_copy_or_literal(Pos len, Pos src)
    {
        if (len >= 2)
            add(Phrase::copy(len, src));
        else
            add(Phrase::literal(byte_at(text, next())));
    }
};

inline bool occurs_at(std::string_view t, Pos j, Pos b, Pos len)
{
    return t.compare(j - 1, len, t.substr(b - 1, len)) == 0;
}

inline Encoding lzhb1(std::string_view t, HeightBound h)
{
    Builder B{t, h, {}, {}};
    const Pos n = static_cast<Pos>(t.size());
    while (B.next() <= n) {
        const Pos b = B.next();
        const Pos l = naive::lpf(t, b);
        Pos len = 0, src = 0;
        if (l >= 1) {
            src = *naive::lmocc(t, b, l);
            while (len < l && (src + len >= b || B.bound.referenceable(B.H[src + len - 1]))) ++len;
        }
        B.add_copy_or_literal(len, src);
    }
    return Encoding(Variant::LZHB1, h, std::move(B.phrases));
}

inline Encoding lzhb2(std::string_view t, HeightBound h)
{
    Builder B{t, h, {}, {}};
    const Pos n = static_cast<Pos>(t.size());
    while (B.next() <= n) {
        const Pos b = B.next();
        Pos len = 0, src = 0;
        for (Pos l = 1; b + l - 1 <= n; ++l) {
            const OptPos s = naive::lmocc(t, b, l);
            if (!s || !B.valid_range(*s, std::min(b, *s + l))) break;
            len = l;
            src = *s;
        }
        B.add_copy_or_literal(len, src);
    }
    return Encoding(Variant::LZHB2, h, std::move(B.phrases));
}

inline Encoding lzhb3(std::string_view t, HeightBound h)
{
    Builder B{t, h, {}, {}};
    const Pos n = static_cast<Pos>(t.size());
    while (B.next() <= n) {
        const Pos b = B.next();
        Pos len = 0, src = 0;
        for (Pos l = 1; b + l - 1 <= n; ++l) {
            OptPos found;
            for (Pos j = 1; j < b && !found; ++j)
                if (occurs_at(t, j, b, l) && B.valid_range(j, std::min(b, j + l))) found = j;
            if (!found) break;
            len = l;
            src = *found;
        }
        B.add_copy_or_literal(len, src);
    }
    return Encoding(Variant::LZHB3, h, std::move(B.phrases));
}

inline Encoding lzhb4(std::string_view t, HeightBound h)
{
    Builder B{t, h, {}, {}};
    const Pos n = static_cast<Pos>(t.size());
    auto valid_prefix_source = [&](Pos b, Pos p) -> OptPos {
        for (Pos j = 1; j + p <= b; ++j)
            if (occurs_at(t, j, b, p) && B.valid_range(j, j + p)) return j;
        return std::nullopt;
    };
    while (B.next() <= n) {
        const Pos b = B.next();
        const std::string_view rest = t.substr(b - 1);
        Pos run = 1;
        while (run < rest.size() && rest[run] == rest[0]) ++run;
        Pos periodic = 0;
        for (Pos l = 1; l <= rest.size(); ++l) {
            if (!valid_prefix_source(b, static_cast<Pos>(naive::min_period(rest.substr(0, l))))) break;
            periodic = l;
        }
        const Pos len = std::max(run, periodic);
        const Pos p = static_cast<Pos>(naive::min_period(rest.substr(0, len)));
        if (p == 1)
            B.add(Phrase::run(len, static_cast<std::uint8_t>(rest[0])));
        else
            B.add(Phrase::periodic(len, *valid_prefix_source(b, p), p));
    }
    return Encoding(Variant::LZHB4, h, std::move(B.phrases));
}

inline Encoding lz77(std::string_view t)
{
    Builder B{t, HeightBound::unbounded(), {}, {}};
    const Pos n = static_cast<Pos>(t.size());
    while (B.next() <= n) {
        const Pos b = B.next();
        const Pos l = naive::lpf(t, b);
        B.add_copy_or_literal(l, l >= 1 ? *naive::lmocc(t, b, l) : 0);
    }
    return Encoding(Variant::LZ77, HeightBound::unbounded(), std::move(B.phrases));
}

inline Encoding parse(std::string_view t, Variant v, HeightBound h)
{
    switch (v) {
    case Variant::LZ77:
        return lz77(t);
    case Variant::LZHB1:
        return lzhb1(t, h);
    case Variant::LZHB2:
        return lzhb2(t, h);
    case Variant::LZHB3:
        return lzhb3(t, h);
    case Variant::LZHB4:
        return lzhb4(t, h);
    }
    throw std::logic_error("variant");
}

} // namespace reference
} // namespace lzhb::testing
