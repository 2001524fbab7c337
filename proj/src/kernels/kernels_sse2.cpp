#include <lzhb/kernels.hpp>

#include <emmintrin.h>

#include <limits>

namespace lzhb::kernels {
namespace {

constexpr std::uint32_t kSignFlip = 0x80000000u;

inline __m128i load4(const std::uint32_t* p)
{
    return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
}

// Lane mask (bit per u32 lane) of v < x, unsigned.
inline unsigned below_mask(__m128i v, __m128i flipped_x)
{
    const __m128i flipped_v = _mm_xor_si128(v, _mm_set1_epi32(static_cast<int>(kSignFlip)));
    return static_cast<unsigned>(_mm_movemask_ps(_mm_castsi128_ps(_mm_cmpgt_epi32(flipped_x, flipped_v))));
}

std::size_t common_prefix_sse2(const std::uint8_t* a, const std::uint8_t* b, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m128i va = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i));
        const __m128i vb = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i));
        const unsigned eq = static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(va, vb)));
        if (eq != 0xFFFFu) return i + static_cast<std::size_t>(__builtin_ctz(~eq));
    }
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

std::size_t run_length_sse2(const std::uint8_t* p, std::size_t n, std::uint8_t c)
{
    const __m128i vc = _mm_set1_epi8(static_cast<char>(c));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p + i));
        const unsigned eq = static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(v, vc)));
        if (eq != 0xFFFFu) return i + static_cast<std::size_t>(__builtin_ctz(~eq));
    }
    while (i < n && p[i] == c) ++i;
    return i;
}

std::size_t find_first_at_least_sse2(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    const __m128i fx = _mm_set1_epi32(static_cast<int>(x ^ kSignFlip));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const unsigned not_below = ~below_mask(load4(p + i), fx) & 0xFu;
        if (not_below) return i + static_cast<std::size_t>(__builtin_ctz(not_below));
    }
    for (; i < n; ++i)
        if (p[i] >= x) return i;
    return n;
}

std::size_t find_first_below_sse2(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    const __m128i fx = _mm_set1_epi32(static_cast<int>(x ^ kSignFlip));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const unsigned below = below_mask(load4(p + i), fx);
        if (below) return i + static_cast<std::size_t>(__builtin_ctz(below));
    }
    for (; i < n; ++i)
        if (p[i] < x) return i;
    return n;
}

std::size_t find_last_below_sse2(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    const __m128i fx = _mm_set1_epi32(static_cast<int>(x ^ kSignFlip));
    std::size_t i = n;
    for (; i % 4 != 0; --i)
        if (p[i - 1] < x) return i - 1;
    for (; i >= 4; i -= 4) {
        const unsigned below = below_mask(load4(p + i - 4), fx);
        if (below) return i - 4 + static_cast<std::size_t>(31 - __builtin_clz(below));
    }
    return n;
}

std::uint32_t min_value_sse2(const std::uint32_t* p, std::size_t n)
{
    const __m128i flip = _mm_set1_epi32(static_cast<int>(kSignFlip));
    __m128i m = _mm_set1_epi32(-1);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m128i v = load4(p + i);
        const __m128i less = _mm_cmpgt_epi32(_mm_xor_si128(m, flip), _mm_xor_si128(v, flip));
        m = _mm_or_si128(_mm_and_si128(less, v), _mm_andnot_si128(less, m));
    }
    alignas(16) std::uint32_t lanes[4];
    _mm_store_si128(reinterpret_cast<__m128i*>(lanes), m);
    std::uint32_t r = lanes[0];
    for (int k = 1; k < 4; ++k)
        if (lanes[k] < r) r = lanes[k];
    for (; i < n; ++i)
        if (p[i] < r) r = p[i];
    return r;
}

} // namespace

const KernelTable& sse2_table()
{
    static const KernelTable t{Isa::SSE2,
                               "sse2",
                               common_prefix_sse2,
                               run_length_sse2,
                               find_first_at_least_sse2,
                               find_first_below_sse2,
                               find_last_below_sse2,
                               min_value_sse2};
    return t;
}

} // namespace lzhb::kernels
