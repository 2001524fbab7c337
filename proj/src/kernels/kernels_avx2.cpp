#include <lzhb/kernels.hpp>

#include <immintrin.h>

namespace lzhb::kernels {
namespace {

constexpr std::uint32_t kSignFlip = 0x80000000u;

inline __m256i load8(const std::uint32_t* p)
{
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline unsigned below_mask(__m256i v, __m256i flipped_x)
{
    const __m256i flipped_v = _mm256_xor_si256(v, _mm256_set1_epi32(static_cast<int>(kSignFlip)));
    return static_cast<unsigned>(
        _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(flipped_x, flipped_v))));
}

std::size_t common_prefix_avx2(const std::uint8_t* a, const std::uint8_t* b, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const unsigned eq = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
        if (eq != 0xFFFFFFFFu) return i + static_cast<std::size_t>(__builtin_ctz(~eq));
    }
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

std::size_t run_length_avx2(const std::uint8_t* p, std::size_t n, std::uint8_t c)
{
    const __m256i vc = _mm256_set1_epi8(static_cast<char>(c));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
        const unsigned eq = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, vc)));
        if (eq != 0xFFFFFFFFu) return i + static_cast<std::size_t>(__builtin_ctz(~eq));
    }
    while (i < n && p[i] == c) ++i;
    return i;
}

std::size_t find_first_at_least_avx2(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    const __m256i fx = _mm256_set1_epi32(static_cast<int>(x ^ kSignFlip));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const unsigned not_below = ~below_mask(load8(p + i), fx) & 0xFFu;
        if (not_below) return i + static_cast<std::size_t>(__builtin_ctz(not_below));
    }
    for (; i < n; ++i)
        if (p[i] >= x) return i;
    return n;
}

std::size_t find_first_below_avx2(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    const __m256i fx = _mm256_set1_epi32(static_cast<int>(x ^ kSignFlip));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const unsigned below = below_mask(load8(p + i), fx);
        if (below) return i + static_cast<std::size_t>(__builtin_ctz(below));
    }
    for (; i < n; ++i)
        if (p[i] < x) return i;
    return n;
}

std::size_t find_last_below_avx2(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    const __m256i fx = _mm256_set1_epi32(static_cast<int>(x ^ kSignFlip));
    std::size_t i = n;
    for (; i % 8 != 0; --i)
        if (p[i - 1] < x) return i - 1;
    for (; i >= 8; i -= 8) {
        const unsigned below = below_mask(load8(p + i - 8), fx);
        if (below) return i - 8 + static_cast<std::size_t>(31 - __builtin_clz(below));
    }
    return n;
}

std::uint32_t min_value_avx2(const std::uint32_t* p, std::size_t n)
{
    __m256i m = _mm256_set1_epi32(-1);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) m = _mm256_min_epu32(m, load8(p + i));
    __m128i h = _mm_min_epu32(_mm256_castsi256_si128(m), _mm256_extracti128_si256(m, 1));
    h = _mm_min_epu32(h, _mm_shuffle_epi32(h, _MM_SHUFFLE(1, 0, 3, 2)));
    h = _mm_min_epu32(h, _mm_shuffle_epi32(h, _MM_SHUFFLE(2, 3, 0, 1)));
    std::uint32_t r = static_cast<std::uint32_t>(_mm_cvtsi128_si32(h));
    for (; i < n; ++i)
        if (p[i] < r) r = p[i];
    return r;
}

} // namespace

const KernelTable& avx2_table()
{
    static const KernelTable t{Isa::AVX2,
                               "avx2",
                               common_prefix_avx2,
                               run_length_avx2,
                               find_first_at_least_avx2,
                               find_first_below_avx2,
                               find_last_below_avx2,
                               min_value_avx2};
    return t;
}

} // namespace lzhb::kernels
