#include <lzhb/kernels.hpp>

#include <arm_neon.h>

namespace lzhb::kernels {
namespace {

// Index of the first zero byte lane in a 16-lane equality mask, or 16.
inline std::size_t first_mismatch(uint8x16_t eq)
{
    const uint64x2_t lanes = vreinterpretq_u64_u8(vmvnq_u8(eq));
    const std::uint64_t lo = vgetq_lane_u64(lanes, 0);
    if (lo) return static_cast<std::size_t>(__builtin_ctzll(lo) / 8);
    const std::uint64_t hi = vgetq_lane_u64(lanes, 1);
    if (hi) return 8 + static_cast<std::size_t>(__builtin_ctzll(hi) / 8);
    return 16;
}

std::size_t common_prefix_neon(const std::uint8_t* a, const std::uint8_t* b, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const std::size_t k = first_mismatch(vceqq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
        if (k != 16) return i + k;
    }
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

std::size_t run_length_neon(const std::uint8_t* p, std::size_t n, std::uint8_t c)
{
    const uint8x16_t vc = vdupq_n_u8(c);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const std::size_t k = first_mismatch(vceqq_u8(vld1q_u8(p + i), vc));
        if (k != 16) return i + k;
    }
    while (i < n && p[i] == c) ++i;
    return i;
}

std::size_t find_first_at_least_neon(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    const uint32x4_t vx = vdupq_n_u32(x);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        if (vmaxvq_u32(vcgeq_u32(vld1q_u32(p + i), vx))) break;
    for (; i < n; ++i)
        if (p[i] >= x) return i;
    return n;
}

std::size_t find_first_below_neon(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    const uint32x4_t vx = vdupq_n_u32(x);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        if (vmaxvq_u32(vcltq_u32(vld1q_u32(p + i), vx))) break;
    for (; i < n; ++i)
        if (p[i] < x) return i;
    return n;
}

std::size_t find_last_below_neon(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    const uint32x4_t vx = vdupq_n_u32(x);
    std::size_t i = n;
    for (; i % 4 != 0; --i)
        if (p[i - 1] < x) return i - 1;
    for (; i >= 4; i -= 4) {
        if (vmaxvq_u32(vcltq_u32(vld1q_u32(p + i - 4), vx))) {
            for (std::size_t k = i; k-- > i - 4;)
                if (p[k] < x) return k;
        }
    }
    return n;
}

std::uint32_t min_value_neon(const std::uint32_t* p, std::size_t n)
{
    uint32x4_t m = vdupq_n_u32(0xFFFFFFFFu);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) m = vminq_u32(m, vld1q_u32(p + i));
    std::uint32_t r = vminvq_u32(m);
    for (; i < n; ++i)
        if (p[i] < r) r = p[i];
    return r;
}

} // namespace

const KernelTable& neon_table()
{
    static const KernelTable t{Isa::NEON,
                               "neon",
                               common_prefix_neon,
                               run_length_neon,
                               find_first_at_least_neon,
                               find_first_below_neon,
                               find_last_below_neon,
                               min_value_neon};
    return t;
}

} // namespace lzhb::kernels
