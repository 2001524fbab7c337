#pragma once

// Data-parallel inner loops shared by the index and parser code.
//
// Every kernel has a scalar reference implementation; vectorized variants are
// compiled per instruction set and selected once at startup. All variants of
// a kernel must return identical results for identical inputs.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace lzhb::kernels {

enum class Isa { Scalar, SSE2, AVX2, NEON };

struct KernelTable {
    Isa isa;
    const char* name;
    // Length of the longest common prefix of a[0..n) and b[0..n).
    std::size_t (*common_prefix)(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);
    // Number of leading bytes of p[0..n) equal to c.
    std::size_t (*run_length)(const std::uint8_t* p, std::size_t n, std::uint8_t c);
    // First index k with p[k] >= x, or n.
    std::size_t (*find_first_at_least)(const std::uint32_t* p, std::size_t n, std::uint32_t x);
    // First index k with p[k] < x, or n.
    std::size_t (*find_first_below)(const std::uint32_t* p, std::size_t n, std::uint32_t x);
    // Last index k with p[k] < x, or n.
    std::size_t (*find_last_below)(const std::uint32_t* p, std::size_t n, std::uint32_t x);
    // Minimum of p[0..n); UINT32_MAX when n == 0.
    std::uint32_t (*min_value)(const std::uint32_t* p, std::size_t n);
};

const KernelTable& scalar_table();
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
const KernelTable& sse2_table();
const KernelTable& avx2_table();
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
const KernelTable& neon_table();
#endif

bool supported(Isa isa);
// Table for an ISA the running CPU supports; falls back to scalar otherwise.
const KernelTable& table(Isa isa);
// Widest supported table, or the one named by LZHB_KERNELS=scalar|sse2|avx2|neon.
const KernelTable& active();

inline std::size_t common_prefix(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b)
{
    return active().common_prefix(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline std::size_t common_prefix(std::string_view a, std::string_view b)
{
    return active().common_prefix(reinterpret_cast<const std::uint8_t*>(a.data()),
                                  reinterpret_cast<const std::uint8_t*>(b.data()),
                                  a.size() < b.size() ? a.size() : b.size());
}

inline std::size_t run_length(std::string_view s, char c)
{
    return active().run_length(reinterpret_cast<const std::uint8_t*>(s.data()), s.size(),
                               static_cast<std::uint8_t>(c));
}

inline std::size_t find_first_at_least(std::span<const std::uint32_t> v, std::uint32_t x)
{
    return active().find_first_at_least(v.data(), v.size(), x);
}

inline std::size_t find_first_below(std::span<const std::uint32_t> v, std::uint32_t x)
{
    return active().find_first_below(v.data(), v.size(), x);
}

inline std::size_t find_last_below(std::span<const std::uint32_t> v, std::uint32_t x)
{
    return active().find_last_below(v.data(), v.size(), x);
}

inline std::uint32_t min_value(std::span<const std::uint32_t> v)
{
    return active().min_value(v.data(), v.size());
}

} // namespace lzhb::kernels
