#include <lzhb/kernels.hpp>

#include <limits>

namespace lzhb::kernels {
namespace {

std::size_t common_prefix_scalar(const std::uint8_t* a, const std::uint8_t* b, std::size_t n)
{
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

std::size_t run_length_scalar(const std::uint8_t* p, std::size_t n, std::uint8_t c)
{
    std::size_t i = 0;
    while (i < n && p[i] == c) ++i;
    return i;
}

std::size_t find_first_at_least_scalar(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] >= x) return i;
    return n;
}

std::size_t find_first_below_scalar(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] < x) return i;
    return n;
}

std::size_t find_last_below_scalar(const std::uint32_t* p, std::size_t n, std::uint32_t x)
{
    for (std::size_t i = n; i-- > 0;)
        if (p[i] < x) return i;
    return n;
}

std::uint32_t min_value_scalar(const std::uint32_t* p, std::size_t n)
{
    std::uint32_t m = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] < m) m = p[i];
    return m;
}

} // namespace

const KernelTable& scalar_table()
{
    static const KernelTable t{Isa::Scalar,
                               "scalar",
                               common_prefix_scalar,
                               run_length_scalar,
                               find_first_at_least_scalar,
                               find_first_below_scalar,
                               find_last_below_scalar,
                               min_value_scalar};
    return t;
}

} // namespace lzhb::kernels
