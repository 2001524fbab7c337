#include <lzhb/kernels.hpp>

#include <cstdlib>
#include <string_view>

namespace lzhb::kernels {

bool supported(Isa isa)
{
    switch (isa) {
    case Isa::Scalar:
        return true;
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
    case Isa::SSE2:
        return __builtin_cpu_supports("sse2");
    case Isa::AVX2:
        return __builtin_cpu_supports("avx2");
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
    case Isa::NEON:
        return true;
#endif
    default:
        return false;
    }
}

const KernelTable& table(Isa isa)
{
    if (!supported(isa)) return scalar_table();
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
    case Isa::SSE2:
        return sse2_table();
    case Isa::AVX2:
        return avx2_table();
#endif
#if defined(__aarch64__) || defined(__ARM_NEON)
    case Isa::NEON:
        return neon_table();
#endif
    default:
        return scalar_table();
    }
}

namespace {

const KernelTable& select()
{
    if (const char* forced = std::getenv("LZHB_KERNELS")) {
        const std::string_view name{forced};
        if (name == "scalar") return scalar_table();
        if (name == "sse2") return table(Isa::SSE2);
        if (name == "avx2") return table(Isa::AVX2);
        if (name == "neon") return table(Isa::NEON);
    }
    for (Isa isa : {Isa::AVX2, Isa::NEON, Isa::SSE2})
        if (supported(isa)) return table(isa);
    return scalar_table();
}

} // namespace

const KernelTable& active()
{
    static const KernelTable& t = select();
    return t;
}

} // namespace lzhb::kernels
