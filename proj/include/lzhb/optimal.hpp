#pragma once

#include <lzhb/encoding.hpp>

#include <string_view>

namespace lzhb {

inline constexpr std::size_t kOptimalMaxLength = 16;

/// Smallest encoding of text whose height is within bound, by exhaustive
/// branch-and-bound over phrase boundaries, sources and (for modified
/// encodings) periods.
///
/// Ties are broken by preferring longer phrases earlier, then smaller sources.
/// Standard results are tagged Variant::LZ77, modified ones Variant::LZHB4.
/// Throws UsageError when text is longer than kOptimalMaxLength.
Encoding optimal_bruteforce(std::string_view text, HeightBound bound, bool modified);

} // namespace lzhb
