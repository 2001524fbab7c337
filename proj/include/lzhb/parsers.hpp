#pragma once

#include <lzhb/encoding.hpp>
#include <lzhb/offline_index.hpp>

#include <string_view>

namespace lzhb {

// Greedy LZ77 with self-references and leftmost sources.
Encoding parse_lz77(const OfflineIndex& index);

// Source fixed to the leftmost occurrence of the longest previous factor; the
// phrase is cut at the first source position whose height reaches the bound.
Encoding parse_lzhb1(const OfflineIndex& index, HeightBound bound);

// Grows the phrase while the leftmost occurrence of the current prefix only
// references positions below the bound.
Encoding parse_lzhb2(const OfflineIndex& index, HeightBound bound);

// Longest prefix with any height-valid previous occurrence (self-references
// included), taking its leftmost such occurrence. Online, O(n log sigma).
Encoding parse_lzhb3(std::string_view text, HeightBound bound);

// Modified encoding: maximal runs, or the longest prefix whose every
// minimum-period prefix has a height-valid previous occurrence.
Encoding parse_lzhb4(std::string_view text, HeightBound bound);

Encoding parse(std::string_view text, Variant variant, HeightBound bound);
// Reuses a prebuilt index for the variants that need one.
Encoding parse(const OfflineIndex& index, Variant variant, HeightBound bound);

} // namespace lzhb
