#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace lzhb {

// Suffix array of text (0-based suffix starts) by induced sorting.
std::vector<std::uint32_t> build_suffix_array(std::string_view text);

// lcp[r] = lcp(suffix sa[r-1], suffix sa[r]) for r >= 1; lcp[0] = 0.
// The returned vector has size n + 1 with lcp[n] = 0.
std::vector<std::uint32_t> build_lcp_array(std::string_view text, const std::vector<std::uint32_t>& sa);

} // namespace lzhb
