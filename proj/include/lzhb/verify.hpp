#pragma once

#include <lzhb/encoding.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lzhb {

struct VerifyReport {
    bool decodes_equal = false;
    bool sources_match = false;   // every copy's referenced content equals the phrase content
    bool periods_minimal = false; // every periodic copy stores the minimum period of its phrase
    std::uint32_t max_height = 0;
    bool within_bound = false;
    std::size_t phrase_count = 0;
    std::vector<std::string> problems;

    bool ok() const { return decodes_equal && sources_match && periods_minimal && within_bound; }
};

// Checks encoding against the text it should represent. Failures are
// collected in the report, never thrown.
VerifyReport verify(const Encoding& encoding, std::string_view expected, HeightBound bound);

} // namespace lzhb
