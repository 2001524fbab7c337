#include <lzhb/naive.hpp>
#include <lzhb/verify.hpp>

namespace lzhb {

VerifyReport verify(const Encoding& encoding, std::string_view expected, HeightBound bound)
{
    VerifyReport report;
    report.phrase_count = encoding.size();

    const std::string decoded = decode(encoding);
    report.decodes_equal = decoded == expected;
    if (!report.decodes_equal) {
        std::size_t k = 0;
        while (k < decoded.size() && k < expected.size() && decoded[k] == expected[k]) ++k;
        report.problems.push_back("decoded text differs from expected at position " + std::to_string(k + 1));
    }

    // Phrase content is checked against the expected text when it has the
    // right length, otherwise against the decoded text.
    const std::string_view text = expected.size() == encoding.length() ? expected : std::string_view{decoded};
    report.sources_match = true;
    report.periods_minimal = true;
    Pos b = 1;
    for (std::size_t j = 0; j < encoding.phrases().size(); ++j) {
        const Phrase& ph = encoding.phrases()[j];
        bool match = true;
        for (Pos i = b; i < b + ph.length && match; ++i) {
            const std::uint8_t want = byte_at(text, i);
            match = ph.is_root() ? ph.symbol == want : byte_at(text, ph.reference(b, i)) == want;
        }
        if (!match) {
            report.sources_match = false;
            report.problems.push_back("phrase " + std::to_string(j) + " content does not match its source");
        }
        if (ph.kind == PhraseKind::PeriodicCopy &&
            naive::min_period(text.substr(b - 1, ph.length)) != ph.period) {
            report.periods_minimal = false;
            report.problems.push_back("phrase " + std::to_string(j) + " period is not minimal");
        }
        b += ph.length;
    }

    report.max_height = compute_heights(encoding).max_height;
    report.within_bound = bound.admits(report.max_height);
    if (!report.within_bound)
        report.problems.push_back("max height " + std::to_string(report.max_height) + " exceeds bound " +
                                  bound.to_string());
    return report;
}

} // namespace lzhb
