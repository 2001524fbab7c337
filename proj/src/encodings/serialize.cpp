#include <lzhb/serialize.hpp>

#include <charconv>
#include <vector>

namespace lzhb {

std::string serialize(const Encoding& encoding)
{
    std::string out;
    out.reserve(32 + encoding.size() * 12);
    out += "LZHB ";
    out += variant_name(encoding.variant());
    out += " v1 n=" + std::to_string(encoding.length());
    out += " h=" + encoding.bound().to_string();
    out += " z=" + std::to_string(encoding.size()) + "\n";
    for (const Phrase& ph : encoding.phrases()) {
        switch (ph.kind) {
        case PhraseKind::Literal:
            out += "L " + std::to_string(ph.symbol);
            break;
        case PhraseKind::Copy:
            out += "C " + std::to_string(ph.length) + " " + std::to_string(ph.source);
            break;
        case PhraseKind::Run:
            out += "R " + std::to_string(ph.length) + " " + std::to_string(ph.symbol);
            break;
        case PhraseKind::PeriodicCopy:
            out += "P " + std::to_string(ph.length) + " " + std::to_string(ph.source) + " " +
                   std::to_string(ph.period);
            break;
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> split_spaces(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i <= line.size()) {
        const std::size_t j = line.find(' ', i);
        const std::size_t end = j == std::string_view::npos ? line.size() : j;
        fields.push_back(line.substr(i, end - i));
        if (j == std::string_view::npos) break;
        i = j + 1;
    }
    return fields;
}

template <typename T>
T number(std::string_view field, std::size_t line, const char* what)
{
    T v{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw FormatError(line, std::string{"invalid "} + what + " '" + std::string{field} + "'");
    return v;
}

std::string_view keyed(std::string_view field, std::string_view key, std::size_t line)
{
    if (field.substr(0, key.size()) != key) throw FormatError(line, "expected '" + std::string{key} + "...'");
    return field.substr(key.size());
}

} // namespace

Encoding deserialize(std::string_view data)
{
    std::vector<std::string_view> lines;
    std::size_t i = 0;
    while (i < data.size()) {
        const std::size_t j = data.find('\n', i);
        if (j == std::string_view::npos) throw FormatError(lines.size() + 1, "missing final newline (truncated?)");
        lines.push_back(data.substr(i, j - i));
        i = j + 1;
    }
    if (lines.empty()) throw FormatError(1, "empty input");

    const auto header = split_spaces(lines[0]);
    if (header.size() != 6 || header[0] != "LZHB") throw FormatError(1, "malformed header");
    const auto variant = parse_variant(header[1]);
    if (!variant) throw FormatError(1, "unknown variant '" + std::string{header[1]} + "'");
    if (header[2] != "v1") throw FormatError(1, "unsupported format version '" + std::string{header[2]} + "'");
    const auto n = number<std::uint64_t>(keyed(header[3], "n=", 1), 1, "length");
    HeightBound bound;
    try {
        bound = HeightBound::parse(keyed(header[4], "h=", 1));
    } catch (const UsageError& e) {
        throw FormatError(1, e.what());
    }
    const auto z = number<std::uint64_t>(keyed(header[5], "z=", 1), 1, "phrase count");
    if (z != lines.size() - 1)
        throw FormatError(lines.size(), "header announces " + std::to_string(z) + " phrases, found " +
                                            std::to_string(lines.size() - 1));

    std::vector<Phrase> phrases;
    phrases.reserve(z);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const std::size_t line = k + 1;
        const auto f = split_spaces(lines[k]);
        const auto want = [&](std::size_t count) {
            if (f.size() != count) throw FormatError(line, "wrong number of fields");
        };
        if (f[0] == "L") {
            want(2);
            phrases.push_back(Phrase::literal(number<std::uint8_t>(f[1], line, "byte")));
        } else if (f[0] == "C") {
            want(3);
            phrases.push_back(Phrase::copy(number<Pos>(f[1], line, "length"), number<Pos>(f[2], line, "source")));
        } else if (f[0] == "R") {
            want(3);
            phrases.push_back(Phrase::run(number<Pos>(f[1], line, "length"), number<std::uint8_t>(f[2], line, "byte")));
        } else if (f[0] == "P") {
            want(4);
            phrases.push_back(Phrase::periodic(number<Pos>(f[1], line, "length"), number<Pos>(f[2], line, "source"),
                                               number<Pos>(f[3], line, "period")));
        } else {
            throw FormatError(line, "unknown phrase tag '" + std::string{f[0]} + "'");
        }
    }

    try {
        Encoding enc{*variant, bound, std::move(phrases)};
        if (enc.length() != n)
            throw FormatError(1, "phrase lengths sum to " + std::to_string(enc.length()) + ", header says n=" +
                                     std::to_string(n));
        return enc;
    } catch (const MalformedEncoding& e) {
        throw FormatError(e.phrase_index() + 2, e.what());
    }
}

} // namespace lzhb
