#include <lzhb/access.hpp>
#include <lzhb/encoding.hpp>
#include <lzhb/generators.hpp>
#include <lzhb/harness.hpp>
#include <lzhb/parsers.hpp>
#include <lzhb/serialize.hpp>
#include <lzhb/verify.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

namespace {

using namespace lzhb;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read error on " + path);
    return data;
}

void write_output(const std::string& path, std::string_view data)
{
    if (path == "-") {
        std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
        std::cout.flush();
        if (!std::cout) throw IoError("write error on stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError("write error on " + path);
}

Variant variant_arg(const std::string& name)
{
    if (auto v = parse_variant(name)) return *v;
    throw UsageError("unknown variant '" + name + "' (expected lz77, lzhb1, lzhb2, lzhb3 or lzhb4)");
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

template <typename T>
T number_arg(std::string_view s, const char* what)
{
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw UsageError(std::string("invalid ") + what + " '" + std::string(s) + "'");
    return v;
}

std::vector<HeightBound> grid_arg(const std::string& s)
{
    if (s.empty()) return default_height_grid();
    std::vector<HeightBound> grid;
    for (const auto& item : split_list(s)) grid.push_back(HeightBound::parse(item));
    return grid;
}

std::vector<Variant> variants_arg(const std::string& s)
{
    std::vector<Variant> out;
    for (const auto& item : split_list(s)) out.push_back(variant_arg(item));
    return out;
}

// Accepts "3", "1-11" and comma-separated mixtures of both.
std::vector<Pos> positions_arg(const std::string& s, Pos n)
{
    std::vector<Pos> out;
    if (s.empty()) {
        for (Pos i = 1; i <= n; ++i) out.push_back(i);
        return out;
    }
    for (const auto& item : split_list(s)) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            out.push_back(number_arg<Pos>(item, "position"));
            continue;
        }
        const Pos lo = number_arg<Pos>(std::string_view(item).substr(0, dash), "position");
        const Pos hi = number_arg<Pos>(std::string_view(item).substr(dash + 1), "position");
        if (lo > hi) throw UsageError("empty position range '" + item + "'");
        for (std::uint64_t i = lo; i <= hi; ++i) out.push_back(static_cast<Pos>(i));
    }
    return out;
}

void report_verification(const VerifyReport& r)
{
    std::cerr << "decodes_equal=" << r.decodes_equal << "\nsources_match=" << r.sources_match
              << "\nperiods_minimal=" << r.periods_minimal << "\nmax_height=" << r.max_height
              << "\nwithin_bound=" << r.within_bound << "\nz=" << r.phrase_count << '\n';
    for (const auto& p : r.problems) std::cerr << "problem: " << p << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Height-bounded LZ parsing, decoding, random access and experiment sweeps"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    std::string in_path = "-", out_path = "-", variant_name_arg = "lzhb3", h_arg = "inf";
    std::string grid, ratios = "1,1.5,2", prefixes, positions, variants_list = "lzhb1,lzhb2,lzhb3,lzhb4";
    std::string encoding_path, original_path, family;
    std::uint64_t seed = 1;
    std::size_t k = 0;
    unsigned threads = 1;
    std::vector<std::string> files;

    auto* parse_cmd = app.add_subcommand("parse", "Parse a file and write its canonical encoding");
    parse_cmd->add_option("input", in_path, "Input file ('-' for stdin)");
    parse_cmd->add_option("--variant", variant_name_arg, "lz77, lzhb1, lzhb2, lzhb3 or lzhb4");
    parse_cmd->add_option("--h", h_arg, "Height bound: non-negative integer or inf");
    parse_cmd->add_option("--out", out_path, "Encoding output ('-' for stdout)");

    auto* decode_cmd = app.add_subcommand("decode", "Decode an encoding file");
    decode_cmd->add_option("input", in_path, "Encoding file ('-' for stdin)");
    decode_cmd->add_option("--out", out_path, "Decoded output ('-' for stdout)");

    bool h_given = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check an encoding against the original text");
    verify_cmd->add_option("encoding", encoding_path, "Encoding file")->required();
    verify_cmd->add_option("original", original_path, "Original text")->required();
    auto* verify_h = verify_cmd->add_option("--h", h_arg, "Height bound to check (default: the declared one)");

    auto* access_cmd = app.add_subcommand("access", "Random access into an encoding; prints 'pos symbol steps'");
    access_cmd->add_option("encoding", encoding_path, "Encoding file")->required();
    access_cmd->add_option("--positions", positions, "Comma-separated positions or ranges a-b (default: all)");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic text");
    gen_cmd->add_option("family", family, "adversary, tall, random or versioned")->required();
    gen_cmd->add_option("k", k, "Family parameter (blocks, or length for random)")->required();
    gen_cmd->add_option("--seed", seed, "Seed for random families");
    gen_cmd->add_option("--out", out_path, "Output ('-' for stdout)");

    auto* sweep_cmd = app.add_subcommand("sweep", "Size/height sweep over files, CSV output");
    sweep_cmd->add_option("files", files, "Input files")->required();
    sweep_cmd->add_option("--variant", variants_list, "Comma-separated variants");
    sweep_cmd->add_option("--grid", grid, "Comma-separated heights (default 0,1,2,4,...,256,inf)");
    sweep_cmd->add_option("--threads", threads, "Worker threads per file");
    sweep_cmd->add_option("--out", out_path, "CSV output ('-' for stdout)");

    auto* curve_cmd = app.add_subcommand("ratio-curve", "Smallest height reaching target ratios, CSV output");
    curve_cmd->add_option("files", files, "Input files")->required();
    curve_cmd->add_option("--variant", variant_name_arg, "Variant");
    curve_cmd->add_option("--ratios", ratios, "Comma-separated target ratios");
    curve_cmd->add_option("--prefixes", prefixes, "Comma-separated prefix lengths (default powers of two)");
    curve_cmd->add_option("--grid", grid, "Comma-separated heights");
    curve_cmd->add_option("--out", out_path, "CSV output ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    h_given = verify_h->count() > 0;

    try {
        if (*parse_cmd) {
            const Variant variant = variant_arg(variant_name_arg);
            const HeightBound h = HeightBound::parse(h_arg);
            const std::string text = read_input(in_path);
            if (text.size() > kMaxTextLength) throw UsageError("input too large");
            const Encoding enc = parse(text, variant, h);
            const VerifyReport report = verify(enc, text, enc.bound());
            std::cerr << "n=" << text.size() << "\nz=" << enc.size() << "\nmax_height=" << report.max_height << '\n';
            if (!report.ok()) {
                report_verification(report);
                return kVerifyFailed;
            }
            write_output(out_path, serialize(enc));
            return kOk;
        }
        if (*decode_cmd) {
            const Encoding enc = deserialize(read_input(in_path));
            write_output(out_path, decode(enc));
            return kOk;
        }
        if (*verify_cmd) {
            const Encoding enc = deserialize(read_input(encoding_path));
            const std::string original = read_input(original_path);
            const HeightBound h = h_given ? HeightBound::parse(h_arg) : enc.bound();
            const VerifyReport report = verify(enc, original, h);
            report_verification(report);
            return report.ok() ? kOk : kVerifyFailed;
        }
        if (*access_cmd) {
            const Encoding enc = deserialize(read_input(encoding_path));
            const RandomAccessIndex index(enc);
            std::string out;
            for (Pos i : positions_arg(positions, index.length())) {
                const auto r = index.access(i);
                out += std::to_string(i) + ' ';
                // Printable ASCII as itself, anything else as its byte value.
                if (r.symbol > 32 && r.symbol < 127)
                    out.push_back(static_cast<char>(r.symbol));
                else {
                    static constexpr char hex[] = "0123456789abcdef";
                    out += "\\x";
                    out.push_back(hex[r.symbol >> 4]);
                    out.push_back(hex[r.symbol & 15]);
                }
                out += ' ' + std::to_string(r.steps) + '\n';
            }
            write_output("-", out);
            return kOk;
        }
        if (*gen_cmd) {
            std::string text;
            if (family == "adversary") {
                text = gen_greedy_adversary(k);
            } else if (family == "tall") {
                text = gen_tall_lz77_string(k);
            } else if (family == "random") {
                std::mt19937_64 rng(seed);
                text = gen_random_text(k, 26, rng);
            } else if (family == "versioned") {
                // k copies of a 1000-symbol seed, 10 edits per copy.
                text = gen_versioned_text(1000, k, 10, seed);
            } else {
                throw UsageError("unknown family '" + family + "'");
            }
            write_output(out_path, text);
            return kOk;
        }
        if (*sweep_cmd || *curve_cmd) {
            const std::vector<HeightBound> heights = grid_arg(grid);
            const Corpus corpus = ingest_corpus(files);
            for (const auto& w : corpus.warnings) std::cerr << "warning: " << w << '\n';
            std::ostringstream csv;
            int status = corpus.entries.empty() ? kIo : kOk;
            if (*sweep_cmd) {
                const std::vector<Variant> variants = variants_arg(variants_list);
                csv << kSweepCsvHeader << '\n';
                for (const auto& entry : corpus.entries) {
                    std::vector<std::string> failures;
                    write_sweep_csv(csv, sweep(entry, variants, heights, {threads}, &failures), false);
                    for (const auto& f : failures) std::cerr << "error: " << f << '\n';
                    if (!failures.empty()) status = kVerifyFailed;
                }
            } else {
                const Variant variant = variant_arg(variant_name_arg);
                std::vector<double> rs;
                for (const auto& item : split_list(ratios)) {
                    try {
                        std::size_t used = 0;
                        rs.push_back(std::stod(item, &used));
                        if (used != item.size() || !(rs.back() > 0)) throw std::invalid_argument(item);
                    } catch (const std::logic_error&) {
                        throw UsageError("invalid ratio '" + item + "'");
                    }
                }
                csv << kRatioCurveCsvHeader << '\n';
                for (const auto& entry : corpus.entries) {
                    std::vector<std::size_t> ps;
                    if (prefixes.empty()) {
                        ps = default_prefix_grid(entry.text.size());
                    } else {
                        for (const auto& item : split_list(prefixes)) {
                            const auto p = number_arg<std::size_t>(item, "prefix length");
                            if (p <= entry.text.size()) ps.push_back(p);
                        }
                    }
                    if (ps.empty()) continue;
                    write_ratio_curve_csv(csv, min_height_for_ratio(entry, variant, rs, ps, heights), false);
                }
            }
            write_output(out_path, csv.str());
            return status;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const FormatError& e) {
        std::cerr << "malformed encoding: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}
