#pragma once

#include <lzhb/encoding.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lzhb {

struct CorpusEntry {
    std::string name;
    std::string sha256; // lowercase hex
    std::string text;
};

struct Corpus {
    std::vector<CorpusEntry> entries;
    std::vector<std::string> warnings; // one per path that could not be read
};

// Loads each path as raw bytes. Unreadable paths become warnings.
Corpus ingest_corpus(const std::vector<std::string>& paths);
std::string sha256_hex(std::string_view data);

std::vector<HeightBound> default_height_grid();
// 1, 2, 4, ... up to and including n (n itself appended when not a power of two).
std::vector<std::size_t> default_prefix_grid(std::size_t n);

struct SweepRow {
    std::string file;
    std::string sha256;
    Variant variant = Variant::LZ77;
    HeightBound h;
    std::size_t n = 0;
    std::size_t z_lz77 = 0;
    std::size_t z_variant = 0;
    double ratio = 0.0;
    std::uint32_t max_height = 0;
    double mean_height = 0.0;
    double parse_ms = 0.0;
};

struct SweepOptions {
    unsigned threads = 1;
};

// One LZ77 baseline row (h = inf) followed by one row per (variant, h) in the
// order given. Every encoding is verified first; a failing cell is reported on
// `failures` and produces no row.
std::vector<SweepRow> sweep(const CorpusEntry& entry, const std::vector<Variant>& variants,
                            const std::vector<HeightBound>& heights, const SweepOptions& options = {},
                            std::vector<std::string>* failures = nullptr);

struct RatioCurveRow {
    std::string file;
    Variant variant = Variant::LZ77;
    std::size_t prefix_len = 0;
    double target_ratio = 0.0;
    std::optional<HeightBound> h_min; // empty when no swept height qualifies
};

// For every prefix length and target ratio r, the first h of the grid (scanned
// in increasing order) with z'(h) <= r * z_lz77(prefix).
std::vector<RatioCurveRow> min_height_for_ratio(const CorpusEntry& entry, Variant variant,
                                                const std::vector<double>& ratios,
                                                const std::vector<std::size_t>& prefix_lengths,
                                                const std::vector<HeightBound>& height_grid);

inline constexpr const char* kSweepCsvHeader =
    "file,sha256,variant,h,n,z_lz77,z_variant,ratio,max_height,mean_height,parse_ms";
inline constexpr const char* kRatioCurveCsvHeader = "file,variant,prefix_len,target_ratio,h_min";

// Writers emit the header line followed by one line per row.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool header = true);
void write_ratio_curve_csv(std::ostream& out, const std::vector<RatioCurveRow>& rows, bool header = true);

} // namespace lzhb
