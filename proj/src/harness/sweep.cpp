#include <lzhb/harness.hpp>
#include <lzhb/offline_index.hpp>
#include <lzhb/parsers.hpp>
#include <lzhb/verify.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace lzhb {

std::vector<HeightBound> default_height_grid()
{
    std::vector<HeightBound> grid;
    grid.emplace_back(0);
    for (std::uint32_t h = 1; h <= 256; h *= 2) grid.emplace_back(h);
    grid.push_back(HeightBound::unbounded());
    return grid;
}

std::vector<std::size_t> default_prefix_grid(std::size_t n)
{
    std::vector<std::size_t> grid;
    for (std::size_t p = 1; p <= n; p *= 2) grid.push_back(p);
    if (n > 0 && grid.back() != n) grid.push_back(n);
    return grid;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

bool needs_offline_index(Variant v)
{
    return v == Variant::LZ77 || v == Variant::LZHB1 || v == Variant::LZHB2;
}

struct Cell {
    Variant variant;
    HeightBound h;
};

} // namespace

std::vector<SweepRow> sweep(const CorpusEntry& entry, const std::vector<Variant>& variants,
                            const std::vector<HeightBound>& heights, const SweepOptions& options,
                            std::vector<std::string>* failures)
{
    if (heights.empty()) throw UsageError("sweep: empty height grid");

    auto t0 = Clock::now();
    const OfflineIndex index(entry.text);
    const double index_ms = elapsed_ms(t0);

    std::vector<Cell> cells{{Variant::LZ77, HeightBound::unbounded()}};
    for (Variant v : variants)
        for (HeightBound h : heights) cells.push_back({v, h});

    std::vector<std::optional<SweepRow>> slots(cells.size());
    std::vector<std::string> problems(cells.size());

    auto run_cell = [&](std::size_t k) {
        const Cell& cell = cells[k];
        auto start = Clock::now();
        Encoding enc = needs_offline_index(cell.variant) ? parse(index, cell.variant, cell.h)
                                                         : parse(entry.text, cell.variant, cell.h);
        double ms = elapsed_ms(start);
        if (needs_offline_index(cell.variant)) ms += index_ms;
        const VerifyReport report = verify(enc, entry.text, enc.bound());
        if (!report.ok()) {
            problems[k] = entry.name + " " + std::string(variant_name(cell.variant)) + " h=" + cell.h.to_string() +
                          ": verification failed";
            for (const auto& p : report.problems) problems[k] += "; " + p;
            return;
        }
        SweepRow row;
        row.file = entry.name;
        row.sha256 = entry.sha256;
        row.variant = cell.variant;
        row.h = cell.h;
        row.n = entry.text.size();
        row.z_variant = enc.size();
        row.max_height = report.max_height;
        row.mean_height = compute_heights(enc).mean_height();
        row.parse_ms = ms;
        slots[k] = std::move(row);
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(cells.size())));
    if (threads == 1) {
        for (std::size_t k = 0; k < cells.size(); ++k) run_cell(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t k; (k = next.fetch_add(1)) < cells.size();) run_cell(k);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<SweepRow> rows;
    if (!slots[0]) {
        // Without a baseline no ratio is meaningful.
        if (failures) failures->push_back(problems[0]);
        return rows;
    }
    const std::size_t z = slots[0]->z_variant;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (!slots[k]) {
            if (failures) failures->push_back(problems[k]);
            continue;
        }
        SweepRow row = std::move(*slots[k]);
        row.z_lz77 = z;
        row.ratio = z == 0 ? 1.0 : static_cast<double>(row.z_variant) / static_cast<double>(z);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<RatioCurveRow> min_height_for_ratio(const CorpusEntry& entry, Variant variant,
                                                const std::vector<double>& ratios,
                                                const std::vector<std::size_t>& prefix_lengths,
                                                const std::vector<HeightBound>& height_grid)
{
    if (ratios.empty() || prefix_lengths.empty() || height_grid.empty())
        throw UsageError("min_height_for_ratio: empty grid");
    std::vector<HeightBound> grid = height_grid;
    std::sort(grid.begin(), grid.end(), [](HeightBound a, HeightBound b) { return a.value() < b.value(); });
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<RatioCurveRow> rows;
    for (std::size_t len : prefix_lengths) {
        if (len > entry.text.size()) throw UsageError("min_height_for_ratio: prefix longer than text");
        const std::string_view prefix(entry.text.data(), len);
        const OfflineIndex index{std::string(prefix)};
        const std::size_t z = parse_lz77(index).size();

        // Sizes are computed lazily so that the scan stops at the last height any ratio needs.
        std::map<std::size_t, std::size_t> size_at;
        auto size_for = [&](std::size_t g) {
            auto it = size_at.find(g);
            if (it != size_at.end()) return it->second;
            Encoding enc = needs_offline_index(variant) ? parse(index, variant, grid[g]) : parse(prefix, variant, grid[g]);
            if (decode(enc) != prefix) throw std::logic_error("min_height_for_ratio: parse does not decode");
            return size_at[g] = enc.size();
        };

        for (double r : ratios) {
            RatioCurveRow row;
            row.file = entry.name;
            row.variant = variant;
            row.prefix_len = len;
            row.target_ratio = r;
            for (std::size_t g = 0; g < grid.size(); ++g) {
                if (static_cast<double>(size_for(g)) <= r * static_cast<double>(z)) {
                    row.h_min = grid[g];
                    break;
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

// File names are written verbatim unless they need CSV quoting.
std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string fixed(double x, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

} // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool header)
{
    if (header) out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        out << csv_field(r.file) << ',' << r.sha256 << ',' << variant_name(r.variant) << ',' << r.h.to_string() << ','
            << r.n << ',' << r.z_lz77 << ',' << r.z_variant << ',' << fixed(r.ratio, 6) << ',' << r.max_height << ','
            << fixed(r.mean_height, 6) << ',' << fixed(r.parse_ms, 3) << '\n';
    }
}

void write_ratio_curve_csv(std::ostream& out, const std::vector<RatioCurveRow>& rows, bool header)
{
    if (header) out << kRatioCurveCsvHeader << '\n';
    for (const auto& r : rows) {
        out << csv_field(r.file) << ',' << variant_name(r.variant) << ',' << r.prefix_len << ','
            << fixed(r.target_ratio, 6) << ',' << (r.h_min ? r.h_min->to_string() : "none") << '\n';
    }
}

} // namespace lzhb
