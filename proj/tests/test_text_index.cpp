#include "support.hpp"

#include <lzhb/naive.hpp>
#include <lzhb/offline_index.hpp>
#include <lzhb/online_index.hpp>
#include <lzhb/range_min.hpp>
#include <lzhb/suffix_array.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace lzhb;
using lzhb::testing::random_text;
using lzhb::testing::repetitive_text;

TEST_SUITE("text_index") {

TEST_CASE("suffix array and lcp match direct sorting")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t sigma = std::vector<std::size_t>{1, 2, 4, 26, 256}[trial % 5];
        const std::string t = trial % 3 ? random_text(rng, 120, sigma) : repetitive_text(rng, 100, sigma);
        std::vector<std::uint32_t> expect(t.size());
        std::iota(expect.begin(), expect.end(), 0u);
        std::sort(expect.begin(), expect.end(),
                  [&](auto a, auto b) { return std::string_view(t).substr(a) < std::string_view(t).substr(b); });
        const auto sa = build_suffix_array(t);
        REQUIRE(sa == expect);
        const auto lcp = build_lcp_array(t, sa);
        REQUIRE(lcp.size() == t.size() + 1);
        CHECK(lcp[0] == 0);
        CHECK(lcp[t.size()] == 0);
        for (std::size_t r = 1; r < t.size(); ++r) {
            std::size_t l = 0;
            while (sa[r - 1] + l < t.size() && sa[r] + l < t.size() && t[sa[r - 1] + l] == t[sa[r] + l]) ++l;
            REQUIRE(lcp[r] == l);
        }
    }
}

TEST_CASE("range min and nearest smaller values match scans")
{
    std::mt19937_64 rng(2);
    for (std::size_t n : {1u, 2u, 63u, 64u, 65u, 200u, 700u}) {
        std::vector<std::uint32_t> v(n);
        for (auto& x : v) x = static_cast<std::uint32_t>(rng() % 20);
        const RangeMin rm(v);
        for (int q = 0; q < 300; ++q) {
            std::size_t lo = rng() % n, hi = rng() % n;
            if (lo > hi) std::swap(lo, hi);
            REQUIRE(rm.min(lo, hi) == *std::min_element(v.begin() + lo, v.begin() + hi + 1));
            const std::uint32_t x = static_cast<std::uint32_t>(rng() % 22);
            std::size_t prev = RangeMin::npos, next = RangeMin::npos;
            for (std::size_t k = 0; k <= lo; ++k)
                if (v[k] < x) prev = k;
            for (std::size_t k = n; k-- > lo;)
                if (v[k] < x) next = k;
            REQUIRE(rm.prev_less(lo, x) == prev);
            REQUIRE(rm.next_less(lo, x) == next);
        }
    }
}

TEST_CASE("offline index worked examples")
{
    const OfflineIndex idx("ababacbabac");
    CHECK(idx.lpf(1) == 0);
    CHECK(idx.lpf(7) == 5);
    CHECK(idx.lmocc(7, 5) == OptPos{2});
    CHECK(idx.lpf(3) == 3);
    CHECK(idx.lmocc(3, 3) == OptPos{1});
    CHECK(idx.lmocc(9, 2) == OptPos{2});
    CHECK(OfflineIndex("abc").lmocc(2, 1) == std::nullopt);
    CHECK(OfflineIndex("aaaa").lmocc(2, 3) == OptPos{1});
    for (Pos i = 1; i <= 11; ++i) CHECK(idx.lpf(i) == naive::lpf("ababacbabac", i));

    const std::string unary(200, 'a');
    const OfflineIndex u(unary);
    for (Pos i = 2; i <= 200; ++i) CHECK(u.lpf(i) == 201 - i);
    CHECK(naive::lpf(unary, 5) == 196);
}

TEST_CASE("offline index domain errors and empty text")
{
    const OfflineIndex empty("");
    CHECK(empty.size() == 0);
    const OfflineIndex idx("abc");
    CHECK_THROWS_AS(idx.lpf(0), UsageError);
    CHECK_THROWS_AS(idx.lpf(4), UsageError);
    CHECK_THROWS_AS(idx.lmocc(2, 3), UsageError);
    CHECK_THROWS_AS(idx.lmocc(0, 1), UsageError);
}

TEST_CASE("offline lpf and lmocc agree with the quadratic oracle")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t sigma = std::vector<std::size_t>{1, 2, 4, 26}[trial % 4];
        const std::string t = trial % 2 ? random_text(rng, 200, sigma) : repetitive_text(rng, 1 + rng() % 200, sigma);
        const OfflineIndex idx(t);
        const Pos n = static_cast<Pos>(t.size());
        for (Pos i = 1; i <= n; ++i) {
            const Pos l = idx.lpf(i);
            REQUIRE(l == naive::lpf(t, i));
            REQUIRE(l <= n - i + 1);
            // lpf(i) >= 1 iff t[i] occurred before.
            REQUIRE((l >= 1) == (t.substr(0, i - 1).find(t[i - 1]) != std::string::npos));
        }
        for (int q = 0; q < 20 && n > 0; ++q) {
            const Pos i = 1 + static_cast<Pos>(rng() % n);
            const Pos len = 1 + static_cast<Pos>(rng() % (n - i + 1));
            REQUIRE(idx.lmocc(i, len) == naive::lmocc(t, i, len));
            if (len > 1 && idx.lmocc(i, len)) REQUIRE(*idx.lmocc(i, len - 1) <= *idx.lmocc(i, len));
        }
        if (n > 0) {
            const Pos i = 1 + static_cast<Pos>(rng() % n);
            auto cur = idx.cursor(i);
            for (Pos len = 1; i + len - 1 <= n; ++len) REQUIRE(cur.lmocc(len) == naive::lmocc(t, i, len));
        }
    }
}

TEST_CASE("online index masking examples")
{
    OnlineIndex a;
    CHECK(a.prefix_query("abc") == OnlineIndex::Match{0, std::nullopt});
    a.append('a', false);
    CHECK(a.prefix_query("a") == OnlineIndex::Match{1, 1});

    OnlineIndex m;
    m.append('a', true);
    CHECK(m.prefix_query("a") == OnlineIndex::Match{0, std::nullopt});
    m.append('a', true);
    CHECK(m.prefix_query("aa") == OnlineIndex::Match{0, std::nullopt});
    CHECK(m.masked(1));

    OnlineIndex x;
    for (char c : std::string("ab")) x.append(c, false);
    x.append('$', true);
    x.append('$', true);
    x.append('c', false);
    CHECK(x.prefix_query("babbab") == OnlineIndex::Match{1, 2});

    OnlineIndex y;
    for (char c : std::string("ababac")) y.append(c, false);
    CHECK(y.prefix_query("babad") == OnlineIndex::Match{4, 2});
}

TEST_CASE("online prefix queries agree with the masked-scan oracle")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t sigma = std::vector<std::size_t>{1, 2, 4, 26}[trial % 4];
        const std::string t = trial % 2 ? random_text(rng, 150, sigma) : repetitive_text(rng, 1 + rng() % 150, sigma);
        const unsigned mask_rate = trial % 3 == 0 ? 0 : static_cast<unsigned>(1 + trial % 7);
        OnlineIndex idx(t.size());
        naive::MaskedText oracle;
        for (std::size_t k = 0; k < t.size(); ++k) {
            const bool masked = mask_rate && rng() % 10 < mask_rate;
            idx.append(static_cast<std::uint8_t>(t[k]), masked);
            oracle.append(static_cast<std::uint8_t>(t[k]), masked);
            if (rng() % 4 == 0 || k + 1 == t.size()) {
                const std::string q = trial % 2 ? t.substr(rng() % t.size()) : random_text(rng, 12, sigma);
                REQUIRE(idx.prefix_query(q) == oracle.prefix_query(q));
                auto cur = idx.cursor();
                std::size_t used = 0;
                while (used < q.size() && cur.extend(static_cast<std::uint8_t>(q[used]))) ++used;
                const auto expect = oracle.prefix_query(q);
                REQUIRE(cur.length() == expect.length);
                if (expect.length > 0) REQUIRE(cur.leftmost() == expect.start);
            }
        }
    }
}

TEST_CASE("minimum period tracker")
{
    auto periods = [](std::string_view s) {
        MinPeriodTracker tr;
        std::vector<std::size_t> out;
        for (char c : s) out.push_back(tr.push(static_cast<std::uint8_t>(c)));
        return out;
    };
    CHECK(periods("aaa") == std::vector<std::size_t>{1, 1, 1});
    CHECK(periods("aba") == std::vector<std::size_t>{1, 2, 2});
    CHECK(periods("ababc") == std::vector<std::size_t>{1, 2, 2, 2, 5});

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::string s = random_text(rng, 60, 1 + trial % 3);
        MinPeriodTracker tr;
        std::size_t last = 0;
        for (std::size_t m = 1; m <= s.size(); ++m) {
            const std::size_t p = tr.push(static_cast<std::uint8_t>(s[m - 1]));
            REQUIRE(p == naive::min_period(s.substr(0, m)));
            REQUIRE(p >= last);
            last = p;
        }
        tr.clear();
        CHECK(tr.size() == 0);
        CHECK(tr.period() == 0);
    }
    CHECK(border_array("abab") == std::vector<std::size_t>{0, 0, 1, 2});
}

TEST_CASE("window leftmost occurrence")
{
    CHECK(window_leftmost_occurrence("ababab", 1, 2, 2, 5) == OptPos{3});
    CHECK(window_leftmost_occurrence("ababab", 1, 3, 2, 3) == std::nullopt);
    CHECK(window_leftmost_occurrence("abcabc", 1, 2, 3, 3) == std::nullopt);

    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::string t = random_text(rng, 40, 1 + trial % 3);
        const Pos n = static_cast<Pos>(t.size());
        if (n == 0) continue;
        const Pos ps = 1 + static_cast<Pos>(rng() % n);
        const Pos pl = 1 + static_cast<Pos>(rng() % (n - ps + 1));
        Pos ws = 1 + static_cast<Pos>(rng() % n), we = 1 + static_cast<Pos>(rng() % (n + 1));
        if (ws > we) std::swap(ws, we);
        OptPos expect;
        for (Pos k = ws; k < we && !expect; ++k)
            if (k + pl - 1 <= n && t.compare(k - 1, pl, t, ps - 1, pl) == 0) expect = k;
        REQUIRE(window_leftmost_occurrence(t, ps, pl, ws, we) == expect);
    }
}

TEST_CASE("occurrences inside a window of twice the pattern length form one progression")
{
    // "aaaaaa": pattern "aaa" occurs at 1..4 with step 1 = its minimum period.
    {
        const std::string t = "aaaaaa";
        std::vector<Pos> occ;
        for (Pos k = 1; k <= 4;) {
            const OptPos o = window_leftmost_occurrence(t, 1, 3, k, 5);
            if (!o) break;
            occ.push_back(*o);
            k = *o + 1;
        }
        CHECK(occ == std::vector<Pos>{1, 2, 3, 4});
    }
    // Every binary v of length 2k, pattern w = v[0..k): occurrences of w in v
    // are consecutive multiples of per(w) whenever there are at least three.
    for (unsigned k = 1; k <= 10; ++k) {
        const std::uint32_t wmask = (1u << k) - 1;
        for (std::uint32_t v = 0; v < (1u << (2 * k)); ++v) {
            const std::uint32_t w = v & wmask;
            unsigned per = k;
            for (unsigned p = 1; p < k; ++p)
                if ((((w >> p) ^ w) & ((1u << (k - p)) - 1)) == 0) {
                    per = p;
                    break;
                }
            std::vector<unsigned> occ;
            for (unsigned d = 0; d <= k; ++d)
                if (((v >> d) & wmask) == w) occ.push_back(d);
            if (occ.size() < 3) continue;
            for (std::size_t j = 1; j < occ.size(); ++j) REQUIRE(occ[j] - occ[j - 1] == per);
        }
    }
}

}
