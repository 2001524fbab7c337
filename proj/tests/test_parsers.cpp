#include "support.hpp"

#include <lzhb/generators.hpp>
#include <lzhb/offline_index.hpp>
#include <lzhb/optimal.hpp>
#include <lzhb/parsers.hpp>
#include <lzhb/verify.hpp>

#include <doctest.h>

using namespace lzhb;
namespace ref = lzhb::testing::reference;
using lzhb::testing::all_variants;

namespace {

std::vector<Phrase> phrases_of(std::string_view t, Variant v, HeightBound h = HeightBound::unbounded())
{
    return parse(t, v, h).phrases();
}

std::vector<Pos> lengths(const Encoding& e)
{
    std::vector<Pos> out;
    for (const auto& p : e.phrases()) out.push_back(p.length);
    return out;
}

const HeightBound kInf = HeightBound::unbounded();

} // namespace

TEST_SUITE("parsers") {

TEST_CASE("LZ77 worked examples")
{
    CHECK(phrases_of("ababacbabac", Variant::LZ77) ==
          std::vector<Phrase>{Phrase::literal('a'), Phrase::literal('b'), Phrase::copy(3, 1), Phrase::literal('c'),
                              Phrase::copy(5, 2)});
    CHECK(phrases_of("aababacbaba", Variant::LZ77) ==
          std::vector<Phrase>{Phrase::literal('a'), Phrase::literal('a'), Phrase::literal('b'), Phrase::copy(3, 2),
                              Phrase::literal('c'), Phrase::copy(4, 3)});
    CHECK(phrases_of("aaaa", Variant::LZ77) == std::vector<Phrase>{Phrase::literal('a'), Phrase::copy(3, 1)});
    CHECK(parse("", Variant::LZ77, kInf).size() == 0);
}

TEST_CASE("LZHB1 worked examples")
{
    const Encoding e = parse("ababacbabac", Variant::LZHB1, HeightBound(1));
    CHECK(e.size() == 9);
    CHECK(e.phrases() == std::vector<Phrase>{Phrase::literal('a'), Phrase::literal('b'), Phrase::copy(3, 1),
                                             Phrase::literal('c'), Phrase::literal('b'), Phrase::literal('a'),
                                             Phrase::literal('b'), Phrase::literal('a'), Phrase::literal('c')});
    for (std::uint32_t h : {0u, 1u, 5u}) CHECK(parse("abc", Variant::LZHB1, HeightBound(h)).size() == 3);
}

TEST_CASE("LZHB2 worked examples")
{
    const Encoding u = parse(std::string(10, 'a'), Variant::LZHB2, HeightBound(1));
    CHECK(u.phrases() == std::vector<Phrase>{Phrase::literal('a'), Phrase::copy(9, 1)});
    CHECK(compute_heights(u).max_height == 1);
    const Encoding e = parse("ababacbabac", Variant::LZHB2, HeightBound(1));
    CHECK(e.starts()[4] == 7);
    CHECK(e.phrases()[4] == Phrase::literal('b'));
}

TEST_CASE("LZHB3 worked examples")
{
    const std::string adv = gen_greedy_adversary(2);
    const Encoding e = parse(adv, Variant::LZHB3, HeightBound(1));
    CHECK(lengths(e) == std::vector<Pos>{1, 1, 2, 1, 1, 2, 1, 2});
    const Encoding u = parse(std::string(50, 'a'), Variant::LZHB3, HeightBound(3));
    CHECK(u.size() <= 4);
    CHECK(compute_heights(u).max_height <= 3);
}

TEST_CASE("LZHB4 worked examples")
{
    CHECK(lengths(parse("abaxabcdababca", Variant::LZHB4, kInf)) == std::vector<Pos>{1, 1, 1, 1, 2, 1, 1, 4, 1, 1});
    CHECK(phrases_of("aababacbaba", Variant::LZHB4) ==
          std::vector<Phrase>{Phrase::run(2, 'a'), Phrase::run(1, 'b'), Phrase::periodic(3, 2, 2),
                              Phrase::run(1, 'c'), Phrase::periodic(4, 3, 2)});
    CHECK(phrases_of("aaaa", Variant::LZHB4, HeightBound(0)) == std::vector<Phrase>{Phrase::run(4, 'a')});
    CHECK(parse(std::string(1000000, 'a'), Variant::LZHB4, HeightBound(0)).size() == 1);
}

TEST_CASE("h = 0 degenerates to literals and run-length encoding")
{
    std::mt19937_64 rng(20);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string t = lzhb::testing::random_text(rng, 80, 1 + trial % 3);
        for (Variant v : {Variant::LZHB1, Variant::LZHB2, Variant::LZHB3})
            REQUIRE(parse(t, v, HeightBound(0)).size() == t.size());
        std::size_t runs = 0;
        for (std::size_t k = 0; k < t.size(); ++k) runs += k == 0 || t[k] != t[k - 1];
        REQUIRE(parse(t, Variant::LZHB4, HeightBound(0)).size() == runs);
    }
}

TEST_CASE("greedy parsers equal the reference definitions")
{
    std::mt19937_64 rng(21);
    std::vector<std::string> structured{gen_greedy_adversary(1), gen_greedy_adversary(7), gen_tall_lz77_string(4),
                                        gen_tall_lz77_string(9), gen_versioned_text(20, 5, 2, 3, 3),
                                        "abaxabcdababca", "aababacbaba", "ababacbabac"};
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t sigma = std::vector<std::size_t>{1, 2, 3, 4, 26}[trial % 5];
        const std::string t = trial < 8 * 7 ? structured[trial % 8]
                              : trial % 2   ? lzhb::testing::random_text(rng, 90, sigma)
                                            : lzhb::testing::repetitive_text(rng, 1 + rng() % 120, sigma);
        const HeightBound h = trial % 7 == 0 ? kInf : HeightBound(static_cast<std::uint32_t>(trial % 6));
        for (Variant v : all_variants()) {
            CAPTURE(t);
            CAPTURE(variant_name(v));
            CAPTURE(h.to_string());
            REQUIRE(parse(t, v, h).phrases() == ref::parse(t, v, h).phrases());
        }
    }
}

TEST_CASE("round trip and height bound on random texts")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t sigma = std::vector<std::size_t>{1, 2, 4, 26}[trial % 4];
        const std::string t = trial % 2 ? lzhb::testing::random_text(rng, 2000, sigma)
                                        : lzhb::testing::repetitive_text(rng, 1 + rng() % 2000, sigma);
        const OfflineIndex index(t);
        const Encoding lz = parse_lz77(index);
        for (HeightBound h : {HeightBound(0), HeightBound(1), HeightBound(2), HeightBound(3), HeightBound(8), kInf}) {
            for (Variant v : all_variants()) {
                const Encoding e = parse(index, v, h);
                const VerifyReport r = verify(e, t, v == Variant::LZ77 ? kInf : h);
                REQUIRE(r.ok());
                if (h.is_unbounded() && v != Variant::LZ77 && v != Variant::LZHB4) REQUIRE(e.phrases() == lz.phrases());
                if (h.is_unbounded() && v == Variant::LZHB4) REQUIRE(e.size() <= lz.size());
            }
        }
    }
}

TEST_CASE("generators")
{
    CHECK(gen_greedy_adversary(1) == "ababcbab");
    CHECK(gen_greedy_adversary(2) == "ababcbabbab");
    for (std::size_t k = 1; k < 10; ++k) CHECK(gen_greedy_adversary(k).size() == 5 + 3 * k);
    CHECK_THROWS_AS(gen_greedy_adversary(0), UsageError);

    CHECK(gen_tall_lz77_string(3).substr(0, 8) == "ababcdbc");
    CHECK(compute_heights(parse(gen_tall_lz77_string(0), Variant::LZ77, kInf)).max_height <= 1);
    CHECK(compute_heights(parse(gen_tall_lz77_string(1), Variant::LZ77, kInf)).max_height >= 1);
    for (std::size_t k : {5u, 20u, 50u, 120u}) {
        const std::string t = gen_tall_lz77_string(k);
        CHECK(compute_heights(parse(t, Variant::LZ77, kInf)).max_height >= k);
        const Encoding e = parse(t, Variant::LZHB3, HeightBound(5));
        CHECK(verify(e, t, HeightBound(5)).ok());
    }
    CHECK_THROWS_AS(gen_tall_lz77_string(kTallFamilyMaxBlocks + 1), UsageError);

    std::mt19937_64 a(5), b(5);
    CHECK(gen_random_text(100, 4, a) == gen_random_text(100, 4, b));
    CHECK(gen_versioned_text(1000, 10, 5, 9) == gen_versioned_text(1000, 10, 5, 9));
    const std::string ver = gen_versioned_text(1000, 10, 5, 9);
    CHECK(ver.size() > 9000);
    CHECK(ver.size() < 11000);
}

TEST_CASE("optimal brute force examples")
{
    CHECK(optimal_bruteforce("a", HeightBound(0), false).size() == 1);
    CHECK(optimal_bruteforce("a", HeightBound(0), true).size() == 1);
    CHECK(optimal_bruteforce("", kInf, false).size() == 0);
    // The illustrative parse a|b|ab|c|b|a|b|(bab)^(k-1) has 8 phrases, but at
    // k = 2 a|b|a|b|c|bab|bab (both copies from position 2) is smaller.
    CHECK(optimal_bruteforce(gen_greedy_adversary(1), HeightBound(1), false).size() == 6);
    CHECK(optimal_bruteforce(gen_greedy_adversary(2), HeightBound(1), false).size() == 7);
    CHECK(optimal_bruteforce(gen_greedy_adversary(3), HeightBound(1), false).size() == 8);
    CHECK(optimal_bruteforce("abaxabcdababca", kInf, true).size() == 9);
    CHECK_THROWS_AS(optimal_bruteforce(std::string(kOptimalMaxLength + 1, 'a'), kInf, false), UsageError);
}

TEST_CASE("optimal brute force properties on tiny strings")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 11;
        const std::string t = lzhb::testing::random_text(rng, 0, 1) + gen_random_text(n, 1 + trial % 3, rng);
        std::size_t prev_std = SIZE_MAX, prev_mod = SIZE_MAX;
        for (HeightBound h : {HeightBound(0), HeightBound(1), HeightBound(2), HeightBound(3), kInf}) {
            const Encoding s = optimal_bruteforce(t, h, false);
            const Encoding m = optimal_bruteforce(t, h, true);
            REQUIRE(verify(s, t, h).ok());
            REQUIRE(verify(m, t, h).ok());
            REQUIRE(s.size() <= prev_std);
            REQUIRE(m.size() <= prev_mod);
            prev_std = s.size();
            prev_mod = m.size();
            for (Variant v : {Variant::LZHB1, Variant::LZHB2, Variant::LZHB3}) REQUIRE(parse(t, v, h).size() >= s.size());
            REQUIRE(parse(t, Variant::LZHB4, h).size() >= m.size());
        }
        const std::size_t z = parse(t, Variant::LZ77, kInf).size();
        REQUIRE(optimal_bruteforce(t, kInf, false).size() == z);
        REQUIRE(z <= 2 * optimal_bruteforce(t, kInf, true).size());
    }
}

}
