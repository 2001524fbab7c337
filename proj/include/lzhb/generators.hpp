#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace lzhb {

inline constexpr std::size_t kTallFamilyMaxBlocks = 120;

// "ababc" followed by k copies of "bab".
std::string gen_greedy_adversary(std::size_t k);

// "ab" followed by k blocks x b y z b y '#', with fresh letters per block
// chained as in "ababcdbc#dbefbe#fbghbg#...". Every 'b' copies the previous
// one under greedy LZ77, so the LZ77 height grows with k. k <= 120.
std::string gen_tall_lz77_string(std::size_t k);

// Uniform random text over the first sigma symbols of "ab...z" (sigma <= 26)
// or bytes 0..sigma-1 for larger sigma.
std::string gen_random_text(std::size_t n, std::size_t sigma, std::mt19937_64& rng);

// Concatenation of `copies` versions of a random seed text; each version is the
// previous one with `edits` random substitutions, insertions or deletions.
std::string gen_versioned_text(std::size_t seed_length, std::size_t copies, std::size_t edits,
                               std::uint64_t seed, std::size_t sigma = 26);

} // namespace lzhb
