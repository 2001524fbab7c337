#include <lzhb/generators.hpp>
#include <lzhb/types.hpp>

#include <vector>

namespace lzhb {

std::string gen_greedy_adversary(std::size_t k)
{
    if (k < 1) throw UsageError("adversary family needs k >= 1");
    std::string s = "ababc";
    for (std::size_t i = 0; i < k; ++i) s += "bab";
    return s;
}

namespace {

// Distinct block letters: a, c..z, A..Z, 0..9, then remaining bytes; never 'b' or '#'.
std::vector<char> block_letters()
{
    std::vector<char> letters;
    const auto add = [&](int c) {
        if (c == 'b' || c == '#') return;
        for (char x : letters)
            if (x == static_cast<char>(c)) return;
        letters.push_back(static_cast<char>(c));
    };
    for (int c = 'a'; c <= 'z'; ++c) add(c);
    for (int c = 'A'; c <= 'Z'; ++c) add(c);
    for (int c = '0'; c <= '9'; ++c) add(c);
    for (int c = 0; c < 256; ++c) add(c);
    return letters;
}

} // namespace

std::string gen_tall_lz77_string(std::size_t k)
{
    if (k > kTallFamilyMaxBlocks)
        throw UsageError("tall family supports at most " + std::to_string(kTallFamilyMaxBlocks) + " blocks");
    static const std::vector<char> letters = block_letters();
    std::string s = "ab";
    for (std::size_t j = 0; j < k; ++j) {
        const char x = letters[2 * j];
        const char y = letters[2 * j + 1];
        const char z = letters[2 * j + 2];
        s += x;
        s += 'b';
        s += y;
        s += z;
        s += 'b';
        s += y;
        s += '#';
    }
    return s;
}

std::string gen_random_text(std::size_t n, std::size_t sigma, std::mt19937_64& rng)
{
    if (sigma < 1 || sigma > 256) throw UsageError("alphabet size must be in [1, 256]");
    std::uniform_int_distribution<std::size_t> pick(0, sigma - 1);
    std::string s(n, '\0');
    for (auto& c : s) c = sigma <= 26 ? static_cast<char>('a' + pick(rng)) : static_cast<char>(pick(rng));
    return s;
}

std::string gen_versioned_text(std::size_t seed_length, std::size_t copies, std::size_t edits, std::uint64_t seed,
                               std::size_t sigma)
{
    std::mt19937_64 rng{seed};
    std::string version = gen_random_text(seed_length, sigma, rng);
    std::string out;
    out.reserve(seed_length * copies + copies * edits);
    std::uniform_int_distribution<int> kind(0, 2);
    for (std::size_t c = 0; c < copies; ++c) {
        if (c > 0) {
            for (std::size_t e = 0; e < edits && !version.empty(); ++e) {
                std::uniform_int_distribution<std::size_t> at(0, version.size() - 1);
                const std::size_t pos = at(rng);
                const char sym = gen_random_text(1, sigma, rng)[0];
                switch (kind(rng)) {
                case 0:
                    version[pos] = sym;
                    break;
                case 1:
                    version.insert(version.begin() + static_cast<std::ptrdiff_t>(pos), sym);
                    break;
                default:
                    version.erase(version.begin() + static_cast<std::ptrdiff_t>(pos));
                    break;
                }
            }
        }
        out += version;
    }
    return out;
}

} // namespace lzhb
