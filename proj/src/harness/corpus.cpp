#include <lzhb/harness.hpp>

#include <openssl/evp.h>

#include <fstream>
#include <iterator>
#include <memory>
#include <stdexcept>
#include <filesystem>

namespace lzhb {

std::string sha256_hex(std::string_view data)
{
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
        throw std::runtime_error("sha256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int k = 0; k < len; ++k) {
        out.push_back(hex[digest[k] >> 4]);
        out.push_back(hex[digest[k] & 15]);
    }
    return out;
}

Corpus ingest_corpus(const std::vector<std::string>& paths)
{
    Corpus corpus;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in || std::filesystem::is_directory(path)) {
            corpus.warnings.push_back("cannot read " + path);
            continue;
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (in.bad()) {
            corpus.warnings.push_back("read error on " + path);
            continue;
        }
        if (text.size() > kMaxTextLength) {
            corpus.warnings.push_back("too large: " + path);
            continue;
        }
        CorpusEntry entry;
        entry.name = std::filesystem::path(path).filename().string();
        entry.sha256 = sha256_hex(text);
        entry.text = std::move(text);
        corpus.entries.push_back(std::move(entry));
    }
    return corpus;
}

} // namespace lzhb
