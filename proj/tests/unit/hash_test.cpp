#include "lvmap/hash.hpp"

#include <cstring>
#include <string>

#include <gtest/gtest.h>

namespace lvmap {
namespace {

// Vectors from the reference mmh3 package (hash64 = first word of hash128, seed 0).
TEST(Hash64, MatchesReferenceVectors) {
    EXPECT_EQ(hash64(""), 0x0ULL);
    EXPECT_EQ(hash64("hello"), 0xcbd8a7b341bd9b02ULL);
    EXPECT_EQ(hash64("intid=id+1;"), 0xe7870b6c0dd3c84eULL);
    EXPECT_EQ(hash64("The quick brown fox jumps over the lazy dog"), 0xe34bbc7bbc071b6cULL);
    // 17 bytes: one full block plus a tail
    EXPECT_EQ(hash64("abcdefghijklmnopq"), 0x7564747f88bda657ULL);
}

TEST(Hash64, IsFirstWordOf128) {
    const std::string s = "id=id(id,2);";
    const auto h = murmur3_x64_128(std::as_bytes(std::span(s.data(), s.size())));
    EXPECT_EQ(hash64(s), h.h1);
}

TEST(Hash64, EveryTailLengthDiffers) {
    std::string s;
    std::uint64_t prev = hash64(s);
    for (int i = 0; i < 40; ++i) {
        s += static_cast<char>('a' + i % 26);
        const std::uint64_t h = hash64(s);
        EXPECT_NE(h, prev) << i;
        prev = h;
    }
}

}  // namespace
}  // namespace lvmap
