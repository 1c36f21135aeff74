#include "lvmap/hash.hpp"

#include <bit>
#include <cstring>

namespace lvmap {

namespace {

constexpr std::uint64_t kC1 = 0x87c37b91114253d5ULL;
constexpr std::uint64_t kC2 = 0x4cf5ad432745937fULL;

constexpr std::uint64_t fmix64(std::uint64_t k) noexcept {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    k *= 0xc4ceb9fe1a85ec53ULL;
    k ^= k >> 33;
    return k;
}

std::uint64_t load_le64(const std::byte* p) noexcept {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) {
        v = (v << 8) | static_cast<std::uint64_t>(p[i]);
    }
    return v;
}

}  // namespace

Hash128 murmur3_x64_128(std::span<const std::byte> data, std::uint64_t seed) noexcept {
    const std::size_t len = data.size();
    const std::size_t nblocks = len / 16;
    std::uint64_t h1 = seed;
    std::uint64_t h2 = seed;

    const std::byte* p = data.data();
    for (std::size_t i = 0; i < nblocks; ++i, p += 16) {
        std::uint64_t k1 = load_le64(p);
        std::uint64_t k2 = load_le64(p + 8);

        k1 *= kC1;
        k1 = std::rotl(k1, 31);
        k1 *= kC2;
        h1 ^= k1;
        h1 = std::rotl(h1, 27);
        h1 += h2;
        h1 = h1 * 5 + 0x52dce729;

        k2 *= kC2;
        k2 = std::rotl(k2, 33);
        k2 *= kC1;
        h2 ^= k2;
        h2 = std::rotl(h2, 31);
        h2 += h1;
        h2 = h2 * 5 + 0x38495ab5;
    }

    // tail
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;
    const std::size_t rem = len & 15;
    for (std::size_t i = rem; i > 8; --i) {
        k2 ^= static_cast<std::uint64_t>(p[i - 1]) << ((i - 9) * 8);
    }
    if (rem > 8) {
        k2 *= kC2;
        k2 = std::rotl(k2, 33);
        k2 *= kC1;
        h2 ^= k2;
    }
    for (std::size_t i = rem < 8 ? rem : 8; i > 0; --i) {
        k1 ^= static_cast<std::uint64_t>(p[i - 1]) << ((i - 1) * 8);
    }
    if (rem > 0) {
        k1 *= kC1;
        k1 = std::rotl(k1, 31);
        k1 *= kC2;
        h1 ^= k1;
    }

    h1 ^= len;
    h2 ^= len;
    h1 += h2;
    h2 += h1;
    h1 = fmix64(h1);
    h2 = fmix64(h2);
    h1 += h2;
    h2 += h1;
    return {h1, h2};
}

std::uint64_t hash64(std::string_view text) noexcept {
    return murmur3_x64_128(std::as_bytes(std::span(text.data(), text.size())), 0).h1;
}

}  // namespace lvmap
