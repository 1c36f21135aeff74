#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace lvmap {

/// 128-bit MurmurHash3 (x64 variant) result.
struct Hash128 {
    std::uint64_t h1 = 0;
    std::uint64_t h2 = 0;
};

Hash128 murmur3_x64_128(std::span<const std::byte> data, std::uint64_t seed = 0) noexcept;

/// Corpus line/seed hash: the low word (h1) of MurmurHash3_x64_128 over the
/// UTF-8 bytes with seed 0. Stable across platforms.
std::uint64_t hash64(std::string_view text) noexcept;

}  // namespace lvmap
