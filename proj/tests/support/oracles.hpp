#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lvmap/normalize.hpp"

namespace lvmap::testing {

/// Number of (window of a, window of b) pairs whose concatenated line texts
/// are equal. Works on texts, never touches hashes or the index.
std::size_t brute_force_shared_windows(const CodeBlock& a, const CodeBlock& b, std::size_t k);

/// Step-by-step simulation of the verify scan over 1-based positions:
/// line1 walks the smaller block, lastline marks the end of the previous
/// accepted run in the larger one.
std::size_t reference_comm_lines(const std::vector<std::uint64_t>& small, const std::vector<std::uint64_t>& large);

/// Matched (small, large) 1-based line pairs of the same simulation.
std::vector<std::pair<std::size_t, std::size_t>> reference_matches(const std::vector<std::uint64_t>& small,
                                                                   const std::vector<std::uint64_t>& large);

}  // namespace lvmap::testing
