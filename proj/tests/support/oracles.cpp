#include "oracles.hpp"

#include <string>

namespace lvmap::testing {

namespace {

std::vector<std::string> windows(const CodeBlock& block, std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t s = 0; s + k <= block.lines.size(); ++s) {
        std::string w;
        for (std::size_t i = s; i < s + k; ++i) w += block.lines[i].text;
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

std::size_t brute_force_shared_windows(const CodeBlock& a, const CodeBlock& b, std::size_t k) {
    const auto wa = windows(a, k);
    const auto wb = windows(b, k);
    std::size_t count = 0;
    for (const auto& x : wa) {
        for (const auto& y : wb) count += x == y ? 1 : 0;
    }
    return count;
}

std::vector<std::pair<std::size_t, std::size_t>> reference_matches(const std::vector<std::uint64_t>& small,
                                                                   const std::vector<std::uint64_t>& large) {
    const std::size_t n1 = small.size();
    const std::size_t n2 = large.size();
    auto s = [&](std::size_t i) { return small[i - 1]; };
    auto g = [&](std::size_t j) { return large[j - 1]; };

    std::vector<std::pair<std::size_t, std::size_t>> matched;
    std::size_t line1 = 1;
    std::size_t lastline = 0;
    while (line1 <= n1) {
        std::size_t line2 = 0;
        for (std::size_t j = lastline + 1; j <= n2; ++j) {
            if (g(j) == s(line1)) {
                line2 = j;
                break;
            }
        }
        if (line2 == 0) {
            line1 = line1 + 1;
            continue;
        }
        std::size_t m = 0;
        while (line1 + m <= n1 && line2 + m <= n2 && s(line1 + m) == g(line2 + m)) m = m + 1;
        if (m < 2) {
            line1 = line1 + 1;
            continue;
        }
        for (std::size_t i = 0; i < m; ++i) matched.emplace_back(line1 + i, line2 + i);
        lastline = line2 + m - 1;
        line1 = line1 + m;
    }
    return matched;
}

std::size_t reference_comm_lines(const std::vector<std::uint64_t>& small, const std::vector<std::uint64_t>& large) {
    return reference_matches(small, large).size();
}

}  // namespace lvmap::testing
