#pragma once

#include <random>
#include <string>

#include "bpal/text.hpp"

namespace bpal::test {

inline std::string random_string(std::mt19937_64& rng, std::size_t len, unsigned alphabet) {
    std::string s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i) s += static_cast<char>('a' + rng() % alphabet);
    return s;
}

// Largest block count over every symmetric factorization of T[b..e],
// O(2^{N/2})-ish; the independent check for factorization maximality.
inline std::uint32_t max_blocks_brute(const Text& text, Pos b, Pos e) {
    if (b > e) return 0;
    std::uint32_t best = 1;  // the whole span as a single center block
    const std::uint32_t half = (e - b + 1) / 2;
    for (std::uint32_t k = 1; k <= half; ++k) {
        if (text.slice(b, b + k - 1) == text.slice(e - k + 1, e)) {
            best = std::max(best, 2 + max_blocks_brute(text, b + k, e - k));
        }
    }
    return best;
}

}  // namespace bpal::test
