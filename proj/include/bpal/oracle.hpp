#pragma once

#include <cstdint>
#include <vector>

#include "bpal/block_palindrome.hpp"
#include "bpal/enumerate.hpp"
#include "bpal/text.hpp"

namespace bpal::oracle {

/// Largest input length accepted by the exhaustive oracles.
inline constexpr Pos kExhaustiveBound = 64;

/// Symbol-by-symbol longest common extension.
std::uint32_t naive_lce(const Text& text, Pos i, Pos j);

/// True iff no proper non-empty prefix of T[s] equals the same-length suffix.
bool is_unbordered(const Text& text, Span s);

/// Recursive shortest-border peel by direct comparison, no index involved.
BlockPalindrome oracle_largest(const Text& text, Span s);
BlockPalindrome oracle_largest(const Text& text);

/// Every maximal block palindrome of the text, by exhaustive search over
/// center substrings with greedy shortest outward extension. Items come in
/// the canonical order (center2 ascending, center-block length descending).
MbpReport oracle_mbp(const Text& text, int min_size, Pos bound = kExhaustiveBound);

/// Every pair of non-overlapping occurrences of an unbordered substring,
/// as triples, by full scan.
std::vector<PairTriple> oracle_pairs(const Text& text, Pos bound = kExhaustiveBound);

}  // namespace bpal::oracle
