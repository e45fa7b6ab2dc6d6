#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bpal/lce.hpp"
#include "bpal/text.hpp"

namespace bpal {

/*
 * Centers live on the half-position grid, stored doubled so that all
 * arithmetic stays integral: center2 = 2c. Even center2 is an integer
 * position (a symbol sits on the center), odd center2 falls between two
 * positions (even or empty center block). Valid range is [2, 2N]; the
 * value 1 is the sentinel for the empty text.
 */
using Center2 = std::uint32_t;

inline constexpr Center2 kEmptyTextCenter2 = 1;

/// Smallest integer position at or right of the center.
inline Pos center_ceil(Center2 center2) { return static_cast<Pos>((center2 + 1) / 2); }

/// Canonical empty center block for a half-position center.
inline Span empty_center_span(Center2 center2) {
    Pos p = center_ceil(center2);
    return Span(p, p - 1);
}

/*
 * A symmetric factorization of T[span]: arm blocks mirrored around the
 * center block. Arm lengths are stored innermost-first. In canonical
 * (largest / maximal) form every block is unbordered.
 */
struct BlockPalindrome {
    Center2 center2 = kEmptyTextCenter2;
    Span center_block;                 // symmetric about the center, may be empty
    std::vector<std::uint32_t> arms;   // innermost-first block lengths
    Span span;                         // whole extent in T

    /// Number of non-empty blocks.
    std::uint32_t size() const {
        return 2 * static_cast<std::uint32_t>(arms.size()) + (center_block.empty() ? 0 : 1);
    }
    std::uint32_t length() const { return span.length(); }

    friend bool operator==(const BlockPalindrome&, const BlockPalindrome&) = default;
};

/// Enumeration result: items plus the summed size, the output-size measure.
struct MbpReport {
    std::vector<BlockPalindrome> items;
    std::uint64_t total_size = 0;
};

/// Smallest k such that T[b..b+k-1] is a border of the span, or nullopt if
/// the span is unbordered. The scan tries k = 1, 2, ... and checks each
/// candidate with one LCE query.
std::optional<std::uint32_t> shortest_border(const LceIndex& index, Span s);

/// Greedy factorization of T[span]: peel the shortest border until the
/// residue is unbordered or empty. Issues O(|span|) LCE queries.
BlockPalindrome largest_block_palindrome(const LceIndex& index, Span s);

/// Whole-text convenience; the empty text yields the size-0 sentinel.
BlockPalindrome largest_block_palindrome(const Text& text);

/// Blocks of T[span] joined by '|', e.g. "to|kyo|_|and|_|kyo|to".
std::string factorization_to_string(const BlockPalindrome& bp, const Text& text);

/// All invariant violations of bp against text: arm symmetry, span
/// arithmetic, unborderedness of every block. Empty result means valid.
std::vector<std::string> validate(const BlockPalindrome& bp, const Text& text);

}  // namespace bpal
