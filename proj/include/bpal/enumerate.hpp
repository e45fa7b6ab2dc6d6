#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bpal/block_palindrome.hpp"
#include "bpal/lce.hpp"
#include "bpal/text.hpp"

namespace bpal {

/*
 * One pairing-block occurrence: the two equal, unbordered, non-overlapping
 * copies start at 2c - (right_begin + len - 1) and right_begin, where
 * len = right_end_excl - right_begin.
 */
struct PairTriple {
    Center2 center2;
    Pos right_begin;
    Pos right_end_excl;

    friend bool operator==(const PairTriple&, const PairTriple&) = default;
    friend auto operator<=>(const PairTriple&, const PairTriple&) = default;
};

/*
 * Sorted set of bordered candidate lengths, kept as disjoint, non-adjacent
 * intervals. Inserts only ever extend the tail, which is why they are O(1):
 * the per-anchor occurrence scan produces monotonically growing lower ends.
 */
class BorderIntervalSet {
public:
    void clear() { intervals_.clear(); }
    bool empty() const { return intervals_.empty(); }

    /// Add [lo, hi]; merges into the last interval when they touch.
    void insert(std::uint32_t lo, std::uint32_t hi);

    /// Invoke fn on every length in [1, cap] not covered by the set,
    /// in increasing order. O(1) amortized per reported length.
    template <typename Fn>
    void for_each_absent(std::uint32_t cap, Fn&& fn) const {
        std::uint32_t next = 1;
        for (const auto& [lo, hi] : intervals_) {
            if (lo > cap) break;
            for (std::uint32_t v = next; v < lo; ++v) fn(v);
            next = hi + 1;
            if (next > cap) return;
        }
        for (std::uint32_t v = next; v <= cap; ++v) fn(v);
    }

    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& intervals() const {
        return intervals_;
    }

private:
    std::vector<std::pair<std::uint32_t, std::uint32_t>> intervals_;
};

/*
 * Zero-initialized position table shared by all per-center assembly passes,
 * with a touched-entries log so each pass clears only what it wrote.
 */
class PropagationArray {
public:
    explicit PropagationArray(Pos n) : ends_(n + 2, 0), begins_(n + 2, 0), chain_at_(n + 2, 0) {}

    /// Record a block [right_begin, end_excl) of the current center; chain
    /// is the assembly chain the block belongs to.
    void mark(Pos right_begin, Pos end_excl, std::uint32_t chain) {
        ends_[end_excl] = right_begin;
        chain_at_[end_excl] = chain;
        begins_[right_begin] = 1;
        touched_.push_back(end_excl);
        touched_.push_back(right_begin);
    }

    /// right_begin of the block ending at end_excl - 1, or 0 when none.
    Pos block_ending_at(Pos end_excl) const { return ends_[end_excl]; }
    std::uint32_t chain_ending_at(Pos end_excl) const { return chain_at_[end_excl]; }
    bool block_begins_at(Pos p) const { return begins_[p] != 0; }

    /// Zero everything written since the last clear.
    void clear() {
        for (Pos p : touched_) {
            ends_[p] = 0;
            begins_[p] = 0;
        }
        touched_.clear();
    }

    /// Test hook for the clearing discipline.
    bool is_clear() const;

private:
    std::vector<Pos> ends_;            // the paper-style array A, indexed by end_excl
    std::vector<std::uint8_t> begins_;
    std::vector<std::uint32_t> chain_at_;  // valid only while ends_ is set
    std::vector<Pos> touched_;
};

using MbpSink = std::function<void(const BlockPalindrome&)>;

/// Ascending positions of every byte value, built in one bucket pass.
std::array<std::vector<Pos>, 256> occurrence_lists(const Text& text);

/// Number of same-symbol occurrence pairs. Every such pair contributes at
/// least one pairing-block triple, so this lower-bounds the enumeration's
/// output before running it.
std::uint64_t count_symbol_pairs(const Text& text);

/// Step (i): all pairing-block triples, unordered (per-anchor emission
/// order). The sink must not retain references.
void enumerate_pairs(const Text& text, const LceIndex& index,
                     const std::function<void(const PairTriple&)>& sink);
std::vector<PairTriple> enumerate_pairs(const Text& text, const LceIndex& index);

/// Radix sort by (center2, right_begin), stable, two counting passes.
void sort_triples(std::vector<PairTriple>& triples, Pos text_size);

/// Step (ii): connect adjacent pairing blocks per center into maximal block
/// palindromes; with min_size 1 also emit the unextendable unbordered center
/// substrings. Triples must be sorted as by sort_triples.
void assemble(const Text& text, const std::vector<PairTriple>& sorted_triples,
              PropagationArray& arr, int min_size, const MbpSink& sink);

/// Full pipeline: index, pairs, radix sort, assembly. Items arrive ordered
/// by (center2 ascending, center-block length descending).
void enumerate_mbp(const Text& text, int min_size, const MbpSink& sink);
MbpReport enumerate_mbp(const Text& text, int min_size);

}  // namespace bpal
