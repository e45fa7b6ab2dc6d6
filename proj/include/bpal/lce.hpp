#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "bpal/text.hpp"

namespace bpal {

/*
 * Constant-time longest-common-extension queries over a byte text.
 *
 * Built from the suffix order (prefix-doubling with counting sorts), the
 * longest-common-prefix array and a sparse range-minimum table, so
 * construction is O(N log N) and each query is O(1). The index is immutable
 * after construction and safe for concurrent read-only queries; the query
 * counter is atomic for that reason.
 */
class LceIndex {
public:
    explicit LceIndex(const Text& text);

    LceIndex(const LceIndex&) = delete;
    LceIndex& operator=(const LceIndex&) = delete;

    /// Length of the longest common prefix of the suffixes starting at the
    /// 1-based positions i and j. Positions must be in [1, N].
    std::uint32_t lce(Pos i, Pos j) const;

    const Text& text() const { return *text_; }
    Pos size() const { return n_; }

    /// Number of lce() calls answered so far (instrumentation).
    std::uint64_t query_count() const { return queries_.load(std::memory_order_relaxed); }
    void reset_query_count() const { queries_.store(0, std::memory_order_relaxed); }

private:
    const Text* text_;
    Pos n_;
    std::vector<std::uint32_t> rank_;                 // suffix rank per 0-based start
    std::vector<std::uint32_t> lcp_;                  // lcp_[r] = LCP of suffixes ranked r-1, r
    std::vector<std::vector<std::uint32_t>> min_;     // min_[k][r] = min lcp_[r .. r+2^k-1]
    mutable std::atomic<std::uint64_t> queries_{0};
};

}  // namespace bpal
