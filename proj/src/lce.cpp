#include "bpal/lce.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bpal {

namespace {

// Suffix order by prefix doubling. Each round sorts by the (rank, rank+len)
// key pair with two counting passes, so the whole build is O(N log N).
std::vector<std::uint32_t> suffix_array(const Text& text) {
    const std::size_t n = text.size();
    std::vector<std::uint32_t> sa(n), rank(n), tmp(n), count;

    for (std::size_t i = 0; i < n; ++i) {
        sa[i] = static_cast<std::uint32_t>(i);
        rank[i] = text.at(static_cast<Pos>(i + 1));
    }

    auto counting_pass = [&](std::size_t keys, auto key_of) {
        count.assign(keys + 1, 0);
        for (std::size_t i = 0; i < n; ++i) ++count[key_of(sa[i])];
        std::uint32_t sum = 0;
        for (auto& c : count) {
            std::uint32_t next = sum + c;
            c = sum;
            sum = next;
        }
        for (std::size_t i = 0; i < n; ++i) tmp[count[key_of(sa[i])]++] = sa[i];
        sa.swap(tmp);
    };

    std::vector<std::uint32_t> next_rank(n);

    // Initial order by first symbol, then compact ranks.
    counting_pass(256, [&](std::uint32_t s) { return rank[s]; });
    std::uint32_t classes = 1;
    next_rank[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (rank[sa[i]] != rank[sa[i - 1]]) ++classes;
        next_rank[sa[i]] = classes - 1;
    }
    rank.swap(next_rank);
    for (std::size_t len = 1; len < n && classes < n; len *= 2) {
        // Second key: rank of the suffix len positions later, 0 when absent.
        counting_pass(classes + 1, [&](std::uint32_t s) -> std::uint32_t {
            return s + len < n ? rank[s + len] + 1 : 0;
        });
        counting_pass(classes, [&](std::uint32_t s) { return rank[s]; });

        auto key = [&](std::uint32_t s) {
            std::uint32_t second = s + len < n ? rank[s + len] + 1 : 0;
            return std::pair<std::uint32_t, std::uint32_t>(rank[s], second);
        };
        std::uint32_t r = 0;
        next_rank[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (key(sa[i]) != key(sa[i - 1])) ++r;
            next_rank[sa[i]] = r;
        }
        rank.swap(next_rank);
        classes = r + 1;
    }
    return sa;
}

}  // namespace

LceIndex::LceIndex(const Text& text) : text_(&text), n_(text.size()) {
    if (n_ == 0) return;
    const std::size_t n = n_;

    std::vector<std::uint32_t> sa = suffix_array(text);
    rank_.resize(n);
    for (std::size_t r = 0; r < n; ++r) rank_[sa[r]] = static_cast<std::uint32_t>(r);

    // Kasai: lcp_[r] is the LCP of the suffixes ranked r-1 and r.
    lcp_.assign(n, 0);
    std::uint32_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank_[i] == 0) {
            h = 0;
            continue;
        }
        std::size_t j = sa[rank_[i] - 1];
        while (i + h < n && j + h < n &&
               text.at(static_cast<Pos>(i + h + 1)) == text.at(static_cast<Pos>(j + h + 1))) {
            ++h;
        }
        lcp_[rank_[i]] = h;
        if (h > 0) --h;
    }

    min_.clear();
    min_.push_back(lcp_);
    for (std::size_t width = 2; width <= n; width *= 2) {
        const auto& prev = min_.back();
        std::vector<std::uint32_t> level(n - width + 1);
        for (std::size_t i = 0; i + width <= n; ++i) {
            level[i] = std::min(prev[i], prev[i + width / 2]);
        }
        min_.push_back(std::move(level));
    }
}

std::uint32_t LceIndex::lce(Pos i, Pos j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) {
        throw std::invalid_argument("LceIndex::lce: position out of range");
    }
    queries_.fetch_add(1, std::memory_order_relaxed);
    if (i == j) return n_ - i + 1;

    std::uint32_t lo = rank_[i - 1];
    std::uint32_t hi = rank_[j - 1];
    if (lo > hi) std::swap(lo, hi);
    ++lo;  // min over lcp_[lo..hi]
    const std::uint32_t width = hi - lo + 1;
    const unsigned k = std::bit_width(width) - 1;
    return std::min(min_[k][lo], min_[k][hi - (1u << k) + 1]);
}

}  // namespace bpal
