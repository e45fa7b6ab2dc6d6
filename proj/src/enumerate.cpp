#include "bpal/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpal {

void BorderIntervalSet::insert(std::uint32_t lo, std::uint32_t hi) {
    if (lo > hi) return;
    if (!intervals_.empty()) {
        auto& last = intervals_.back();
        if (lo < last.first) {
            throw std::invalid_argument("BorderIntervalSet: inserts must be monotone");
        }
        if (lo <= last.second + 1) {
            last.second = std::max(last.second, hi);
            return;
        }
    }
    intervals_.emplace_back(lo, hi);
}

bool PropagationArray::is_clear() const {
    if (!touched_.empty()) return false;
    for (Pos v : ends_)
        if (v != 0) return false;
    for (std::uint8_t v : begins_)
        if (v != 0) return false;
    return true;
}

std::array<std::vector<Pos>, 256> occurrence_lists(const Text& text) {
    std::array<std::vector<Pos>, 256> lists;
    for (Pos i = 1; i <= text.size(); ++i) lists[text.at(i)].push_back(i);
    return lists;
}

std::uint64_t count_symbol_pairs(const Text& text) {
    std::uint64_t counts[256] = {};
    for (Pos i = 1; i <= text.size(); ++i) ++counts[text.at(i)];
    std::uint64_t pairs = 0;
    for (std::uint64_t k : counts) pairs += k * (k - 1) / 2;
    return pairs;
}

void enumerate_pairs(const Text& text, const LceIndex& index,
                     const std::function<void(const PairTriple&)>& sink) {
    if (&index.text() != &text || index.size() != text.size()) {
        throw std::invalid_argument("enumerate_pairs: index was not built over this text");
    }
    const auto lists = occurrence_lists(text);
    BorderIntervalSet bordered;  // the set L, keyed per left anchor

    for (const auto& occ : lists) {
        for (std::size_t a = 0; a + 1 < occ.size(); ++a) {
            const Pos b = occ[a];
            bordered.clear();
            for (std::size_t i = a + 1; i < occ.size(); ++i) {
                const Pos bi = occ[i];
                const std::uint32_t ext = index.lce(b, bi);
                const std::uint32_t gap = bi - b;
                // Lengths beyond the gap would overlap; lengths in the set
                // are bordered. Everything else is an unbordered pair.
                bordered.for_each_absent(std::min(ext, gap), [&](std::uint32_t len) {
                    sink(PairTriple{b + bi + len - 1, bi, bi + len});
                });
                bordered.insert(gap + 1, gap + ext);
            }
        }
    }
}

std::vector<PairTriple> enumerate_pairs(const Text& text, const LceIndex& index) {
    std::vector<PairTriple> out;
    enumerate_pairs(text, index, [&](const PairTriple& t) { out.push_back(t); });
    return out;
}

void sort_triples(std::vector<PairTriple>& triples, Pos text_size) {
    for (const auto& t : triples) {
        if (t.right_begin < 1 || t.right_end_excl <= t.right_begin ||
            t.right_end_excl > text_size + 1 || t.center2 < 2 || t.center2 > 2 * text_size) {
            throw std::invalid_argument("sort_triples: triple out of range for this text size");
        }
    }
    std::vector<PairTriple> tmp(triples.size());
    std::vector<std::uint32_t> count;

    auto pass = [&](std::size_t keys, auto key_of) {
        count.assign(keys + 1, 0);
        for (const auto& t : triples) ++count[key_of(t)];
        std::uint32_t sum = 0;
        for (auto& c : count) {
            std::uint32_t next = sum + c;
            c = sum;
            sum = next;
        }
        for (const auto& t : triples) tmp[count[key_of(t)]++] = t;
        triples.swap(tmp);
    };

    pass(text_size + 1, [](const PairTriple& t) { return t.right_begin; });
    pass(2 * static_cast<std::size_t>(text_size) + 1, [](const PairTriple& t) { return t.center2; });
}

namespace {

struct Chain {
    Pos root_right_begin;
    std::int32_t last_arm;  // index into the arm pool, -1 at the root
};

struct ArmNode {
    std::uint32_t len;
    std::int32_t prev;
};

}  // namespace

void assemble(const Text& text, const std::vector<PairTriple>& sorted_triples,
              PropagationArray& arr, int min_size, const MbpSink& sink) {
    if (min_size != 1 && min_size != 2) {
        throw std::invalid_argument("assemble: min_size must be 1 or 2");
    }
    const Pos n = text.size();
    for (std::size_t i = 0; i < sorted_triples.size(); ++i) {
        const auto& t = sorted_triples[i];
        if (t.right_begin < 1 || t.right_end_excl <= t.right_begin || t.right_end_excl > n + 1 ||
            t.center2 < 2 || t.center2 > 2 * n) {
            throw std::invalid_argument("assemble: triple out of range for this text");
        }
        if (i > 0) {
            const auto& p = sorted_triples[i - 1];
            if (std::pair(p.center2, p.right_begin) > std::pair(t.center2, t.right_begin)) {
                throw std::invalid_argument("assemble: triples must be sorted by (center2, right_begin)");
            }
        }
    }

    std::vector<Chain> chains;
    std::vector<ArmNode> arm_pool;
    std::vector<Pos> size1_ends;
    BlockPalindrome item;

    auto emit_chain = [&](Center2 c2, const Chain& ch) {
        item.center2 = c2;
        item.center_block = Span(c2 - ch.root_right_begin + 1, ch.root_right_begin - 1);
        item.arms.clear();
        std::uint64_t arm_sum = 0;
        for (std::int32_t a = ch.last_arm; a >= 0; a = arm_pool[a].prev) {
            item.arms.push_back(arm_pool[a].len);
            arm_sum += arm_pool[a].len;
        }
        std::reverse(item.arms.begin(), item.arms.end());  // innermost-first
        item.span = Span(item.center_block.begin - static_cast<Pos>(arm_sum),
                         item.center_block.end + static_cast<Pos>(arm_sum));
        sink(item);
    };

    auto emit_size1 = [&](Center2 c2, Pos e) {
        item.center2 = c2;
        item.center_block = Span(static_cast<Pos>(c2 - e), e);
        item.arms.clear();
        item.span = item.center_block;
        sink(item);
    };

    // Triples of one center, ascending right_begin: grow chains by adjacency.
    auto process_center = [&](Center2 c2, std::size_t lo, std::size_t hi) {
        chains.clear();
        arm_pool.clear();
        for (std::size_t t = lo; t < hi; ++t) {
            const auto& tr = sorted_triples[t];
            std::uint32_t chain_id;
            if (arr.block_ending_at(tr.right_begin) != 0) {
                chain_id = arr.chain_ending_at(tr.right_begin);
            } else {
                chain_id = static_cast<std::uint32_t>(chains.size());
                chains.push_back(Chain{tr.right_begin, -1});
            }
            arm_pool.push_back(ArmNode{tr.right_end_excl - tr.right_begin, chains[chain_id].last_arm});
            chains[chain_id].last_arm = static_cast<std::int32_t>(arm_pool.size()) - 1;
            arr.mark(tr.right_begin, tr.right_end_excl, chain_id);
        }

        size1_ends.clear();
        if (min_size == 1) {
            // A position e is an ending position of some pairing block iff
            // T[2c-e..e] is bordered; a block beginning at e+1 extends it
            // outwards. What remains is a maximal block palindrome of size 1.
            const Pos floor_e = center_ceil(c2);
            for (Pos e = std::min<Pos>(n, c2 - 1); e >= floor_e; --e) {
                if (arr.block_ending_at(e + 1) != 0) continue;
                if (arr.block_begins_at(e + 1)) continue;
                size1_ends.push_back(e);
            }
        }

        // Canonical per-center order is center-block length descending, i.e.
        // descending root begin merged with descending e+1; keys never tie.
        std::size_t ci = chains.size();
        std::size_t si = 0;
        while (ci > 0 || si < size1_ends.size()) {
            const bool take_chain =
                ci > 0 && (si >= size1_ends.size() ||
                           chains[ci - 1].root_right_begin > size1_ends[si] + 1);
            if (take_chain) {
                emit_chain(c2, chains[ci - 1]);
                --ci;
            } else {
                emit_size1(c2, size1_ends[si]);
                ++si;
            }
        }
        arr.clear();
    };

    std::size_t i = 0;
    const std::size_t total = sorted_triples.size();
    if (min_size == 1) {
        // Every center participates: centers without pairing blocks still
        // carry size-1 items.
        for (std::uint64_t c2 = 2; c2 <= 2 * static_cast<std::uint64_t>(n); ++c2) {
            std::size_t j = i;
            while (j < total && sorted_triples[j].center2 == c2) ++j;
            process_center(static_cast<Center2>(c2), i, j);
            i = j;
        }
    } else {
        while (i < total) {
            const Center2 c2 = sorted_triples[i].center2;
            std::size_t j = i;
            while (j < total && sorted_triples[j].center2 == c2) ++j;
            process_center(c2, i, j);
            i = j;
        }
    }
}

void enumerate_mbp(const Text& text, int min_size, const MbpSink& sink) {
    if (min_size != 1 && min_size != 2) {
        throw std::invalid_argument("enumerate_mbp: min_size must be 1 or 2");
    }
    if (text.empty()) return;
    LceIndex index(text);
    std::vector<PairTriple> triples = enumerate_pairs(text, index);
    sort_triples(triples, text.size());
    PropagationArray arr(text.size());
    assemble(text, triples, arr, min_size, sink);
}

MbpReport enumerate_mbp(const Text& text, int min_size) {
    MbpReport report;
    enumerate_mbp(text, min_size, [&](const BlockPalindrome& bp) {
        report.items.push_back(bp);
        report.total_size += bp.size();
    });
    return report;
}

}  // namespace bpal
