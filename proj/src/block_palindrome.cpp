#include "bpal/block_palindrome.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bpal {

std::optional<std::uint32_t> shortest_border(const LceIndex& index, Span s) {
    if (s.empty() || s.begin < 1 || s.end > index.size()) {
        throw std::invalid_argument("shortest_border: span must be non-empty and within the text");
    }
    const std::uint32_t half = s.length() / 2;
    for (std::uint32_t k = 1; k <= half; ++k) {
        if (index.lce(s.begin, s.end - k + 1) >= k) return k;
    }
    return std::nullopt;
}

BlockPalindrome largest_block_palindrome(const LceIndex& index, Span s) {
    if (!s.empty() && (s.begin < 1 || s.end > index.size())) {
        throw std::invalid_argument("largest_block_palindrome: span outside the text");
    }
    BlockPalindrome bp;
    bp.span = s;
    bp.center2 = s.begin + s.end;  // the empty text span (1,0) yields the sentinel 1

    Pos b = s.begin;
    Pos e = s.end;
    while (b <= e) {
        // Shortest border of T[b..e]; stop at the unbordered residue.
        std::uint32_t k = 0;
        const std::uint32_t half = (e - b + 1) / 2;
        for (std::uint32_t cand = 1; cand <= half; ++cand) {
            if (index.lce(b, e - cand + 1) >= cand) {
                k = cand;
                break;
            }
        }
        if (k == 0) break;
        bp.arms.push_back(k);
        b += k;
        e -= k;
    }
    bp.center_block = Span(b, e);
    // Peeling goes outermost-in; stored order is innermost-first.
    std::reverse(bp.arms.begin(), bp.arms.end());
    return bp;
}

BlockPalindrome largest_block_palindrome(const Text& text) {
    if (text.empty()) return BlockPalindrome{};
    LceIndex index(text);
    return largest_block_palindrome(index, Span(1, text.size()));
}

namespace {

bool consistent_with(const BlockPalindrome& bp, const Text& text) {
    std::uint64_t arm_sum = 0;
    for (std::uint32_t a : bp.arms) {
        if (a == 0) return false;
        arm_sum += a;
    }
    if (!bp.center_block.empty() && bp.center_block.begin > bp.center_block.end) return false;
    if (bp.center_block.begin != bp.span.begin + arm_sum) return false;
    if (bp.center_block.end + arm_sum != bp.span.end) return false;
    if (bp.span.empty()) return true;
    return bp.span.begin >= 1 && bp.span.end <= text.size();
}

}  // namespace

std::string factorization_to_string(const BlockPalindrome& bp, const Text& text) {
    if (!consistent_with(bp, text)) {
        throw std::invalid_argument("factorization_to_string: factorization inconsistent with text");
    }
    std::string out;
    bool first = true;
    auto append = [&](Pos b, Pos e) {
        if (!first) out += '|';
        first = false;
        auto piece = text.slice(b, e);
        out.append(piece.data(), piece.size());
    };
    Pos left = bp.span.begin;
    for (auto it = bp.arms.rbegin(); it != bp.arms.rend(); ++it) {
        append(left, left + *it - 1);
        left += *it;
    }
    if (!bp.center_block.empty()) append(bp.center_block.begin, bp.center_block.end);
    Pos right = bp.center_block.end + 1;
    for (std::uint32_t a : bp.arms) {
        append(right, right + a - 1);
        right += a;
    }
    return out;
}

std::vector<std::string> validate(const BlockPalindrome& bp, const Text& text) {
    std::vector<std::string> violations;
    auto note = [&](const std::string& msg) { violations.push_back(msg); };

    if (!consistent_with(bp, text)) {
        note("span arithmetic does not match center block and arm lengths");
        return violations;
    }

    const Span c = bp.center_block;
    if (c.empty()) {
        if (bp.center2 % 2 == 0 || c != empty_center_span(bp.center2)) {
            note("empty center block must sit on a half-position in canonical form");
        }
    } else {
        if (c.begin + c.end != bp.center2) note("center block is not symmetric about the center");
    }

    auto naive_unbordered = [&](Pos b, Pos e) {
        const std::uint32_t len = e - b + 1;
        for (std::uint32_t k = 1; k < len; ++k) {
            if (text.slice(b, b + k - 1) == text.slice(e - k + 1, e)) return false;
        }
        return true;
    };

    if (!c.empty() && !naive_unbordered(c.begin, c.end)) {
        note("center block \"" + std::string(text.slice(c.begin, c.end)) + "\" is bordered");
    }

    Pos lend = c.begin;      // one past the end of the next left block, going outwards
    Pos rbegin = c.end + 1;  // begin of the next right block
    for (std::size_t i = 0; i < bp.arms.size(); ++i) {
        const std::uint32_t a = bp.arms[i];
        const Span left(lend - a, lend - 1);
        const Span right(rbegin, rbegin + a - 1);
        if (text.slice(left.begin, left.end) != text.slice(right.begin, right.end)) {
            note("arm " + std::to_string(i + 1) + " copies differ");
        } else if (!naive_unbordered(right.begin, right.end)) {
            note("arm " + std::to_string(i + 1) + " block \"" +
                 std::string(text.slice(right.begin, right.end)) + "\" is bordered");
        }
        lend -= a;
        rbegin += a;
    }
    return violations;
}

}  // namespace bpal
