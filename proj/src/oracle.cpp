#include "bpal/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpal::oracle {

namespace {

void check_bound(const Text& text, Pos bound, const char* who) {
    if (text.size() > bound) {
        throw std::invalid_argument(std::string(who) + ": text exceeds the exhaustive bound");
    }
}

}  // namespace

std::uint32_t naive_lce(const Text& text, Pos i, Pos j) {
    if (i < 1 || j < 1 || i > text.size() || j > text.size()) {
        throw std::invalid_argument("naive_lce: position out of range");
    }
    std::uint32_t len = 0;
    while (i + len <= text.size() && j + len <= text.size() && text.at(i + len) == text.at(j + len)) {
        ++len;
    }
    return len;
}

bool is_unbordered(const Text& text, Span s) {
    if (s.empty() || s.begin < 1 || s.end > text.size()) {
        throw std::invalid_argument("is_unbordered: span must be non-empty and within the text");
    }
    const std::uint32_t len = s.length();
    for (std::uint32_t k = 1; k < len; ++k) {
        if (text.slice(s.begin, s.begin + k - 1) == text.slice(s.end - k + 1, s.end)) return false;
    }
    return true;
}

BlockPalindrome oracle_largest(const Text& text, Span s) {
    BlockPalindrome bp;
    bp.span = s;
    bp.center2 = s.begin + s.end;

    Pos b = s.begin;
    Pos e = s.end;
    while (b <= e) {
        std::uint32_t k = 0;
        const std::uint32_t half = (e - b + 1) / 2;
        for (std::uint32_t cand = 1; cand <= half; ++cand) {
            if (text.slice(b, b + cand - 1) == text.slice(e - cand + 1, e)) {
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
    std::reverse(bp.arms.begin(), bp.arms.end());
    return bp;
}

BlockPalindrome oracle_largest(const Text& text) {
    if (text.empty()) return BlockPalindrome{};
    return oracle_largest(text, Span(1, text.size()));
}

MbpReport oracle_mbp(const Text& text, int min_size, Pos bound) {
    check_bound(text, bound, "oracle_mbp");
    if (min_size != 1 && min_size != 2) {
        throw std::invalid_argument("oracle_mbp: min_size must be 1 or 2");
    }
    const Pos n = text.size();
    MbpReport report;

    // Shortest equal flanking blocks around [b..e], tried by direct
    // comparison; such a shortest extension is necessarily unbordered.
    auto shortest_extension = [&](Pos b, Pos e) -> std::uint32_t {
        for (std::uint32_t len = 1; b > len && e + len <= n; ++len) {
            if (text.slice(b - len, b - 1) == text.slice(e + 1, e + len)) return len;
        }
        return 0;
    };

    auto grow_item = [&](Center2 c2, Span center) {
        BlockPalindrome bp;
        bp.center2 = c2;
        bp.center_block = center;
        Pos lb = center.begin;
        Pos re = center.end;
        while (std::uint32_t len = shortest_extension(lb, re)) {
            bp.arms.push_back(len);
            lb -= len;
            re += len;
        }
        bp.span = Span(lb, re);
        if (bp.size() > 0 && static_cast<int>(bp.size()) >= min_size) {
            report.items.push_back(std::move(bp));
        }
    };

    for (Center2 c2 = 2; c2 <= 2 * n; ++c2) {
        // Candidate center blocks symmetric about c2/2, longest first so the
        // canonical per-center order falls out directly.
        const Pos lo = center_ceil(c2);
        for (Pos e = std::min<Pos>(n, c2 - 1); e >= lo; --e) {
            Span center(c2 - e, e);
            if (is_unbordered(text, center)) grow_item(c2, center);
        }
        if (c2 % 2 == 1) grow_item(c2, empty_center_span(c2));
    }
    for (const auto& item : report.items) report.total_size += item.size();
    return report;
}

std::vector<PairTriple> oracle_pairs(const Text& text, Pos bound) {
    check_bound(text, bound, "oracle_pairs");
    const Pos n = text.size();
    std::vector<PairTriple> out;
    for (Pos bl = 1; bl <= n; ++bl) {
        for (Pos br = bl + 1; br <= n; ++br) {
            const std::uint32_t cap = std::min<std::uint32_t>(br - bl, n - br + 1);
            for (std::uint32_t len = 1; len <= cap; ++len) {
                if (text.slice(bl, bl + len - 1) != text.slice(br, br + len - 1)) continue;
                if (!is_unbordered(text, Span(bl, bl + len - 1))) continue;
                out.push_back(PairTriple{bl + br + len - 1, br, br + len});
            }
        }
    }
    return out;
}

}  // namespace bpal::oracle
