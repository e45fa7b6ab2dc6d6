#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bpal {

/// 1-based position in a text.
using Pos = std::uint32_t;

/*
 * Immutable byte text over the 256-symbol alphabet.
 * Positions are 1-based throughout the library; T[i..j] is empty whenever j < i.
 */
class Text {
public:
    Text() = default;
    explicit Text(std::string bytes) : bytes_(std::move(bytes)) {
        if (bytes_.size() > max_size()) {
            throw std::invalid_argument("Text: input longer than 2^31-1 bytes");
        }
    }

    Pos size() const { return static_cast<Pos>(bytes_.size()); }
    bool empty() const { return bytes_.empty(); }

    /// Symbol at 1-based position i.
    unsigned char at(Pos i) const { return static_cast<unsigned char>(bytes_[i - 1]); }

    std::string_view bytes() const { return bytes_; }

    /// Substring T[i..j], empty when j < i.
    std::string_view slice(Pos i, Pos j) const {
        if (j < i) return {};
        return std::string_view(bytes_).substr(i - 1, j - i + 1);
    }

    static constexpr std::size_t max_size() { return 0x7fffffffu; }

private:
    std::string bytes_;
};

/*
 * Closed 1-based interval [begin..end]. The canonical empty span is
 * end == begin - 1; anything else requires begin <= end.
 */
struct Span {
    Pos begin = 1;
    Pos end = 0;

    Span() = default;
    Span(Pos b, Pos e) : begin(b), end(e) {}

    bool empty() const { return end + 1 == begin; }
    std::uint32_t length() const { return empty() ? 0 : end - begin + 1; }

    friend bool operator==(const Span&, const Span&) = default;
};

}  // namespace bpal
