#ifndef BFSWITCH_BITSTRING_HPP
#define BFSWITCH_BITSTRING_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bfswitch {

// Widest supported match field set (eth dst/src + vlan + v6 src/dst + flow label).
inline constexpr int kMaxBitWidth = 384;

// Fixed-width bitstring, bit 0 = least significant. Hex form is
// most-significant nibble first with exactly width/4 digits.
class BitString {
public:
    BitString() = default;

    explicit BitString(int width) : width_(width) {
        if (width <= 0 || width > kMaxBitWidth || width % 4 != 0)
            throw std::invalid_argument("bitstring width must be in (0, " +
                                        std::to_string(kMaxBitWidth) + "] and a multiple of 4");
    }

    static BitString from_hex(std::string_view hex, int width) {
        BitString b(width);
        if (static_cast<int>(hex.size()) != width / 4)
            throw std::invalid_argument("hex literal must have exactly width/4 digits");
        for (int i = 0; i < static_cast<int>(hex.size()); ++i) {
            char c = hex[i];
            int nib;
            if (c >= '0' && c <= '9') nib = c - '0';
            else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
            else throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
            int shift = width - 4 * (i + 1);  // bit offset of this nibble
            b.words_[shift / 64] |= static_cast<uint64_t>(nib) << (shift % 64);
        }
        return b;
    }

    int width() const { return width_; }

    bool get(int i) const {
        check_index(i);
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    void set(int i, bool v = true) {
        check_index(i);
        if (v) words_[i / 64] |= uint64_t{1} << (i % 64);
        else   words_[i / 64] &= ~(uint64_t{1} << (i % 64));
    }

    BitString operator|(const BitString& o) const {
        check_same_width(o);
        BitString r(width_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | o.words_[k];
        return r;
    }

    BitString& operator|=(const BitString& o) {
        check_same_width(o);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    BitString operator&(const BitString& o) const {
        check_same_width(o);
        BitString r(width_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
        return r;
    }

    bool operator==(const BitString& o) const = default;

    bool is_zero() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    int popcount() const {
        int n = 0;
        for (uint64_t w : words_) n += std::popcount(w);
        return n;
    }

    // true iff every set bit of sub is also set here (sub == sub & *this).
    bool contains(const BitString& sub) const {
        check_same_width(sub);
        for (size_t k = 0; k < words_.size(); ++k)
            if ((sub.words_[k] & words_[k]) != sub.words_[k]) return false;
        return true;
    }

    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s(width_ / 4, '0');
        for (int i = 0; i < width_ / 4; ++i) {
            int shift = width_ - 4 * (i + 1);
            s[i] = digits[(words_[shift / 64] >> (shift % 64)) & 0xf];
        }
        return s;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= width_) throw std::out_of_range("bit index out of range");
    }
    void check_same_width(const BitString& o) const {
        if (width_ != o.width_) throw std::invalid_argument("bitstring width mismatch");
    }

    std::array<uint64_t, kMaxBitWidth / 64> words_{};
    int width_ = 0;
};

}  // namespace bfswitch

#endif
