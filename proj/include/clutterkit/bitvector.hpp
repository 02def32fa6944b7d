#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clutterkit {

/// Fixed-width vector over GF(2). Coordinates are 0-based; widths up to 4096.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(int width) : width_(width) {
        if (width < 0 || width > kMaxWidth) throw std::invalid_argument("BitVector: bad width");
        words_.assign(word_count(width), 0);
    }

    static BitVector from_string(std::string_view bits) {
        BitVector v(static_cast<int>(bits.size()));
        for (int i = 0; i < v.width_; ++i) {
            if (bits[i] == '1')
                v.set(i, true);
            else if (bits[i] != '0')
                throw std::invalid_argument("BitVector: expected 0/1 string");
        }
        return v;
    }

    static BitVector from_support(int width, const std::vector<int>& coords) {
        BitVector v(width);
        for (int c : coords) v.set(c, true);
        return v;
    }

    static BitVector unit(int width, int coord) {
        BitVector v(width);
        v.set(coord, true);
        return v;
    }

    static BitVector ones(int width) {
        BitVector v(width);
        for (auto& w : v.words_) w = ~std::uint64_t{0};
        v.trim();
        return v;
    }

    int width() const { return width_; }

    bool get(int i) const {
        check_coord(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i, bool value) {
        check_coord(i);
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    bool zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int popcount() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    /// Smallest set coordinate, or -1 when zero.
    int lowest_set() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k) * 64 + __builtin_ctzll(words_[k]);
        return -1;
    }

    BitVector& operator^=(const BitVector& o) {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    BitVector& operator&=(const BitVector& o) {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    BitVector& operator|=(const BitVector& o) {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    BitVector complement() const {
        BitVector v(*this);
        for (auto& w : v.words_) w = ~w;
        v.trim();
        return v;
    }

    bool subset_of(const BitVector& o) const {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool intersects(const BitVector& o) const {
        check_width(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    /// GF(2) dot product.
    bool dot(const BitVector& o) const {
        check_width(o);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
        return __builtin_popcountll(acc) & 1;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitVector& a, const BitVector& b) { return !(a == b); }

    /// Order as 0/1 strings read from coordinate 0 ("0" < "1").
    static bool lex_less(const BitVector& a, const BitVector& b) {
        a.check_width(b);
        for (std::size_t k = 0; k < a.words_.size(); ++k) {
            std::uint64_t d = a.words_[k] ^ b.words_[k];
            if (d) {
                int bit = __builtin_ctzll(d);
                return ((a.words_[k] >> bit) & 1u) == 0;
            }
        }
        return false;
    }

    /// Order as ascending label sequences: {1,2} < {1,3} < {2}; a prefix sorts first.
    static bool set_less(const BitVector& a, const BitVector& b) {
        a.check_width(b);
        for (std::size_t k = 0; k < a.words_.size(); ++k) {
            std::uint64_t d = a.words_[k] ^ b.words_[k];
            if (!d) continue;
            int bit = __builtin_ctzll(d);
            bool a_has = (a.words_[k] >> bit) & 1u;
            // The one holding the first differing coordinate comes first,
            // unless the other has no later element (then it is a strict prefix).
            const BitVector& other = a_has ? b : a;
            bool other_has_later = false;
            for (std::size_t j = k; j < a.words_.size() && !other_has_later; ++j) {
                std::uint64_t rest = other.words_[j];
                if (j == k) rest &= ~(((std::uint64_t{1} << bit) << 1) - 1);
                if (rest) other_has_later = true;
            }
            return a_has ? other_has_later : !other_has_later;
        }
        return false;
    }

    std::string to_string() const {
        std::string s(width_, '0');
        for (int i = 0; i < width_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    std::vector<int> support() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int bit = __builtin_ctzll(w);
                out.push_back(static_cast<int>(k) * 64 + bit);
                w &= w - 1;
            }
        }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(width_);
        for (auto w : words_) h = h * 1099511628211ull + static_cast<std::size_t>(w);
        return h;
    }

    static constexpr int kMaxWidth = 4096;

private:
    static std::size_t word_count(int width) { return (static_cast<std::size_t>(width) + 63) / 64; }

    void check_coord(int i) const {
        if (i < 0 || i >= width_) throw std::out_of_range("BitVector: coordinate out of range");
    }
    void check_width(const BitVector& o) const {
        if (width_ != o.width_) throw std::invalid_argument("BitVector: width mismatch");
    }
    void trim() {
        if (width_ & 63) words_.back() &= (std::uint64_t{1} << (width_ & 63)) - 1;
    }

    int width_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

struct BitVectorLex {
    bool operator()(const BitVector& a, const BitVector& b) const { return BitVector::lex_less(a, b); }
};

struct BitVectorSetOrder {
    bool operator()(const BitVector& a, const BitVector& b) const { return BitVector::set_less(a, b); }
};

}  // namespace clutterkit
