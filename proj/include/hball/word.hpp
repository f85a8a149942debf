// Fixed-length binary words stored as packed 64-bit blocks.

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hball {

class Word {
public:
    /// All-zero word of length n.
    explicit Word(std::size_t n) : n_(n), blocks_((n + 63) / 64, 0) {
        if (n == 0) throw std::invalid_argument("Word: length must be positive");
    }

    static Word from_string(std::string_view s) {
        Word w(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') {
                w.set_bit(i, true);
            } else if (s[i] != '0') {
                throw std::invalid_argument("Word: expected only '0'/'1' characters");
            }
        }
        return w;
    }

    std::size_t size() const { return n_; }

    bool bit(std::size_t i) const {
        check_index(i);
        return (blocks_[i / 64] >> (i % 64)) & 1u;
    }

    void set_bit(std::size_t i, bool v) {
        check_index(i);
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (v) {
            blocks_[i / 64] |= mask;
        } else {
            blocks_[i / 64] &= ~mask;
        }
    }

    /// Set every bit in [first, last) to v.
    void set_range(std::size_t first, std::size_t last, bool v) {
        if (first > last || last > n_) throw std::out_of_range("Word::set_range");
        for (std::size_t i = first; i < last; ++i) set_bit(i, v);
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto b : blocks_) w += static_cast<std::size_t>(std::popcount(b));
        return w;
    }

    Word operator^(const Word& other) const {
        if (n_ != other.n_) throw std::invalid_argument("Word: length mismatch");
        Word out(n_);
        for (std::size_t i = 0; i < blocks_.size(); ++i) out.blocks_[i] = blocks_[i] ^ other.blocks_[i];
        return out;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (bit(i)) s[i] = '1';
        return s;
    }

    /// The word as an integer mask; only valid for n <= 64 (oracle-scale words).
    std::uint64_t as_mask64() const {
        if (n_ > 64) throw std::invalid_argument("Word::as_mask64: length exceeds 64");
        return blocks_[0];
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    void check_index(std::size_t i) const {
        if (i >= n_) throw std::out_of_range("Word: bit index out of range");
    }

    std::size_t n_;
    std::vector<std::uint64_t> blocks_;
};

/// Number of differing coordinates of two equal-length words.
inline std::size_t hamming_distance(const Word& x, const Word& y) {
    return (x ^ y).weight();
}

}  // namespace hball
