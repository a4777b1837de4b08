#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraccover {

// Fixed-capacity set of vertex ids backed by 64-bit words.
// Capacity is set at construction; all binary operations require equal capacity.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits), words_(static_cast<std::size_t>((nbits + 63) / 64), 0) {
        if (nbits < 0) throw std::invalid_argument("Bitset: negative capacity");
    }

    static Bitset all(int nbits) {
        Bitset b(nbits);
        for (int i = 0; i < nbits; ++i) b.set(i);
        return b;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const {
        check_index(i);
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }
    void set(int i) {
        check_index(i);
        words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        check_index(i);
        words_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // set difference: *this \ o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset difference(Bitset a, const Bitset& b) { return a.subtract(b); }

    Bitset complement() const {
        Bitset r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.mask_tail();
        return r;
    }

    // Smallest set bit with index >= from, or -1.
    int next(int from = 0) const {
        if (from < 0) from = 0;
        if (from >= nbits_) return -1;
        std::size_t w = static_cast<std::size_t>(from >> 6);
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return static_cast<int>(w * 64) + std::countr_zero(cur);
            if (++w >= words_.size()) return -1;
            cur = words_[w];
        }
    }
    int lowest() const { return next(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int v = next(0); v >= 0; v = next(v + 1)) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

private:
    void check_index(int i) const {
        if (i < 0 || i >= nbits_) throw std::out_of_range("Bitset: index out of range");
    }
    void mask_tail() {
        int tail = nbits_ & 63;
        if (tail != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;

    friend bool canonical_less(const Bitset&, const Bitset&);
};

// Canonical order used when listing vertex sets: larger sets first, ties by
// the ascending-id element sequence (the set containing the smaller element
// at the first disagreement comes first).
inline bool canonical_less(const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca > cb;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        std::uint64_t d = a.words_[i] ^ b.words_[i];
        if (d) {
            int bit = std::countr_zero(d);
            return (a.words_[i] >> bit) & 1u;
        }
    }
    return false;
}

}  // namespace fraccover
