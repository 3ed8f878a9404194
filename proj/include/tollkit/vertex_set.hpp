#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tollkit {

// Fixed-width bitset over vertex indices 0..width-1. Width is bound at
// construction; set algebra between sets of different widths is a logic bug.
class vertex_set {
public:
    vertex_set() = default;

    explicit vertex_set(int width) : n_(width), words_((width + 63) / 64, 0) {
        assert(width >= 0);
    }

    static vertex_set of(int width, std::initializer_list<int> vs) {
        vertex_set s(width);
        for (int v : vs) s.set(v);
        return s;
    }

    static vertex_set single(int width, int v) {
        vertex_set s(width);
        s.set(v);
        return s;
    }

    static vertex_set full(int width) {
        vertex_set s(width);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.mask_tail();
        return s;
    }

    int width() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    // Lowest set index, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    vertex_set& operator|=(const vertex_set& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    vertex_set& operator&=(const vertex_set& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // Set difference.
    vertex_set& operator-=(const vertex_set& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend vertex_set operator|(vertex_set a, const vertex_set& b) { return a |= b; }
    friend vertex_set operator&(vertex_set a, const vertex_set& b) { return a &= b; }
    friend vertex_set operator-(vertex_set a, const vertex_set& b) { return a -= b; }

    vertex_set complement() const {
        vertex_set r(*this);
        for (auto& w : r.words_) w = ~w;
        r.mask_tail();
        return r;
    }

    bool intersects(const vertex_set& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const vertex_set& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const vertex_set& a, const vertex_set& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int v = static_cast<int>(i * 64 + std::countr_zero(w));
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // "{0,2,3}" -- used in reports and CLI output.
    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](int v) {
            if (sep) s += ',';
            s += std::to_string(v);
            sep = true;
        });
        s += '}';
        return s;
    }

private:
    void mask_tail() {
        int tail = n_ & 63;
        if (tail != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace tollkit
