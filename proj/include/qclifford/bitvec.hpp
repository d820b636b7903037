#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace qcl {

// Packed GF(2) vector of fixed dimension. Bit i lives in word i/64, bit i%64.
// Ordering compares the raw value (most significant word first), so sorting a
// set of BitVecs gives the ascending-bitmask order used for canonical output.
struct BitVec {
    int dim = 0;
    std::vector<std::uint64_t> w;

    BitVec() = default;
    explicit BitVec(int n) : dim(n), w((n + 63) / 64, 0) {}

    static BitVec unit(int n, int i) {
        BitVec v(n);
        v.set(i);
        return v;
    }

    // Low 64 bits interpreted as a mask (dim <= 64 convenience).
    static BitVec from_mask(int n, std::uint64_t mask) {
        BitVec v(n);
        if (!v.w.empty()) v.w[0] = mask;
        return v;
    }

    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void flip(int i) { w[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::uint64_t low_mask() const { return w.empty() ? 0 : w[0]; }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool none() const {
        for (std::uint64_t x : w)
            if (x) return false;
        return true;
    }
    bool any() const { return !none(); }

    int popcount() const {
        int c = 0;
        for (std::uint64_t x : w) c += std::popcount(x);
        return c;
    }

    // Parity of the AND with another vector: the standard GF(2) dot product.
    int dot(const BitVec& o) const {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < w.size(); ++k) acc ^= w[k] & o.w[k];
        return std::popcount(acc) & 1;
    }

    int first_set() const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k]) return int(k * 64 + std::countr_zero(w[k]));
        return -1;
    }

    std::vector<int> bits() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::uint64_t x = w[k];
            while (x) {
                out.push_back(int(k * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) { return a.dim == b.dim && a.w == b.w; }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

    // Numeric ascending order: compare most significant word down.
    friend bool operator<(const BitVec& a, const BitVec& b) {
        for (std::size_t k = a.w.size(); k-- > 0;)
            if (a.w[k] != b.w[k]) return a.w[k] < b.w[k];
        return false;
    }

    std::string to_string() const {
        std::string s(dim, '0');
        for (int i = 0; i < dim; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }
};

} // namespace qcl
