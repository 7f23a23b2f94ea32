#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

namespace ramcycle {

constexpr int kMaxPermDegree = 12;

// Permutation of {0,...,n-1}, value semantics, fixed-capacity storage.
struct Perm {
    int n = 0;
    std::array<uint8_t, kMaxPermDegree> img{};

    static Perm identity(int n) {
        Perm p;
        p.n = n;
        for (int i = 0; i < n; ++i) p.img[i] = static_cast<uint8_t>(i);
        return p;
    }

    uint8_t operator()(int i) const { return img[i]; }

    // (a*b)(x) = a(b(x))
    friend Perm operator*(const Perm& a, const Perm& b) {
        Perm r;
        r.n = a.n;
        for (int i = 0; i < a.n; ++i) r.img[i] = a.img[b.img[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.n = n;
        for (int i = 0; i < n; ++i) r.img[img[i]] = static_cast<uint8_t>(i);
        return r;
    }

    bool is_identity() const {
        for (int i = 0; i < n; ++i)
            if (img[i] != i) return false;
        return true;
    }

    bool operator==(const Perm& o) const {
        if (n != o.n) return false;
        for (int i = 0; i < n; ++i)
            if (img[i] != o.img[i]) return false;
        return true;
    }

    // Cycle type, parts nonincreasing.
    std::vector<int> cycle_type() const {
        std::vector<int> type;
        std::array<bool, kMaxPermDegree> seen{};
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0;
            int j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = img[j];
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.begin(), type.end(), std::greater<int>());
        return type;
    }

    bool is_transposition() const {
        int moved = 0;
        for (int i = 0; i < n; ++i)
            if (img[i] != i) ++moved;
        if (moved != 2) return false;
        for (int i = 0; i < n; ++i)
            if (img[i] != i && img[img[i]] != i) return false;
        return true;
    }
};

// Canonical representative with consecutive cycles: e.g. (3,2) in S5 ->
// (0 1 2)(3 4).
inline Perm class_representative(const std::vector<int>& type) {
    int n = std::accumulate(type.begin(), type.end(), 0);
    Perm p = Perm::identity(n);
    int base = 0;
    for (int len : type) {
        for (int i = 0; i < len; ++i) p.img[base + i] = static_cast<uint8_t>(base + (i + 1) % len);
        base += len;
    }
    return p;
}

inline std::vector<Perm> all_transpositions(int n) {
    std::vector<Perm> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Perm p = Perm::identity(n);
            p.img[a] = static_cast<uint8_t>(b);
            p.img[b] = static_cast<uint8_t>(a);
            out.push_back(p);
        }
    return out;
}

// All elements of the conjugacy class with the given (nonincreasing) type.
std::vector<Perm> conjugacy_class_elements(const std::vector<int>& type, int n);

}  // namespace ramcycle
