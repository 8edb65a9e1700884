#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace critset {

/// Subset of the vertex range {0,...,n-1} of a fixed universe, backed by
/// 64-bit words. Binary operations require both operands to share the same
/// universe and throw std::invalid_argument otherwise.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
        n_ = universe;
        bits_.assign((static_cast<size_t>(universe) + 63) / 64, 0);
    }

    static VertexSet of(int universe, std::initializer_list<int> vertices) {
        VertexSet s(universe);
        for (int v : vertices) s.insert(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.bits_) w = ~0ull;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        return v >= 0 && v < n_ && ((bits_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u);
    }

    void insert(int v) {
        check_vertex(v);
        bits_[static_cast<size_t>(v) >> 6] |= 1ull << (v & 63);
    }

    void erase(int v) {
        check_vertex(v);
        bits_[static_cast<size_t>(v) >> 6] &= ~(1ull << (v & 63));
    }

    int size() const {
        int c = 0;
        for (uint64_t w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        return std::all_of(bits_.begin(), bits_.end(), [](uint64_t w) { return w == 0; });
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Smallest member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) return static_cast<int>(i * 64 + std::countr_zero(bits_[i]));
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    int next_after(int v) const {
        if (v < -1) v = -1;
        int start = v + 1;
        if (start >= n_) return -1;
        size_t wi = static_cast<size_t>(start) >> 6;
        uint64_t w = bits_[wi] & (~0ull << (start & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
            if (++wi >= bits_.size()) return -1;
            w = bits_[wi];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t i = 0; i < bits_.size(); ++i) {
            uint64_t w = bits_[i];
            while (w) {
                int v = static_cast<int>(i * 64 + std::countr_zero(w));
                fn(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

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

    /// Canonical enumeration order used by every set stream in this library:
    /// smaller cardinality first, then ascending lexicographic order of the
    /// sorted vertex sequence (equivalently, the set containing the smallest
    /// differing vertex comes first).
    static bool canonical_less(const VertexSet& a, const VertexSet& b) {
        a.check_same(b);
        int sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        for (size_t i = 0; i < a.bits_.size(); ++i) {
            uint64_t diff = a.bits_[i] ^ b.bits_[i];
            if (diff) {
                uint64_t low = diff & (~diff + 1);
                return (a.bits_[i] & low) != 0;
            }
        }
        return false;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("VertexSet: vertex " + std::to_string(v) +
                                        " outside universe of size " + std::to_string(n_));
    }
    void check_same(const VertexSet& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("VertexSet: universe mismatch (" + std::to_string(n_) +
                                        " vs " + std::to_string(o.n_) + ")");
    }
    void trim() {
        if (n_ & 63) bits_.back() &= ~0ull >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<uint64_t> bits_;
};

} // namespace critset
