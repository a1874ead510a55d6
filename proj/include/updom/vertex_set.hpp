#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "updom/error.hpp"

namespace updom {

// Subset of the vertices 0..n-1 of a fixed host graph, stored as bit words.
// The universe size identifies the host; operations on mismatched universes
// are rejected by the call sites that care.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet of(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.w_) w = ~0ull;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        return v >= 0 && v < n_ && (w_[v >> 6] >> (v & 63)) & 1;
    }
    void add(int v) {
        check_range(v);
        w_[v >> 6] |= 1ull << (v & 63);
    }
    void remove(int v) {
        check_range(v);
        w_[v >> 6] &= ~(1ull << (v & 63));
    }

    int size() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    // Lowest member, or -1.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }
    // Lowest member strictly greater than v, or -1.
    int next_after(int v) const {
        if (v < -1) v = -1;
        int start = v + 1;
        if (start >= n_) return -1;
        size_t i = size_t(start) >> 6;
        uint64_t w = w_[i] & (~0ull << (start & 63));
        while (true) {
            if (w) return int(i * 64 + __builtin_ctzll(w));
            if (++i >= w_.size()) return -1;
            w = w_[i];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(int(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> r;
        r.reserve(size());
        for_each([&](int v) { r.push_back(v); });
        return r;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    VertexSet operator~() const {
        VertexSet r(*this);
        for (auto& w : r.w_) w = ~w;
        r.trim();
        return r;
    }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    // Orders sets by their ascending member sequences, the tie-breaking rule
    // used for witnesses. {0,2,3} < {0,2,4} < {1,2}; a proper prefix is smaller.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        a.check_universe(b);
        for (size_t i = 0; i < a.w_.size(); ++i) {
            uint64_t x = a.w_[i] ^ b.w_[i];
            if (!x) continue;
            int e = int(i * 64 + __builtin_ctzll(x));
            const VertexSet& holder = a.contains(e) ? a : b;
            const VertexSet& other = (&holder == &a) ? b : a;
            // holder is smaller iff other still has members beyond e,
            // otherwise other is a proper prefix of holder.
            return other.has_member_above(e) ? (&holder == &a) : (&other == &a);
        }
        return false;
    }

    uint64_t word(size_t i) const { return i < w_.size() ? w_[i] : 0; }

private:
    void check_range(int v) const {
        if (v < 0 || v >= n_)
            throw PreconditionError("vertex id " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n_) + ")");
    }
    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_)
            throw PreconditionError("vertex sets over different hosts (" +
                                    std::to_string(n_) + " vs " + std::to_string(o.n_) + ")");
    }
    void trim() {
        if (n_ & 63) w_.back() &= (~0ull >> (64 - (n_ & 63)));
        if (n_ == 0) w_.clear();
    }
    bool has_member_above(int v) const { return next_after(v) != -1; }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace updom
