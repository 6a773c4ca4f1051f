#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace tdc {

/// Set of vertex labels drawn from {1..n}, stored as a fixed-width bit vector.
///
/// Label v occupies bit v-1. All binary operations require both operands to
/// share the same universe size.
class VertexSet {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    VertexSet() = default;
    explicit VertexSet(int n) : bits_(static_cast<std::size_t>(n)) {}
    VertexSet(int n, std::initializer_list<int> labels) : VertexSet(n) {
        for (int v : labels) insert(v);
    }
    VertexSet(int n, const std::vector<int>& labels) : VertexSet(n) {
        for (int v : labels) insert(v);
    }

    static VertexSet all(int n) {
        VertexSet s(n);
        s.bits_.set();
        return s;
    }

    int universe() const { return static_cast<int>(bits_.size()); }
    int size() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }

    bool contains(int v) const { return in_range(v) && bits_.test(index(v)); }
    void insert(int v) { bits_.set(checked(v)); }
    void erase(int v) { bits_.reset(checked(v)); }

    bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
    bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

    VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

    /// Smallest label, or 0 if empty.
    int front() const {
        auto i = bits_.find_first();
        return i == Bits::npos ? 0 : static_cast<int>(i) + 1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
            f(static_cast<int>(i) + 1);
    }

    /// Labels in increasing order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(bits_.count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    /// Lexicographic comparison of the sorted label sequences.
    friend bool lex_less(const VertexSet& a, const VertexSet& b) {
        auto x = a.to_vector(), y = b.to_vector();
        return x < y;
    }

    /// Low 64 labels packed into a word (bit v-1 for label v).
    std::uint64_t to_mask() const {
        std::uint64_t m = 0;
        for_each([&](int v) {
            if (v <= 64) m |= std::uint64_t{1} << (v - 1);
        });
        return m;
    }

    static VertexSet from_mask(int n, std::uint64_t mask) {
        VertexSet s(n);
        for (int v = 1; v <= n && v <= 64; ++v)
            if (mask >> (v - 1) & 1U) s.insert(v);
        return s;
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        });
        return out + "}";
    }

private:
    bool in_range(int v) const { return v >= 1 && v <= universe(); }
    static std::size_t index(int v) { return static_cast<std::size_t>(v - 1); }
    std::size_t checked(int v) const {
        if (!in_range(v))
            throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                                    std::to_string(universe()));
        return index(v);
    }

    Bits bits_;
};

}  // namespace tdc
