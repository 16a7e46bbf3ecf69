#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "group.hpp"
#include "numeric.hpp"

namespace wreath {

/// A 2-tree: the labeled binary tree of height n that indexes both an
/// irreducible representation and a conjugacy class of W_n. Node labels are
/// 0/1; a label of 1 is only allowed when the two subtrees are equal. The
/// 2^n - 1 labels are packed as [label | childA | childB] with the root
/// label most significant, so that comparing packed bits of equal-height
/// trees is exactly the (label, childA, childB) lexicographic order.
class RTree {
public:
    static constexpr int kMaxHeight = 6;

    RTree(int height, std::uint64_t bits) : height_(height), bits_(bits) {
        if (height < 1 || height > kMaxHeight)
            throw std::invalid_argument("RTree: height must be in [1, 6]");
        if (height < kMaxHeight && (bits >> bit_count(height)) != 0)
            throw std::invalid_argument("RTree: stray bits beyond height");
        validate();
    }

    static RTree leaf(int label) { return RTree(1, label ? 1u : 0u); }

    static RTree node(int label, const RTree& a, const RTree& b) {
        if (a.height_ != b.height_)
            throw std::invalid_argument("RTree::node: child height mismatch");
        if (label && a.bits_ != b.bits_)
            throw std::invalid_argument("RTree::node: label 1 requires equal children");
        const int h = a.height_ + 1;
        const unsigned m = bit_count(h - 1);
        return RTree(h, (static_cast<std::uint64_t>(label ? 1 : 0) << (2 * m)) |
                            (a.bits_ << m) | b.bits_);
    }

    static RTree all_zero(int height) { return RTree(height, 0); }

    static constexpr unsigned bit_count(int height) { return (1u << height) - 1; }

    int height() const { return height_; }
    std::uint64_t bits() const { return bits_; }

    int label() const {
        if (height_ == 1)
            return static_cast<int>(bits_ & 1);
        return static_cast<int>((bits_ >> (2 * bit_count(height_ - 1))) & 1);
    }

    RTree child_a() const {
        const unsigned m = bit_count(height_ - 1);
        return RTree(height_ - 1, (bits_ >> m) & mask(m));
    }

    RTree child_b() const {
        const unsigned m = bit_count(height_ - 1);
        return RTree(height_ - 1, bits_ & mask(m));
    }

    bool operator==(const RTree&) const = default;

    /// Total order: height first, then root label (0 < 1), then childA,
    /// then childB recursively -- which the packing reduces to an integer
    /// comparison.
    auto operator<=>(const RTree& o) const {
        if (auto c = height_ <=> o.height_; c != 0)
            return c;
        return bits_ <=> o.bits_;
    }

    bool is_canonical() const {
        if (height_ == 1)
            return true;
        return child_a() <= child_b() && child_a().is_canonical() &&
               child_b().is_canonical();
    }

    /// Sorts every unordered z=0 child pair; idempotent.
    RTree canonical() const {
        if (height_ == 1)
            return *this;
        RTree a = child_a().canonical();
        RTree b = child_b().canonical();
        if (b < a)
            std::swap(a, b);
        return node(label(), a, b);
    }

private:
    void validate() const {
        if (height_ == 1)
            return;
        const unsigned m = bit_count(height_ - 1);
        const std::uint64_t a = (bits_ >> m) & mask(m);
        const std::uint64_t b = bits_ & mask(m);
        if (((bits_ >> (2 * m)) & 1) && a != b)
            throw std::invalid_argument("RTree: label 1 requires equal children");
        child_a();  // recursive validation
        child_b();
    }

    static constexpr std::uint64_t mask(unsigned bits) {
        return bits >= 64 ? ~0ull : (1ull << bits) - 1;
    }

    int height_;
    std::uint64_t bits_;
};

/// k_1 = 2, k_{n+1} = (k_n^2 + 3 k_n) / 2.
inline BigInt count_rtrees(int n) {
    if (n < 1)
        throw std::invalid_argument("count_rtrees: height must be positive");
    BigInt k = 2;
    for (int i = 1; i < n; ++i)
        k = (k * k + 3 * k) / 2;
    return k;
}

/// All canonical 2-trees of height n in ascending total order. Practical
/// ceiling n = 5 (26795 trees).
inline std::vector<RTree> enumerate_rtrees(int n) {
    if (n < 1)
        throw std::invalid_argument("enumerate_rtrees: height must be positive");
    if (n > 5)
        throw size_limit_error("enumerate_rtrees: limited to n <= 5 (k_6 > 3.5e8)");
    std::vector<RTree> level{RTree::leaf(0), RTree::leaf(1)};
    for (int h = 2; h <= n; ++h) {
        std::vector<RTree> next;
        const std::size_t k = level.size();
        next.reserve(k * (k + 3) / 2);
        // Label 0 first, pairs in lexicographic (childA, childB) order with
        // childA <= childB; then label 1 with equal children. Concatenation
        // is already sorted because the label is the most significant field.
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i; j < k; ++j)
                next.push_back(RTree::node(0, level[i], level[j]));
        for (std::size_t i = 0; i < k; ++i)
            next.push_back(RTree::node(1, level[i], level[i]));
        level = std::move(next);
    }
    return level;
}

/// Index of a canonical tree within enumerate_rtrees(n) order.
inline std::size_t tree_index(const std::vector<RTree>& sorted, const RTree& t) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), t);
    if (it == sorted.end() || !(*it == t))
        throw std::invalid_argument("tree_index: tree not in list (non-canonical?)");
    return static_cast<std::size_t>(it - sorted.begin());
}

/// The conjugacy-class invariant: equal trees exactly on conjugate elements.
/// (a,b,0) maps to a label-0 node over the children's invariants in
/// canonical order; (a,b,1) maps to a label-1 node over the invariant of ab.
inline RTree tree_invariant(const GroupElement& x) {
    if (x.height() == 1)
        return RTree::leaf(x.bit());
    if (x.swap_bit() == 0) {
        RTree a = tree_invariant(x.left());
        RTree b = tree_invariant(x.right());
        if (b < a)
            std::swap(a, b);
        return RTree::node(0, a, b);
    }
    const RTree t = tree_invariant(multiply(x.left(), x.right()));
    return RTree::node(1, t, t);
}

/// Dimension of the irreducible representation the tree indexes:
/// equal subtrees square the dimension (tensor with a Z_2 character);
/// distinct subtrees double the product (induction from index 2).
inline BigInt irrep_dim(const RTree& t) {
    if (t.height() == 1)
        return 1;
    const BigInt da = irrep_dim(t.child_a());
    if (t.child_a() == t.child_b())
        return da * da;
    return 2 * da * irrep_dim(t.child_b());
}

/// Leaf -> "0" / "1"; Node -> "(label childA childB)".
inline std::string to_sexpr(const RTree& t) {
    if (t.height() == 1)
        return t.label() ? "1" : "0";
    return "(" + std::to_string(t.label()) + " " + to_sexpr(t.child_a()) + " " +
           to_sexpr(t.child_b()) + ")";
}

struct ParsedRTree {
    RTree tree;           // canonicalized
    bool was_canonical;   // false when the input child order was re-sorted
};

namespace detail {

inline RTree parse_sexpr_at(const std::string& s, std::size_t& pos) {
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    };
    skip_ws();
    if (pos >= s.size())
        throw parse_error("rtree: unexpected end of input");
    if (s[pos] == '0' || s[pos] == '1')
        return RTree::leaf(s[pos++] - '0');
    if (s[pos] != '(')
        throw parse_error("rtree: expected '(', '0' or '1'");
    ++pos;
    skip_ws();
    if (pos >= s.size() || (s[pos] != '0' && s[pos] != '1'))
        throw parse_error("rtree: node label must be 0 or 1");
    const int label = s[pos++] - '0';
    const RTree a = parse_sexpr_at(s, pos);
    const RTree b = parse_sexpr_at(s, pos);
    skip_ws();
    if (pos >= s.size() || s[pos] != ')')
        throw parse_error("rtree: expected ')'");
    ++pos;
    if (a.height() != b.height())
        throw parse_error("rtree: subtree heights differ");
    if (label == 1 && !(a == b))
        throw parse_error("rtree: label 1 requires equal subtrees");
    return RTree::node(label, a, b);
}

}  // namespace detail

/// Parses the s-expression format preserving the written child order
/// (needed when the order itself carries meaning, as in published class
/// representatives).
inline RTree parse_rtree_ordered(const std::string& text) {
    std::size_t pos = 0;
    const RTree raw = detail::parse_sexpr_at(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos != text.size())
        throw parse_error("rtree: trailing characters after tree");
    return raw;
}

/// Parses the s-expression format. Non-canonical child order is accepted
/// but flagged (callers warn) and the result is canonicalized.
inline ParsedRTree parse_rtree(const std::string& text) {
    const RTree raw = parse_rtree_ordered(text);
    return ParsedRTree{raw.canonical(), raw.is_canonical()};
}

// ---------------------------------------------------------------------------
// General r-trees (r >= 2), enumeration only. A node carries a label in
// 0..r-1 when all r subtrees are equal, otherwise label 0 over the sorted
// multiset of subtrees. For r = 2 this reproduces the 2-tree counts.
// ---------------------------------------------------------------------------

/// k_1 = r, k_{n+1} = r*k_n + (multichoose(k_n, r) - k_n).
inline BigInt count_general_rtrees(int n, int r) {
    if (n < 1 || r < 2)
        throw std::invalid_argument("count_general_rtrees: need n >= 1, r >= 2");
    BigInt k = r;
    for (int i = 1; i < n; ++i)
        k = BigInt(r) * k + binomial(k + r - 1, static_cast<unsigned>(r)) - k;
    return k;
}

/// S-expressions of all general r-trees of height n, in a deterministic
/// order (unequal-children nodes first, then labeled equal-children nodes,
/// per level). Guarded by a count budget.
inline std::vector<std::string> enumerate_general_rtrees(int n, int r,
                                                         std::uint64_t budget = 1000000) {
    if (count_general_rtrees(n, r) > budget)
        throw size_limit_error("enumerate_general_rtrees: count exceeds budget");
    std::vector<std::string> level;
    for (int v = 0; v < r; ++v)
        level.push_back(std::to_string(v));
    for (int h = 2; h <= n; ++h) {
        std::vector<std::string> next;
        // Non-decreasing index tuples (multisets) that are not constant.
        std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
        const std::size_t k = level.size();
        auto emit = [&](int label) {
            std::string s = "(" + std::to_string(label);
            for (std::size_t i : idx)
                s += " " + level[i];
            s += ")";
            next.push_back(std::move(s));
        };
        while (true) {
            const bool constant =
                std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return i == idx[0]; });
            if (!constant)
                emit(0);
            // Advance to the next non-decreasing tuple.
            int pos = r - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - 1)
                --pos;
            if (pos < 0)
                break;
            const std::size_t v = ++idx[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < r; ++q)
                idx[static_cast<std::size_t>(q)] = v;
        }
        for (std::size_t i = 0; i < k; ++i) {
            std::fill(idx.begin(), idx.end(), i);
            for (int label = 0; label < r; ++label)
                emit(label);
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace wreath
