#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace wreath {

/// A permutation of the 2^n leaves of the complete binary tree, stored
/// 0-based; leaves are numbered 1..2^n left-to-right in all printed output.
class LeafPermutation {
public:
    LeafPermutation() = default;
    explicit LeafPermutation(std::vector<int> images) : images_(std::move(images)) {}

    static LeafPermutation identity(std::size_t degree) {
        std::vector<int> img(degree);
        for (std::size_t i = 0; i < degree; ++i)
            img[i] = static_cast<int>(i);
        return LeafPermutation(std::move(img));
    }

    std::size_t degree() const { return images_.size(); }
    int image_of(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_bijection() const {
        std::vector<char> seen(images_.size(), 0);
        for (int v : images_) {
            if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
                return false;
            seen[v] = 1;
        }
        return true;
    }

    /// compose(p, q): apply q first, then p.
    friend LeafPermutation compose(const LeafPermutation& p, const LeafPermutation& q) {
        if (p.degree() != q.degree())
            throw std::invalid_argument("compose: degree mismatch");
        std::vector<int> img(p.degree());
        for (std::size_t i = 0; i < img.size(); ++i)
            img[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
        return LeafPermutation(std::move(img));
    }

    std::size_t fixed_points() const {
        std::size_t f = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] == static_cast<int>(i))
                ++f;
        return f;
    }

    bool operator==(const LeafPermutation&) const = default;

    /// Cycle notation with 1-based leaves, e.g. "(1 4 2 3)"; identity is "()".
    std::string cycle_notation() const {
        std::ostringstream out;
        std::vector<char> seen(images_.size(), 0);
        bool any = false;
        for (std::size_t start = 0; start < images_.size(); ++start) {
            if (seen[start] || images_[start] == static_cast<int>(start))
                continue;
            any = true;
            out << '(';
            std::size_t i = start;
            bool first = true;
            do {
                seen[i] = 1;
                if (!first)
                    out << ' ';
                out << i + 1;
                first = false;
                i = static_cast<std::size_t>(images_[i]);
            } while (i != start);
            out << ')';
        }
        return any ? out.str() : "()";
    }

    /// Parses the cycle notation produced by cycle_notation().
    static LeafPermutation from_cycles(const std::string& text, std::size_t degree) {
        auto perm = identity(degree);
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos >= text.size())
                break;
            if (text[pos] != '(')
                throw parse_error("cycle notation: expected '('");
            ++pos;
            std::vector<int> cycle;
            while (pos < text.size() && text[pos] != ')') {
                while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos < text.size() && text[pos] == ')')
                    break;
                std::size_t used = 0;
                int v = std::stoi(text.substr(pos), &used);
                if (v < 1 || static_cast<std::size_t>(v) > degree)
                    throw parse_error("cycle notation: leaf out of range");
                cycle.push_back(v - 1);
                pos += used;
            }
            if (pos >= text.size())
                throw parse_error("cycle notation: unterminated cycle");
            ++pos;  // ')'
            for (std::size_t i = 0; i < cycle.size(); ++i)
                perm.images_[static_cast<std::size_t>(cycle[i])] =
                    cycle[(i + 1) % cycle.size()];
        }
        if (!perm.is_bijection())
            throw parse_error("cycle notation: not a permutation");
        return perm;
    }

private:
    std::vector<int> images_;
};

/// An automorphism of the complete binary tree T_n. Recursively an element
/// of W_n is a triple (left, right, swap) over W_{n-1}, with W_1 = Z_2; that
/// is one bit per internal node of T_n, 2^n - 1 bits total, packed here as
/// [left | right | swap] with swap in the least significant bit. Packing is
/// chosen so that increasing bit patterns enumerate the group in recursive
/// lexicographic (left, right, swap) order and every pattern is valid.
class GroupElement {
public:
    static constexpr int kMaxHeight = 6;  // 2^6 - 1 = 63 bits

    GroupElement(int height, std::uint64_t bits) : height_(height), bits_(bits) {
        if (height < 1 || height > kMaxHeight)
            throw std::invalid_argument("GroupElement: height must be in [1, 6]");
        if ((bits >> bit_count(height)) != 0)
            throw std::invalid_argument("GroupElement: stray bits beyond height");
    }

    static GroupElement leaf(int bit) { return GroupElement(1, bit ? 1u : 0u); }

    static GroupElement node(const GroupElement& left, const GroupElement& right, int swap) {
        if (left.height_ != right.height_)
            throw std::invalid_argument("GroupElement::node: child height mismatch");
        const int h = left.height_ + 1;
        const unsigned m = bit_count(h - 1);
        return GroupElement(h, (left.bits_ << (m + 1)) | (right.bits_ << 1) |
                                   (swap ? 1u : 0u));
    }

    static GroupElement identity(int height) {
        if (height < 1)
            throw std::invalid_argument("identity: height must be positive");
        return GroupElement(height, 0);
    }

    static constexpr unsigned bit_count(int height) {
        return (1u << height) - 1;
    }

    int height() const { return height_; }
    std::uint64_t bits() const { return bits_; }
    bool is_identity() const { return bits_ == 0; }

    /// Leaf-level bit (height 1 only).
    int bit() const { return static_cast<int>(bits_ & 1); }

    int swap_bit() const { return static_cast<int>(bits_ & 1); }

    GroupElement left() const {
        const unsigned m = bit_count(height_ - 1);
        return GroupElement(height_ - 1, bits_ >> (m + 1));
    }

    GroupElement right() const {
        const unsigned m = bit_count(height_ - 1);
        return GroupElement(height_ - 1, (bits_ >> 1) & mask(m));
    }

    bool operator==(const GroupElement&) const = default;

    /// Total order used for deterministic enumeration: height first, then
    /// the packed bits, which by layout is (left, right, swap) lexicographic.
    auto operator<=>(const GroupElement& o) const {
        if (auto c = height_ <=> o.height_; c != 0)
            return c;
        return bits_ <=> o.bits_;
    }

private:
    static constexpr std::uint64_t mask(unsigned bits) {
        return bits >= 64 ? ~0ull : (1ull << bits) - 1;
    }

    int height_;
    std::uint64_t bits_;
};

/// Group product with the convention multiply(x, y) = "apply y first, then
/// x", so that to_leaf_permutation is a homomorphism onto permutation
/// composition read right-to-left.
inline GroupElement multiply(const GroupElement& x, const GroupElement& y) {
    if (x.height() != y.height())
        throw std::invalid_argument("multiply: height mismatch");
    if (x.height() == 1)
        return GroupElement::leaf(x.bit() ^ y.bit());
    const int z = x.swap_bit() ^ y.swap_bit();
    if (y.swap_bit() == 0)
        return GroupElement::node(multiply(x.left(), y.left()),
                                  multiply(x.right(), y.right()), z);
    // y moves the left half to the right before x acts.
    return GroupElement::node(multiply(x.right(), y.left()),
                              multiply(x.left(), y.right()), z);
}

inline GroupElement inverse(const GroupElement& x) {
    if (x.height() == 1)
        return x;  // Z_2 is its own inverse
    if (x.swap_bit() == 0)
        return GroupElement::node(inverse(x.left()), inverse(x.right()), 0);
    return GroupElement::node(inverse(x.right()), inverse(x.left()), 1);
}

namespace detail {

inline void fill_leaf_images(const GroupElement& x, int* out, int offset) {
    if (x.height() == 1) {
        out[0] = offset + (x.bit() ? 1 : 0);
        out[1] = offset + (x.bit() ? 0 : 1);
        return;
    }
    const int half = 1 << (x.height() - 1);
    // Apply left/right automorphisms within their halves, then exchange the
    // halves when the swap bit is set.
    fill_leaf_images(x.left(), out, x.swap_bit() ? offset + half : offset);
    fill_leaf_images(x.right(), out + half, x.swap_bit() ? offset : offset + half);
}

}  // namespace detail

inline LeafPermutation to_leaf_permutation(const GroupElement& x) {
    std::vector<int> images(std::size_t{1} << x.height());
    detail::fill_leaf_images(x, images.data(), 0);
    return LeafPermutation(std::move(images));
}

/// All 2^(2^n - 1) elements in recursive lexicographic (left, right, swap)
/// order. Limited to n <= 4 (32768 elements); larger n is rejected.
inline std::vector<GroupElement> enumerate_group(int n) {
    if (n < 1)
        throw std::invalid_argument("enumerate_group: height must be positive");
    if (n > 4)
        throw size_limit_error("enumerate_group: limited to n <= 4 (|W_5| = 2^31)");
    const std::uint64_t count = 1ull << GroupElement::bit_count(n);
    std::vector<GroupElement> out;
    out.reserve(count);
    for (std::uint64_t b = 0; b < count; ++b)
        out.emplace_back(n, b);
    return out;
}

/// Dense index of an element within enumerate_group order; the packed bits
/// are exactly that index.
inline std::size_t element_index(const GroupElement& x) {
    return static_cast<std::size_t>(x.bits());
}

}  // namespace wreath
