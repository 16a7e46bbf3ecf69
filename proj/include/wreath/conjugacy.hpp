#pragma once

#include <cstdint>
#include <vector>

#include "group.hpp"
#include "numeric.hpp"
#include "parallel.hpp"
#include "rtree.hpp"

namespace wreath {

struct ConjClass {
    RTree tree;
    BigInt size;
    GroupElement representative;
};

/// Normal-form representative of the class a tree indexes: a label-0 node
/// becomes (rep(childA), rep(childB), 0), a label-1 node becomes
/// (rep(childA), identity, 1). Child order is taken as given, so ordered
/// (display) trees reproduce their own representatives; canonical trees
/// give the canonical one. Either way tree_invariant(result) is the
/// canonical form of t.
inline GroupElement class_representative(const RTree& t) {
    if (t.height() == 1)
        return GroupElement::leaf(t.label());
    if (t.label() == 0)
        return GroupElement::node(class_representative(t.child_a()),
                                  class_representative(t.child_b()), 0);
    return GroupElement::node(class_representative(t.child_a()),
                              GroupElement::identity(t.height() - 1), 1);
}

/// |C_(a,b,0)| = |C_a|^2 when a ~ b, else 2 |C_a||C_b|;
/// |C_(a,i,1)| = |C_a| * |W_{n-1}|.
inline BigInt class_size(const RTree& t) {
    if (t.height() == 1)
        return 1;  // both classes of Z_2 are singletons
    if (t.label() == 1)
        return class_size(t.child_a()) * group_order(t.height() - 1);
    const RTree a = t.child_a().canonical();
    const RTree b = t.child_b().canonical();
    if (a == b) {
        const BigInt s = class_size(a);
        return s * s;
    }
    return 2 * class_size(a) * class_size(b);
}

/// One class per canonical tree, in tree order. Sizes and representatives
/// are exact for any height the tree enumeration supports.
inline std::vector<ConjClass> classes(int n) {
    std::vector<ConjClass> out;
    for (const RTree& t : enumerate_rtrees(n))
        out.push_back(ConjClass{t, class_size(t), class_representative(t)});
    return out;
}

/// Exhaustive verification oracle: buckets every element of W_n by its
/// tree invariant. Counts are indexed like enumerate_rtrees(n).
inline std::vector<std::uint64_t> bucket_oracle(int n, int threads = 1) {
    if (n > 4)
        throw size_limit_error("bucket_oracle: limited to n <= 4");
    const std::vector<RTree> trees = enumerate_rtrees(n);
    const std::uint64_t total = 1ull << GroupElement::bit_count(n);
    const std::size_t workers =
        threads < 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(threads), 64);
    std::vector<std::vector<std::uint64_t>> partial(
        workers, std::vector<std::uint64_t>(trees.size(), 0));
    parallel_chunks(static_cast<std::size_t>(total), static_cast<int>(workers),
                    [&](std::size_t worker, std::size_t begin, std::size_t end) {
                        auto& counts = partial[worker];
                        for (std::size_t b = begin; b < end; ++b) {
                            const GroupElement g(n, static_cast<std::uint64_t>(b));
                            counts[tree_index(trees, tree_invariant(g))] += 1;
                        }
                    });
    std::vector<std::uint64_t> counts(trees.size(), 0);
    for (const auto& p : partial)
        for (std::size_t i = 0; i < counts.size(); ++i)
            counts[i] += p[i];
    return counts;
}

}  // namespace wreath
