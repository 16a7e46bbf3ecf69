#pragma once

#include <cstdint>
#include <vector>

#include "conjugacy.hpp"
#include "group.hpp"
#include "numeric.hpp"
#include "parallel.hpp"
#include "rtree.hpp"

namespace wreath {

/// Exact character table of W_n. Rows (irreducibles) and columns (conjugacy
/// classes) are both indexed by the canonical 2-trees in tree order, so the
/// table is square by construction.
class CharacterTable {
public:
    int n = 0;
    std::vector<RTree> trees;          // shared row/column index
    std::vector<ConjClass> class_list; // column metadata, tree order
    std::vector<BigInt> dims;          // chi_i(identity), row order
    std::vector<BigInt> values_;       // dense row-major, k*k

    std::size_t size() const { return trees.size(); }

    const BigInt& value(std::size_t irrep, std::size_t cls) const {
        return values_[irrep * trees.size() + cls];
    }
};

namespace detail {

/// One character value from the level-below table. The class column is
/// always in normal form: a label-0 class tree (A, B) stands for (a, b, 0)
/// with a in class A, b in class B; a label-1 class tree (T, T) stands for
/// (rep(T), identity, 1).
inline BigInt character_cell(const RTree& irrep, const RTree& cls,
                             const std::vector<RTree>& prev_trees,
                             const std::vector<BigInt>& prev_values) {
    const std::size_t k = prev_trees.size();
    auto prev = [&](const RTree& r, const RTree& c) -> const BigInt& {
        return prev_values[tree_index(prev_trees, r) * k + tree_index(prev_trees, c)];
    };
    const RTree s1 = irrep.child_a();
    const RTree s2 = irrep.child_b();
    if (cls.label() == 0) {
        const RTree a = cls.child_a();
        const RTree b = cls.child_b();
        if (s1 == s2)
            return prev(s1, a) * prev(s1, b);
        return prev(s1, a) * prev(s2, b) + prev(s1, b) * prev(s2, a);
    }
    // z = 1 column: the induced rows vanish (zero diagonal blocks); the
    // tensor rows see (-1)^t times the character of ab, whose class tree is
    // the label-1 node's subtree.
    if (!(s1 == s2))
        return 0;
    const BigInt v = prev(s1, cls.child_a());
    return irrep.label() ? -v : v;
}

}  // namespace detail

/// Builds the full table recursively from the W_1 base. n = 5 (26795^2
/// cells) must be opted into explicitly; larger n is always rejected.
inline CharacterTable build_table(int n, bool allow_huge = false, int threads = 1) {
    if (n < 1)
        throw std::invalid_argument("build_table: height must be positive");
    if (n == 5 && !allow_huge)
        throw size_limit_error(
            "build_table: n = 5 has ~7.2e8 cells; pass allow_huge to proceed");
    if (n > 5)
        throw size_limit_error("build_table: limited to n <= 5");

    std::vector<RTree> trees{RTree::leaf(0), RTree::leaf(1)};
    std::vector<BigInt> values{1, 1, 1, -1};
    for (int h = 2; h <= n; ++h) {
        std::vector<RTree> next = enumerate_rtrees(h);
        const std::size_t k = next.size();
        std::vector<BigInt> next_values(k * k);
        parallel_chunks(k, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    next_values[i * k + j] =
                        detail::character_cell(next[i], next[j], trees, values);
        });
        trees = std::move(next);
        values = std::move(next_values);
    }

    CharacterTable table;
    table.n = n;
    table.trees = std::move(trees);
    table.class_list = classes(n);
    table.values_ = std::move(values);
    table.dims.reserve(table.trees.size());
    for (std::size_t i = 0; i < table.trees.size(); ++i)
        table.dims.push_back(table.value(i, 0));
    return table;
}

/// chi_irrep(C_cls) without materializing a table; both trees canonical and
/// of equal height.
inline BigInt character_value(const RTree& irrep, const RTree& cls) {
    if (irrep.height() != cls.height())
        throw std::invalid_argument("character_value: height mismatch");
    if (irrep.height() == 1)
        return (irrep.label() && cls.label()) ? -1 : 1;
    const RTree s1 = irrep.child_a();
    const RTree s2 = irrep.child_b();
    if (cls.label() == 0) {
        const RTree a = cls.child_a();
        const RTree b = cls.child_b();
        if (s1 == s2)
            return character_value(s1, a) * character_value(s1, b);
        return character_value(s1, a) * character_value(s2, b) +
               character_value(s1, b) * character_value(s2, a);
    }
    if (!(s1 == s2))
        return 0;
    const BigInt v = character_value(s1, cls.child_a());
    return irrep.label() ? -v : v;
}

/// Modified table b_ij = chi_i(C_j) / dim_i and the class-sum eigenvalue
/// table lambda_ij = |C_j| b_ij, which is always integral.
struct ModifiedTable {
    int n = 0;
    std::size_t k = 0;
    std::vector<Rational> b;       // dense row-major
    std::vector<BigInt> lambda;    // dense row-major

    const Rational& b_at(std::size_t i, std::size_t j) const { return b[i * k + j]; }
    const BigInt& lambda_at(std::size_t i, std::size_t j) const { return lambda[i * k + j]; }
};

inline ModifiedTable modified_table(const CharacterTable& t) {
    ModifiedTable m;
    m.n = t.n;
    m.k = t.size();
    m.b.reserve(m.k * m.k);
    m.lambda.reserve(m.k * m.k);
    for (std::size_t i = 0; i < m.k; ++i) {
        const BigInt& dim = t.dims[i];
        for (std::size_t j = 0; j < m.k; ++j) {
            const BigInt& chi = t.value(i, j);
            m.b.emplace_back(chi, dim);
            m.lambda.push_back(
                exact_div(t.class_list[j].size * chi, dim, "class-sum eigenvalue"));
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Explicit matrix oracle. Builds the actual irreducible matrices (monomial,
// entries in {-1, 0, 1}) from the tensor / extension / induction blocks and
// validates the character recursion through traces.
// ---------------------------------------------------------------------------

namespace detail {

/// S(v (x) w) = w (x) v on C^d (x) C^d.
inline IntMatrix tensor_swap(std::size_t d) {
    IntMatrix s(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            s(j * d + i, i * d + j) = 1;
    return s;
}

}  // namespace detail

/// The representing matrix of x in the irreducible indexed by t (which is
/// taken with its given child order; canonical trees give the canonical
/// realization). Capped at n <= 3 where dimensions stay tiny.
inline IntMatrix explicit_irrep(const RTree& t, const GroupElement& x) {
    if (t.height() != x.height())
        throw std::invalid_argument("explicit_irrep: height mismatch");
    if (t.height() > 3)
        throw size_limit_error("explicit_irrep: limited to n <= 3");
    if (t.height() == 1) {
        IntMatrix m(1, 1);
        m(0, 0) = (t.label() && x.bit()) ? -1 : 1;
        return m;
    }
    const GroupElement a = x.left();
    const GroupElement b = x.right();
    const RTree s1 = t.child_a();
    const RTree s2 = t.child_b();
    if (s1 == s2) {
        // rho_S (x) rho_S extended by (-1)^label * tensor-swap on the root
        // transposition; (a,b,1) factors as (iota,iota,1) * (a,b,0).
        const IntMatrix ra = explicit_irrep(s1, a);
        IntMatrix m = ra.kron(explicit_irrep(s1, b));
        if (x.swap_bit() == 0)
            return m;
        IntMatrix swapped = detail::tensor_swap(ra.rows()) * m;
        if (t.label())
            for (std::size_t i = 0; i < swapped.rows(); ++i)
                for (std::size_t j = 0; j < swapped.cols(); ++j)
                    swapped(i, j) = -swapped(i, j);
        return swapped;
    }
    // Induced from W_{n-1} x W_{n-1} with coset representatives
    // t1 = identity, t2 = (iota, iota, 1).
    const IntMatrix r1a = explicit_irrep(s1, a);
    const IntMatrix r1b = explicit_irrep(s1, b);
    const IntMatrix r2a = explicit_irrep(s2, a);
    const IntMatrix r2b = explicit_irrep(s2, b);
    const std::size_t dh = r1a.rows() * r2a.rows();
    IntMatrix m(2 * dh, 2 * dh);
    auto put_block = [&](std::size_t bi, std::size_t bj, const IntMatrix& blk) {
        for (std::size_t i = 0; i < dh; ++i)
            for (std::size_t j = 0; j < dh; ++j)
                m(bi * dh + i, bj * dh + j) = blk(i, j);
    };
    if (x.swap_bit() == 0) {
        put_block(0, 0, r1a.kron(r2b));
        put_block(1, 1, r1b.kron(r2a));
    } else {
        put_block(0, 1, r1b.kron(r2a));
        put_block(1, 0, r1a.kron(r2b));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Exact orthogonality checks, used by tests and `verify`.
// ---------------------------------------------------------------------------

inline bool check_row_orthogonality(const CharacterTable& t) {
    const std::size_t k = t.size();
    const BigInt order = group_order(t.n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t i2 = i; i2 < k; ++i2) {
            BigInt sum = 0;
            for (std::size_t j = 0; j < k; ++j)
                sum += t.class_list[j].size * t.value(i, j) * t.value(i2, j);
            if (sum != (i == i2 ? order : BigInt(0)))
                return false;
        }
    return true;
}

inline bool check_column_orthogonality(const CharacterTable& t) {
    const std::size_t k = t.size();
    const BigInt order = group_order(t.n);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t j2 = j; j2 < k; ++j2) {
            BigInt sum = 0;
            for (std::size_t i = 0; i < k; ++i)
                sum += t.value(i, j) * t.value(i, j2);
            const BigInt expect =
                j == j2 ? exact_div(order, t.class_list[j].size, "column orthogonality")
                        : BigInt(0);
            if (sum != expect)
                return false;
        }
    return true;
}

}  // namespace wreath
