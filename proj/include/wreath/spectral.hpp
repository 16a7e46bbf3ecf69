#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "chartab.hpp"
#include "conjugacy.hpp"
#include "group.hpp"
#include "numeric.hpp"
#include "permrep.hpp"
#include "rtree.hpp"
#include "sepset.hpp"

namespace wreath {

using Signal = std::vector<Complex>;

struct IsotypicComponent {
    RTree tree;
    Signal values;
};

/// Projects x onto the lambda-eigenspace of op through the polynomial
/// filter prod_{mu != lambda} (A - mu I) / (lambda - mu). The spectrum is
/// known exactly from the character table, so the filter is an exact
/// projection (up to float rounding) and costs |spectrum| - 1 applications
/// of the operator.
template <typename Op>
Signal lagrange_project(const Op& op, std::int64_t lambda, const Signal& x) {
    if (std::find(op.spectrum.begin(), op.spectrum.end(), lambda) == op.spectrum.end())
        throw std::invalid_argument("lagrange_project: lambda not in spectrum");
    Signal y = x;
    for (const std::int64_t mu : op.spectrum) {
        if (mu == lambda)
            continue;
        Signal ay = op.apply(y);
        const double denom = static_cast<double>(lambda - mu);
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] = (ay[i] - static_cast<double>(mu) * y[i]) / denom;
    }
    return y;
}

// ---------------------------------------------------------------------------
// Isotypic decomposition of leaf signals (the permutation representation).
// ---------------------------------------------------------------------------

/// Everything needed to project leaf signals against a fixed separating
/// set: the class-sum operators for the selected columns and the exact
/// eigenvalue signature of every constituent of V_n.
struct PermProjectionContext {
    int n = 0;
    CharacterTable table;
    PermDecomposition decomp;
    std::vector<ClassSumOperator> ops;                       // one per selected class
    std::vector<std::vector<std::int64_t>> signatures;       // per constituent, per op

    const RTree& constituent_tree(std::size_t c) const {
        return table.trees[decomp.constituents[c]];
    }
};

inline PermProjectionContext make_perm_context(int n, const std::vector<RTree>& sep_trees,
                                               int threads = 1) {
    if (n > 4)
        throw size_limit_error("make_perm_context: limited to n <= 4");
    PermProjectionContext ctx;
    ctx.n = n;
    ctx.table = build_table(n, false, threads);
    const ModifiedTable mt = modified_table(ctx.table);
    ctx.decomp = decompose(ctx.table);

    std::vector<RTree> canon;
    for (const RTree& t : sep_trees)
        canon.push_back(t.canonical());
    std::vector<IntMatrix> mats = class_sum_matrices(n, canon, threads);
    for (std::size_t s = 0; s < canon.size(); ++s) {
        ClassSumOperator op;
        op.tree = canon[s];
        op.n = n;
        op.matrix = std::move(mats[s]);
        const std::size_t j = tree_index(ctx.table.trees, canon[s]);
        for (std::size_t i : ctx.decomp.constituents)
            op.spectrum.push_back(mt.lambda_at(i, j).convert_to<std::int64_t>());
        std::sort(op.spectrum.begin(), op.spectrum.end());
        op.spectrum.erase(std::unique(op.spectrum.begin(), op.spectrum.end()),
                          op.spectrum.end());
        ctx.ops.push_back(std::move(op));
    }

    for (std::size_t c = 0; c < ctx.decomp.constituents.size(); ++c) {
        const std::size_t i = ctx.decomp.constituents[c];
        std::vector<std::int64_t> sig;
        for (const ClassSumOperator& op : ctx.ops) {
            const std::size_t j = tree_index(ctx.table.trees, op.tree);
            sig.push_back(mt.lambda_at(i, j).convert_to<std::int64_t>());
        }
        ctx.signatures.push_back(std::move(sig));
    }
    for (std::size_t a = 0; a < ctx.signatures.size(); ++a)
        for (std::size_t b = a + 1; b < ctx.signatures.size(); ++b)
            if (ctx.signatures[a] == ctx.signatures[b])
                throw not_separable_error(
                    "make_perm_context: the given classes do not separate the "
                    "constituents of V_n (colliding eigenvalue signatures)");
    return ctx;
}

/// Projects x onto each isotypic of V_n by iterating lagrange_project over
/// the separating set at that constituent's signature.
inline std::vector<IsotypicComponent> isotypic_decompose_perm(
    const PermProjectionContext& ctx, const Signal& x) {
    if (x.size() != (std::size_t{1} << ctx.n))
        throw std::invalid_argument("isotypic_decompose_perm: signal length != 2^n");
    std::vector<IsotypicComponent> out;
    for (std::size_t c = 0; c < ctx.decomp.constituents.size(); ++c) {
        Signal y = x;
        for (std::size_t s = 0; s < ctx.ops.size(); ++s)
            y = lagrange_project(ctx.ops[s], ctx.signatures[c][s], y);
        out.push_back(IsotypicComponent{ctx.constituent_tree(c), std::move(y)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Haar multiresolution levels.
// ---------------------------------------------------------------------------

/// Level 0 is the global mean; level j (1..n) is the detail between block
/// means at sizes 2^(n-j+1) and 2^(n-j). Levels sum to the input.
inline std::vector<Signal> haar_levels(const Signal& x) {
    const std::size_t len = x.size();
    if (len == 0 || (len & (len - 1)) != 0)
        throw std::invalid_argument("haar_levels: length must be a power of two");
    int n = 0;
    while ((std::size_t{1} << n) < len)
        ++n;
    auto block_means = [&](std::size_t block) {
        Signal m(len);
        for (std::size_t start = 0; start < len; start += block) {
            Complex sum{};
            for (std::size_t i = 0; i < block; ++i)
                sum += x[start + i];
            const Complex mean = sum / static_cast<double>(block);
            for (std::size_t i = 0; i < block; ++i)
                m[start + i] = mean;
        }
        return m;
    };
    std::vector<Signal> levels;
    Signal prev = block_means(len);
    levels.push_back(prev);
    for (int j = 1; j <= n; ++j) {
        Signal cur = block_means(len >> j);
        Signal detail(len);
        for (std::size_t i = 0; i < len; ++i)
            detail[i] = cur[i] - prev[i];
        levels.push_back(std::move(detail));
        prev = std::move(cur);
    }
    return levels;
}

/// For each Haar level, the constituent of V_n whose isotypic subspace
/// contains it, found by projecting a basis of the level and checking it
/// comes back unchanged (the paper does not fix the index bijection).
inline std::vector<std::size_t> match_haar_levels(const PermProjectionContext& ctx,
                                                  double tol = 1e-9) {
    const std::size_t len = std::size_t{1} << ctx.n;
    const std::size_t n_constituents = ctx.decomp.constituents.size();
    std::vector<std::size_t> match(static_cast<std::size_t>(ctx.n) + 1, n_constituents);
    for (std::size_t level = 0; level <= static_cast<std::size_t>(ctx.n); ++level) {
        for (std::size_t c = 0; c < n_constituents; ++c) {
            bool contains = true;
            for (std::size_t l = 0; l < len && contains; ++l) {
                Signal delta(len, Complex{});
                delta[l] = 1.0;
                const Signal v = haar_levels(delta)[level];
                double norm = 0;
                for (const Complex& z : v)
                    norm += std::norm(z);
                if (norm < tol * tol)
                    continue;
                Signal proj = v;
                for (std::size_t s = 0; s < ctx.ops.size(); ++s)
                    proj = lagrange_project(ctx.ops[s], ctx.signatures[c][s], proj);
                double err = 0;
                for (std::size_t i = 0; i < len; ++i)
                    err += std::norm(proj[i] - v[i]);
                if (std::sqrt(err) > tol * std::sqrt(norm) + tol)
                    contains = false;
            }
            if (contains) {
                match[level] = c;
                break;
            }
        }
        if (match[level] == n_constituents)
            throw std::logic_error("match_haar_levels: level not inside any isotypic");
    }
    return match;
}

// ---------------------------------------------------------------------------
// Isotypic decomposition of regular-representation signals.
// ---------------------------------------------------------------------------

/// Class sum acting on C[W_n] by (M_C f)(h) = sum_{g in C} f(g^{-1} h),
/// i.e. the sum of left-translation matrices. Signals index group elements
/// in enumerate_group order.
struct RegularClassSumOperator {
    RTree tree = RTree::leaf(0);
    int n = 0;
    IntMatrix matrix;
    std::vector<std::int64_t> spectrum;  // distinct lambda over all irreps

    std::vector<Complex> apply(const std::vector<Complex>& x) const {
        ++op_apply_count();
        const std::size_t dim = matrix.rows();
        std::vector<Complex> y(dim, Complex{});
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (const std::int64_t v = matrix(i, j))
                    y[i] += static_cast<double>(v) * x[j];
        return y;
    }
};

struct RegularProjectionContext {
    int n = 0;
    CharacterTable table;
    std::vector<RegularClassSumOperator> ops;
    std::vector<std::vector<std::int64_t>> signatures;  // per irrep, per op
};

inline RegularProjectionContext make_regular_context(int n,
                                                     const std::vector<RTree>& sep_trees,
                                                     int threads = 1) {
    if (n > 3)
        throw size_limit_error("make_regular_context: limited to n <= 3 (|W_4| = 32768)");
    RegularProjectionContext ctx;
    ctx.n = n;
    ctx.table = build_table(n, false, threads);
    const ModifiedTable mt = modified_table(ctx.table);
    const std::vector<GroupElement> elems = enumerate_group(n);
    const std::vector<RTree> all_trees = enumerate_rtrees(n);

    for (const RTree& raw : sep_trees) {
        const RTree t = raw.canonical();
        RegularClassSumOperator op;
        op.tree = t;
        op.n = n;
        op.matrix = IntMatrix(elems.size(), elems.size());
        for (const GroupElement& g : elems) {
            if (!(tree_invariant(g) == t))
                continue;
            for (const GroupElement& h : elems)
                op.matrix(element_index(multiply(g, h)), element_index(h)) += 1;
        }
        const std::size_t j = tree_index(ctx.table.trees, t);
        for (std::size_t i = 0; i < ctx.table.size(); ++i)
            op.spectrum.push_back(mt.lambda_at(i, j).convert_to<std::int64_t>());
        std::sort(op.spectrum.begin(), op.spectrum.end());
        op.spectrum.erase(std::unique(op.spectrum.begin(), op.spectrum.end()),
                          op.spectrum.end());
        ctx.ops.push_back(std::move(op));
    }

    for (std::size_t i = 0; i < ctx.table.size(); ++i) {
        std::vector<std::int64_t> sig;
        for (const RegularClassSumOperator& op : ctx.ops) {
            const std::size_t j = tree_index(ctx.table.trees, op.tree);
            sig.push_back(mt.lambda_at(i, j).convert_to<std::int64_t>());
        }
        ctx.signatures.push_back(std::move(sig));
    }
    for (std::size_t a = 0; a < ctx.signatures.size(); ++a)
        for (std::size_t b = a + 1; b < ctx.signatures.size(); ++b)
            if (ctx.signatures[a] == ctx.signatures[b])
                throw not_separable_error(
                    "make_regular_context: classes do not separate the irreducibles");
    return ctx;
}

/// One component per irreducible of W_n; they sum to x and the projector
/// traces realize dim^2 (each irrep fills dim copies of itself in C[G]).
inline std::vector<IsotypicComponent> isotypic_decompose_regular(
    const RegularProjectionContext& ctx, const Signal& x) {
    if (BigInt(x.size()) != group_order(ctx.n))
        throw std::invalid_argument("isotypic_decompose_regular: signal length != |W_n|");
    std::vector<IsotypicComponent> out;
    for (std::size_t i = 0; i < ctx.table.size(); ++i) {
        Signal y = x;
        for (std::size_t s = 0; s < ctx.ops.size(); ++s)
            y = lagrange_project(ctx.ops[s], ctx.signatures[i][s], y);
        out.push_back(IsotypicComponent{ctx.table.trees[i], std::move(y)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cyclic-group eigenspace FFT demo.
// ---------------------------------------------------------------------------

inline std::uint64_t& dft_op_count() {
    thread_local std::uint64_t count = 0;
    return count;
}

/// O(N^2) oracle: X_j = sum_k x_k e^(-2 pi i jk / N), index j labelling the
/// eigenspace spanned by (1, w^j, w^2j, ...) for w = e^(2 pi i / N).
inline Signal naive_dft(const Signal& x) {
    const std::size_t len = x.size();
    Signal out(len, Complex{});
    const double base = -2.0 * std::numbers::pi / static_cast<double>(len);
    for (std::size_t j = 0; j < len; ++j)
        for (std::size_t k = 0; k < len; ++k)
            out[j] += x[k] * std::polar(1.0, base * static_cast<double>(j * k % len));
    return out;
}

/// Decimation-in-frequency FFT: each stage splits the space by the
/// eigenvalues of the half-rotation z^(2^(m-1)), z^(2^(m-2)), ..., z^1, one
/// butterfly counted per operation; the internal bit-reversed order is
/// undone before returning, so coefficients come out in natural frequency
/// order.
inline Signal eigenspace_dft(const Signal& x) {
    const std::size_t len = x.size();
    if (len == 0 || (len & (len - 1)) != 0)
        throw std::invalid_argument("eigenspace_dft: length must be a power of two");
    if (len > (std::size_t{1} << 20))
        throw size_limit_error("eigenspace_dft: length limited to 2^20");
    Signal a = x;
    for (std::size_t span = len; span >= 2; span >>= 1) {
        const std::size_t half = span / 2;
        const double base = -2.0 * std::numbers::pi / static_cast<double>(span);
        for (std::size_t start = 0; start < len; start += span)
            for (std::size_t j = 0; j < half; ++j) {
                const Complex u = a[start + j];
                const Complex v = a[start + j + half];
                a[start + j] = u + v;
                a[start + j + half] =
                    (u - v) * std::polar(1.0, base * static_cast<double>(j));
                ++dft_op_count();
            }
    }
    // Undo the bit reversal the recursion leaves behind.
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < len)
        ++bits;
    Signal out(len);
    for (std::size_t i = 0; i < len; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b))
                r |= std::size_t{1} << (bits - 1 - b);
        out[r] = a[i];
    }
    return out;
}

}  // namespace wreath
