#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "chartab.hpp"
#include "conjugacy.hpp"
#include "group.hpp"
#include "numeric.hpp"
#include "parallel.hpp"
#include "rtree.hpp"
#include "sepset.hpp"

namespace wreath {

/// Counter for class-sum operator applications (spectral cost accounting).
inline std::uint64_t& op_apply_count() {
    thread_local std::uint64_t count = 0;
    return count;
}

/// Character of the permutation representation V_n on the 2^n leaves:
/// the number of leaves each class representative fixes.
inline std::vector<std::int64_t> perm_character(int n) {
    std::vector<std::int64_t> chi;
    for (const ConjClass& c : classes(n))
        chi.push_back(
            static_cast<std::int64_t>(to_leaf_permutation(c.representative).fixed_points()));
    return chi;
}

struct PermDecomposition {
    int n = 0;
    std::vector<std::int64_t> character;     // chi_V per class, tree order
    std::vector<BigInt> multiplicities;      // <chi_V, chi_i> per irrep, tree order
    std::vector<std::size_t> constituents;   // irrep indices with m_i > 0
};

/// Multiplicities via the inner product m_i = (1/|G|) sum_C |C| chi_V(C)
/// chi_i(C); the division must come out exact or the table is wrong.
inline PermDecomposition decompose(const CharacterTable& table) {
    PermDecomposition d;
    d.n = table.n;
    d.character = perm_character(table.n);
    const BigInt order = group_order(table.n);
    const std::size_t k = table.size();
    for (std::size_t i = 0; i < k; ++i) {
        BigInt sum = 0;
        for (std::size_t j = 0; j < k; ++j)
            sum += table.class_list[j].size * d.character[j] * table.value(i, j);
        d.multiplicities.push_back(exact_div(sum, order, "isotypic multiplicity"));
        if (d.multiplicities.back() > 0)
            d.constituents.push_back(i);
    }
    return d;
}

/// The class sum of C acting on leaf signals: the integer matrix
/// sum_{g in C} P_g with P_g e_l = e_{g(l)}. Spectrum lists the distinct
/// eigenvalues lambda(C, W) over the constituents of V_n, ascending.
struct ClassSumOperator {
    RTree tree = RTree::leaf(0);
    int n = 0;
    IntMatrix matrix;
    std::vector<std::int64_t> spectrum;

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

/// Builds the class-sum matrices for several classes in one sweep over the
/// group (n <= 4: at most 32768 elements on 16 leaves).
inline std::vector<IntMatrix> class_sum_matrices(int n, const std::vector<RTree>& which,
                                                 int threads = 1) {
    if (n > 4)
        throw size_limit_error("class_sum_matrices: limited to n <= 4");
    const std::size_t dim = std::size_t{1} << n;
    const std::vector<RTree> all_trees = enumerate_rtrees(n);
    std::vector<int> slot(all_trees.size(), -1);
    for (std::size_t w = 0; w < which.size(); ++w) {
        const RTree canon = which[w].canonical();
        slot[tree_index(all_trees, canon)] = static_cast<int>(w);
    }
    const std::uint64_t total = 1ull << GroupElement::bit_count(n);
    const std::size_t workers =
        threads < 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(threads), 64);
    std::vector<std::vector<IntMatrix>> partial(
        workers, std::vector<IntMatrix>(which.size(), IntMatrix(dim, dim)));
    parallel_chunks(static_cast<std::size_t>(total), static_cast<int>(workers),
                    [&](std::size_t worker, std::size_t begin, std::size_t end) {
                        auto& mats = partial[worker];
                        for (std::size_t b = begin; b < end; ++b) {
                            const GroupElement g(n, static_cast<std::uint64_t>(b));
                            const int s = slot[tree_index(all_trees, tree_invariant(g))];
                            if (s < 0)
                                continue;
                            const LeafPermutation p = to_leaf_permutation(g);
                            for (std::size_t l = 0; l < dim; ++l)
                                mats[static_cast<std::size_t>(s)](
                                    static_cast<std::size_t>(p.image_of(static_cast<int>(l))),
                                    l) += 1;
                        }
                    });
    std::vector<IntMatrix> out(which.size(), IntMatrix(dim, dim));
    for (const auto& mats : partial)
        for (std::size_t w = 0; w < which.size(); ++w)
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    out[w](i, j) += mats[w](i, j);
    return out;
}

inline ClassSumOperator class_sum_operator(const RTree& t, int n,
                                           const CharacterTable& table,
                                           const ModifiedTable& mt,
                                           const PermDecomposition& decomp,
                                           int threads = 1) {
    ClassSumOperator op;
    op.tree = t.canonical();
    op.n = n;
    op.matrix = class_sum_matrices(n, {op.tree}, threads).front();
    const std::size_t j = tree_index(table.trees, op.tree);
    for (std::size_t i : decomp.constituents)
        op.spectrum.push_back(mt.lambda_at(i, j).convert_to<std::int64_t>());
    std::sort(op.spectrum.begin(), op.spectrum.end());
    op.spectrum.erase(std::unique(op.spectrum.begin(), op.spectrum.end()),
                      op.spectrum.end());
    return op;
}

// ---------------------------------------------------------------------------
// Separating-set instances from tables.
// ---------------------------------------------------------------------------

/// Modified-table rows as a search instance; `rows` empty means all rows
/// (the regular representation), otherwise only the listed irreducibles
/// (e.g. the constituents of V_n). All class columns are kept either way.
inline SepInstance instance_from_modified(const CharacterTable& table,
                                          const ModifiedTable& mt,
                                          std::vector<std::size_t> rows = {}) {
    if (rows.empty())
        for (std::size_t i = 0; i < table.size(); ++i)
            rows.push_back(i);
    SepInstance inst;
    inst.rows = rows.size();
    inst.cols = table.size();
    inst.col_labels = table.trees;
    inst.entries.reserve(inst.rows * inst.cols);
    for (std::size_t r : rows)
        for (std::size_t j = 0; j < inst.cols; ++j)
            inst.entries.push_back(mt.b_at(r, j));
    return inst;
}

struct PermSepsetResult {
    std::size_t isotypic_count = 0;
    BruteForceResult brute;    // filled for method "brute"
    SepSet greedy_set;         // filled for method "greedy"
    bool used_greedy = false;
};

/// Separating sets for V_n over the reduced table (constituent rows only,
/// every class column), by brute force or greedily.
inline PermSepsetResult perm_sepsets(int n, const std::string& method, int max_k = -1,
                                     std::uint64_t budget = default_subset_budget(),
                                     int threads = 1) {
    if (n > 4)
        throw size_limit_error("perm_sepsets: limited to n <= 4");
    const CharacterTable table = build_table(n, false, threads);
    const ModifiedTable mt = modified_table(table);
    const PermDecomposition decomp = decompose(table);
    const SepInstance inst = instance_from_modified(table, mt, decomp.constituents);
    PermSepsetResult result;
    result.isotypic_count = decomp.constituents.size();
    if (method == "brute") {
        result.brute = brute_force_minimal(inst, max_k, budget, threads);
    } else if (method == "greedy") {
        result.greedy_set = greedy(inst);
        result.used_greedy = true;
    } else {
        throw std::invalid_argument("perm_sepsets: method must be brute or greedy");
    }
    return result;
}

}  // namespace wreath
