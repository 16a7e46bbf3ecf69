#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "parallel.hpp"
#include "rtree.hpp"

namespace wreath {

/// A row-distinguishing instance: can every pair of rows be told apart by
/// looking only at a chosen subset of columns? Entries are exact rationals
/// (modified-character-table rows, or 0/1 for reduced MTC instances).
struct SepInstance {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries;              // dense row-major
    std::vector<RTree> col_labels;              // optional, tree per column

    const Rational& at(std::size_t i, std::size_t j) const {
        return entries[i * cols + j];
    }
};

struct SepSet {
    std::vector<int> columns;  // sorted, 0-based

    bool operator==(const SepSet&) const = default;
    auto operator<=>(const SepSet&) const = default;
};

inline bool is_separating(const SepInstance& inst, const SepSet& s) {
    for (int c : s.columns)
        if (c < 0 || static_cast<std::size_t>(c) >= inst.cols)
            throw std::invalid_argument("is_separating: column index out of range");
    for (std::size_t i = 0; i < inst.rows; ++i)
        for (std::size_t j = i + 1; j < inst.rows; ++j) {
            bool distinguished = false;
            for (int c : s.columns)
                if (inst.at(i, static_cast<std::size_t>(c)) !=
                    inst.at(j, static_cast<std::size_t>(c))) {
                    distinguished = true;
                    break;
                }
            if (!distinguished)
                return false;
        }
    return true;
}

namespace detail {

/// Per-column bitset over row pairs (i < j): bit set iff the column tells
/// the pair apart.
struct PairMasks {
    std::size_t pair_count = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> column_masks;  // cols * words

    const std::uint64_t* column(std::size_t c) const {
        return column_masks.data() + c * words;
    }
};

inline PairMasks build_pair_masks(const SepInstance& inst) {
    PairMasks m;
    m.pair_count = inst.rows * (inst.rows - 1) / 2;
    m.words = (m.pair_count + 63) / 64;
    m.column_masks.assign(inst.cols * std::max<std::size_t>(m.words, 1), 0);
    for (std::size_t c = 0; c < inst.cols; ++c) {
        std::uint64_t* mask = m.column_masks.data() + c * m.words;
        std::size_t p = 0;
        for (std::size_t i = 0; i < inst.rows; ++i)
            for (std::size_t j = i + 1; j < inst.rows; ++j, ++p)
                if (inst.at(i, c) != inst.at(j, c))
                    mask[p / 64] |= 1ull << (p % 64);
    }
    return m;
}

inline bool covers_all(const std::vector<std::uint64_t>& acc, std::size_t pair_count) {
    std::size_t remaining = pair_count;
    for (std::size_t w = 0; w < acc.size(); ++w) {
        const unsigned bits = remaining >= 64 ? 64 : static_cast<unsigned>(remaining);
        const std::uint64_t full = bits == 64 ? ~0ull : (1ull << bits) - 1;
        if ((acc[w] & full) != full)
            return false;
        remaining -= bits;
    }
    return remaining == 0;
}

}  // namespace detail

struct BruteForceResult {
    bool found = false;
    int k = 0;                    // minimal size when found, else max_k searched
    std::vector<SepSet> sets;     // all minimal sets, lexicographically sorted
};

inline std::uint64_t default_subset_budget() {
    if (const char* env = std::getenv("WREATH_SEPSET_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return 100000000ull;  // 10^8 subsets
}

/// Exhaustive search for the minimal separating-set size: tries k = 0, 1,
/// ... up to max_k, returning every valid set of the first size that works.
/// The cumulative number of subsets is checked against the budget up front;
/// W_4's full table (C(230,8) ~ 1.2e13) is rejected this way.
inline BruteForceResult brute_force_minimal(const SepInstance& inst, int max_k,
                                            std::uint64_t budget = default_subset_budget(),
                                            int threads = 1) {
    if (max_k < 0 || static_cast<std::size_t>(max_k) > inst.cols)
        max_k = static_cast<int>(inst.cols);
    const detail::PairMasks masks = detail::build_pair_masks(inst);

    BigInt cumulative = 0;
    for (int k = 0; k <= max_k; ++k) {
        cumulative += binomial(BigInt(inst.cols), static_cast<unsigned>(k));
        if (cumulative > budget)
            throw budget_error(
                "brute_force_minimal: enumerating subsets of size <= " +
                std::to_string(k) + " of " + std::to_string(inst.cols) +
                " columns exceeds the budget of " + std::to_string(budget) +
                " subsets; brute force is infeasible here (use the greedy method)");

        if (k == 0) {
            if (detail::covers_all(std::vector<std::uint64_t>(masks.words, 0),
                                   masks.pair_count))
                return BruteForceResult{true, 0, {SepSet{}}};
            continue;
        }

        // Partition lexicographic k-subset enumeration by first column.
        std::vector<std::vector<SepSet>> per_first(inst.cols);
        parallel_chunks(inst.cols, threads,
                        [&](std::size_t, std::size_t begin, std::size_t end) {
            std::vector<int> pick(static_cast<std::size_t>(k));
            std::vector<std::uint64_t> acc(masks.words);
            for (std::size_t first = begin; first < end; ++first) {
                if (inst.cols - first < static_cast<std::size_t>(k))
                    continue;
                pick[0] = static_cast<int>(first);
                // Depth-first over the remaining k-1 positions.
                std::size_t depth = 1;
                std::vector<int> cursor(static_cast<std::size_t>(k) + 1, 0);
                cursor[1] = static_cast<int>(first) + 1;
                while (depth >= 1) {
                    if (depth == static_cast<std::size_t>(k)) {
                        std::fill(acc.begin(), acc.end(), 0);
                        for (int c : pick) {
                            const std::uint64_t* col =
                                masks.column(static_cast<std::size_t>(c));
                            for (std::size_t w = 0; w < masks.words; ++w)
                                acc[w] |= col[w];
                        }
                        if (detail::covers_all(acc, masks.pair_count))
                            per_first[first].push_back(SepSet{pick});
                        --depth;
                        continue;
                    }
                    int& c = cursor[depth];
                    if (static_cast<std::size_t>(c) + (k - depth) > inst.cols) {
                        --depth;
                        continue;
                    }
                    pick[depth] = c;
                    ++c;
                    ++depth;
                    cursor[depth] = pick[depth - 1] + 1;
                }
            }
        });

        std::vector<SepSet> found;
        for (auto& bucket : per_first)
            for (auto& s : bucket)
                found.push_back(std::move(s));
        if (!found.empty())
            return BruteForceResult{true, k, std::move(found)};
    }
    return BruteForceResult{false, max_k, {}};
}

/// The greedy heuristic: repeatedly take the column that distinguishes the
/// most still-undistinguished pairs, lowest index on ties.
inline SepSet greedy(const SepInstance& inst) {
    const detail::PairMasks masks = detail::build_pair_masks(inst);
    std::vector<std::uint64_t> covered(masks.words, 0);
    SepSet result;
    while (!detail::covers_all(covered, masks.pair_count)) {
        std::size_t best_col = 0;
        std::size_t best_gain = 0;
        for (std::size_t c = 0; c < inst.cols; ++c) {
            const std::uint64_t* col = masks.column(c);
            std::size_t gain = 0;
            for (std::size_t w = 0; w < masks.words; ++w)
                gain += static_cast<std::size_t>(__builtin_popcountll(col[w] & ~covered[w]));
            if (gain > best_gain) {
                best_gain = gain;
                best_col = c;
            }
        }
        if (best_gain == 0)
            throw not_separable_error(
                "greedy: some pair of rows agrees in every column; no separating "
                "set exists");
        const std::uint64_t* col = masks.column(best_col);
        for (std::size_t w = 0; w < masks.words; ++w)
            covered[w] |= col[w];
        result.columns.push_back(static_cast<int>(best_col));
    }
    std::sort(result.columns.begin(), result.columns.end());
    return result;
}

// ---------------------------------------------------------------------------
// MINIMUM TEST COLLECTION and its reduction to the separating-set problem.
// ---------------------------------------------------------------------------

struct MTCInstance {
    int universe = 0;                     // |A|, elements 0..universe-1
    std::vector<std::vector<int>> tests;  // subsets of the universe
    int budget = 0;                       // J <= |A|

    void validate() const {
        if (universe < 1)
            throw std::invalid_argument("MTCInstance: universe must be >= 1");
        if (budget < 0 || budget > universe)
            throw std::invalid_argument("MTCInstance: need 0 <= J <= |A|");
        for (const auto& t : tests)
            for (int a : t)
                if (a < 0 || a >= universe)
                    throw std::invalid_argument("MTCInstance: test element out of range");
    }
};

/// The Appendix reduction: b_ij = 1 iff a_i is in C_j, and k = J.
inline std::pair<SepInstance, int> mtc_to_sepset(const MTCInstance& m) {
    m.validate();
    SepInstance inst;
    inst.rows = static_cast<std::size_t>(m.universe);
    inst.cols = m.tests.size();
    inst.entries.assign(inst.rows * inst.cols, Rational(0));
    for (std::size_t j = 0; j < m.tests.size(); ++j)
        for (int a : m.tests[j])
            inst.entries[static_cast<std::size_t>(a) * inst.cols + j] = 1;
    return {std::move(inst), m.budget};
}

/// Direct decision oracle: does some subcollection of at most J tests
/// contain exactly one element of every pair? Works on the source instance
/// itself (set membership, not matrix rows) so it stays independent of the
/// reduction it is used to validate.
inline bool brute_force_mtc(const MTCInstance& m,
                            std::uint64_t budget = default_subset_budget()) {
    m.validate();
    if (m.universe > 64)
        throw size_limit_error("brute_force_mtc: universe limited to 64 elements");
    std::vector<std::uint64_t> member(m.tests.size(), 0);
    for (std::size_t t = 0; t < m.tests.size(); ++t)
        for (int a : m.tests[t])
            member[t] |= 1ull << a;

    const int n_tests = static_cast<int>(m.tests.size());
    const int max_k = std::min(m.budget, n_tests);
    std::vector<int> pick;
    auto separated = [&]() {
        for (int a1 = 0; a1 < m.universe; ++a1)
            for (int a2 = a1 + 1; a2 < m.universe; ++a2) {
                bool ok = false;
                for (int t : pick) {
                    const std::uint64_t s = member[static_cast<std::size_t>(t)];
                    if (((s >> a1) & 1) != ((s >> a2) & 1)) {
                        ok = true;
                        break;
                    }
                }
                if (!ok)
                    return false;
            }
        return true;
    };

    BigInt cumulative = 0;
    for (int k = 0; k <= max_k; ++k) {
        cumulative += binomial(BigInt(n_tests), static_cast<unsigned>(k));
        if (cumulative > budget)
            throw budget_error("brute_force_mtc: subset enumeration exceeds budget");
        pick.assign(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i)
            pick[static_cast<std::size_t>(i)] = i;
        if (k == 0) {
            if (separated())
                return true;
            continue;
        }
        while (true) {
            if (separated())
                return true;
            // next lexicographic combination
            int pos = k - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n_tests - k + pos)
                --pos;
            if (pos < 0)
                break;
            ++pick[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < k; ++q)
                pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return false;
}

}  // namespace wreath
