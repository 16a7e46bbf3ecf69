// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Exact checks use integer/rational arithmetic; spectral checks use
// an absolute tolerance of 1e-9 on unit-scale signals; stated wall-clock
// bounds are measured and enforced.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <wreath/chartab.hpp>
#include <wreath/conjugacy.hpp>
#include <wreath/group.hpp>
#include <wreath/permrep.hpp>
#include <wreath/rtree.hpp>
#include <wreath/sepset.hpp>
#include <wreath/spectral.hpp>

#include "reference_tables.hpp"

using namespace wreath;

namespace {

constexpr double kTol = 1e-9;

int g_failures = 0;

void run_criterion(int number, const std::string& name,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  [%2d] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok)
        ++g_failures;
}

double norm(const Signal& s) {
    double n = 0;
    for (const Complex& v : s)
        n += std::norm(v);
    return std::sqrt(n);
}

double dist(const Signal& a, const Signal& b) {
    double n = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        n += std::norm(a[i] - b[i]);
    return std::sqrt(n);
}

Signal random_unit_signal(std::size_t len, std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Signal s(len);
    for (auto& v : s)
        v = Complex(d(rng), d(rng));
    const double n = norm(s);
    for (auto& v : s)
        v /= n;
    return s;
}

bool timed_under(double secs, double bound, std::string& detail) {
    if (secs < bound)
        return true;
    std::ostringstream os;
    os << "took " << secs << "s, bound " << bound << "s";
    detail = os.str();
    return false;
}

// --- criterion bodies -------------------------------------------------------

bool criterion_counts(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<int> expected_trees = {2, 5, 20, 230};
    const std::vector<std::uint64_t> expected_orders = {2, 8, 128, 32768};
    for (int n = 1; n <= 4; ++n) {
        if (count_rtrees(n) != expected_trees[static_cast<std::size_t>(n - 1)])
            return false;
        if (enumerate_rtrees(n).size() !=
            static_cast<std::size_t>(expected_trees[static_cast<std::size_t>(n - 1)]))
            return false;
        if (group_order(n) != expected_orders[static_cast<std::size_t>(n - 1)])
            return false;
        if (enumerate_group(n).size() != expected_orders[static_cast<std::size_t>(n - 1)])
            return false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return timed_under(secs, 1.0, detail);
}

bool criterion_bucket_oracle(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    const auto cls = classes(4);
    const auto counts = bucket_oracle(4);
    if (counts.size() != 230 || cls.size() != 230)
        return false;
    BigInt total = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (BigInt(counts[i]) != cls[i].size)
            return false;
        total += counts[i];
    }
    if (total != 32768)
        return false;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return timed_under(secs, 60.0, detail);
}

bool criterion_representatives(std::string&) {
    for (const auto* rows : {&fixtures::w2_classes(), &fixtures::w3_classes()}) {
        const std::size_t degree = rows == &fixtures::w2_classes() ? 4 : 8;
        for (const auto& row : *rows) {
            const RTree ordered = parse_rtree_ordered(row.tree);
            const LeafPermutation ours =
                to_leaf_permutation(class_representative(ordered));
            const LeafPermutation published =
                LeafPermutation::from_cycles(row.cycles, degree);
            if (!(ours == published))
                return false;
        }
    }
    return true;
}

bool criterion_character_tables(std::string&) {
    for (int n = 1; n <= 4; ++n) {
        const CharacterTable t = build_table(n);
        if (!check_row_orthogonality(t) || !check_column_orthogonality(t))
            return false;
        BigInt dim2 = 0;
        for (const auto& d : t.dims)
            dim2 += d * d;
        if (dim2 != group_order(n))
            return false;
        if (n <= 3)
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = 0; j < t.size(); ++j)
                    if (BigInt(explicit_irrep(t.trees[i], t.class_list[j].representative)
                                   .trace()) != t.value(i, j))
                        return false;
    }
    // n = 2 equals the dihedral-8 table up to row/column matching
    const CharacterTable t2 = build_table(2);
    const auto& d4 = fixtures::d4_table();
    auto sig = [](const std::vector<int>& sizes, const std::vector<int>& row) {
        std::multiset<std::pair<int, int>> s;
        for (std::size_t j = 0; j < row.size(); ++j)
            s.insert({sizes[j], row[j]});
        return s;
    };
    std::vector<int> sizes2;
    for (const auto& c : t2.class_list)
        sizes2.push_back(c.size.convert_to<int>());
    std::multiset<std::multiset<std::pair<int, int>>> ours, theirs;
    for (std::size_t i = 0; i < t2.size(); ++i) {
        std::vector<int> row;
        for (std::size_t j = 0; j < t2.size(); ++j)
            row.push_back(t2.value(i, j).convert_to<int>());
        ours.insert(sig(sizes2, row));
    }
    for (const auto& row : d4.rows)
        theirs.insert(sig(d4.class_sizes, row));
    return ours == theirs;
}

bool criterion_regular_sepsets(std::string& detail) {
    // n = 1: minimal size 1
    {
        const CharacterTable t = build_table(1);
        const BruteForceResult r =
            brute_force_minimal(instance_from_modified(t, modified_table(t)), -1);
        if (!r.found || r.k != 1)
            return false;
    }
    // n = 2: 3 sets matching the published trees
    {
        const CharacterTable t = build_table(2);
        const BruteForceResult r =
            brute_force_minimal(instance_from_modified(t, modified_table(t)), -1);
        if (!r.found || r.k != 2 || r.sets.size() != 3)
            return false;
        for (std::size_t s = 0; s < 3; ++s) {
            const auto& expect = fixtures::w2_sepsets()[s];
            for (std::size_t i = 0; i < expect.size(); ++i)
                if (r.sets[s].columns[i] != expect[i] - 1)
                    return false;
        }
    }
    // n = 3: minimal size 4, exactly the 40 published sets, under 60 s
    {
        const auto start = std::chrono::steady_clock::now();
        const CharacterTable t = build_table(3);
        const BruteForceResult r =
            brute_force_minimal(instance_from_modified(t, modified_table(t)), -1);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (!r.found || r.k != 4 || r.sets.size() != 40)
            return false;
        for (std::size_t s = 0; s < 40; ++s) {
            const auto& expect = fixtures::w3_sepsets()[s];
            for (std::size_t i = 0; i < expect.size(); ++i)
                if (r.sets[s].columns[i] != expect[i] - 1)
                    return false;
        }
        if (!timed_under(secs, 60.0, detail))
            return false;
    }
    // n = 4: greedy returns a valid set of size <= 10 in under 5 minutes
    {
        const auto start = std::chrono::steady_clock::now();
        const CharacterTable t = build_table(4);
        const SepInstance inst = instance_from_modified(t, modified_table(t));
        const SepSet g = greedy(inst);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (!is_separating(inst, g) || g.columns.size() > 10)
            return false;
        if (!timed_under(secs, 300.0, detail))
            return false;
        detail = "greedy size " + std::to_string(g.columns.size()) + " at n=4";
    }
    return true;
}

bool criterion_perm_rep(std::string&) {
    const std::vector<std::size_t> expected_counts = {3, 4, 5};
    const std::vector<int> expected_k = {1, 2, 2};
    const std::vector<std::size_t> expected_sets = {2, 60, 1940};
    for (int n = 2; n <= 4; ++n) {
        const CharacterTable t = build_table(n);
        const PermDecomposition d = decompose(t);
        if (d.constituents.size() != expected_counts[static_cast<std::size_t>(n - 2)])
            return false;
        for (const BigInt& m : d.multiplicities)
            if (m != 0 && m != 1)
                return false;
        const PermSepsetResult r = perm_sepsets(n, "brute");
        if (!r.brute.found ||
            r.brute.k != expected_k[static_cast<std::size_t>(n - 2)] ||
            r.brute.sets.size() != expected_sets[static_cast<std::size_t>(n - 2)])
            return false;
        if (n == 2) {
            // exactly the two root-swap classes
            const std::size_t c4 =
                tree_index(t.trees, RTree::node(1, RTree::leaf(0), RTree::leaf(0)));
            const std::size_t c5 =
                tree_index(t.trees, RTree::node(1, RTree::leaf(1), RTree::leaf(1)));
            if (r.brute.sets[0].columns != std::vector<int>{static_cast<int>(c4)} ||
                r.brute.sets[1].columns != std::vector<int>{static_cast<int>(c5)})
                return false;
        }
    }
    return true;
}

bool criterion_spectral(std::string&) {
    std::mt19937 rng(2024);
    for (int n = 2; n <= 4; ++n) {
        const CharacterTable table = build_table(n);
        const ModifiedTable mt = modified_table(table);
        const PermDecomposition d = decompose(table);
        const SepSet g = greedy(instance_from_modified(table, mt, d.constituents));
        std::vector<RTree> sep_trees;
        for (int c : g.columns)
            sep_trees.push_back(table.trees[static_cast<std::size_t>(c)]);
        const PermProjectionContext ctx = make_perm_context(n, sep_trees);
        const auto haar_match = match_haar_levels(ctx);
        const std::size_t len = std::size_t{1} << n;

        for (int trial = 0; trial < 100; ++trial) {
            const Signal x = random_unit_signal(len, rng);
            const auto components = isotypic_decompose_perm(ctx, x);
            if (components.size() != static_cast<std::size_t>(n) + 1)
                return false;

            Signal sum(len, Complex{});
            for (const auto& c : components)
                for (std::size_t i = 0; i < len; ++i)
                    sum[i] += c.values[i];
            if (dist(sum, x) > kTol)
                return false;

            for (std::size_t a = 0; a < components.size(); ++a) {
                // idempotent fixed point of its own projector
                const auto again = isotypic_decompose_perm(ctx, components[a].values);
                if (dist(again[a].values, components[a].values) > kTol)
                    return false;
                // pairwise orthogonal
                for (std::size_t b = a + 1; b < components.size(); ++b) {
                    Complex inner{};
                    for (std::size_t i = 0; i < len; ++i)
                        inner +=
                            components[a].values[i] * std::conj(components[b].values[i]);
                    if (std::abs(inner) > kTol)
                        return false;
                }
                // scaled by the exact integer eigenvalue under every class sum
                for (std::size_t s = 0; s < ctx.ops.size(); ++s) {
                    const Signal applied = ctx.ops[s].apply(components[a].values);
                    const double lambda =
                        static_cast<double>(ctx.signatures[a][s]);
                    Signal scaled(len);
                    for (std::size_t i = 0; i < len; ++i)
                        scaled[i] = lambda * components[a].values[i];
                    if (dist(applied, scaled) > kTol)
                        return false;
                }
            }

            // components coincide with the Haar levels under the matching
            const auto levels = haar_levels(x);
            for (std::size_t j = 0; j < levels.size(); ++j)
                if (dist(levels[j], components[haar_match[j]].values) > kTol)
                    return false;
        }
    }
    return true;
}

bool criterion_regular_projection(std::string&) {
    for (int n = 1; n <= 3; ++n) {
        const CharacterTable t = build_table(n);
        const SepSet g = greedy(instance_from_modified(t, modified_table(t)));
        std::vector<RTree> sep_trees;
        for (int c : g.columns)
            sep_trees.push_back(t.trees[static_cast<std::size_t>(c)]);
        const RegularProjectionContext ctx = make_regular_context(n, sep_trees);
        const std::size_t order = group_order(n).convert_to<std::size_t>();

        std::vector<double> traces(t.size(), 0.0);
        for (std::size_t l = 0; l < order; ++l) {
            Signal delta(order, Complex{});
            delta[l] = 1.0;
            const auto components = isotypic_decompose_regular(ctx, delta);
            for (std::size_t i = 0; i < components.size(); ++i)
                traces[i] += components[i].values[l].real();
        }
        for (std::size_t i = 0; i < t.size(); ++i) {
            const double dim = static_cast<double>(t.dims[i].convert_to<int>());
            if (std::abs(traces[i] - dim * dim) > kTol * static_cast<double>(order))
                return false;
        }

        Signal delta(order, Complex{});
        delta[element_index(GroupElement::identity(n))] = 1.0;
        const auto components = isotypic_decompose_regular(ctx, delta);
        Signal sum(order, Complex{});
        for (const auto& c : components)
            for (std::size_t i = 0; i < order; ++i)
                sum[i] += c.values[i];
        if (dist(sum, delta) > kTol)
            return false;
    }
    return true;
}

bool criterion_fft(std::string&) {
    std::mt19937 rng(4096);
    std::vector<std::pair<std::size_t, std::uint64_t>> op_counts;
    for (std::size_t len = 2; len <= 1024; len *= 2) {
        const Signal x = random_unit_signal(len, rng);
        dft_op_count() = 0;
        const Signal fast = eigenspace_dft(x);
        op_counts.emplace_back(len, dft_op_count());
        const Signal slow = naive_dft(x);
        double num = 0, den = 0;
        for (std::size_t i = 0; i < len; ++i) {
            num += std::norm(fast[i] - slow[i]);
            den += std::norm(slow[i]);
        }
        if (std::sqrt(num) > 1e-9 * std::sqrt(den))
            return false;
    }
    // instrumented count grows as O(N log N): exactly (N/2) log2 N here
    for (const auto& [len, ops] : op_counts) {
        std::size_t log2n = 0;
        while ((std::size_t{1} << log2n) < len)
            ++log2n;
        if (ops != len / 2 * log2n)
            return false;
        if (ops > len * log2n)  // O(N log N) with constant 1
            return false;
    }
    return true;
}

bool criterion_np_reduction(std::string&) {
    // full instance space |A| <= 4, |tests| <= 4 over distinct subsets
    for (int universe = 1; universe <= 4; ++universe) {
        const int n_subsets = 1 << universe;
        std::vector<std::vector<int>> subsets;
        for (int mask = 0; mask < n_subsets; ++mask) {
            std::vector<int> s;
            for (int a = 0; a < universe; ++a)
                if (mask & (1 << a))
                    s.push_back(a);
            subsets.push_back(std::move(s));
        }
        // all collections of at most 4 distinct subsets, via combinations
        std::vector<int> pick;
        std::function<bool(int, int)> walk = [&](int start, int remaining) -> bool {
            if (remaining == 0) {
                MTCInstance m;
                m.universe = universe;
                for (int idx : pick)
                    m.tests.push_back(subsets[static_cast<std::size_t>(idx)]);
                for (int j = 0; j <= universe; ++j) {
                    m.budget = j;
                    auto [inst, k] = mtc_to_sepset(m);
                    if (brute_force_mtc(m) != brute_force_minimal(inst, k).found)
                        return false;
                }
                return true;
            }
            for (int next = start; next + remaining <= n_subsets; ++next) {
                pick.push_back(next);
                const bool ok = walk(next + 1, remaining - 1);
                pick.pop_back();
                if (!ok)
                    return false;
            }
            return true;
        };
        for (int size = 0; size <= 4; ++size)
            if (!walk(0, size))
                return false;
    }
    // 200 random instances up to |A| = 6
    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        MTCInstance m;
        m.universe = 1 + static_cast<int>(rng() % 6);
        const int n_tests = static_cast<int>(rng() % 7);
        for (int t = 0; t < n_tests; ++t) {
            std::vector<int> test;
            for (int a = 0; a < m.universe; ++a)
                if (rng() % 2)
                    test.push_back(a);
            m.tests.push_back(std::move(test));
        }
        m.budget = static_cast<int>(rng() % (m.universe + 1));
        auto [inst, k] = mtc_to_sepset(m);
        if (brute_force_mtc(m) != brute_force_minimal(inst, k).found)
            return false;
    }
    return true;
}

}  // namespace

int main() {
    run_criterion(1, "tree counts and group orders", criterion_counts);
    run_criterion(2, "conjugacy bucketing oracle at n=4", criterion_bucket_oracle);
    run_criterion(3, "published class representatives, bit-exact",
                  criterion_representatives);
    run_criterion(4, "exact character tables with matrix oracle",
                  criterion_character_tables);
    run_criterion(5, "regular-representation separating sets", criterion_regular_sepsets);
    run_criterion(6, "permutation-representation decomposition and sets",
                  criterion_perm_rep);
    run_criterion(7, "spectral engine on leaf signals", criterion_spectral);
    run_criterion(8, "regular-representation projections", criterion_regular_projection);
    run_criterion(9, "cyclic eigenspace FFT vs naive oracle", criterion_fft);
    run_criterion(10, "MTC reduction equisatisfiability", criterion_np_reduction);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
