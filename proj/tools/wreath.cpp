// Command-line front end: exact spectral analysis on the automorphism
// groups of complete binary trees. Subcommands cover 2-tree enumeration,
// conjugacy classes, character tables, separating-set searches, isotypic
// projections, the cyclic FFT demo, the MTC reduction, and a
// self-verification suite. Exit codes: 0 success, 1 domain error
// (size/budget/separability), 2 I/O or parse error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <wreath/chartab.hpp>
#include <wreath/conjugacy.hpp>
#include <wreath/group.hpp>
#include <wreath/permrep.hpp>
#include <wreath/rtree.hpp>
#include <wreath/sepset.hpp>
#include <wreath/spectral.hpp>

using json = nlohmann::ordered_json;
using namespace wreath;

namespace {

struct Options {
    int threads = 1;
    std::uint64_t budget = default_subset_budget();
};

Signal read_signal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open signal file: " + path);
    Signal s;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        try {
            if (comma == std::string::npos) {
                s.emplace_back(std::stod(line), 0.0);
            } else {
                s.emplace_back(std::stod(line.substr(0, comma)),
                               std::stod(line.substr(comma + 1)));
            }
        } catch (const std::exception&) {
            throw parse_error("bad signal line: '" + line + "'");
        }
    }
    if (s.empty())
        throw parse_error("signal file is empty: " + path);
    return s;
}

std::vector<RTree> read_sepset_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open separating-set file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw parse_error(std::string("separating-set file: ") + e.what());
    }
    if (!j.is_array())
        throw parse_error("separating-set file must be a JSON array of tree strings");
    std::vector<RTree> trees;
    for (const auto& item : j) {
        if (!item.is_string())
            throw parse_error("separating-set entries must be s-expression strings");
        const ParsedRTree p = parse_rtree(item.get<std::string>());
        if (!p.was_canonical)
            std::cerr << "warning: non-canonical tree " << item.get<std::string>()
                      << " canonicalized to " << to_sexpr(p.tree) << "\n";
        if (p.tree.height() != n)
            throw std::invalid_argument("separating-set tree has wrong height");
        trees.push_back(p.tree);
    }
    return trees;
}

json signal_to_json(const Signal& s) {
    json arr = json::array();
    for (const Complex& v : s)
        arr.push_back({v.real(), v.imag()});
    return arr;
}

json classes_json(const std::vector<ConjClass>& cls) {
    json arr = json::array();
    for (const auto& c : cls)
        arr.push_back({{"tree", to_sexpr(c.tree)},
                       {"size", c.size.str()},
                       {"rep", to_leaf_permutation(c.representative).cycle_notation()}});
    return arr;
}

// ---- trees ----------------------------------------------------------------

int run_trees(int n, int r, bool count_only) {
    if (r == 2) {
        std::cout << "# " << count_rtrees(n).str() << " trees of height " << n << "\n";
        if (!count_only)
            for (const RTree& t : enumerate_rtrees(n))
                std::cout << to_sexpr(t) << "\n";
    } else {
        std::cout << "# " << count_general_rtrees(n, r).str() << " trees of height "
                  << n << " (r = " << r << ")\n";
        if (!count_only)
            for (const std::string& t : enumerate_general_rtrees(n, r))
                std::cout << t << "\n";
    }
    return 0;
}

// ---- classes ---------------------------------------------------------------

int run_classes(int n, bool as_json) {
    const auto cls = classes(n);
    if (as_json) {
        std::cout << json{{"n", n}, {"classes", classes_json(cls)}}.dump(2) << "\n";
        return 0;
    }
    std::size_t width = 0;
    std::vector<std::string> reps;
    for (const auto& c : cls) {
        reps.push_back(to_leaf_permutation(c.representative).cycle_notation());
        width = std::max(width, reps.back().size());
    }
    for (std::size_t i = 0; i < cls.size(); ++i)
        std::cout << std::setw(4) << i + 1 << "  " << std::left
                  << std::setw(static_cast<int>(width) + 2) << reps[i] << std::right
                  << std::setw(8) << cls[i].size.str() << "  " << to_sexpr(cls[i].tree)
                  << "\n";
    return 0;
}

// ---- chartab ---------------------------------------------------------------

int run_chartab(int n, bool modified, const std::string& format, bool allow_huge,
                const Options& opt) {
    const CharacterTable t = build_table(n, allow_huge, opt.threads);
    const std::size_t k = t.size();
    ModifiedTable mt;
    if (modified)
        mt = modified_table(t);

    if (format == "json") {
        json out;
        out["n"] = n;
        out["classes"] = classes_json(t.class_list);
        json irreps = json::array();
        for (std::size_t i = 0; i < k; ++i)
            irreps.push_back(
                {{"tree", to_sexpr(t.trees[i])}, {"dim", t.dims[i].str()}});
        out["irreps"] = irreps;
        json values = json::array();
        for (std::size_t i = 0; i < k; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < k; ++j)
                row.push_back(modified ? mt.b_at(i, j).str() : t.value(i, j).str());
            values.push_back(row);
        }
        out["values"] = values;
        if (modified) {
            json eig = json::array();
            for (std::size_t i = 0; i < k; ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < k; ++j)
                    row.push_back(mt.lambda_at(i, j).str());
                eig.push_back(row);
            }
            out["eigenvalues"] = eig;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    const char sep = format == "csv" ? ',' : '\t';
    if (format == "csv") {
        std::cout << "irrep";
        for (std::size_t j = 0; j < k; ++j)
            std::cout << sep << '"' << to_sexpr(t.trees[j]) << '"';
        std::cout << "\n";
    } else {
        std::cout << "# " << (modified ? "modified " : "") << "character table of W_"
                  << n << " (" << k << " x " << k << "), rows/columns in tree order\n";
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (format == "csv")
            std::cout << '"' << to_sexpr(t.trees[i]) << '"';
        for (std::size_t j = 0; j < k; ++j) {
            if (format == "csv" || j)
                std::cout << sep;
            std::cout << (modified ? mt.b_at(i, j).str() : t.value(i, j).str());
        }
        std::cout << "\n";
    }
    return 0;
}

// ---- sepset ----------------------------------------------------------------

json sepset_to_json(const SepSet& s) {
    json arr = json::array();
    for (int c : s.columns)
        arr.push_back(c + 1);  // 1-based tree-order indices
    return arr;
}

std::string sepset_to_text(const SepSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.columns.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(s.columns[i] + 1);
    }
    return out + "}";
}

int run_sepset(int n, const std::string& rep, const std::string& method, int max_k,
               bool all, bool as_json, const Options& opt) {
    const CharacterTable t = build_table(n, false, opt.threads);
    const ModifiedTable mt = modified_table(t);
    std::vector<std::size_t> rows;
    if (rep == "perm")
        rows = decompose(t).constituents;
    const SepInstance inst = instance_from_modified(t, mt, rows);

    json out;
    out["n"] = n;
    out["rep"] = rep;
    out["method"] = method;
    if (method == "greedy") {
        const SepSet g = greedy(inst);
        out["k"] = g.columns.size();
        out["sets"] = json::array({sepset_to_json(g)});
        // where brute force is cheap, report how far greedy is from optimal
        // (reported only; the approximation-ratio question is open)
        std::string ratio_line;
        if (n <= 3) {
            const BruteForceResult best =
                brute_force_minimal(inst, -1, opt.budget, opt.threads);
            if (best.found) {
                out["optimal_k"] = best.k;
                ratio_line = "greedy/optimal = " + std::to_string(g.columns.size()) +
                             "/" + std::to_string(best.k);
            }
        }
        if (!as_json) {
            std::cout << "k=" << g.columns.size() << " (greedy, valid)\n"
                      << sepset_to_text(g) << "\n";
            for (int c : g.columns)
                std::cout << "  " << c + 1 << ": "
                          << to_sexpr(t.trees[static_cast<std::size_t>(c)]) << "\n";
            if (!ratio_line.empty())
                std::cout << ratio_line << "\n";
            return 0;
        }
    } else {
        const BruteForceResult r =
            brute_force_minimal(inst, max_k, opt.budget, opt.threads);
        if (!r.found) {
            std::cerr << "no separating set of size <= " << r.k << " exists\n";
            return 1;
        }
        out["k"] = r.k;
        out["count"] = r.sets.size();
        json sets = json::array();
        if (all)
            for (const SepSet& s : r.sets)
                sets.push_back(sepset_to_json(s));
        else if (!r.sets.empty())
            sets.push_back(sepset_to_json(r.sets.front()));
        out["sets"] = sets;
        if (!as_json) {
            std::cout << "k=" << r.k << " (" << r.sets.size() << " minimal sets)\n";
            if (all)
                for (const SepSet& s : r.sets)
                    std::cout << sepset_to_text(s) << "\n";
            else if (!r.sets.empty())
                std::cout << sepset_to_text(r.sets.front()) << "\n";
            return 0;
        }
    }
    json labels = json::array();
    for (const RTree& tr : t.trees)
        labels.push_back(to_sexpr(tr));
    out["columns"] = labels;
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- permrep ---------------------------------------------------------------

int run_permrep(int n, bool matrices, bool sepsets, const std::string& method,
                bool as_json, const Options& opt) {
    const CharacterTable t = build_table(n, false, opt.threads);
    const PermDecomposition d = decompose(t);
    json out;
    out["n"] = n;
    out["dim"] = 1 << n;
    out["isotypics"] = d.constituents.size();
    json cons = json::array();
    for (std::size_t i : d.constituents)
        cons.push_back({{"tree", to_sexpr(t.trees[i])}, {"dim", t.dims[i].str()}});
    out["constituents"] = cons;

    if (matrices) {
        const ModifiedTable mt = modified_table(t);
        json mats = json::array();
        std::vector<RTree> trees;
        for (const auto& c : t.class_list)
            trees.push_back(c.tree);
        const auto grids = class_sum_matrices(n, trees, opt.threads);
        for (std::size_t w = 0; w < grids.size(); ++w) {
            json rows = json::array();
            for (std::size_t i = 0; i < grids[w].rows(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < grids[w].cols(); ++j)
                    row.push_back(grids[w](i, j));
                rows.push_back(row);
            }
            json spectrum = json::array();
            for (std::size_t c : d.constituents)
                spectrum.push_back(mt.lambda_at(c, w).str());
            mats.push_back({{"tree", to_sexpr(trees[w])},
                            {"matrix", rows},
                            {"eigenvalues", spectrum}});
        }
        out["class_sums"] = mats;
    }

    if (sepsets) {
        const PermSepsetResult r = perm_sepsets(n, method, -1, opt.budget, opt.threads);
        if (r.used_greedy) {
            out["sepset"] = {{"method", "greedy"},
                             {"k", r.greedy_set.columns.size()},
                             {"sets", json::array({sepset_to_json(r.greedy_set)})}};
        } else {
            if (!r.brute.found) {
                std::cerr << "no separating set found\n";
                return 1;
            }
            json sets = json::array();
            for (const SepSet& s : r.brute.sets)
                sets.push_back(sepset_to_json(s));
            out["sepset"] = {{"method", "brute"},
                             {"k", r.brute.k},
                             {"count", r.brute.sets.size()},
                             {"sets", sets}};
        }
    }

    if (as_json || matrices) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "V_" << n << ": dim " << (1 << n) << ", " << d.constituents.size()
              << " isotypic subspaces\n";
    for (std::size_t i : d.constituents)
        std::cout << "  " << to_sexpr(t.trees[i]) << "  dim " << t.dims[i].str() << "\n";
    if (sepsets && out.contains("sepset")) {
        const auto& s = out["sepset"];
        std::cout << "minimal separating sets: k=" << s["k"].dump();
        if (s.contains("count"))
            std::cout << ", " << s["count"].dump() << " sets";
        std::cout << "\n";
        for (const auto& set : s["sets"]) {
            std::cout << "  {";
            for (std::size_t i = 0; i < set.size(); ++i)
                std::cout << (i ? ", " : "") << set[i].dump();
            std::cout << "}\n";
        }
    }
    return 0;
}

// ---- project ---------------------------------------------------------------

int run_project(int n, const std::string& rep, const std::string& signal_path,
                const std::string& sepset_path, const Options& opt) {
    const Signal x = read_signal_file(signal_path);

    const CharacterTable t = build_table(n, false, opt.threads);
    const ModifiedTable mt = modified_table(t);
    std::vector<RTree> sep_trees;
    if (sepset_path == "auto") {
        std::vector<std::size_t> rows;
        if (rep == "perm")
            rows = decompose(t).constituents;
        const SepSet g = greedy(instance_from_modified(t, mt, rows));
        for (int c : g.columns)
            sep_trees.push_back(t.trees[static_cast<std::size_t>(c)]);
    } else {
        sep_trees = read_sepset_file(sepset_path, n);
    }

    json out;
    out["n"] = n;
    out["rep"] = rep;
    json sep = json::array();
    for (const RTree& tr : sep_trees)
        sep.push_back(to_sexpr(tr));
    out["sepset"] = sep;

    std::vector<IsotypicComponent> components;
    op_apply_count() = 0;
    if (rep == "perm") {
        const PermProjectionContext ctx = make_perm_context(n, sep_trees, opt.threads);
        components = isotypic_decompose_perm(ctx, x);
    } else {
        const RegularProjectionContext ctx =
            make_regular_context(n, sep_trees, opt.threads);
        components = isotypic_decompose_regular(ctx, x);
    }
    // cost accounting; minimal sets are not claimed to minimize this
    out["operator_applications"] = op_apply_count();
    json comps = json::array();
    for (const auto& c : components)
        comps.push_back(
            {{"tree", to_sexpr(c.tree)}, {"values", signal_to_json(c.values)}});
    out["components"] = comps;
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---- dft -------------------------------------------------------------------

int run_dft(const std::string& signal_path, bool naive) {
    const Signal x = read_signal_file(signal_path);
    const Signal y = naive ? naive_dft(x) : eigenspace_dft(x);
    std::ostringstream out;
    out << std::setprecision(17);
    for (const Complex& v : y)
        out << v.real() << "," << v.imag() << "\n";
    std::cout << out.str();
    return 0;
}

// ---- reduce-mtc ------------------------------------------------------------

int run_reduce_mtc(const std::string& in_path, const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in)
        throw parse_error("cannot open MTC file: " + in_path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw parse_error(std::string("MTC file: ") + e.what());
    }
    MTCInstance m;
    try {
        m.universe = j.at("universe").get<int>();
        for (const auto& t : j.at("tests"))
            m.tests.push_back(t.get<std::vector<int>>());
        m.budget = j.at("budget").get<int>();
    } catch (const json::exception& e) {
        throw parse_error(std::string("MTC schema: ") + e.what());
    }
    auto [inst, k] = mtc_to_sepset(m);
    json out;
    out["rows"] = inst.rows;
    out["cols"] = inst.cols;
    json entries = json::array();
    for (std::size_t i = 0; i < inst.rows; ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < inst.cols; ++c)
            row.push_back(inst.at(i, c) == 1 ? 1 : 0);
        entries.push_back(row);
    }
    out["entries"] = entries;
    out["k"] = k;
    std::ofstream ofs(out_path);
    if (!ofs)
        throw parse_error("cannot write: " + out_path);
    ofs << out.dump(2) << "\n";
    std::cout << "wrote " << inst.rows << " x " << inst.cols << " instance with k=" << k
              << " to " << out_path << "\n";
    return 0;
}

// ---- verify ----------------------------------------------------------------

int run_verify(int n, const Options& opt) {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok)
            ++failures;
    };

    const auto trees = enumerate_rtrees(n);
    report("tree count matches the recurrence", BigInt(trees.size()) == count_rtrees(n));

    const auto cls = classes(n);
    BigInt size_sum = 0;
    for (const auto& c : cls)
        size_sum += c.size;
    report("class sizes sum to |W_n|", size_sum == group_order(n));

    bool reps_ok = true;
    for (const auto& c : cls)
        reps_ok = reps_ok && tree_invariant(c.representative) == c.tree;
    report("representatives lie in their classes", reps_ok);

    if (n <= 4) {
        const auto counts = bucket_oracle(n, opt.threads);
        bool ok = counts.size() == cls.size();
        for (std::size_t i = 0; ok && i < cls.size(); ++i)
            ok = BigInt(counts[i]) == cls[i].size;
        report("bucketing oracle matches the size recursion", ok);
    }

    const CharacterTable t = build_table(n, false, opt.threads);
    BigInt dim2 = 0;
    for (const auto& d : t.dims)
        dim2 += d * d;
    report("sum of dim^2 equals |W_n|", dim2 == group_order(n));
    report("row orthogonality", check_row_orthogonality(t));
    report("column orthogonality", check_column_orthogonality(t));

    bool lambda_ok = true;
    try {
        modified_table(t);
    } catch (const std::exception&) {
        lambda_ok = false;
    }
    report("class-sum eigenvalues are integral", lambda_ok);

    if (n <= 3) {
        bool oracle_ok = true;
        for (std::size_t i = 0; oracle_ok && i < t.size(); ++i)
            for (std::size_t j = 0; oracle_ok && j < t.size(); ++j)
                oracle_ok =
                    BigInt(explicit_irrep(t.trees[i], t.class_list[j].representative)
                               .trace()) == t.value(i, j);
        report("explicit-matrix traces equal the table", oracle_ok);
    }

    const PermDecomposition d = decompose(t);
    bool perm_ok = d.constituents.size() == static_cast<std::size_t>(n) + 1;
    BigInt vdim = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        perm_ok = perm_ok && (d.multiplicities[i] == 0 || d.multiplicities[i] == 1);
        vdim += d.multiplicities[i] * irrep_dim(t.trees[i]);
    }
    report("V_n decomposes into n+1 multiplicity-one isotypics",
           perm_ok && vdim == BigInt(1) << n);

    if (failures) {
        std::cerr << failures << " check(s) failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral analysis on binary-tree automorphism groups"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--threads", opt.threads, "worker threads for parallel regions")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", opt.budget,
                   "subset-enumeration budget (or WREATH_SEPSET_BUDGET)")
        ->check(CLI::PositiveNumber);

    int n = 2;
    int r = 2;
    bool count_only = false, as_json = false, modified = false, allow_huge = false;
    bool all = false, matrices = false, want_sepsets = false, naive = false;
    int max_k = -1;
    std::string rep = "regular", method = "brute";
    std::string signal_path, sepset_path = "auto", in_path, out_path;

    auto* trees_cmd = app.add_subcommand("trees", "enumerate 2-trees (r-trees with --r)");
    trees_cmd->add_option("--n", n, "tree height")->required();
    trees_cmd->add_option("--r", r, "branching label count")->check(CLI::Range(2, 8));
    trees_cmd->add_flag("--count-only", count_only, "print only the count");

    auto* classes_cmd = app.add_subcommand("classes", "conjugacy classes of W_n");
    classes_cmd->add_option("--n", n, "height")->required();
    classes_cmd->add_flag("--json", as_json, "JSON output");

    auto* chartab_cmd = app.add_subcommand("chartab", "character table of W_n");
    chartab_cmd->add_option("--n", n, "height")->required();
    chartab_cmd->add_flag("--modified", modified, "modified table (chi / dim)");
    chartab_cmd->add_flag("--allow-huge", allow_huge, "permit the n = 5 build");
    auto* json_flag = chartab_cmd->add_flag("--json", "JSON output");
    auto* csv_flag = chartab_cmd->add_flag("--csv", "CSV output");
    json_flag->excludes(csv_flag);

    auto* sepset_cmd = app.add_subcommand("sepset", "separating-set search");
    sepset_cmd->add_option("--n", n, "height")->required();
    sepset_cmd->add_option("--rep", rep, "regular | perm")
        ->check(CLI::IsMember({"regular", "perm"}));
    sepset_cmd->add_option("--method", method, "brute | greedy")
        ->check(CLI::IsMember({"brute", "greedy"}));
    sepset_cmd->add_option("--max-k", max_k, "cap on brute-force set size");
    sepset_cmd->add_flag("--all", all, "print every minimal set");
    sepset_cmd->add_flag("--json", as_json, "JSON output");

    auto* permrep_cmd = app.add_subcommand("permrep", "permutation representation V_n");
    permrep_cmd->add_option("--n", n, "height")->required();
    permrep_cmd->add_flag("--matrices", matrices, "emit class-sum matrices (JSON)");
    permrep_cmd->add_flag("--sepsets", want_sepsets, "search separating sets");
    permrep_cmd->add_option("--method", method, "brute | greedy")
        ->check(CLI::IsMember({"brute", "greedy"}));
    permrep_cmd->add_flag("--json", as_json, "JSON output");

    auto* project_cmd = app.add_subcommand("project", "isotypic projections of a signal");
    project_cmd->add_option("--n", n, "height")->required();
    project_cmd->add_option("--rep", rep, "perm | regular")
        ->check(CLI::IsMember({"perm", "regular"}));
    project_cmd->add_option("--signal", signal_path, "signal file (re or re,im per line)")
        ->required();
    project_cmd->add_option("--sepset", sepset_path,
                            "auto or a JSON file of tree s-expressions");

    auto* dft_cmd = app.add_subcommand("dft", "cyclic-group eigenspace FFT");
    dft_cmd->add_option("--signal", signal_path, "signal file")->required();
    dft_cmd->add_flag("--naive", naive, "use the O(N^2) oracle instead");

    auto* reduce_cmd = app.add_subcommand(
        "reduce-mtc", "reduce MINIMUM TEST COLLECTION to a separating-set instance");
    reduce_cmd->add_option("--in", in_path, "MTC JSON {universe, tests, budget}")
        ->required();
    reduce_cmd->add_option("--out", out_path, "output instance JSON")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the oracle suite at height n");
    verify_cmd->add_option("--n", n, "height")->required();

    // let global options (--threads, --budget) appear after the subcommand
    for (CLI::App* sub : app.get_subcommands(nullptr))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage problems are parse errors (exit 2); --help is success
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (trees_cmd->parsed())
            return run_trees(n, r, count_only);
        if (classes_cmd->parsed())
            return run_classes(n, as_json);
        if (chartab_cmd->parsed()) {
            std::string format = "text";
            if (json_flag->count())
                format = "json";
            else if (csv_flag->count())
                format = "csv";
            return run_chartab(n, modified, format, allow_huge, opt);
        }
        if (sepset_cmd->parsed())
            return run_sepset(n, rep, method, max_k, all, as_json, opt);
        if (permrep_cmd->parsed())
            return run_permrep(n, matrices, want_sepsets, method, as_json, opt);
        if (project_cmd->parsed())
            return run_project(n, rep, signal_path, sepset_path, opt);
        if (dft_cmd->parsed())
            return run_dft(signal_path, naive);
        if (reduce_cmd->parsed())
            return run_reduce_mtc(in_path, out_path);
        if (verify_cmd->parsed())
            return run_verify(n, opt);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
