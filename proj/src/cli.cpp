#include "oafrac/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "oafrac/constructions.hpp"
#include "oafrac/errors.hpp"
#include "oafrac/io.hpp"
#include "oafrac/search.hpp"

namespace oafrac {

namespace {

struct Limits {
    std::optional<std::uint64_t> budget_flag;
    std::optional<std::uint64_t> capacity_flag;
    std::optional<std::uint64_t> budget_config;
    std::optional<std::uint64_t> capacity_config;

    // Precedence: flag > config file > environment > built-in default.
    std::uint64_t budget() const {
        if (budget_flag) return *budget_flag;
        if (budget_config) return *budget_config;
        if (const char* env = std::getenv("OAFRAC_BUDGET")) {
            try {
                return std::stoull(env);
            } catch (const std::exception&) {
                throw UsageError("OAFRAC_BUDGET is not an integer");
            }
        }
        return SearchOptions{}.budget;
    }
    std::uint64_t capacity(std::uint64_t fallback) const {
        if (capacity_flag) return *capacity_flag;
        if (capacity_config) return *capacity_config;
        return fallback;
    }
};

void load_config(const std::string& path, Limits& limits) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        std::uint64_t parsed = 0;
        try {
            parsed = std::stoull(value);
        } catch (const std::exception&) {
            throw UsageError("config line " + std::to_string(line_no) + ": '" + value +
                             "' is not an integer");
        }
        if (key == "budget")
            limits.budget_config = parsed;
        else if (key == "capacity")
            limits.capacity_config = parsed;
        else
            throw UsageError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
}

std::string subset_str(const std::vector<int>& subset) {
    std::string s = "{";
    for (size_t i = 0; i < subset.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(subset[i] + 1);  // display factors 1-based
    }
    return s + "}";
}

std::string cell_str(const OrthogonalArray& d, const std::vector<int>& factors,
                     const std::vector<int>& cell) {
    std::string s = "(";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) s += ",";
        s += d.symbol_sets()[static_cast<size_t>(factors[i])][static_cast<size_t>(cell[i])];
    }
    return s + ")";
}

std::string run_str(const std::vector<std::string>& labels) {
    std::string s = "(";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) s += ",";
        s += labels[i];
    }
    return s + ")";
}

void print_strength(std::ostream& out, const OrthogonalArray& d, const StrengthReport& r) {
    out << "strength " << r.claimed_t << ": ";
    if (r.holds) {
        out << "pass (";
        bool first = true;
        for (const auto& [subset, lambda] : r.lambda) {
            if (!first) out << " ";
            out << "lambda" << subset_str(subset) << "=" << lambda;
            first = false;
        }
        out << ")\n";
    } else {
        const auto& w = *r.witness;
        out << "FAIL  projection " << subset_str(w.factors) << ": cell "
            << cell_str(d, w.factors, w.cell_a) << " appears " << w.count_a << "x, cell "
            << cell_str(d, w.factors, w.cell_b) << " appears " << w.count_b << "x\n";
    }
}

void print_conjugacy(std::ostream& out, const ConjugacyReport& r) {
    out << "conjugacy: ";
    if (r.holds) {
        out << "pass\n";
    } else {
        const auto& w = *r.witness;
        out << "FAIL  conjugate runs " << run_str(w.run_a) << " (x" << w.count_a << ") and "
            << run_str(w.run_b) << " (x" << w.count_b << ") have different multiplicities\n";
    }
}

std::string verification_footer(const OrthogonalArray& d, const ConstructionRecipe& recipe) {
    std::ostringstream out;
    int k = d.factor_count();
    Wide complete = d.spec().product();
    StrengthReport strength = verify_strength(d, k - 1);
    ConjugacyReport conjugacy = verify_conjugacy(d, groups_for_array(d));
    out << "# case: " << to_string(recipe.recipe_case) << " (v =";
    for (auto v : recipe.v) out << " " << v;
    out << ")\n";
    out << "# complete design: " << to_string(complete) << " runs; fraction "
        << fraction_of(d.size(), complete).str() << "\n";
    std::set<std::vector<int>> distinct;
    for (std::uint64_t c = 0; c < d.size(); ++c) distinct.insert(d.column(c));
    out << "# runs: " << d.size();
    if (distinct.size() < d.size()) out << " (" << distinct.size() << " distinct)";
    out << "\n";
    out << "# ";
    print_strength(out, d, strength);
    out << "# max strength: " << max_strength(d) << "\n";
    out << "# ";
    print_conjugacy(out, conjugacy);
    out << "# reference catalog: "
        << (recipe.in_catalog ? "listed (checked case)" : "not listed (unchecked shape)") << "\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << content;
    if (!out) throw UsageError("write to '" + path + "' failed");
}

int cmd_bounds(const std::vector<int>& orders, std::ostream& out) {
    FactorSpec spec(orders);
    BoundProfile profile = bound_profile(spec);
    int k = spec.factor_count();
    out << "orders:";
    for (int s : orders) out << " " << s;
    out << "\n";
    for (int t = 1; t <= k; ++t) out << "L_" << t << " = " << profile.level(t) << "\n";
    out << "d = " << profile.threshold_d << "\n";
    for (int t = 1; t <= k; ++t) {
        if (proper_fraction_feasible(spec, t))
            out << "strength " << t << ": proper fraction feasible (L_" << t << " = "
                << profile.level(t) << " < " << profile.level(k) << " = L_" << k << ")\n";
        else
            out << "strength " << t << ": no proper fraction (L_" << t << " = L_" << k << " = "
                << profile.level(k) << ")\n";
    }
    return kExitOk;
}

int cmd_construct(const std::vector<int>& orders, const std::string& output,
                  const std::string& ordering_name, std::ostream& out) {
    Row1Ordering ordering = Row1Ordering::CaseDefault;
    if (ordering_name == "first") ordering = Row1Ordering::First;
    else if (ordering_name == "second") ordering = Row1Ordering::Second;
    else if (!ordering_name.empty()) throw UsageError("--row1-ordering must be 'first' or 'second'");

    FactorSpec spec(orders);
    ConstructionRecipe recipe = select_recipe(spec, ordering);
    OrthogonalArray array = construct(recipe);
    std::string text = format_array(array) + verification_footer(array, recipe);

    if (output.empty()) {
        out << text;
    } else {
        write_file(output, text);
        std::filesystem::path mirror(output);
        mirror.replace_extension(".json");
        if (mirror == std::filesystem::path(output)) mirror += ".json";
        write_file(mirror.string(), array_to_json(array));
        out << "wrote " << output << " and " << mirror.string() << "\n";
    }

    int k = spec.factor_count();
    bool ok = verify_strength(array, k - 1).holds &&
              verify_conjugacy(array, groups_for_array(array)).holds;
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const std::string& path, std::optional<int> t,
               const std::vector<std::string>& group_tags, std::ostream& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    OrthogonalArray array = parse_array(buffer.str());

    out << path << ": " << array.factor_count() << " factors, " << array.size() << " runs, tags";
    for (const auto& tag : array.tags()) out << " " << tag;
    out << "\n";

    bool all_hold = true;
    if (t) {
        StrengthReport report = verify_strength(array, *t);
        print_strength(out, array, report);
        all_hold = all_hold && report.holds;
    }
    out << "max strength: " << max_strength(array) << "\n";
    if (!group_tags.empty()) {
        if (static_cast<int>(group_tags.size()) != array.factor_count())
            throw UsageError("need one group tag per factor");
        std::vector<FiniteGroup> groups;
        groups.reserve(group_tags.size());
        for (const auto& tag : group_tags) groups.push_back(group_from_tag(tag));
        ConjugacyReport report = verify_conjugacy(array, groups);
        print_conjugacy(out, report);
        all_hold = all_hold && report.holds;
    }
    return all_hold ? kExitOk : kExitVerifyFailed;
}

int cmd_catalog(const std::string& output_dir, std::ostream& out) {
    std::vector<CatalogRow> rows = build_catalog();  // throws CatalogError on any mismatch
    if (!output_dir.empty()) {
        std::filesystem::create_directories(output_dir);
        for (const auto& row : rows) {
            ConstructionRecipe recipe = select_recipe(row.spec);
            std::filesystem::path base = std::filesystem::path(output_dir) / row.design;
            write_file(base.string() + ".txt",
                       format_array(row.array) + verification_footer(row.array, recipe));
            write_file(base.string() + ".json", array_to_json(row.array));
        }
        write_file((std::filesystem::path(output_dir) / "summary.txt").string(),
                   render_catalog_table(rows));
        write_file((std::filesystem::path(output_dir) / "summary.json").string(),
                   catalog_to_json(rows));
    }
    out << render_catalog_table(rows);
    out << rows.size() << " designs verified\n";
    return kExitOk;
}

int cmd_search(const std::vector<int>& orders, std::uint64_t size, int strength,
               const SearchOptions& options, bool uniqueness, std::ostream& out) {
    FactorSpec spec(orders);
    if (uniqueness) {
        UniquenessReport report = uniqueness_probe(spec, strength, options);
        out << "uniqueness(strength " << strength << "): " << to_string(report.status)
            << " (explored " << report.explored << " nodes)\n";
        if (report.witness) {
            out << "\n" << format_array(*report.witness);
        }
        return report.status == Uniqueness::Inconclusive ? kExitInconclusive : kExitOk;
    }

    SearchOutcome outcome = search_arrays(spec, size, strength, options);
    for (size_t i = 0; i < outcome.arrays.size(); ++i) {
        if (i > 0) out << "\n";
        out << format_array(outcome.arrays[i]);
    }
    if (!outcome.arrays.empty()) out << "\n";
    out << "found " << outcome.arrays.size() << ", explored " << outcome.explored
        << " nodes, exhausted " << (outcome.exhausted ? "yes" : "no");
    if (!outcome.note.empty()) out << " (" << outcome.note << ")";
    out << "\n";
    return outcome.budget_hit ? kExitInconclusive : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mixed-level orthogonal arrays: size bounds, constructions, verification, search"};
    app.name("oafrac");
    app.require_subcommand(1);
    app.fallthrough();  // global options may appear after the subcommand
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string config_path;
    app.add_option("--config", config_path, "key=value file with budget/capacity limits");

    std::vector<int> orders;
    Limits limits;

    auto* bounds = app.add_subcommand("bounds", "size bounds L_1..L_k and the threshold d");
    bounds->add_option("orders", orders, "factor orders, each >= 2")->required()->expected(-1);

    auto* construct_cmd = app.add_subcommand("construct", "build a strength-(k-1) proper fraction");
    std::string output_path;
    std::string ordering_name;
    construct_cmd->add_option("orders", orders, "factor orders; first one must be 6, 8 or 10")
        ->required()
        ->expected(-1);
    construct_cmd->add_option("--output", output_path, "write the array (plus a .json mirror) here");
    construct_cmd->add_option("--row1-ordering", ordering_name,
                              "override the S3 listing used for row 1 (first|second)");

    auto* verify = app.add_subcommand("verify", "check strength / conjugacy of an array file");
    std::string verify_path;
    int strength_opt = -1;
    std::vector<std::string> group_tags;
    verify->add_option("file", verify_path, "array in the text format")->required();
    verify->add_option("--strength", strength_opt, "strength t to check");
    verify->add_option("--groups", group_tags, "one group tag per factor for the conjugacy check");

    auto* catalog = app.add_subcommand("catalog", "build and verify the reference designs");
    std::string catalog_dir;
    catalog->add_option("--output", catalog_dir, "directory for array files and the summary");

    auto* search = app.add_subcommand("search", "exhaustive search for arrays of given size/strength");
    std::uint64_t search_size = 0;
    int search_strength = 0;
    std::uint64_t search_limit = 1;
    std::uint64_t budget_flag = 0;
    bool exclude_complete = false;
    bool uniqueness = false;
    search->add_option("orders", orders, "factor orders")->required()->expected(-1);
    auto* size_opt = search->add_option("--size", search_size, "number of runs N");
    search->add_option("--strength", search_strength, "strength t")->required();
    search->add_option("--limit", search_limit, "stop after this many arrays (0 = all)");
    auto* budget_opt = search->add_option("--budget", budget_flag, "node budget");
    search->add_flag("--exclude-complete", exclude_complete,
                     "skip exact multiples of the complete design");
    search->add_flag("--uniqueness", uniqueness,
                     "probe whether the complete design is the only array of size L_k");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 pops from the back
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (!config_path.empty()) load_config(config_path, limits);
        if (budget_opt->count() > 0) limits.budget_flag = budget_flag;

        if (app.got_subcommand(bounds)) return cmd_bounds(orders, out);
        if (app.got_subcommand(construct_cmd))
            return cmd_construct(orders, output_path, ordering_name, out);
        if (app.got_subcommand(verify)) {
            std::optional<int> t;
            if (verify->count("--strength") > 0) t = strength_opt;
            return cmd_verify(verify_path, t, group_tags, out);
        }
        if (app.got_subcommand(catalog)) return cmd_catalog(catalog_dir, out);
        if (app.got_subcommand(search)) {
            SearchOptions options;
            options.budget = limits.budget();
            options.capacity = limits.capacity(options.capacity);
            options.limit = search_limit;
            options.exclude_complete = exclude_complete;
            if (!uniqueness && size_opt->count() == 0)
                throw UsageError("--size is required unless --uniqueness is given");
            return cmd_search(orders, search_size, search_strength, options, uniqueness, out);
        }
    } catch (const CatalogError& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace oafrac
