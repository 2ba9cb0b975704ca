#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superedge/graph6.hpp"
#include "superedge/harness.hpp"
#include "superedge/report_io.hpp"

namespace se = superedge;

namespace {

struct AnalyzeOpts {
    std::string input = "-";
    std::string format = "graph6";
    bool json = false;
};

struct FilterOpts {
    std::string input = "-";
    std::string free_list;
    std::string super_flag;
    std::string maximal_flag;
};

struct VerifyOpts {
    std::vector<std::string> theorems;
    bool registry = false;
    int n_max = 7;
    int jobs = 1;
    bool extended = false;
    bool json = false;
    std::string input;
    std::string violations_out;
    std::string h1_pattern;
};

struct SearchOpts {
    std::string pair;
    int n_max = 7;
    bool extended = false;
    bool include_exceptions = false;
    bool json = false;
    int jobs = 1;
};

struct GenOpts {
    std::vector<std::string> tokens;
};

/// Opens the requested input, "-" meaning standard input.
std::unique_ptr<std::istream> open_input(const std::string& path) {
    if (path == "-") return std::make_unique<std::istream>(std::cin.rdbuf());
    auto file = std::make_unique<std::ifstream>(path);
    if (!*file) throw std::runtime_error("cannot open input file: " + path);
    return file;
}

std::optional<bool> parse_bool_flag(const std::string& value, const std::string& flag) {
    if (value.empty()) return std::nullopt;
    if (value == "true") return true;
    if (value == "false") return false;
    throw std::invalid_argument(flag + " expects true or false, got \"" + value + "\"");
}

/// Pattern tokens are atlas names or NAME=<graph6> definitions.
se::Pattern parse_pattern_token(const std::string& token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) return se::atlas_pattern(token);
    const std::string name = token.substr(0, eq);
    const std::string code = token.substr(eq + 1);
    if (name.empty() || code.empty())
        throw std::invalid_argument("pattern definition must look like NAME=<graph6>");
    return se::custom_pattern(name, se::decode_graph6(code));
}

std::vector<std::string> split_csv(const std::string& list) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(list);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

se::ParallelOptions make_parallel(int jobs) {
    se::ParallelOptions par;
    par.jobs = jobs;
    par.progress = [](const std::string& msg) { std::cerr << msg << "\n"; };
    return par;
}

int run_analyze(const AnalyzeOpts& opts) {
    const std::vector<se::Pattern>& atlas = se::pattern_atlas();
    auto emit = [&](const se::Graph& g) {
        const std::string code = se::encode_graph6(g);
        const se::ConnectivityReport rep = se::connectivity_report(g);
        std::vector<std::pair<std::string, bool>> free_of;
        for (const se::Pattern& p : atlas)
            free_of.emplace_back(p.name, !se::contains_induced(g, p).has_value());
        if (opts.json) {
            se::json j;
            j["schema_version"] = se::kSchemaVersion;
            j["graph6"] = code;
            se::json c = se::json_connectivity(rep);
            c.erase("schema_version");
            j["connectivity"] = std::move(c);
            se::json flags;
            for (const auto& [name, is_free] : free_of) flags[name] = is_free;
            j["free_of"] = std::move(flags);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << se::text_connectivity(rep, code);
            std::string free_names, hit_names;
            for (const auto& [name, is_free] : free_of)
                (is_free ? free_names : hit_names) += " " + name;
            std::cout << "  induced-free of:" << (free_names.empty() ? " (none)" : free_names)
                      << "\n";
            std::cout << "  contains:" << (hit_names.empty() ? " (none)" : hit_names) << "\n\n";
        }
    };

    auto in = open_input(opts.input);
    if (opts.format == "edgelist") {
        try {
            emit(se::parse_edge_list(*in));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(e.what());  // malformed input, not usage
        }
        return 0;
    }
    se::Graph6Reader reader(*in);
    while (auto rec = reader.next()) emit(rec->graph);
    return 0;
}

int run_filter(const FilterOpts& opts) {
    std::vector<se::Pattern> forbidden;
    for (const std::string& name : split_csv(opts.free_list))
        forbidden.push_back(parse_pattern_token(name));
    const std::optional<bool> want_super = parse_bool_flag(opts.super_flag, "--super");
    const std::optional<bool> want_maximal = parse_bool_flag(opts.maximal_flag, "--maximal");

    auto in = open_input(opts.input);
    se::Graph6Reader reader(*in);
    std::uint64_t seen = 0, passed = 0;
    while (auto rec = reader.next()) {
        ++seen;
        const se::Graph& g = rec->graph;
        bool pass = true;
        for (const se::Pattern& p : forbidden)
            if (se::contains_induced(g, p)) {
                pass = false;
                break;
            }
        if (pass && (want_super || want_maximal)) {
            const se::ConnectivityReport rep = se::connectivity_report(g);
            if (want_super && rep.super != *want_super) pass = false;
            if (pass && want_maximal && rep.maximally_edge_connected != *want_maximal)
                pass = false;
        }
        if (pass) {
            ++passed;
            std::cout << se::encode_graph6(g) << "\n";
        }
    }
    std::cerr << "filter: " << passed << " of " << seen << " records passed\n";
    return 0;
}

int run_verify(const VerifyOpts& opts) {
    if (opts.registry) {
        const se::RegistryReport report = se::registry_verify_all();
        if (opts.json)
            std::cout << se::json_registry(report).dump(2) << "\n";
        else
            std::cout << se::text_registry(report);
        return report.violations == 0 ? 0 : 1;
    }

    std::optional<se::Pattern> h1;
    if (!opts.h1_pattern.empty()) {
        se::Pattern p = parse_pattern_token(opts.h1_pattern);
        if (p.name != "H1")
            throw std::invalid_argument("--pattern currently accepts only an H1=<graph6> branch");
        h1 = std::move(p);
    }

    std::vector<se::TheoremSpec> specs;
    for (const std::string& token : opts.theorems)
        for (se::TheoremSpec& spec : se::theorem_specs(token, h1)) specs.push_back(std::move(spec));

    // a file source must be replayable for multi-spec tokens, so slurp once
    std::string stream_data;
    if (!opts.input.empty()) {
        auto in = open_input(opts.input);
        std::ostringstream buf;
        buf << in->rdbuf();
        stream_data = buf.str();
    }

    const se::ParallelOptions par = make_parallel(opts.jobs);
    std::vector<se::ScanReport> reports;
    for (const se::TheoremSpec& spec : specs) {
        if (opts.input.empty()) {
            se::EnumSource source;
            source.n_max = opts.n_max;
            source.extended = opts.extended;
            reports.push_back(se::verify_sufficiency(spec, source, par));
        } else {
            std::istringstream in(stream_data);
            reports.push_back(se::verify_sufficiency_stream(spec, in, "file:" + opts.input));
        }
    }

    bool all_ok = true;
    std::vector<std::string> violating;
    for (const se::ScanReport& r : reports) {
        all_ok = all_ok && r.ok();
        violating.insert(violating.end(), r.violating.begin(), r.violating.end());
    }
    if (opts.json) {
        se::json j;
        j["schema_version"] = se::kSchemaVersion;
        se::json arr = se::json::array();
        for (const se::ScanReport& r : reports) {
            se::json one = se::json_scan(r);
            one.erase("schema_version");
            arr.push_back(std::move(one));
        }
        j["reports"] = std::move(arr);
        j["ok"] = all_ok;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const se::ScanReport& r : reports) std::cout << se::text_scan(r);
        std::cout << "verify: " << (all_ok ? "PASS" : "FAIL") << "\n";
    }
    if (!opts.violations_out.empty()) {
        std::ofstream out(opts.violations_out);
        if (!out) throw std::runtime_error("cannot open output file: " + opts.violations_out);
        se::write_graph6_lines(out, violating);
    }
    return all_ok ? 0 : 1;
}

int run_search(const SearchOpts& opts) {
    std::vector<se::Pattern> members;
    for (const std::string& token : split_csv(opts.pair)) members.push_back(parse_pattern_token(token));
    const se::PairSpec pair = se::make_pair_spec(members);

    se::SearchBudget budget;
    budget.n_max = opts.n_max;
    budget.extended = opts.extended;
    budget.skip_mode_i = !opts.include_exceptions;
    budget.skip_mode_ii = !opts.include_exceptions;

    const se::ConsistencyReport report =
        se::cross_validate(pair, opts.n_max, make_parallel(opts.jobs), budget);
    if (opts.json)
        std::cout << se::json_consistency(report).dump(2) << "\n";
    else
        std::cout << se::text_consistency(report);
    return report.outcome == se::CrossOutcome::refuted ? 1 : 0;
}

int run_gen(const GenOpts& opts) {
    for (const std::string& token : opts.tokens)
        std::cout << se::encode_graph6(se::make_family(se::parse_family_token(token))) << "\n";
    return 0;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const se::g6_stream_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const se::g6_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "superedge: super edge-connectivity analysis, forbidden-pattern filters,\n"
        "exhaustive sufficiency scans and counterexample search for small graphs"};
    app.require_subcommand(1);

    AnalyzeOpts analyze_opts;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "connectivity report plus pattern-freeness flags per input graph");
    analyze->add_option("input", analyze_opts.input, "graph6 file or - for standard input")
        ->capture_default_str();
    analyze->add_option("--format", analyze_opts.format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    analyze->add_flag("--json", analyze_opts.json, "one JSON object per graph");

    FilterOpts filter_opts;
    CLI::App* filter = app.add_subcommand(
        "filter", "pass through graph6 records matching every predicate");
    filter->add_option("input", filter_opts.input, "graph6 file or - for standard input")
        ->capture_default_str();
    filter->add_option("--free", filter_opts.free_list,
                       "comma-separated patterns the graph must not contain (atlas name "
                       "or NAME=<graph6>)");
    filter->add_option("--super", filter_opts.super_flag,
                       "keep only graphs whose super verdict matches (true|false)");
    filter->add_option("--maximal", filter_opts.maximal_flag,
                       "keep only graphs with lambda=delta matching (true|false)");

    VerifyOpts verify_opts;
    CLI::App* verify = app.add_subcommand(
        "verify", "exhaustive theorem scan over an enumeration range or a graph6 file");
    CLI::Option* theorem_opt = verify->add_option(
        "--theorem", verify_opts.theorems, "theorem token (2.1, 2.2i, 2.2ii, 1.1, 1.2, 1.3, 1.4)");
    CLI::Option* registry_opt =
        verify->add_flag("--registry", verify_opts.registry,
                         "verify the registered non-super families instead of a theorem");
    theorem_opt->excludes(registry_opt);
    registry_opt->excludes(theorem_opt);
    verify->add_option("--nmax", verify_opts.n_max, "largest order for the labeled scan")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    verify->add_option("--jobs", verify_opts.jobs, "worker thread count")
        ->check(CLI::PositiveNumber)
        ->envname("SUPEREDGE_JOBS")
        ->capture_default_str();
    verify->add_flag("--extended", verify_opts.extended,
                     "allow the opt-in n=8 labeled scan (2^28 masks)");
    verify->add_flag("--json", verify_opts.json, "machine-readable report");
    verify->add_option("--input", verify_opts.input,
                       "scan a graph6 file (or -) instead of the labeled enumeration");
    verify->add_option("--violations-out", verify_opts.violations_out,
                       "write violating graph6 records to this sidecar file");
    verify->add_option("--pattern", verify_opts.h1_pattern,
                       "custom H1=<graph6> branch for theorem token 1.4");
    verify->callback([&] {
        if (!verify_opts.registry && verify_opts.theorems.empty())
            throw CLI::ValidationError("verify", "requires --theorem or --registry");
    });

    SearchOpts search_opts;
    CLI::App* search = app.add_subcommand(
        "search", "cross-validate a pair: precedence gate versus scan/counterexample evidence");
    search->add_option("--pair", search_opts.pair,
                       "one or two comma-separated patterns (atlas name or NAME=<graph6>)")
        ->required();
    search->add_option("--nmax", search_opts.n_max, "largest order to enumerate")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    search->add_flag("--extended", search_opts.extended,
                     "allow the opt-in n=8 labeled search space");
    search->add_flag("--include-exceptions", search_opts.include_exceptions,
                     "let the counterexample search return excused exception graphs");
    search->add_flag("--json", search_opts.json, "machine-readable report");
    search->add_option("--jobs", search_opts.jobs, "worker thread count for sufficiency scans")
        ->check(CLI::PositiveNumber)
        ->envname("SUPEREDGE_JOBS")
        ->capture_default_str();

    GenOpts gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "emit graph6 lines for family instances");
    gen->add_option("tokens", gen_opts.tokens,
                    "family tokens like path:7, cycle:4, complete:5, star:4, "
                    "complete_bipartite:3, prism:3, glued:4, bridge:3, grid_2x3")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*analyze) return guarded([&] { return run_analyze(analyze_opts); });
    if (*filter) return guarded([&] { return run_filter(filter_opts); });
    if (*verify) return guarded([&] { return run_verify(verify_opts); });
    if (*search) return guarded([&] { return run_search(search_opts); });
    if (*gen) return guarded([&] { return run_gen(gen_opts); });
    return 2;
}
