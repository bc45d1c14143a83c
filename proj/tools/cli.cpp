#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

#include "genergy/enumeration.hpp"
#include "genergy/errors.hpp"
#include "genergy/family.hpp"
#include "genergy/graph6.hpp"
#include "genergy/report.hpp"
#include "genergy/verification.hpp"

namespace genergy::cli {

namespace {

struct Config {
    std::string format = "text";
    int threads = 0;
    std::string cache_dir;
    double tolerance = 1e-7;
    std::uint64_t seed = 20120601;
    int trials = 500;

    std::vector<std::string> graphs;
    std::string input;

    int n = 0;
    int e = 0;
    std::string out_dir;
    int top = 10;

    std::vector<std::string> checks;
};

std::optional<std::filesystem::path> cache_of(const Config& cfg) {
    if (cfg.cache_dir.empty()) return std::nullopt;
    return std::filesystem::path(cfg.cache_dir);
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// graph6 first when the characters allow it, then the family language.
Graph parse_graph_line(const std::string& text) {
    if (looks_like_graph6(text)) {
        try {
            return graph6_decode(text);
        } catch (const ParseError&) {
        }
    }
    return make_named(parse_family(text));
}

int cmd_energy(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<std::string> lines = cfg.graphs;
    if (!cfg.input.empty()) {
        std::ifstream file(cfg.input);
        if (!file) {
            err << "error: cannot read " << cfg.input << "\n";
            return kIo;
        }
        for (std::string line; std::getline(file, line);) lines.push_back(line);
    } else if (lines.empty()) {
        for (std::string line; std::getline(in, line);) lines.push_back(line);
    }

    QuadratureSettings quadrature;
    quadrature.abs_tolerance = cfg.tolerance;
    std::vector<GraphReport> reports;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string text = trim(lines[i]);
        if (text.empty() || text.front() == '#') continue;
        try {
            reports.push_back(analyze(parse_graph_line(text), text, quadrature));
        } catch (const ParseError& ex) {
            err << "line " << i + 1 << ", column " << ex.offset() + 1 << ": " << ex.what() << "\n";
            return kUsage;
        } catch (const std::exception& ex) {
            err << "line " << i + 1 << ": " << ex.what() << "\n";
            return kUsage;
        }
    }

    if (cfg.format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const GraphReport& r : reports) doc.push_back(to_json(r));
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << csv_header_graph();
        for (const GraphReport& r : reports) out << to_csv_row(r);
    } else {
        for (const GraphReport& r : reports) out << to_text(r);
    }
    return kOk;
}

int cmd_enumerate(const Config& cfg, std::ostream& out, std::ostream& err) {
    if (!within_envelope(cfg.n, cfg.e)) {
        err << "error: (" << cfg.n << "," << cfg.e << ") is outside the supported range 1 <= n <= 10, e <= n+3\n";
        return kUsage;
    }
    const GraphClassCensus census = enumerate_connected(cfg.n, cfg.e, {Strategy::CanonicalAugmentation, cfg.threads});
    const std::string dir = !cfg.out_dir.empty() ? cfg.out_dir : (!cfg.cache_dir.empty() ? cfg.cache_dir : ".");
    const std::filesystem::path path = census_cache_path(dir, cfg.n, cfg.e);
    try {
        census_cache_store(census, path);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kIo;
    }
    if (cfg.format == "json") {
        out << nlohmann::json{{"n", cfg.n}, {"e", cfg.e}, {"count", census.graphs.size()}, {"path", path.string()}}
                   .dump(2)
            << "\n";
    } else {
        out << census.graphs.size() << "\n";
    }
    return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
    std::vector<std::string> names = cfg.checks;
    if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) names = check_names();
    for (const std::string& name : names) {
        if (std::find(check_names().begin(), check_names().end(), name) == check_names().end()) {
            err << "error: unknown check '" << name << "'; known checks: all";
            for (const std::string& known : check_names()) err << ", " << known;
            err << "\n";
            return kUsage;
        }
    }
    VerifyOptions options;
    options.threads = cfg.threads;
    options.cache_dir = cache_of(cfg);
    options.seed = cfg.seed;
    options.trials = cfg.trials;
    const std::vector<CheckResult> results = run_checks(names, options);
    const bool all_passed = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });

    if (cfg.format == "json") {
        nlohmann::json doc = {{"passed", all_passed}, {"checks", nlohmann::json::array()}};
        for (const CheckResult& r : results) doc["checks"].push_back(to_json(r));
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << to_csv(results);
    } else {
        for (const CheckResult& r : results) out << to_text(r);
        out << (all_passed ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all_passed ? kOk : kCheckFailed;
}

int cmd_rank(const Config& cfg, std::ostream& out, std::ostream& err) {
    if (!within_envelope(cfg.n, cfg.e)) {
        err << "error: (" << cfg.n << "," << cfg.e << ") is outside the supported range 1 <= n <= 10, e <= n+3\n";
        return kUsage;
    }
    VerifyOptions options;
    options.threads = cfg.threads;
    options.cache_dir = cache_of(cfg);
    const RankReport report = rank_class(cfg.n, cfg.e, options);
    if (cfg.format == "json") {
        out << to_json(report, cfg.top).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << to_csv(report, cfg.top);
    } else {
        out << to_text(report, cfg.top);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Graph energy toolkit: spectra, exhaustive censuses and extremal-energy checks", "genergy"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached censuses");

    CLI::App* energy = app.add_subcommand("energy", "Energy report for graph6 strings or family expressions");
    auto* graphs = energy->add_option("graphs", cfg.graphs, "graph6 strings or family expressions such as \"S 7 7\"");
    energy->add_option("-i,--input", cfg.input, "File with one graph per line")->excludes(graphs);
    energy->add_option("--tolerance", cfg.tolerance, "Absolute tolerance of the Coulson quadrature")
        ->check(CLI::PositiveNumber);

    CLI::App* enumerate = app.add_subcommand("enumerate", "Write the census of connected (n,e)-graphs");
    enumerate->add_option("n", cfg.n, "Vertices")->required();
    enumerate->add_option("e", cfg.e, "Edges")->required();
    enumerate->add_option("-o,--out", cfg.out_dir, "Output directory (default: cache dir or .)");

    CLI::App* verify = app.add_subcommand("verify", "Run verification checks");
    verify->add_option("-c,--check", cfg.checks, "Check name or 'all' (repeatable)");
    verify->add_option("--seed", cfg.seed, "Seed for the edge-cut sampling");
    verify->add_option("--trials", cfg.trials, "Edge-cut trials")->check(CLI::PositiveNumber);

    CLI::App* rank = app.add_subcommand("rank", "Lowest-energy graphs of a class");
    rank->add_option("n", cfg.n, "Vertices")->required();
    rank->add_option("e", cfg.e, "Edges")->required();
    rank->add_option("-k,--top", cfg.top, "Rows to print")->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (energy->parsed()) return cmd_energy(cfg, in, out, err);
        if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (rank->parsed()) return cmd_rank(cfg, out, err);
    } catch (const CorruptCacheError& ex) {
        err << "error: " << ex.what() << "\n";
        return kIo;
    } catch (const std::filesystem::filesystem_error& ex) {
        err << "error: " << ex.what() << "\n";
        return kIo;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace genergy::cli
