// critind_cli.cpp
//
// Command-line front end: analyze a single graph, run the claim suite over a
// graph stream, hunt for conjecture counterexamples, and inspect the bundled
// fixture graphs.
//
// Exit codes: 0 success / no findings, 1 findings (a hunt counterexample or a
// failed claim), 2 usage or runtime error.

#include "critind/claims.hpp"
#include "critind/format.hpp"
#include "critind/generate.hpp"
#include "critind/graph.hpp"
#include "critind/harness.hpp"
#include "critind/report.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using critind::ordered_json;

// ---------------------------------------------------------------- shared --

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) parts.push_back(item);
    return parts;
}

std::vector<std::string> parse_claim_selection(const std::string& claims) {
    if (claims == "all") return critind::claim_ids();
    std::vector<std::string> ids = split_commas(claims);
    if (ids.empty()) throw std::invalid_argument("--claims needs 'all' or a comma-separated list");
    return ids;
}

// stream options shared by `suite` and `hunt`
struct StreamOptions {
    std::optional<int> exhaustive_n;
    std::string random_spec;  // "n,p,count,seed"
    std::string file_path;
    std::string file_format = "graph6";
    bool allow_n8 = false;
    bool connected_only = false;
    std::optional<int> min_edges;
    std::optional<int> max_edges;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--n", exhaustive_n,
                       "exhaustive stream: every labeled graph on n vertices (n <= 7)");
        cmd.add_option("--random", random_spec,
                       "random stream as n,p,count,seed (e.g. 12,0.3,1000,7)");
        cmd.add_option("--file", file_path, "read graphs from a file");
        cmd.add_option("--format", file_format, "file format: graph6 (one per line) or edgelist")
            ->check(CLI::IsMember({"graph6", "edgelist"}));
        cmd.add_flag("--allow-n8", allow_n8, "raise the exhaustive ceiling to n = 8");
        cmd.add_flag("--connected-only", connected_only, "skip disconnected graphs");
        cmd.add_option("--min-edges", min_edges, "skip graphs with fewer edges");
        cmd.add_option("--max-edges", max_edges, "skip graphs with more edges");
    }

    int chosen_sources() const {
        return int(exhaustive_n.has_value()) + int(!random_spec.empty()) +
               int(!file_path.empty());
    }

    critind::StreamSpec to_spec() const {
        critind::StreamSpec spec;
        if (exhaustive_n) {
            spec = critind::StreamSpec::exhaustive(*exhaustive_n, allow_n8);
        } else if (!random_spec.empty()) {
            const std::vector<std::string> parts = split_commas(random_spec);
            if (parts.size() != 4)
                throw std::invalid_argument("--random expects n,p,count,seed");
            try {
                spec = critind::StreamSpec::random(
                    std::stoi(parts[0]), std::stod(parts[1]),
                    static_cast<std::uint64_t>(std::stoull(parts[2])),
                    static_cast<std::uint64_t>(std::stoull(parts[3])));
            } catch (const std::logic_error&) {
                throw std::invalid_argument("--random expects numeric n,p,count,seed; got '" +
                                            random_spec + "'");
            }
        } else if (!file_path.empty()) {
            spec = critind::StreamSpec::from_file(file_path, file_format);
        } else {
            throw std::invalid_argument("choose a stream: --n, --random, or --file");
        }
        spec.connected_only = connected_only;
        spec.min_edges = min_edges;
        spec.max_edges = max_edges;
        return spec;
    }
};

// --------------------------------------------------------------- analyze --

struct AnalyzeOptions {
    std::string input_path;
    std::string g6;
    std::string fixture;
    std::string format = "edgelist";
    std::string output = "json";
};

critind::Graph load_single_graph(const AnalyzeOptions& opt) {
    const int sources = int(!opt.input_path.empty()) + int(!opt.g6.empty()) +
                        int(!opt.fixture.empty());
    if (sources != 1)
        throw std::invalid_argument("analyze needs exactly one of --input, --g6, --fixture");
    if (!opt.g6.empty()) return critind::parse_graph6(opt.g6);
    if (!opt.fixture.empty()) return critind::fixture_graph(opt.fixture);
    std::ifstream in(opt.input_path);
    if (!in) throw std::runtime_error("cannot open input file: " + opt.input_path);
    if (opt.format == "graph6") {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return critind::parse_graph6(line);
        }
        throw std::runtime_error("no graph6 line in " + opt.input_path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return critind::parse_edge_list(buf.str());
}

int run_analyze(const AnalyzeOptions& opt) {
    const critind::Graph g = load_single_graph(opt);
    const critind::StructureReport r = critind::analyze(g);
    if (opt.output == "text")
        std::cout << critind::report_to_text(r, g);
    else
        std::cout << critind::report_to_json(r).dump() << '\n';
    return 0;
}

// ----------------------------------------------------------------- suite --

struct SuiteOptions {
    StreamOptions stream;
    bool fixtures = false;
    std::string claims = "all";
    std::string output = "json";
};

int run_suite_cmd(const SuiteOptions& opt) {
    const std::vector<std::string> claims = parse_claim_selection(opt.claims);
    const bool json = opt.output != "text";
    std::function<void(const critind::StructureReport&)> sink;
    if (json)
        sink = [](const critind::StructureReport& r) {
            std::cout << critind::report_to_json(r).dump() << '\n';
        };
    critind::SuiteReport rep;
    if (opt.fixtures) {
        if (opt.stream.chosen_sources() != 0)
            throw std::invalid_argument("--fixtures replaces --n/--random/--file");
        std::vector<critind::Graph> graphs;
        for (const std::string& name : critind::fixture_names())
            graphs.push_back(critind::fixture_graph(name));
        rep = critind::run_suite_on_graphs(graphs, claims, sink, "fixtures");
    } else {
        if (opt.stream.chosen_sources() != 1)
            throw std::invalid_argument(
                "suite needs exactly one of --n, --random, --file, --fixtures");
        rep = critind::run_suite(opt.stream.to_spec(), claims, sink);
    }
    if (json)
        std::cout << rep.summary_json().dump() << '\n';
    else
        std::cout << rep.to_text();
    return rep.ok() ? 0 : 1;
}

// ------------------------------------------------------------------ hunt --

struct HuntOptions {
    StreamOptions stream;
    std::string conjecture;
    std::string output = "json";
};

int run_hunt_cmd(const HuntOptions& opt) {
    if (opt.stream.chosen_sources() != 1)
        throw std::invalid_argument("hunt needs exactly one of --n, --random, --file");
    const critind::HuntReport rep = critind::hunt(opt.stream.to_spec(), opt.conjecture);
    if (opt.output == "text") {
        std::cout << rep.to_text();
    } else {
        for (const critind::Counterexample& c : rep.counterexamples) {
            ordered_json line;
            line["graph_id"] = c.graph_id;
            for (const auto& [key, value] : c.details.items()) line[key] = value;
            std::cout << line.dump() << '\n';
        }
        std::cout << rep.summary_json().dump() << '\n';
    }
    return rep.counterexamples.empty() ? 0 : 1;
}

// --------------------------------------------------------------- fixture --

struct FixtureOptions {
    bool list = false;
    std::string name;
    std::string emit = "edgelist";
};

int run_fixture_cmd(const FixtureOptions& opt) {
    const bool has_name = !opt.name.empty();
    if (opt.list == has_name)  // exactly one of --list / --name
        throw std::invalid_argument("fixture needs exactly one of --list, --name");
    if (opt.list) {
        for (const critind::Fixture& f : critind::fixture_table()) {
            const critind::Graph g = critind::fixture_graph(f.name);
            std::cout << f.name << "  n=" << g.n << " m=" << g.edge_count()
                      << "  " << critind::to_graph6(g) << '\n';
        }
        return 0;
    }
    const critind::Graph g = critind::fixture_graph(opt.name);
    if (opt.emit == "graph6")
        std::cout << critind::to_graph6(g) << '\n';
    else if (opt.emit == "dot")
        std::cout << critind::to_dot(g);
    else
        std::cout << critind::to_edge_list(g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of independence structure in finite simple graphs"};
    app.require_subcommand(1);

    AnalyzeOptions analyze_opt;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze one graph");
    analyze_cmd->add_option("--input", analyze_opt.input_path, "read the graph from a file");
    analyze_cmd->add_option("--g6", analyze_opt.g6, "graph6 string");
    analyze_cmd->add_option("--fixture", analyze_opt.fixture, "bundled fixture name");
    analyze_cmd->add_option("--format", analyze_opt.format, "input file format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
    analyze_cmd->add_option("--output", analyze_opt.output, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    SuiteOptions suite_opt;
    CLI::App* suite_cmd = app.add_subcommand("suite", "run proved claims over a graph stream");
    suite_opt.stream.add_to(*suite_cmd);
    suite_cmd->add_flag("--fixtures", suite_opt.fixtures, "run over the bundled fixtures");
    suite_cmd->add_option("--claims", suite_opt.claims,
                          "'all' or comma-separated claim ids (see README)");
    suite_cmd->add_option("--output", suite_opt.output,
                          "json: one report per graph, summary last; text: tally table")
        ->check(CLI::IsMember({"json", "text"}));

    HuntOptions hunt_opt;
    CLI::App* hunt_cmd = app.add_subcommand("hunt", "search a stream for counterexamples");
    hunt_opt.stream.add_to(*hunt_cmd);
    hunt_cmd->add_option("--conjecture", hunt_opt.conjecture, "ker-diadem or diadem-corona-ke")
        ->required()
        ->check(CLI::IsMember({"ker-diadem", "diadem-corona-ke"}));
    hunt_cmd->add_option("--output", hunt_opt.output,
                         "json: one counterexample per line, summary last; text: table")
        ->check(CLI::IsMember({"json", "text"}));

    FixtureOptions fixture_opt;
    CLI::App* fixture_cmd = app.add_subcommand("fixture", "inspect the bundled fixture graphs");
    fixture_cmd->add_flag("--list", fixture_opt.list, "list all fixtures");
    fixture_cmd->add_option("--name", fixture_opt.name, "fixture to emit");
    fixture_cmd->add_option("--emit", fixture_opt.emit, "emission format")
        ->check(CLI::IsMember({"edgelist", "graph6", "dot"}));

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(analyze_cmd)) return run_analyze(analyze_opt);
        if (app.got_subcommand(suite_cmd)) return run_suite_cmd(suite_opt);
        if (app.got_subcommand(hunt_cmd)) return run_hunt_cmd(hunt_opt);
        if (app.got_subcommand(fixture_cmd)) return run_fixture_cmd(fixture_opt);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints CLI11's message / help text
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
