// Command-line front end: build CFI instances, run refinements, compare
// invariants, count subgraphs. Reports go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 internal consistency failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wlkit/report.hpp"
#include "wlkit/wlkit.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitConsistency = 4;

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    if (text.empty()) return edges;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t dash = item.find('-');
        if (dash == std::string::npos)
            throw wlkit::ParseError("edge list item '" + item + "' is not of the form u-v");
        try {
            edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
        } catch (const std::exception&) {
            throw wlkit::ParseError("edge list item '" + item + "' is not of the form u-v");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return edges;
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> vertices;
    if (text.empty()) return vertices;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            vertices.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw wlkit::ParseError("vertex list item '" + item + "' is not an integer");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return vertices;
}

wlkit::GlobalGraph load_global(const std::string& source) {
    if (source == "k4") return wlkit::k4_global();
    return wlkit::auto_label(wlkit::read_graph_file(source));
}

wlkit::Coloring refine_dispatch(const wlkit::Graph& g, int k, const wlkit::Individualization& ind,
                                const wlkit::RefineOptions& opt) {
    if (k == 1) return wlkit::wl1_refine(g, ind, opt);
    if (k == 2) return wlkit::wl2_refine(g, ind, opt);
    return wlkit::wlk_refine(g, k, ind, opt);
}

struct Options {
    std::string global_source = "k4";
    std::string flips;
    std::string out;
    std::string individualize;
    std::string what = "cycles";
    std::string method = "brute";
    int k = 2;
    int max_length = 6;
    std::uint64_t seed = 0;
    std::size_t memory_budget = wlkit::RefineOptions{}.max_tuples;
    std::vector<std::string> inputs;
};

int run_cfi_gen(const Options& opt) {
    wlkit::GlobalGraph global = load_global(opt.global_source);
    wlkit::CfiGraph cfi = wlkit::build_cfi(global, parse_edge_list(opt.flips));
    std::string text = wlkit::format_cfi(cfi);
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) throw wlkit::PreconditionError("cannot open output file '" + opt.out + "'");
        file << text;
    }
    return 0;
}

int run_refine(const Options& opt) {
    wlkit::Graph g = wlkit::read_graph_file(opt.inputs.at(0));
    wlkit::Individualization ind{parse_vertex_list(opt.individualize)};
    wlkit::Coloring c = refine_dispatch(g, opt.k, ind, {opt.memory_budget});
    std::cout << wlkit::coloring_report(c).dump() << '\n';
    return 0;
}

int run_compare(const Options& opt) {
    wlkit::Graph a = wlkit::read_graph_file(opt.inputs.at(0));
    wlkit::Graph b = wlkit::read_graph_file(opt.inputs.at(1));
    wlkit::CompareOutcome outcome = wlkit::compare_invariants(a, b, opt.k, {opt.memory_budget});
    std::cout << (outcome.equal ? "equal" : "different") << '\n';
    nlohmann::json report{{"dimension", opt.k},
                          {"histogram_first", nlohmann::json::array()},
                          {"histogram_second", nlohmann::json::array()}};
    for (auto [color, count] : outcome.first.histogram())
        report["histogram_first"].push_back({color, count});
    for (auto [color, count] : outcome.second.histogram())
        report["histogram_second"].push_back({color, count});
    std::cout << report.dump() << '\n';
    return 0;
}

int run_count(const Options& opt) {
    wlkit::Graph g = wlkit::read_graph_file(opt.inputs.at(0));
    if (opt.what == "cliques") {
        if (opt.method == "formula")
            throw wlkit::PreconditionError(
                "formula method supports cycle lengths 3, 4, 5, 6 only; cliques are counted by "
                "enumeration");
        std::cout << wlkit::clique_tsv(opt.k, wlkit::count_cliques(g, opt.k));
        return 0;
    }
    if (opt.what != "cycles")
        throw wlkit::PreconditionError("--what must be 'cycles' or 'cliques'");
    if (opt.method == "brute") {
        std::cout << wlkit::census_tsv(wlkit::count_cycles_brute(g, opt.max_length));
        return 0;
    }
    if (opt.method != "formula")
        throw wlkit::PreconditionError("--method must be 'brute' or 'formula'");
    if (opt.max_length > 6)
        throw wlkit::PreconditionError("formula method supports cycle lengths 3, 4, 5, 6 only; "
                                       "requested up to " + std::to_string(opt.max_length));
    wlkit::PairProfile prof(g);
    std::vector<std::pair<int, std::int64_t>> rows;
    for (int len = 3; len <= opt.max_length; ++len) {
        std::int64_t count = 0;
        if (len == 3) count = wlkit::formula_triangles(g, prof);
        if (len == 4) count = wlkit::formula_4cycles(g, prof);
        if (len == 5) count = wlkit::formula_5cycles(g, prof);
        if (len == 6) count = wlkit::formula_6cycles(g, prof);
        rows.emplace_back(len, count);
    }
    std::cout << wlkit::formula_census_tsv(rows);
    return 0;
}

int run_iso(const Options& opt) {
    wlkit::Graph a = wlkit::read_graph_file(opt.inputs.at(0));
    wlkit::Graph b = wlkit::read_graph_file(opt.inputs.at(1));
    auto mapping = wlkit::is_isomorphic(a, b);
    if (!mapping) {
        std::cout << "non-isomorphic\n";
        return 0;
    }
    std::cout << "isomorphic\n";
    for (int v = 0; v < a.vertex_count(); ++v)
        std::cout << v << " -> " << (*mapping)[static_cast<std::size_t>(v)] << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weisfeiler-Lehman refinement, CFI instances, and subgraph counting"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    Options opt;
    app.add_option("--seed", opt.seed, "seed for randomized operations (reserved)");
    app.add_option("--memory-budget", opt.memory_budget,
                   "maximum number of k-tuples a refinement may allocate");

    CLI::App* cfi_gen = app.add_subcommand("cfi-gen", "build a CFI product graph");
    cfi_gen->add_option("--global", opt.global_source, "'k4' or a 3-regular graph file");
    cfi_gen->add_option("--flips", opt.flips, "comma-separated global edges u-v to flip");
    cfi_gen->add_option("--out", opt.out, "output file (default: stdout)");

    CLI::App* refine = app.add_subcommand("refine", "refine a graph to a stable coloring");
    refine->add_option("graph", opt.inputs, "graph file")->required()->expected(1);
    refine->add_option("--k", opt.k, "refinement dimension (1..3)")->check(CLI::Range(1, 3));
    refine->add_option("--individualize", opt.individualize, "comma-separated vertices");

    CLI::App* compare = app.add_subcommand("compare", "compare stable colorings of two graphs");
    compare->add_option("graphs", opt.inputs, "two graph files")->required()->expected(2);
    compare->add_option("--k", opt.k, "refinement dimension (1..3)")->check(CLI::Range(1, 3));

    CLI::App* count = app.add_subcommand("count", "count cycles or cliques");
    count->add_option("graph", opt.inputs, "graph file")->required()->expected(1);
    count->add_option("--what", opt.what, "'cycles' or 'cliques'");
    count->add_option("--max-length", opt.max_length, "largest cycle length to count");
    count->add_option("--k", opt.k, "clique size for --what cliques");
    count->add_option("--method", opt.method, "'brute' or 'formula'");

    CLI::App* iso = app.add_subcommand("iso", "decide isomorphism of two graphs");
    iso->add_option("graphs", opt.inputs, "two graph files")->required()->expected(2);

    CLI::App* table = app.add_subcommand(
        "repro-table1", "cycle censuses of the canonical CFI(K4) pair, lengths 1..16");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;
    }

    try {
        if (cfi_gen->parsed()) return run_cfi_gen(opt);
        if (refine->parsed()) return run_refine(opt);
        if (compare->parsed()) return run_compare(opt);
        if (count->parsed()) return run_count(opt);
        if (iso->parsed()) return run_iso(opt);
        if (table->parsed()) {
            std::cout << wlkit::render_cycle_table();
            return 0;
        }
    } catch (const wlkit::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const wlkit::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const wlkit::ConsistencyError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitConsistency;
    }
    return 0;
}
