#include "alphabound/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "alphabound/augment.hpp"
#include "alphabound/bounds.hpp"
#include "alphabound/extremal.hpp"
#include "alphabound/fuzz.hpp"
#include "alphabound/greedy.hpp"
#include "alphabound/io.hpp"
#include "alphabound/oracle.hpp"

namespace alphabound {

namespace {

GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "dimacs") return GraphFormat::Dimacs;
    throw CLI::ValidationError("--format", "expected edgelist or dimacs");
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

void print_set(std::ostream& out, const std::vector<int>& set) {
    out << "set=";
    for (size_t i = 0; i < set.size(); ++i) {
        if (i > 0) out << ',';
        out << set[i];
    }
    out << '\n';
}

int cmd_gen(const std::string& family, int n, int k, int m, GraphFormat format,
            std::ostream& out, std::ostream& err) {
    try {
        Graph g = [&] {
            if (family == "U") return gen_upper_extremal(n, k);
            if (family == "L") return gen_lower_extremal(n, k);
            if (family == "circulant") return gen_circulant_example(m);
            if (family == "complete") return gen_basic(BasicFamily::Complete, n);
            if (family == "cycle") return gen_basic(BasicFamily::Cycle, n);
            if (family == "path") return gen_basic(BasicFamily::Path, n);
            throw std::invalid_argument("unknown family " + family);
        }();
        out << serialize_graph(g, format);
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "gen: " << e.what() << '\n';
        return 2;
    }
}

int cmd_bound(const Graph& g, std::ostream& out) {
    auto report = bounds_report(g);
    out << "n=" << g.num_vertices() << " edges=" << g.num_edges()
        << " components=" << report.per_component.size()
        << " singletons=" << report.singleton_count << '\n';
    for (const auto& cb : report.per_component) {
        out << "component n=" << cb.n << " maxdeg=" << cb.max_degree
            << " lower=" << cb.lower << " upper=" << cb.upper << " vertices=";
        for (size_t i = 0; i < cb.vertices.size(); ++i) {
            if (i > 0) out << ',';
            out << cb.vertices[i];
        }
        out << '\n';
    }
    out << "caro-wei=" << report.caro_wei.str() << " ceiling=" << report.caro_wei_ceiling
        << '\n';
    out << "lower=" << report.aggregate_lower << " upper=" << report.aggregate_upper
        << " carowei=" << report.caro_wei.num << '/' << report.caro_wei.den << '\n';
    return 0;
}

int cmd_solve(const Graph& g, const std::string& method, std::ostream& out, std::ostream& err) {
    if (method == "exact") {
        OracleResult exact;
        try {
            exact = alpha_exact(g);
        } catch (const std::invalid_argument& e) {
            err << "solve: " << e.what() << '\n';
            return 2;
        }
        print_set(out, exact.witness);
        out << "size=" << exact.alpha << '\n'
            << "guarantee=" << exact.alpha << '\n'
            << "tier=Exact\nbranch=Exact\n";
        return 0;
    }
    if (method == "greedy") {
        // per-component frontier expansion, baseline guarantee only
        std::vector<int> set;
        int guarantee = 0;
        for (const auto& part : components(g).parts) {
            if (part.size() == 1) {
                set.push_back(part.front());
                guarantee += 1;
                continue;
            }
            auto sub = induced_subgraph(g, part);
            auto trace = greedy_expand(sub.graph);
            auto lifted = sub.lift(trace.chosen);
            set.insert(set.end(), lifted.begin(), lifted.end());
            guarantee += lower_bound_connected(sub.graph.num_vertices(),
                                               sub.graph.max_degree());
        }
        std::sort(set.begin(), set.end());
        print_set(out, set);
        out << "size=" << set.size() << '\n'
            << "guarantee=" << guarantee << '\n'
            << "tier=Baseline\nbranch=Greedy\n";
        return 0;
    }
    auto cert = solve_general(g);
    print_set(out, cert.set);
    out << "size=" << cert.set.size() << '\n'
        << "guarantee=" << cert.guarantee << '\n'
        << "tier=" << to_string(cert.tier) << '\n'
        << "branch=" << to_string(cert.branch) << '\n';
    return 0;
}

int cmd_verify(const Graph& g, const std::vector<int>& set, std::ostream& out) {
    bool independent = is_independent_set(g, set);
    out << "independent=" << (independent ? "true" : "false") << '\n';
    if (!independent) return 1;
    out << "maximal=" << (is_maximal_independent(g, set) ? "true" : "false") << '\n';
    auto check = degree_sum_check(g, set);
    out << "degree_sum=" << check.sum << '\n'
        << "edges=" << g.num_edges() << '\n'
        << "lemma1=" << (check.ok ? "true" : "false") << '\n';
    return 0;
}

int cmd_fuzz(int count, int max_n, uint64_t seed, std::ostream& out, std::ostream& err) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        std::uniform_int_distribution<int> size(2, max_n);
        std::uniform_real_distribution<double> density(0.0, 0.3);
        int n = size(rng);
        double p = density(rng);
        Graph g = random_connected_graph(rng, n, p);
        std::string failure = validate_instance(g);
        if (!failure.empty()) {
            err << "fuzz: instance " << i << " failed: " << failure << '\n';
            err << serialize_graph(g, GraphFormat::EdgeList);
            return 1;
        }
    }
    out << "ok " << count << " instances (max-n " << max_n << ", seed " << seed << ")\n";
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"independence-number bounds, certificates, and extremal families"};
    app.require_subcommand(1);

    std::string family;
    int gen_n = 0, gen_k = 0, gen_m = 0;
    std::string format_name = "edgelist";
    std::string file;
    std::string method = "auto";
    std::string set_text;
    int fuzz_count = 100, fuzz_max_n = 20;
    uint64_t fuzz_seed = 1;

    auto* gen = app.add_subcommand("gen", "generate a graph family instance");
    gen->add_option("--family", family, "U | L | circulant | complete | cycle | path")
        ->required()
        ->check(CLI::IsMember({"U", "L", "circulant", "complete", "cycle", "path"}));
    gen->add_option("--n", gen_n, "number of vertices");
    gen->add_option("--k", gen_k, "maximum degree parameter");
    gen->add_option("--m", gen_m, "circulant parameter");
    gen->add_option("--format", format_name)->check(CLI::IsMember({"edgelist", "dimacs"}));

    auto* bound = app.add_subcommand("bound", "print a bounds report for a graph file");
    bound->add_option("file", file, "graph file, or - for stdin")->required();
    bound->add_option("--format", format_name)->check(CLI::IsMember({"edgelist", "dimacs"}));

    auto* solve = app.add_subcommand("solve", "produce an independent-set certificate");
    solve->add_option("file", file, "graph file, or - for stdin")->required();
    solve->add_option("--method", method)->check(CLI::IsMember({"auto", "greedy", "exact"}));
    solve->add_option("--format", format_name)->check(CLI::IsMember({"edgelist", "dimacs"}));

    auto* verify = app.add_subcommand("verify", "check an independent set");
    verify->add_option("file", file, "graph file, or - for stdin")->required();
    verify->add_option("--set", set_text, "comma-separated vertex list")->required();
    verify->add_option("--format", format_name)->check(CLI::IsMember({"edgelist", "dimacs"}));

    auto* fuzz = app.add_subcommand("fuzz", "validate random connected graphs");
    fuzz->add_option("--count", fuzz_count);
    fuzz->add_option("--max-n", fuzz_max_n)->check(CLI::Range(2, 40));
    fuzz->add_option("--seed", fuzz_seed);

    std::vector<std::string> argv_storage;
    argv_storage.push_back("alphabound");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(family, gen_n, gen_k, gen_m, parse_format(format_name), out, err);
        }
        if (fuzz->parsed()) {
            return cmd_fuzz(fuzz_count, fuzz_max_n, fuzz_seed, out, err);
        }
        Graph g = parse_graph(read_input(file), parse_format(format_name));
        if (bound->parsed()) return cmd_bound(g, out);
        if (solve->parsed()) return cmd_solve(g, method, out, err);
        if (verify->parsed()) {
            std::vector<int> set;
            try {
                set = parse_vertex_list(set_text);
            } catch (const std::exception&) {
                err << "verify: malformed --set list\n";
                return 2;
            }
            for (int v : set) {
                if (v < 1 || v > g.num_vertices()) {
                    err << "verify: vertex " << v << " out of range\n";
                    return 2;
                }
            }
            return cmd_verify(g, set, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace alphabound
