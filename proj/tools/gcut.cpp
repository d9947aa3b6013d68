// gcut: generate graphs, build direct products, compute restricted
// edge-connectivity and check closed-form product results.
//
// Exit status: 0 success, 1 error, 2 a verdict whose preconditions are unmet.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcut/connectivity.hpp"
#include "gcut/errors.hpp"
#include "gcut/generators.hpp"
#include "gcut/io.hpp"
#include "gcut/product.hpp"
#include "gcut/report.hpp"
#include "gcut/theorems.hpp"

namespace {

using namespace gcut;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInapplicable = 2;

double since_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string graph_id(const std::string& path) { return std::filesystem::path(path).stem().string(); }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

std::size_t resolve_ceiling(const std::optional<std::size_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("GCUT_CEILING"); env != nullptr && *env != '\0') {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            throw InvalidArgument(std::string("GCUT_CEILING is not a number: '") + env + "'");
        }
    }
    return kDefaultBruteForceCeiling;
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::size_t n = 0, s = 0, t = 0, k = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    FamilySpec spec;
    spec.family = parse_family(a.family);
    spec.n = a.n;
    spec.s = a.s;
    spec.t = a.t;
    spec.k = a.k;
    spec.seed = a.seed;
    const Graph g = generate(spec);
    std::ostringstream comment;
    comment << "family=" << a.family;
    switch (spec.family) {
        case Family::complete_bipartite: comment << " s=" << a.s << " t=" << a.t; break;
        case Family::random_regular: comment << " n=" << a.n << " k=" << a.k << " seed=" << a.seed; break;
        case Family::petersen: break;
        default: comment << " n=" << a.n; break;
    }
    emit(write_edge_list(g, {comment.str()}), a.out);
    return kExitOk;
}

// --- product ----------------------------------------------------------------

struct ProductArgs {
    std::vector<std::string> files;
    std::string family;
    std::size_t n = 0;
    std::string out;
};

int run_product(const ProductArgs& a) {
    if (a.files.empty() || a.files.size() > 2) throw InvalidArgument("product takes <G-file> [<H-file>]");
    const Graph g = read_edge_list_file(a.files[0]);
    Graph h;
    std::string h_name;
    if (a.files.size() == 2) {
        if (!a.family.empty()) throw InvalidArgument("give either <H-file> or --family, not both");
        h = read_edge_list_file(a.files[1]);
        h_name = graph_id(a.files[1]);
    } else {
        if (a.family.empty()) throw InvalidArgument("second factor missing: give <H-file> or --family/--n");
        FamilySpec spec;
        spec.family = parse_family(a.family);
        spec.n = a.n;
        h = generate(spec);
        h_name = a.family + "(" + std::to_string(a.n) + ")";
    }
    const ProductGraph p = direct_product(g, h);
    std::ostringstream comment;
    comment << "direct product " << graph_id(a.files[0]) << " (order " << g.order() << ") x " << h_name
            << " (order " << h.order() << "); flat(u,v) = u*" << h.order() << " + v";
    emit(write_edge_list(p.graph(), {comment.str()}), a.out);
    return kExitOk;
}

// --- conn -------------------------------------------------------------------

struct ConnArgs {
    std::string file;
    int k = 1;
    std::string method = "flow";
    std::optional<std::size_t> ceiling;
    std::string format = "text";
    bool witness = false;
};

int run_conn(const ConnArgs& a) {
    const Graph g = read_edge_list_file(a.file);
    const Method method = parse_method(a.method);
    const std::size_t ceiling = resolve_ceiling(a.ceiling);
    if (method != Method::flow && g.order() > std::min(ceiling, kMaxBruteForceOrder)) {
        throw CeilingExceeded(g.order(), std::min(ceiling, kMaxBruteForceOrder));
    }
    const auto start = Clock::now();
    std::optional<CutResult> flow, brute;
    if (method != Method::brute) flow = lambda_k(g, a.k);
    if (method != Method::flow) brute = lambda_k_bruteforce(g, a.k, ceiling);
    const double ms = since_ms(start);
    const CutResult& cut = brute ? *brute : *flow;
    const bool agree = !(flow && brute) || flow->value == brute->value;
    const std::string id = graph_id(a.file);

    if (a.format == "json") {
        auto record = cut_record(id, a.k, a.method, cut, ms);
        if (flow && brute) {
            record["flow_value"] = count_json(flow->value);
            record["brute_value"] = count_json(brute->value);
            record["methods_agree"] = agree;
        }
        std::cout << record.dump() << '\n';
    } else if (a.format == "csv") {
        std::cout << "graph,k,method,value,flow_value,brute_value,witness,runtime_ms\n";
        std::cout << id << ',' << a.k << ',' << a.method << ',' << cut.value << ','
                  << (flow ? flow->value.to_string() : "") << ',' << (brute ? brute->value.to_string() : "") << ',';
        for (std::size_t i = 0; i < cut.witness_side.size(); ++i) std::cout << (i ? " " : "") << cut.witness_side[i];
        std::cout << ',' << ms << '\n';
    } else if (a.format == "dot") {
        DotHighlight highlight{cut.witness_side, cut.crossing_edges};
        std::cout << write_dot(g, a.witness ? &highlight : nullptr);
    } else if (a.format == "text") {
        std::cout << "lambda_" << a.k << "(" << id << ") = " << cut.value;
        if (flow && brute) std::cout << " (flow " << flow->value << ", brute " << brute->value << ")";
        else std::cout << " (" << a.method << ")";
        std::cout << '\n';
        if (a.witness && cut.value.is_finite()) {
            std::cout << "witness side:";
            for (Vertex u : cut.witness_side) std::cout << ' ' << u;
            std::cout << "\ncut edges:";
            for (const Edge& e : cut.crossing_edges)
                for (std::uint32_t i = 0; i < e.multiplicity; ++i) std::cout << ' ' << e.u << '-' << e.v;
            std::cout << '\n';
        }
    } else {
        throw InvalidArgument("unknown format '" + a.format + "'");
    }
    if (!agree) {
        std::cerr << "error: flow and brute-force values disagree\n";
        return kExitError;
    }
    return kExitOk;
}

// --- xi ---------------------------------------------------------------------

struct XiArgs {
    std::string file;
    int order = 1;
    std::string format = "text";
};

int run_xi(const XiArgs& a) {
    const Graph g = read_edge_list_file(a.file);
    const ExtendedCount value = a.order == 1 ? xi(g) : xi3(g);
    const std::string name = a.order == 1 ? "xi" : "xi3";
    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["graph"] = graph_id(a.file);
        j["quantity"] = name;
        j["value"] = count_json(value);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << name << "(" << graph_id(a.file) << ") = " << value << '\n';
    }
    return kExitOk;
}

// --- classify ---------------------------------------------------------------

struct ClassifyArgs {
    std::string file;
    std::optional<std::size_t> ceiling;
    std::string format = "text";
};

int run_classify(const ClassifyArgs& a) {
    const Graph g = read_edge_list_file(a.file);
    const ClassificationReport r = classify(g, resolve_ceiling(a.ceiling));
    const auto record = classification_record(graph_id(a.file), r);
    if (a.format == "json") {
        std::cout << record.dump() << '\n';
    } else {
        for (const auto& [key, value] : record.items()) {
            if (key == "graph") continue;
            std::cout << key << ": " << value["verdict"].get<std::string>();
            if (value.contains("reason")) std::cout << " (" << value["reason"].get<std::string>() << ")";
            std::cout << '\n';
        }
    }
    return kExitOk;
}

// --- verify / bench ---------------------------------------------------------

void print_verdicts(const std::vector<TheoremVerdict>& verdicts, const std::string& format) {
    if (format == "json") {
        for (const auto& v : verdicts) std::cout << verdict_record(v).dump() << '\n';
    } else if (format == "csv") {
        std::cout << verdict_csv_header() << '\n';
        for (const auto& v : verdicts) std::cout << verdict_csv_row(v) << '\n';
    } else if (format == "text") {
        for (const auto& v : verdicts) std::cout << verdict_text(v);
    } else {
        throw InvalidArgument("unknown format '" + format + "'");
    }
}

int verdict_status(const std::vector<TheoremVerdict>& verdicts) {
    for (const auto& v : verdicts) {
        if (!v.methods_agree) {
            std::cerr << "error: flow and brute-force values disagree for " << v.graph_name << '\n';
            return kExitError;
        }
    }
    for (const auto& v : verdicts) {
        if (!v.preconditions_met()) return kExitInapplicable;
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string graph;
    std::string family;
    std::vector<std::size_t> n;
    std::string which = "lambda3";
    std::string method = "flow";
    std::string format = "text";
    std::optional<std::size_t> ceiling;
};

int run_verify(const VerifyArgs& a) {
    const Graph g = read_edge_list_file(a.graph);
    const ProductFamily family = parse_product_family(a.family);
    const Level which = parse_level(a.which);
    const Method method = parse_method(a.method);
    VerifyOptions options{graph_id(a.graph), resolve_ceiling(a.ceiling)};
    std::vector<TheoremVerdict> verdicts;
    for (std::size_t n : a.n) verdicts.push_back(verify(g, family, n, which, method, options));
    print_verdicts(verdicts, a.format);
    return verdict_status(verdicts);
}

struct BenchArgs {
    std::string suite = "acceptance";
    bool extended = false;
    std::string format = "csv";
};

struct BenchCase {
    const char* name;
    Graph graph;
    ProductFamily family;
    std::size_t n;
    Level which;
    Method method;
};

int run_bench(const BenchArgs& a) {
    if (a.suite != "acceptance") throw InvalidArgument("unknown suite '" + a.suite + "'");
    const Graph k2 = complete_graph(2), k4 = complete_graph(4), c4 = cycle_graph(4), c5 = cycle_graph(5);
    using PF = ProductFamily;
    std::vector<BenchCase> cases = {
        {"K2", k2, PF::complete, 5, Level::lambda3, Method::both},
        {"K2", k2, PF::complete, 6, Level::lambda3, Method::both},
        {"K2", k2, PF::complete, 7, Level::lambda3, Method::both},
        {"K2", k2, PF::total, 5, Level::lambda3, Method::both},
        {"K2", k2, PF::total, 6, Level::lambda3, Method::both},
        {"K2", k2, PF::cycle, 7, Level::lambda3, Method::both},
        {"K4", k4, PF::cycle, 3, Level::lambda3, Method::both},
        {"C4", c4, PF::cycle, 3, Level::lambda3, Method::both},
        {"C5", c5, PF::cycle, 3, Level::lambda3, Method::both},
        {"K4", k4, PF::cycle, 5, Level::lambda3, Method::both},
        {"K4", k4, PF::complete, 5, Level::lambda3, Method::both},
        {"C4", c4, PF::complete, 5, Level::lambda3, Method::both},
        {"K4", k4, PF::total, 3, Level::lambda3, Method::both},
        {"C4", c4, PF::total, 3, Level::lambda3, Method::both},
        {"C5", c5, PF::total, 3, Level::lambda3, Method::both},
        {"K4", k4, PF::complete, 3, Level::lambda2, Method::both},
        {"C4", c4, PF::total, 3, Level::lambda2, Method::both},
        {"K4", k4, PF::cycle, 5, Level::lambda2, Method::both},
    };
    if (a.extended) {
        const Graph petersen = petersen_graph();
        cases.push_back({"Petersen", petersen, PF::cycle, 3, Level::lambda3, Method::flow});
        cases.push_back({"Petersen", petersen, PF::total, 3, Level::lambda3, Method::flow});
        cases.push_back({"Petersen", petersen, PF::complete, 5, Level::lambda3, Method::flow});
    }
    std::vector<TheoremVerdict> verdicts;
    for (const auto& c : cases) {
        verdicts.push_back(verify(c.graph, c.family, c.n, c.which, c.method, VerifyOptions{c.name}));
    }
    print_verdicts(verdicts, a.format);
    // K_2 rows are expected to be inapplicable (k = 1); only disagreement fails a bench run.
    for (const auto& v : verdicts) {
        if (!v.methods_agree) return kExitError;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gcut: restricted edge-connectivity of graphs and direct products"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a named graph family as an edge list");
    gen_cmd->add_option("--family", gen.family, "path|cycle|complete|total|biclique|star|petersen|random-regular")
        ->required();
    gen_cmd->add_option("--n", gen.n, "Order (star: number of leaves)");
    gen_cmd->add_option("--s", gen.s, "First part size (biclique)");
    gen_cmd->add_option("--t", gen.t, "Second part size (biclique)");
    gen_cmd->add_option("--k", gen.k, "Degree (random-regular)");
    gen_cmd->add_option("--seed", gen.seed, "Seed (random-regular)");
    gen_cmd->add_option("-o,--output", gen.out, "Output file (default stdout)");

    ProductArgs prod;
    auto* prod_cmd = app.add_subcommand("product", "Direct product of two graphs");
    prod_cmd->add_option("files", prod.files, "<G-file> [<H-file>]")->required()->expected(1, 2);
    prod_cmd->add_option("--family", prod.family, "Second factor family instead of <H-file>");
    prod_cmd->add_option("--n", prod.n, "Second factor order");
    prod_cmd->add_option("-o,--output", prod.out, "Output file (default stdout)");

    ConnArgs conn;
    auto* conn_cmd = app.add_subcommand("conn", "k-restricted edge-connectivity of a graph");
    conn_cmd->add_option("file", conn.file, "Edge-list file")->required();
    conn_cmd->add_option("--k", conn.k, "Restriction order")->check(CLI::Range(1, 3));
    conn_cmd->add_option("--method", conn.method, "flow|brute|both")
        ->check(CLI::IsMember({"flow", "brute", "both"}));
    conn_cmd->add_option("--ceiling", conn.ceiling, "Brute-force vertex ceiling (default 22 or $GCUT_CEILING)");
    conn_cmd->add_option("--format", conn.format, "text|json|csv|dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    conn_cmd->add_flag("--witness", conn.witness, "Show the witness cut (highlighted in dot output)");

    XiArgs xi_args;
    auto* xi_cmd = app.add_subcommand("xi", "Minimum edge-degree (order 1) or xi_3 (order 3)");
    xi_cmd->add_option("file", xi_args.file, "Edge-list file")->required();
    xi_cmd->add_option("--order", xi_args.order, "1 or 3")->check(CLI::IsMember({1, 3}));
    xi_cmd->add_option("--format", xi_args.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    ClassifyArgs cls;
    auto* cls_cmd = app.add_subcommand("classify", "Maximal and super (restricted) edge-connectivity flags");
    cls_cmd->add_option("file", cls.file, "Edge-list file")->required();
    cls_cmd->add_option("--ceiling", cls.ceiling, "Brute-force vertex ceiling for the super flags");
    cls_cmd->add_option("--format", cls.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Compare lambda_k(G x H) with its closed form");
    ver_cmd->add_option("--graph", ver.graph, "Edge-list file of G")->required();
    ver_cmd->add_option("--family", ver.family, "cycle|complete|total")
        ->required()
        ->check(CLI::IsMember({"cycle", "complete", "total"}));
    ver_cmd->add_option("--n", ver.n, "Second factor order; repeat for a batch")->required();
    ver_cmd->add_option("--which", ver.which, "lambda2|lambda3")->check(CLI::IsMember({"lambda2", "lambda3"}));
    ver_cmd->add_option("--method", ver.method, "flow|brute|both")
        ->check(CLI::IsMember({"flow", "brute", "both"}));
    ver_cmd->add_option("--format", ver.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
    ver_cmd->add_option("--ceiling", ver.ceiling, "Brute-force vertex ceiling");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run a fixed verification suite and report timings");
    bench_cmd->add_option("--suite", bench.suite, "Suite name")->check(CLI::IsMember({"acceptance"}));
    bench_cmd->add_flag("--extended", bench.extended, "Include the 30/50-vertex Petersen products");
    bench_cmd->add_option("--format", bench.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*prod_cmd) return run_product(prod);
        if (*conn_cmd) return run_conn(conn);
        if (*xi_cmd) return run_xi(xi_args);
        if (*cls_cmd) return run_classify(cls);
        if (*ver_cmd) return run_verify(ver);
        if (*bench_cmd) return run_bench(bench);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
