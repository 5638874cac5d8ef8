// Command-line front end for the G-parking function / Tutte polynomial
// library. Subcommands:
//
//   parking enumerate            list all G-parking functions
//   parking check <f>            test a labeling, e.g. -1,0,0,2
//   parking from-tree <T>        invert a colored spanning tree (JSON triples)
//   tree from-parking <f>        spanning tree and processing order of f
//   bridges <f>                  bridge vertices, b(f) and w(f)
//   tutte [--method ...]         Tutte polynomial (parking or delcon route)
//   bw                           sorted multiset of (b(f), w(f)) pairs
//   classical cm <alpha>         critical maxima of a classical parking function
//   classical tutte <n>          T_{K_{n+1}} from classical parking functions
//
// Exit codes: 0 success, 1 domain error (not a parking function, disconnected
// graph, invalid tree), 2 usage or parse error.

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gparking/gparking.hpp"
#include "gparking/json_io.hpp"

namespace {

using nlohmann::json;

struct Options {
    std::string graph_path;
    std::string ranking_csv;
    std::string format = "text";
    std::string method = "parking";
    bool parallel = false;
    std::string labeling_csv;
    std::string tree_json;
    std::string alpha_csv;
    int classical_n = 0;
};

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int value = std::stoi(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad integer list: " + text);
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

unsigned thread_count(const Options& opt) {
    if (!opt.parallel) return 1;
    if (const char* env = std::getenv("GPARKING_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

gparking::Multigraph load_graph(const Options& opt) {
    if (opt.graph_path.empty())
        throw CLI::ValidationError("--graph", "a graph file is required for this command");
    return gparking::load_multigraph(opt.graph_path);
}

gparking::VertexRanking ranking_for(const Options& opt, const gparking::Multigraph& g) {
    const int n = g.non_root_count();
    if (opt.ranking_csv.empty()) return gparking::VertexRanking::identity(n);
    std::vector<int> values = parse_csv_ints(opt.ranking_csv);
    if (static_cast<int>(values.size()) != n)
        throw CLI::ValidationError("--ranking", "expected a permutation of 1.." + std::to_string(n));
    try {
        return gparking::VertexRanking(values);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--ranking", "not a permutation of 1.." + std::to_string(n));
    }
}

std::string join_csv(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

void emit(const Options& opt, const json& as_json, const std::string& as_text) {
    if (opt.format == "json")
        std::cout << as_json.dump() << "\n";
    else
        std::cout << as_text << "\n";
}

int cmd_parking_enumerate(const Options& opt) {
    auto g = load_graph(opt);
    auto all = gparking::enumerate_parking(g, thread_count(opt));
    json j = json::array();
    std::string text;
    for (const auto& f : all) {
        j.push_back(f);
        text += join_csv(f) + "\n";
    }
    if (!text.empty()) text.pop_back();
    emit(opt, json{{"parking_functions", j}}, text);
    return 0;
}

int cmd_parking_check(const Options& opt) {
    auto g = load_graph(opt);
    auto f = parse_csv_ints(opt.labeling_csv);
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw CLI::ValidationError("parking check", "labeling length must be " +
                                                        std::to_string(g.vertex_count()));
    auto check = gparking::check_parking_by_subsets(g, f);
    std::string reason;
    switch (check.failure) {
        case gparking::ParkingFailure::none:
            break;
        case gparking::ParkingFailure::bad_root_value:
            reason = "f(0) must be -1";
            break;
        case gparking::ParkingFailure::subset_violation:
            reason = "subset condition fails at I={" + join_csv(check.witness) + "}";
            break;
    }
    json j{{"is_parking", check.ok()}};
    if (!reason.empty()) j["reason"] = reason;
    if (check.ok()) {
        emit(opt, j, "G-parking function");
        return 0;
    }
    emit(opt, j, "not a G-parking function: " + reason);
    return 1;
}

int cmd_tree_from_parking(const Options& opt) {
    auto g = load_graph(opt);
    auto tau = ranking_for(opt, g);
    auto f = parse_csv_ints(opt.labeling_csv);
    auto result = gparking::algorithm_a(g, tau, f);
    std::string text;
    for (int v = 1; v < g.vertex_count(); ++v)
        text += std::to_string(v) + " " + std::to_string(result.tree.parent[v]) + " " +
                std::to_string(result.tree.color[v]) + "\n";
    text += "order " + join_csv(result.order.sequence);
    emit(opt,
         json{{"tree", gparking::tree_to_json(result.tree)}, {"order", result.order.sequence}},
         text);
    return 0;
}

int cmd_parking_from_tree(const Options& opt) {
    auto g = load_graph(opt);
    auto tau = ranking_for(opt, g);
    json parsed = json::parse(opt.tree_json);
    auto tree = gparking::tree_from_json(parsed, g.vertex_count());
    auto f = gparking::theta_parking(g, tau, tree);
    emit(opt, json{{"parking_function", f}}, join_csv(f));
    return 0;
}

int cmd_bridges(const Options& opt) {
    auto g = load_graph(opt);
    auto tau = ranking_for(opt, g);
    auto f = parse_csv_ints(opt.labeling_csv);
    if (!gparking::is_parking(g, f))
        throw std::invalid_argument("not a G-parking function");
    auto stats = gparking::bridge_vertices(g, tau, f);
    const int w = gparking::weight_w(g, f);
    std::string text = "B = {" + join_csv(stats.vertices) + "}\nb = " + std::to_string(stats.b) +
                       "\nw = " + std::to_string(w);
    if (stats.vertices.empty()) text = "B = {}\nb = 0\nw = " + std::to_string(w);
    emit(opt, json{{"bridge_vertices", stats.vertices}, {"b", stats.b}, {"w", w}}, text);
    return 0;
}

int cmd_tutte(const Options& opt) {
    auto g = load_graph(opt);
    gparking::BivariatePolynomial p;
    if (opt.method == "parking") {
        auto tau = ranking_for(opt, g);
        p = gparking::tutte_parking(g, tau, thread_count(opt));
    } else {
        p = gparking::tutte_delcon(g);
    }
    emit(opt, gparking::polynomial_to_json(p), p.to_string());
    return 0;
}

int cmd_bw(const Options& opt) {
    auto g = load_graph(opt);
    auto tau = ranking_for(opt, g);
    auto pairs = gparking::bw_multiset(g, tau, thread_count(opt));
    json j = json::array();
    std::string text;
    for (const auto& [b, w] : pairs) {
        j.push_back({b, w});
        text += "(" + std::to_string(b) + "," + std::to_string(w) + ")\n";
    }
    if (!text.empty()) text.pop_back();
    emit(opt, json{{"bw", j}}, text);
    return 0;
}

int cmd_classical_cm(const Options& opt) {
    auto alpha = parse_csv_ints(opt.alpha_csv);
    if (!gparking::is_classical_parking(alpha))
        throw std::invalid_argument("not a classical parking function");
    auto positions = gparking::critical_maxima(alpha);
    emit(opt, json{{"critical_maxima", positions}, {"cm", positions.size()}},
         "critical_maxima = {" + join_csv(positions) + "}\ncm = " +
             std::to_string(positions.size()));
    return 0;
}

int cmd_classical_tutte(const Options& opt) {
    auto p = gparking::tutte_complete(opt.classical_n);
    emit(opt, gparking::polynomial_to_json(p), p.to_string());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"G-parking functions, bridge vertices and the Tutte polynomial"};
    app.require_subcommand(1);
    app.fallthrough();  // inherited: global options may follow the subcommand
    Options opt;

    app.add_option("--graph", opt.graph_path, "graph JSON file (vertex 0 is the root)");
    app.add_option("--ranking", opt.ranking_csv, "vertex ranking tau as a permutation of 1..n");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--parallel", opt.parallel,
                 "parallel enumeration (degree from GPARKING_THREADS)");

    int (*action)(const Options&) = nullptr;

    auto* parking = app.add_subcommand("parking", "G-parking function operations");
    auto* penum = parking->add_subcommand("enumerate", "list all G-parking functions");
    penum->callback([&] { action = cmd_parking_enumerate; });
    auto* pcheck = parking->add_subcommand("check", "test whether f is a G-parking function");
    pcheck->add_option("labeling", opt.labeling_csv, "comma-separated values, f(0) first")
        ->required();
    pcheck->callback([&] { action = cmd_parking_check; });
    auto* pfromtree = parking->add_subcommand("from-tree", "parking function of a spanning tree");
    pfromtree->add_option("tree", opt.tree_json, "JSON array of [vertex,parent,color] triples")
        ->required();
    pfromtree->callback([&] { action = cmd_parking_from_tree; });
    parking->require_subcommand(1);

    auto* tree = app.add_subcommand("tree", "spanning tree operations");
    auto* tfrom = tree->add_subcommand("from-parking", "colored spanning tree of f");
    tfrom->add_option("labeling", opt.labeling_csv, "comma-separated values, f(0) first")
        ->required();
    tfrom->callback([&] { action = cmd_tree_from_parking; });
    tree->require_subcommand(1);

    auto* bridges = app.add_subcommand("bridges", "bridge vertices, b(f) and w(f)");
    bridges->add_option("labeling", opt.labeling_csv, "comma-separated values, f(0) first")
        ->required();
    bridges->callback([&] { action = cmd_bridges; });

    auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of the graph");
    tutte->add_option("--method", opt.method, "computation route")
        ->check(CLI::IsMember({"parking", "delcon"}));
    tutte->callback([&] { action = cmd_tutte; });

    auto* bw = app.add_subcommand("bw", "multiset of (b(f), w(f)) pairs");
    bw->callback([&] { action = cmd_bw; });

    auto* classical = app.add_subcommand("classical", "classical parking functions");
    auto* ccm = classical->add_subcommand("cm", "critical maxima of alpha");
    ccm->add_option("alpha", opt.alpha_csv, "comma-separated values a_1,...,a_n")->required();
    ccm->callback([&] { action = cmd_classical_cm; });
    auto* ctutte = classical->add_subcommand("tutte", "T_{K_{n+1}} via classical parking functions");
    ctutte->add_option("n", opt.classical_n, "length of the parking functions")
        ->required()
        ->check(CLI::PositiveNumber);
    ctutte->callback([&] { action = cmd_classical_tutte; });
    classical->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        return action ? action(opt) : 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
