#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "iasl/classify.hpp"
#include "iasl/search.hpp"
#include "iasl/suite.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw iasl::InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw iasl::InputError(path + ": cannot write file");
    out << content;
    if (!out) throw iasl::InputError(path + ": write failed");
}

iasl::Graph load_graph(const std::string& path) {
    std::string text = read_file(path);
    try {
        return iasl::Graph::parse(text);
    } catch (const iasl::InputError& e) {
        throw iasl::InputError(path + ": " + e.what());
    }
}

iasl::Labeling load_labeling(const std::string& path, const iasl::Graph& g) {
    std::string text = read_file(path);
    try {
        return iasl::Labeling::parse(text, g);
    } catch (const iasl::InputError& e) {
        throw iasl::InputError(path + ": " + e.what());
    }
}

int run_verify(const std::string& graph_path, const std::string& labeling_path, bool json) {
    iasl::Graph g = load_graph(graph_path);
    iasl::Labeling f = load_labeling(labeling_path, g);
    iasl::IaslCheck check = iasl::validate_iasl(g, f);
    iasl::ClassificationReport report = check.iasl.ok()
                                            ? iasl::classify(g, f)
                                            : iasl::ClassificationReport::not_an_iasl(check);
    if (json) {
        std::cout << report.to_json().dump(2) << '\n';
    } else {
        std::cout << report.to_text();
    }
    return report.iasl.ok() ? 0 : 1;
}

int run_construct(const std::string& ground_literal, const std::string& graph_out,
                  const std::string& labeling_out) {
    iasl::IntSet x = iasl::IntSet::parse(ground_literal);
    auto [g, f] = iasl::build_max_iasf_graph(x);
    write_file(graph_out, g.to_file_text());
    write_file(labeling_out, f.to_file_text(g));
    std::cout << "wrote " << graph_out << " (" << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges) and " << labeling_out << " (ground " << x.to_string()
              << ")\n";
    return 0;
}

int run_search(const std::string& graph_path, std::uint64_t bound, bool json) {
    iasl::Graph g = load_graph(graph_path);
    iasl::SearchResult res = iasl::search_iasfl(g, bound);
    if (json) {
        nlohmann::ordered_json j;
        j["status"] = res.sat() ? "sat" : "unsat";
        if (res.witness) {
            nlohmann::ordered_json w;
            w["ground"] = res.witness->ground->to_literal();
            nlohmann::ordered_json assign;
            for (const auto& v : g.vertices()) assign[v] = res.witness->at(v).to_literal();
            w["assignment"] = assign;
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        j["explored"] = res.explored;
        j["searched_universe"] = res.searched_universe;
        j["reason"] = res.reason;
        std::cout << j.dump(2) << '\n';
        return res.sat() ? 0 : 1;
    }
    if (res.sat()) {
        std::cout << "SAT\n";
        std::cout << "# explored: " << res.explored << '\n';
        std::cout << "# searched: " << res.searched_universe << '\n';
        std::cout << res.witness->to_file_text(g);
        return 0;
    }
    std::cout << "UNSAT: " << res.reason << '\n';
    std::cout << "# explored: " << res.explored << '\n';
    std::cout << "# searched: " << res.searched_universe << '\n';
    return 1;
}

int run_oracle(const std::string& graph_path, const std::string& ground_literal,
               const std::string& predicate, bool count_only, bool force) {
    iasl::Graph g = load_graph(graph_path);
    iasl::IntSet x = iasl::IntSet::parse(ground_literal);
    auto on_match = [&](const iasl::Labeling& f) {
        std::string line = "match:";
        for (const auto& v : g.vertices()) {
            line += " " + v + "=" + f.at(v).to_string();
        }
        std::cout << line << '\n';
    };
    std::uint64_t count = iasl::enumerate_labelings(
        g, x, predicate, count_only ? std::function<void(const iasl::Labeling&)>{} : on_match,
        force);
    std::cout << "count: " << count << '\n';
    return 0;
}

int run_theorems(int max_n) {
    iasl::SuiteReport report = iasl::run_theorem_suite(max_n);
    for (const auto& item : report.items) {
        if (item.pass) {
            std::cout << "PASS item-" << item.id << ' ' << item.description << '\n';
        } else {
            std::cout << "FAIL item-" << item.id << ' ' << item.description << ": " << item.detail
                      << '\n';
        }
    }
    std::cout << report.to_json().dump() << '\n';
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer additive set-labeling toolkit"};
    app.require_subcommand(1);

    std::string graph_path, labeling_path, ground_literal, predicate;
    std::string graph_out = "iasf-graph.txt";
    std::string labeling_out = "iasf-labeling.txt";
    std::uint64_t bound = 8;
    int max_n = 4;
    bool json = false, count_only = false, force = false;

    auto* verify = app.add_subcommand("verify", "classify a labeling of a graph");
    verify->add_option("--graph", graph_path, "graph file")->required();
    verify->add_option("--labeling", labeling_path, "labeling file")->required();
    verify->add_flag("--json", json, "emit the report as JSON");

    auto* construct = app.add_subcommand(
        "construct", "build the maximal IASF-graph of a ground set");
    construct->add_option("--ground", ground_literal, "ground set literal, e.g. 0,1,2")->required();
    construct->add_option("--out-graph", graph_out, "output graph file");
    construct->add_option("--out-labeling", labeling_out, "output labeling file");

    auto* search = app.add_subcommand("search", "decide whether a graph admits an IASFL");
    search->add_option("--graph", graph_path, "graph file")->required();
    search->add_option("--bound", bound, "largest integer allowed in a ground set");
    search->add_flag("--json", json, "emit the result as JSON");

    auto* oracle = app.add_subcommand(
        "oracle", "enumerate all ground-respecting labelings matching a predicate");
    oracle->add_option("--graph", graph_path, "graph file")->required();
    oracle->add_option("--ground", ground_literal, "ground set literal")->required();
    oracle->add_option("--predicate", predicate, "verdict name, e.g. iasl or iasfl")->required();
    oracle->add_flag("--count-only", count_only, "print only the count");
    oracle->add_flag("--force", force, "override the enumeration scale guard");

    auto* theorems = app.add_subcommand("theorems", "run the structural theorem suite");
    theorems->add_option("--max-n", max_n, "largest ground-set size to cover (2..5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(graph_path, labeling_path, json);
        if (construct->parsed()) return run_construct(ground_literal, graph_out, labeling_out);
        if (search->parsed()) return run_search(graph_path, bound, json);
        if (oracle->parsed()) return run_oracle(graph_path, ground_literal, predicate, count_only, force);
        if (theorems->parsed()) return run_theorems(max_n);
    } catch (const iasl::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
