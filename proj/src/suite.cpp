#include "iasl/suite.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "iasl/search.hpp"

namespace iasl {

namespace {

IntSet iota_ground(int n) {
    std::vector<std::uint64_t> e;
    for (int i = 0; i < n; ++i) e.push_back(static_cast<std::uint64_t>(i));
    return IntSet(std::move(e));
}

std::string compact(const Graph& g) {
    std::string out;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (!out.empty()) out += ' ';
        out += g.edge_name(e);
    }
    return out.empty() ? "(no edges)" : out;
}

Graph remove_edge(const Graph& g, std::size_t victim) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (e != victim) edges.push_back(g.edges()[e]);
    }
    return Graph::make(g.vertices(), std::move(edges));
}

Graph remove_vertex(const Graph& g, std::uint32_t victim) {
    std::vector<std::string> names;
    std::vector<std::uint32_t> remap(g.vertex_count(), 0);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (v == victim) continue;
        remap[v] = static_cast<std::uint32_t>(names.size());
        names.push_back(g.name(v));
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (auto [u, v] : g.edges()) {
        if (u == victim || v == victim) continue;
        edges.push_back({remap[u], remap[v]});
    }
    return Graph::make(std::move(names), std::move(edges));
}

Labeling restrict_to(const Labeling& f, const Graph& sub) {
    Labeling out;
    out.ground = f.ground;
    for (const auto& v : sub.vertices()) out.assignment.emplace(v, f.at(v));
    return out;
}

Graph path_graph(int m) {
    std::vector<std::string> names;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (int i = 0; i < m; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int i = 0; i + 1 < m; ++i)
        edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1)});
    return Graph::make(std::move(names), std::move(edges));
}

Graph cycle_graph(int m) {
    std::vector<std::string> names;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (int i = 0; i < m; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int i = 0; i < m; ++i)
        edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((i + 1) % m)});
    return Graph::make(std::move(names), std::move(edges));
}

Graph complete_graph(int m) {
    std::vector<std::string> names;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (int i = 0; i < m; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(m); ++i)
        for (std::uint32_t j = i + 1; j < static_cast<std::uint32_t>(m); ++j) edges.push_back({i, j});
    return Graph::make(std::move(names), std::move(edges));
}

struct ItemRun {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            pass = false;
            detail = why;
        }
    }
    void note(const std::string& scope) {
        if (pass) detail = scope;
    }
};

SuiteItem finish(int id, std::string description, ItemRun run) {
    return {id, std::move(description), run.pass, std::move(run.detail)};
}

}  // namespace

bool SuiteReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.pass; });
}

nlohmann::ordered_json SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["max_ground_size"] = max_ground_size;
    j["all_pass"] = all_pass();
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& item : items) {
        j["items"].push_back({{"id", item.id},
                              {"description", item.description},
                              {"pass", item.pass},
                              {"detail", item.detail}});
    }
    return j;
}

SuiteReport run_theorem_suite(int max_ground_size) {
    if (max_ground_size < 2 || max_ground_size > 5) {
        throw InputError("max ground size must be between 2 and 5");
    }
    const int cap = std::min(max_ground_size, 4);  // exhaustive enumeration ceiling
    SuiteReport report;
    report.max_ground_size = max_ground_size;

    {  // 1: definitional verdicts match their characterizations
        ItemRun run;
        for (int n = 2; n <= std::min(max_ground_size, 3) && run.pass; ++n) {
            IntSet x = iota_ground(n);
            for_each_small_graph(4, [&](const Graph& g) {
                if (!run.pass) return;
                enumerate_labelings(g, x, "iasl", [&](const Labeling& f) {
                    if (!run.pass) return;
                    ClassificationReport r = classify(g, f);
                    auto agree = [&](const Verdict& a, const Verdict& b, const char* what) {
                        if (a.ok() != b.ok()) {
                            run.fail(std::string(what) + " mismatch on " + compact(g) + " with " +
                                     f.to_file_text(g));
                        }
                    };
                    agree(r.iasfl, r.iasfl_by_characterization, "iasfl");
                    agree(r.eiasl, r.eiasl_by_characterization, "eiasl");
                    agree(r.wiasl, r.wiasl_by_characterization, "wiasl");
                    agree(r.siasl, r.siasl_by_characterization, "siasl");
                });
            });
        }
        run.note("all labelings of graphs with <= 4 vertices over X = {0..n-1}, n <= 3");
        report.items.push_back(finish(1, "definitional and characterization verdicts agree", run));
    }

    {  // 2: maximal graph order, pendants, and pendant attachment
        ItemRun run;
        for (int n = 2; n <= max_ground_size && run.pass; ++n) {
            IntSet x = iota_ground(n);
            auto [g, f] = build_max_iasf_graph(x);
            std::size_t want_vertices = std::size_t{1} << (n - 1);
            std::size_t want_pendants = std::size_t{1} << (n - 2);
            if (g.vertex_count() != want_vertices) {
                run.fail("|X| = " + std::to_string(n) + ": " + std::to_string(g.vertex_count()) +
                         " vertices, expected " + std::to_string(want_vertices));
                break;
            }
            std::size_t pendants = 0;
            for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) == 1) ++pendants;
            if (pendants < want_pendants) {
                run.fail("|X| = " + std::to_string(n) + ": " + std::to_string(pendants) +
                         " pendants, expected at least " + std::to_string(want_pendants));
                break;
            }
            if (!classify(g, f).iasfl.ok()) {
                run.fail("|X| = " + std::to_string(n) + ": maximal graph labeling is not an IASFL");
                break;
            }
            std::uint32_t zero = g.index_of("0");
            for (std::uint32_t v = 0; v < g.vertex_count() && run.pass; ++v) {
                if (v != zero && !g.adjacent(zero, v)) {
                    run.fail("|X| = " + std::to_string(n) + ": vertex " + g.name(v) +
                             " is not adjacent to the {0} vertex");
                }
            }
            std::uint64_t top = x.max();
            for (std::uint32_t v = 0; v < g.vertex_count() && run.pass; ++v) {
                if (!f.at(g.name(v)).contains(top)) continue;
                if (g.degree(v) != 1 || g.neighbors(v).front() != zero) {
                    run.fail("|X| = " + std::to_string(n) + ": max-bearing vertex " + g.name(v) +
                             " is not pendant on the {0} vertex");
                }
            }
        }
        run.note("maximal graphs for |X| = 2.." + std::to_string(max_ground_size));
        report.items.push_back(finish(2, "maximal graph order and pendant counts", run));
    }

    {  // 3: edge labels always reappear as vertex labels
        ItemRun run;
        for (int n = 2; n <= cap && run.pass; ++n) {
            enumerate_iasfl_graphs(iota_ground(n), [&](const Graph& sub, const Labeling& f) {
                if (!run.pass) return;
                std::set<IntSet, CanonicalLess> vset;
                for (const auto& s : f.vertex_labels(sub)) vset.insert(s);
                EdgeLabeling edges = edge_sumsets(sub, f);
                for (std::size_t e = 0; e < edges.labels.size(); ++e) {
                    if (!vset.count(edges.labels[e])) {
                        run.fail("edge " + sub.edge_name(e) + " label " +
                                 edges.labels[e].to_string() + " is not a vertex label (" +
                                 compact(sub) + ")");
                        return;
                    }
                }
            });
        }
        for (int n = 2; n <= max_ground_size && run.pass; ++n) {
            auto [g, f] = build_max_iasf_graph(iota_ground(n));
            std::set<IntSet, CanonicalLess> vset;
            for (const auto& s : f.vertex_labels(g)) vset.insert(s);
            for (const auto& s : edge_sumsets(g, f).labels) {
                if (!vset.count(s)) {
                    run.fail("maximal graph |X| = " + std::to_string(n) + ": edge label " +
                             s.to_string() + " is not a vertex label");
                    break;
                }
            }
        }
        run.note("all IASFL graphs with |X| <= " + std::to_string(cap) +
                 ", maximal graphs to |X| = " + std::to_string(max_ground_size));
        report.items.push_back(finish(3, "every edge label is a vertex label", run));
    }

    {  // 4: the only singleton vertex label is {0}
        ItemRun run;
        for (int n = 2; n <= max_ground_size && run.pass; ++n) {
            auto [g, f] = build_max_iasf_graph(iota_ground(n));
            std::vector<IntSet> singletons;
            for (const auto& s : f.vertex_labels(g)) {
                if (s.size() == 1) singletons.push_back(s);
            }
            if (singletons.size() != 1 || singletons.front() != IntSet{0}) {
                run.fail("|X| = " + std::to_string(n) + ": found " +
                         std::to_string(singletons.size()) + " singleton labels");
            }
        }
        run.note("vertex-label families for |X| = 2.." + std::to_string(max_ground_size));
        report.items.push_back(finish(4, "exactly one singleton vertex label, namely {0}", run));
    }

    {  // 5: every vertex label lies on a saturated chain from {0} to X
        ItemRun run;
        for (int n = 2; n <= max_ground_size && run.pass; ++n) {
            IntSet x = iota_ground(n);
            auto [g, f] = build_max_iasf_graph(x);
            std::set<IntSet, CanonicalLess> vset;
            for (const auto& s : f.vertex_labels(g)) vset.insert(s);
            for (const auto& a : vset) {
                std::vector<IntSet> chain = extract_chain(f, a);
                bool ok = !chain.empty() && chain.front() == IntSet{0} && chain.back() == x &&
                          std::count(chain.begin(), chain.end(), a) == 1;
                for (std::size_t i = 0; ok && i < chain.size(); ++i) {
                    if (!vset.count(chain[i])) ok = false;
                    if (i && (chain[i].size() != chain[i - 1].size() + 1 ||
                              !chain[i - 1].subset_of(chain[i])))
                        ok = false;
                }
                if (!ok) {
                    run.fail("|X| = " + std::to_string(n) + ": bad chain through " + a.to_string());
                    break;
                }
            }
        }
        run.note("all vertex labels for |X| = 2.." + std::to_string(max_ground_size));
        report.items.push_back(finish(5, "every vertex label lies on a saturated chain", run));
    }

    {  // 6: IASFL forces EIASL and TIASL, excludes IASGL, IASSL, arithmetic
        ItemRun run;
        for (int n = 2; n <= cap && run.pass; ++n) {
            enumerate_iasfl_graphs(iota_ground(n), [&](const Graph& sub, const Labeling& f) {
                if (!run.pass) return;
                ClassificationReport r = classify(sub, f);
                if (!r.iasfl.ok()) run.fail("not an IASFL: " + compact(sub));
                else if (!r.eiasl.ok()) run.fail("EIASL fails on " + compact(sub));
                else if (!r.tiasl.ok()) run.fail("TIASL fails on " + compact(sub));
                else if (!r.iasgl.failed()) run.fail("IASGL holds on " + compact(sub));
                else if (!r.iassl.failed()) run.fail("IASSL holds on " + compact(sub));
                else if (!r.arithmetic.failed()) run.fail("arithmetic holds on " + compact(sub));
            });
        }
        run.note("all IASFL graphs with |X| <= " + std::to_string(cap));
        report.items.push_back(finish(
            6, "IASFL implies EIASL and TIASL and excludes IASGL, IASSL, arithmetic", run));
    }

    {  // 7: among IASFLs, WIASL marks exactly the stars; SIASL forces {0} intersections
        ItemRun run;
        for (int n = 2; n <= std::min(max_ground_size, 3) && run.pass; ++n) {
            enumerate_iasfl_graphs(iota_ground(n), [&](const Graph& sub, const Labeling& f) {
                if (!run.pass) return;
                ClassificationReport r = classify(sub, f);
                bool star = graph_shape(sub).is_star;
                if ((r.iasfl.ok() && r.wiasl.ok()) != star) {
                    run.fail("WIASL/star mismatch on " + compact(sub));
                    return;
                }
                if (r.iasfl.ok() && r.siasl.ok()) {
                    for (auto [u, v] : sub.edges()) {
                        IntSet common = f.at(sub.name(u)).set_intersection(f.at(sub.name(v)));
                        if (!(common == IntSet{0})) {
                            run.fail("adjacent labels of " + sub.name(u) + " and " + sub.name(v) +
                                     " meet in " + common.to_string());
                            return;
                        }
                    }
                }
            });
        }
        run.note("all IASFL graphs with |X| in {2, 3}");
        report.items.push_back(
            finish(7, "IASFL with WIASL exactly on stars; IASFL with SIASL meets in {0}", run));
    }

    {  // 8: deleting a non-leaf edge keeps the IASFL; deleting a leaf vertex can break it
        ItemRun run;
        bool heredity_broken = false;
        for (int n = 2; n <= cap && run.pass; ++n) {
            auto [g, f] = build_max_iasf_graph(iota_ground(n));
            for (std::size_t e = 0; e < g.edge_count() && run.pass; ++e) {
                auto [u, v] = g.edges()[e];
                if (g.degree(u) == 1 || g.degree(v) == 1) continue;  // leaf edge
                Graph sub = remove_edge(g, e);
                if (!classify(sub, f).iasfl.ok()) {
                    run.fail("|X| = " + std::to_string(n) + ": removing edge " + g.edge_name(e) +
                             " breaks the IASFL");
                }
            }
            if (n >= 3) {
                for (std::uint32_t v = 0; v < g.vertex_count() && run.pass; ++v) {
                    if (g.degree(v) != 1) continue;
                    Graph sub = remove_vertex(g, v);
                    Labeling fsub = restrict_to(f, sub);
                    if (classify(sub, fsub).iasfl.failed()) heredity_broken = true;
                }
            }
        }
        if (run.pass && cap >= 3 && !heredity_broken) {
            run.fail("no leaf-vertex deletion broke an IASFL");
        }
        run.note("maximal graphs for |X| = 2.." + std::to_string(cap));
        report.items.push_back(finish(
            8, "non-leaf edge deletion preserves IASFL; leaf vertex deletion breaks it", run));
    }

    {  // 9: no graph of odd order admits an IASFL
        ItemRun run;
        for (int m : {3, 5, 7}) {
            for (const Graph& g : {path_graph(m), cycle_graph(m), complete_graph(m)}) {
                SearchResult res = search_iasfl(g, 6);
                if (res.sat()) {
                    run.fail("order " + std::to_string(m) + " graph " + compact(g) +
                             " admitted an IASFL");
                }
            }
        }
        if (run.pass && enumerate_labelings(path_graph(3), iota_ground(2), "iasfl") != 0) {
            run.fail("oracle found an IASFL on a 3-vertex path over {0,1}");
        }
        if (run.pass && enumerate_labelings(path_graph(3), iota_ground(3), "iasfl") != 0) {
            run.fail("oracle found an IASFL on a 3-vertex path over {0,1,2}");
        }
        run.note("paths, cycles, completes of order 3, 5, 7; oracle cross-check on the 3-path");
        report.items.push_back(finish(9, "odd order admits no IASFL", run));
    }

    {  // 10: cardinality lemmas for WIASL and SIASL
        ItemRun run;
        for (std::uint64_t am = 1; am < 512 && run.pass; ++am) {
            IntSet a = IntSet::from_mask(am);
            IntSet da = difference_set(a);
            for (std::uint64_t bm = 1; bm < 512; ++bm) {
                IntSet b = IntSet::from_mask(bm);
                std::size_t sz = sumset(a, b).size();
                bool weak_eq = sz == std::max(a.size(), b.size());
                bool weak_char = std::min(a.size(), b.size()) == 1;
                if (weak_eq != weak_char) {
                    run.fail("max-cardinality mismatch for " + a.to_string() + ", " + b.to_string());
                    break;
                }
                bool strong_eq = sz == a.size() * b.size();
                bool strong_char = da.set_intersection(difference_set(b)).empty();
                if (strong_eq != strong_char) {
                    run.fail("product-cardinality mismatch for " + a.to_string() + ", " +
                             b.to_string());
                    break;
                }
            }
        }
        if (run.pass) {
            std::mt19937 rng(20260825u);
            IntSet universe = iota_ground(13);
            for (int i = 0; i < 1000 && run.pass; ++i) {
                Graph g = random_graph(rng, 2, 8);
                Labeling f = random_injective_labeling(rng, g, universe);
                ClassificationReport r = classify(g, f);
                if (r.wiasl.ok() != r.wiasl_by_characterization.ok() ||
                    r.siasl.ok() != r.siasl_by_characterization.ok()) {
                    run.fail("lemma mismatch on random graph " + std::to_string(i) + ": " +
                             compact(g));
                }
            }
        }
        run.note("all pairs of non-empty subsets of {0..8}; 1000 seeded random labeled graphs");
        report.items.push_back(finish(10, "WIASL and SIASL cardinality lemmas", run));
    }

    return report;
}

}  // namespace iasl
