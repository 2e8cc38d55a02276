// Acceptance battery: nine independently timed checks, one PASS/FAIL line
// each. Exits 0 only when every check passes. Time limits are part of the
// contract for checks 1, 2, 3 and 6.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "iasl/classify.hpp"
#include "iasl/graph.hpp"
#include "iasl/intset.hpp"
#include "iasl/labeling.hpp"
#include "iasl/search.hpp"
#include "iasl/suite.hpp"

using iasl::Graph;
using iasl::IntSet;
using iasl::Labeling;

namespace {

// empty optional = pass; otherwise the failure detail
using Check = std::function<std::optional<std::string>()>;

struct Criterion {
    std::string summary;
    long limit_ms;  // 0 = untimed
    Check check;
};

std::optional<std::string> relation_props(const Graph& g, const Labeling& f,
                                          const iasl::ClassificationReport& report) {
    auto fail = [&](const std::string& what) {
        return "graph " + g.to_file_text() + " labeling " + f.to_file_text(g) + ": " + what;
    };
    if (!report.eiasl.ok()) return fail("eiasl false: " + report.eiasl.witness);
    if (!report.tiasl.ok()) return fail("tiasl false: " + report.tiasl.witness);
    if (!report.iasgl.failed()) return fail("iasgl not false");
    if (!report.iassl.failed()) return fail("iassl not false");
    if (!report.arithmetic.failed()) return fail("arithmetic not false");

    auto labels = f.vertex_labels(g);
    std::set<IntSet, iasl::CanonicalLess> label_set(labels.begin(), labels.end());
    for (const auto& e : iasl::induced_edge_labels(g, f).labels) {
        if (!label_set.count(e)) return fail("edge label " + e.to_string() + " no vertex carries");
    }
    std::vector<IntSet> singletons;
    for (const auto& l : labels) {
        if (l.size() == 1) singletons.push_back(l);
    }
    if (singletons.size() != 1 || singletons[0] != IntSet{0}) {
        return fail("singleton labels are not exactly {{0}}");
    }
    return std::nullopt;
}

std::optional<std::string> criterion_counting() {
    auto [g, f] = iasl::build_max_iasf_graph(IntSet{0, 1, 2, 3, 4});
    if (g.vertex_count() != 16) {
        return "expected 16 vertices, got " + std::to_string(g.vertex_count());
    }
    auto shape = iasl::graph_shape(g);
    if (shape.pendant_vertices.size() < 8) {
        return "expected at least 8 pendants, got " + std::to_string(shape.pendant_vertices.size());
    }
    auto zero = g.index_of("0");
    for (const auto& p : shape.pendant_vertices) {
        if (!g.adjacent(g.index_of(p), zero)) return "pendant " + p + " not adjacent to {0}";
    }
    return std::nullopt;
}

std::optional<std::string> criterion_characterization() {
    std::optional<std::string> failure;
    std::uint64_t seen = 0;
    iasl::for_each_small_graph(4, [&](const Graph& g) {
        if (failure) return;
        iasl::enumerate_labelings(g, IntSet{0, 1, 2}, "iasl", [&](const Labeling& f) {
            if (failure) return;
            ++seen;
            auto report = iasl::classify(g, f);
            if (report.iasfl.ok() != report.iasfl_by_characterization.ok()) {
                failure = "mismatch on graph " + g.to_file_text() + " labeling " +
                          f.to_file_text(g);
            }
        });
    });
    if (failure) return failure;
    if (seen == 0) return std::string("enumeration produced no labelings");
    return std::nullopt;
}

std::optional<std::string> criterion_cardinality_lemmas() {
    // exhaustive over all pairs of non-empty subsets of {0..8}
    for (std::uint64_t am = 1; am < 512; ++am) {
        IntSet a = IntSet::from_mask(am);
        IntSet da = iasl::difference_set(a);
        for (std::uint64_t bm = 1; bm < 512; ++bm) {
            IntSet b = IntSet::from_mask(bm);
            IntSet s = iasl::sumset(a, b);
            bool weak_eq = s.size() == std::max(a.size(), b.size());
            bool has_singleton = a.size() == 1 || b.size() == 1;
            if (weak_eq != has_singleton) {
                return "weak lemma fails on " + a.to_string() + ", " + b.to_string();
            }
            bool strong_eq = s.size() == a.size() * b.size();
            bool disjoint_diffs = da.set_intersection(iasl::difference_set(b)).empty();
            if (strong_eq != disjoint_diffs) {
                return "strong lemma fails on " + a.to_string() + ", " + b.to_string();
            }
        }
    }

    // and on 1000 seeded random labeled graphs
    std::mt19937 rng(20260825u);
    IntSet universe = IntSet::from_mask((1ULL << 13) - 1);  // {0..12}
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = iasl::random_graph(rng, 2, 8);
        Labeling f = iasl::random_injective_labeling(rng, g, universe);
        auto report = iasl::classify(g, f);
        if (report.wiasl.ok() != report.wiasl_by_characterization.ok() ||
            report.siasl.ok() != report.siasl_by_characterization.ok()) {
            return "trial " + std::to_string(trial) + ": graph " + g.to_file_text() +
                   " labeling " + f.to_file_text(g);
        }
    }
    return std::nullopt;
}

std::optional<std::string> criterion_relation_props() {
    std::optional<std::string> failure;
    std::uint64_t seen = 0;

    // structural enumeration: every filtered labeling over {0,1}, {0,1,2}, {0,1,2,3}
    for (int n = 2; n <= 4 && !failure; ++n) {
        IntSet x = IntSet::from_mask((1ULL << n) - 1);
        iasl::enumerate_iasfl_graphs(x, [&](const Graph& g, const Labeling& f) {
            if (failure) return;
            ++seen;
            failure = relation_props(g, f, iasl::classify(g, f));
        });
    }
    if (failure) return failure;

    // brute-force oracle on arbitrary hosts as a second source
    iasl::for_each_small_graph(4, [&](const Graph& g) {
        if (failure) return;
        iasl::enumerate_labelings(g, IntSet{0, 1, 2}, "iasfl", [&](const Labeling& f) {
            if (failure) return;
            ++seen;
            failure = relation_props(g, f, iasl::classify(g, f));
        });
    });
    if (failure) return failure;
    if (seen < 19) return std::string("too few filtered labelings enumerated");
    return std::nullopt;
}

std::optional<std::string> criterion_star_theorem() {
    std::optional<std::string> failure;
    auto inspect = [&](const Graph& g, const Labeling& f) {
        if (failure) return;
        auto report = iasl::classify(g, f);
        if (!report.iasfl.ok()) return;
        bool star = iasl::graph_shape(g).is_star;
        if (report.wiasl.ok() != star) {
            failure = "star equivalence fails on " + g.to_file_text();
            return;
        }
        if (report.siasl.ok()) {
            for (auto [u, v] : g.edges()) {
                if (f.at(g.name(u)).set_intersection(f.at(g.name(v))) != IntSet{0}) {
                    failure = "strong filtered labeling with intersection != {0} on " +
                              g.to_file_text();
                    return;
                }
            }
        }
    };
    for (int n = 2; n <= 3 && !failure; ++n) {
        IntSet x = IntSet::from_mask((1ULL << n) - 1);
        iasl::enumerate_iasfl_graphs(x, inspect);
        iasl::for_each_small_graph(4, [&](const Graph& g) {
            if (failure) return;
            iasl::enumerate_labelings(g, x, "iasfl",
                                      [&](const Labeling& f) { inspect(g, f); });
        });
    }
    return failure;
}

std::optional<std::string> criterion_search_battery() {
    const std::vector<std::pair<std::string, std::string>> unsat = {
        {"P3", "a b\nb c\n"},
        {"P4", "a b\nb c\nc d\n"},
        {"C4", "a b\nb c\nc d\nd a\n"},
        {"C8", "a b\nb c\nc d\nd e\ne f\nf g\ng h\nh a\n"},
        {"K4", "a b\na c\na d\nb c\nb d\nc d\n"},
        {"K22", "a c\na d\nb c\nb d\n"},
    };
    for (const auto& [name, text] : unsat) {
        auto res = iasl::search_iasfl(Graph::parse(text), 6);
        if (res.sat()) return name + " unexpectedly satisfiable";
    }
    const std::vector<std::pair<std::string, std::string>> sat = {
        {"K2", "a b\n"},
        {"K13", "a b\na c\na d\n"},
    };
    for (const auto& [name, text] : sat) {
        Graph g = Graph::parse(text);
        auto res = iasl::search_iasfl(g, 6);
        if (!res.sat()) return name + " unexpectedly unsatisfiable: " + res.reason;
        auto report = iasl::classify(g, *res.witness);
        if (!report.iasfl.ok()) {
            return name + " witness fails re-verification: " + report.iasfl.witness;
        }
    }
    return std::nullopt;
}

std::optional<std::string> criterion_monotonicity() {
    auto report = iasl::run_theorem_suite(4);
    for (const auto& item : report.items) {
        if (item.id != 8) continue;
        if (item.pass) return std::nullopt;
        return "suite item 8 failed: " + item.detail;
    }
    return std::string("suite has no item 8");
}

std::optional<std::string> criterion_universality() {
    std::mt19937 rng(1729u);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = iasl::random_graph(rng, 2, 10);
        auto plain = iasl::make_trivial_iasl(g, iasl::TrivialMode::plain);
        if (!iasl::validate_iasl(g, plain).iasl.ok()) {
            return "plain labeling fails on trial " + std::to_string(trial) + ": " +
                   g.to_file_text();
        }
        auto indexer = iasl::make_trivial_iasl(g, iasl::TrivialMode::indexer);
        auto check = iasl::validate_iasl(g, indexer);
        if (!check.iasi.ok()) {
            return "indexer labeling fails on trial " + std::to_string(trial) + ": " +
                   g.to_file_text();
        }
    }
    return std::nullopt;
}

std::optional<std::string> criterion_oracle_agreement() {
    std::optional<std::string> failure;
    iasl::for_each_small_graph(4, [&](const Graph& g) {
        if (failure) return;
        bool oracle_sat = false;
        // every ground set within {0..4} the search bound covers
        for (std::uint64_t mask = 1; mask < 32 && !failure; mask += 2) {  // 0 always in
            IntSet x = IntSet::from_mask(mask);
            if (x.size() < 2 || x.size() > 3) continue;
            std::uint64_t count = iasl::enumerate_labelings(g, x, "iasfl");
            if (count > 0) {
                oracle_sat = true;
                if (g.vertex_count() != (std::size_t{1} << (x.size() - 1))) {
                    failure = "oracle found a filtered labeling at the wrong order on " +
                              g.to_file_text();
                }
            }
        }
        if (failure) return;
        auto res = iasl::search_iasfl(g, 4);
        if (res.sat() != oracle_sat) {
            failure = "search disagrees with the oracle on " + g.to_file_text();
            return;
        }
        if (res.sat() && !iasl::classify(g, *res.witness).iasfl.ok()) {
            failure = "search witness fails re-verification on " + g.to_file_text();
        }
    });
    return failure;
}

std::string one_line(std::string s) {
    for (char& c : s) {
        if (c == '\n') c = ' ';
    }
    return s;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"maximal graph over {0,1,2,3,4}: 16 vertices, >= 8 pendants on the {0} vertex", 1000,
         criterion_counting},
        {"filter definition matches the three-part characterization on all small labelings", 60000,
         criterion_characterization},
        {"weak/strong cardinality lemmas, exhaustive pairs plus 1000 random labeled graphs", 30000,
         criterion_cardinality_lemmas},
        {"every enumerated filtered labeling satisfies the relation propositions", 0,
         criterion_relation_props},
        {"filtered + weak exactly on stars; filtered + strong meets adjacent labels in {0}", 0,
         criterion_star_theorem},
        {"search battery: P3 P4 C4 C8 K4 K22 unsat, K2 K13 sat with verified witnesses", 60000,
         criterion_search_battery},
        {"edge-deletion monotonicity and leaf-deletion non-heredity hold in the suite", 0,
         criterion_monotonicity},
        {"trivial labelings validate on 50 seeded random graphs", 0, criterion_universality},
        {"search agrees with the brute-force oracle on every graph up to 4 vertices", 0,
         criterion_oracle_agreement},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        std::optional<std::string> failure;
        try {
            failure = c.check();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (!failure && c.limit_ms > 0 && elapsed > c.limit_ms) {
            failure = "took " + std::to_string(elapsed) + " ms, limit " +
                      std::to_string(c.limit_ms) + " ms";
        }
        if (failure) {
            ++failures;
            std::cout << "FAIL criterion-" << (i + 1) << ' ' << c.summary << ": "
                      << one_line(*failure) << '\n';
        } else {
            std::cout << "PASS criterion-" << (i + 1) << ' ' << c.summary << " (" << elapsed
                      << " ms)\n";
        }
    }
    std::cout << (criteria.size() - failures) << '/' << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
