#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "iasl/classify.hpp"
#include "iasl/graph.hpp"
#include "iasl/labeling.hpp"

namespace iasl {

/// The graph on all 0-containing subsets of x (named like `0_1_2`), with
/// every sumset-compatible pair joined, plus the identity labeling with
/// ground x. Requires 0 in x and 2 <= |x| <= 12.
std::pair<Graph, Labeling> build_max_iasf_graph(const IntSet& x);

struct SearchResult {
    enum class Status { sat, unsat };
    Status status = Status::unsat;
    std::optional<Labeling> witness;  // canonically least, carries its ground set
    std::uint64_t explored = 0;       // tentative vertex-to-label placements
    std::string searched_universe;
    std::string reason;               // set on unsat

    bool sat() const { return status == Status::sat; }
};

/// Decides whether g admits a set-filtered labeling over any ground set
/// X within {0..universe_bound} with 0 in X. The order of g forces
/// |X| = n via |V| = 2^{n-1}; anything else is rejected immediately.
/// Deterministic: the witness is the canonically least labeling over the
/// canonically first admissible ground set.
SearchResult search_iasfl(const Graph& g, std::uint64_t universe_bound);

/// Brute-force oracle: enumerates every injective assignment of non-empty
/// subsets of x to V(g) whose edge labels stay inside x, classifies each,
/// and counts those where the named verdict holds. `on_match`, when given,
/// sees each matching labeling in canonical order.
/// Scale guard |V| <= 6 and |x| <= 4 unless `force`.
std::uint64_t enumerate_labelings(const Graph& g, const IntSet& x, std::string_view predicate,
                                  const std::function<void(const Labeling&)>& on_match = nullptr,
                                  bool force = false);

/// All set-filtered labelings over ground set x, enumerated structurally:
/// spanning subgraphs of the maximal IASF-graph with no isolated vertex,
/// each carrying the identity labeling. Requires |x| <= 5.
void enumerate_iasfl_graphs(const IntSet& x,
                            const std::function<void(const Graph&, const Labeling&)>& fn);

/// Every labeled graph on 2..max_vertices vertices (named a, b, c, ...)
/// with no isolated vertex, by ascending vertex count then edge mask.
void for_each_small_graph(int max_vertices, const std::function<void(const Graph&)>& fn);

/// Seeded generators used by the theorem suite and the acceptance checks.
/// Deterministic for a given engine state across platforms.
Graph random_graph(std::mt19937& rng, int min_vertices, int max_vertices);
Labeling random_injective_labeling(std::mt19937& rng, const Graph& g, const IntSet& universe);

}  // namespace iasl
