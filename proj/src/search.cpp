#include "iasl/search.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace iasl {

namespace {

std::string subset_name(const IntSet& s) {
    std::string out;
    for (auto e : s.elements()) {
        if (!out.empty()) out += '_';
        out += std::to_string(e);
    }
    return out;
}

/// All subsets of x that contain 0, in canonical order.
std::vector<IntSet> zero_subsets(const IntSet& x) {
    std::vector<IntSet> out;
    std::vector<std::uint64_t> rest;
    for (auto e : x.elements())
        if (e != 0) rest.push_back(e);
    std::size_t n = rest.size();
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::uint64_t> elems{0};
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) elems.push_back(rest[i]);
        }
        out.push_back(IntSet(std::move(elems)));
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

/// Ground size n forced by |V| = 2^{n-1}, or nullopt.
std::optional<std::size_t> forced_ground_size(std::size_t order) {
    if (order < 2 || (order & (order - 1)) != 0) return std::nullopt;
    return static_cast<std::size_t>(std::countr_zero(order)) + 1;
}

std::uint64_t pick(std::mt19937& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

std::pair<Graph, Labeling> build_max_iasf_graph(const IntSet& x) {
    if (!x.contains(0)) {
        throw InputError("ground set " + x.to_string() + " does not contain 0");
    }
    if (x.size() < 2) {
        throw InputError("ground set must have at least 2 elements");
    }
    if (x.size() > 12) {
        throw InputError("ground set with more than 12 elements is not supported");
    }
    std::vector<IntSet> subsets = zero_subsets(x);
    std::vector<std::string> names;
    names.reserve(subsets.size());
    for (const auto& s : subsets) names.push_back(subset_name(s));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < subsets.size(); ++i) {
        for (std::uint32_t j = i + 1; j < subsets.size(); ++j) {
            if (sumset(subsets[i], subsets[j]).subset_of(x)) edges.push_back({i, j});
        }
    }
    Graph g = Graph::make(std::move(names), std::move(edges));
    Labeling f;
    f.ground = x;
    for (std::uint32_t i = 0; i < subsets.size(); ++i) {
        f.assignment.emplace(g.name(i), subsets[i]);
    }
    return {std::move(g), std::move(f)};
}

namespace {

/// Backtracking bijection V(g) -> 0-subsets of x with every edge mapped to
/// a sumset-compatible pair. Returns the canonically least assignment.
struct GroundAttempt {
    const Graph& g;
    const std::vector<IntSet>& subsets;
    std::vector<std::vector<char>> compat;     // subset pair compatibility
    std::vector<std::size_t> host_degree;      // degree in the maximal graph
    std::vector<int> image;                    // vertex -> subset index
    std::vector<char> used;
    std::uint64_t explored = 0;

    GroundAttempt(const Graph& graph, const std::vector<IntSet>& subs, const IntSet& x)
        : g(graph), subsets(subs) {
        std::size_t m = subsets.size();
        compat.assign(m, std::vector<char>(m, 0));
        host_degree.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (sumset(subsets[i], subsets[j]).subset_of(x)) {
                    compat[i][j] = compat[j][i] = 1;
                    ++host_degree[i];
                    ++host_degree[j];
                }
            }
        }
        image.assign(m, -1);
        used.assign(m, 0);
    }

    bool place(std::uint32_t v) {
        if (v == g.vertex_count()) return true;
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            if (used[s]) continue;
            if (g.degree(v) > host_degree[s]) continue;
            bool fits = true;
            for (auto w : g.neighbors(v)) {
                if (w < v && !compat[static_cast<std::size_t>(image[w])][s]) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            ++explored;
            image[v] = static_cast<int>(s);
            used[s] = 1;
            if (place(v + 1)) return true;
            image[v] = -1;
            used[s] = 0;
        }
        return false;
    }
};

}  // namespace

SearchResult search_iasfl(const Graph& g, std::uint64_t universe_bound) {
    if (universe_bound < 1) throw InputError("universe bound must be at least 1");
    SearchResult result;
    auto n = forced_ground_size(g.vertex_count());
    if (!n) {
        result.reason = "order " + std::to_string(g.vertex_count()) + " is not 2^{n-1}";
        result.searched_universe = "none";
        return result;
    }
    if (*n - 1 > universe_bound) {
        throw InputError("universe bound " + std::to_string(universe_bound) +
                         " cannot fit a " + std::to_string(*n) +
                         "-element ground set containing 0 (need at least " +
                         std::to_string(*n - 1) + ")");
    }
    std::ostringstream scope;
    scope << "X in {0.." << universe_bound << "} with 0 in X and |X| = " << *n;
    result.searched_universe = scope.str();

    // Ascending canonical order over candidate ground sets: lexicographic
    // combinations of n-1 positive values joined with 0.
    std::size_t k = *n - 1;
    std::vector<std::uint64_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i + 1;
    while (true) {
        std::vector<std::uint64_t> elems{0};
        elems.insert(elems.end(), combo.begin(), combo.end());
        IntSet x(std::move(elems));
        std::vector<IntSet> subsets = zero_subsets(x);
        GroundAttempt attempt(g, subsets, x);
        bool sat = attempt.place(0);
        result.explored += attempt.explored;
        if (sat) {
            result.status = SearchResult::Status::sat;
            Labeling f;
            f.ground = x;
            for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
                f.assignment.emplace(g.name(v), subsets[static_cast<std::size_t>(attempt.image[v])]);
            }
            result.witness = std::move(f);
            return result;
        }
        // next combination over {1..universe_bound}
        bool advanced = false;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (combo[i] < universe_bound - (k - 1 - i)) {
                ++combo[i];
                for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    result.reason = "exhausted " + result.searched_universe;
    return result;
}

std::uint64_t enumerate_labelings(const Graph& g, const IntSet& x, std::string_view predicate,
                                  const std::function<void(const Labeling&)>& on_match,
                                  bool force) {
    // Validate the predicate name eagerly via a throwaway report.
    (void)ClassificationReport{}.verdict(predicate);
    if (!force && (g.vertex_count() > 6 || x.size() > 4)) {
        throw InputError("enumeration guard: at most 6 vertices and a 4-element ground set (got " +
                         std::to_string(g.vertex_count()) + " vertices, " +
                         std::to_string(x.size()) + " elements); use force to override");
    }
    std::vector<IntSet> pool;
    {
        const auto& elems = x.elements();
        std::size_t n = elems.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::uint64_t> subset;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask >> i & 1) subset.push_back(elems[i]);
            }
            pool.push_back(IntSet(std::move(subset)));
        }
        std::sort(pool.begin(), pool.end(), CanonicalLess{});
    }
    std::vector<std::vector<char>> compat(pool.size(), std::vector<char>(pool.size(), 0));
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (i != j) compat[i][j] = sumset(pool[i], pool[j]).subset_of(x) ? 1 : 0;
        }
    }
    std::uint64_t count = 0;
    std::vector<int> image(g.vertex_count(), -1);
    std::vector<char> used(pool.size(), 0);
    auto dfs = [&](auto&& self, std::uint32_t v) -> void {
        if (v == g.vertex_count()) {
            Labeling f;
            f.ground = x;
            for (std::uint32_t w = 0; w < g.vertex_count(); ++w) {
                f.assignment.emplace(g.name(w), pool[static_cast<std::size_t>(image[w])]);
            }
            ClassificationReport report = classify(g, f);
            if (report.verdict(predicate).ok()) {
                ++count;
                if (on_match) on_match(f);
            }
            return;
        }
        for (std::size_t s = 0; s < pool.size(); ++s) {
            if (used[s]) continue;
            bool fits = true;
            for (auto w : g.neighbors(v)) {
                if (w < v && !compat[static_cast<std::size_t>(image[w])][s]) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            image[v] = static_cast<int>(s);
            used[s] = 1;
            self(self, v + 1);
            image[v] = -1;
            used[s] = 0;
        }
    };
    dfs(dfs, 0);
    return count;
}

void enumerate_iasfl_graphs(const IntSet& x,
                            const std::function<void(const Graph&, const Labeling&)>& fn) {
    if (!x.contains(0) || x.size() < 2 || x.size() > 5) {
        throw InputError("structural enumeration needs a ground set containing 0 with 2 to 5 elements");
    }
    auto [maximal, labeling] = build_max_iasf_graph(x);
    const auto& all_edges = maximal.edges();
    std::size_t m = all_edges.size();
    std::size_t n = maximal.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::size_t> degree(n, 0);
        for (std::size_t e = 0; e < m; ++e) {
            if (mask >> e & 1) {
                ++degree[all_edges[e].first];
                ++degree[all_edges[e].second];
            }
        }
        if (std::any_of(degree.begin(), degree.end(), [](std::size_t d) { return d == 0; })) {
            continue;
        }
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (std::size_t e = 0; e < m; ++e) {
            if (mask >> e & 1) edges.push_back(all_edges[e]);
        }
        Graph sub = Graph::make(maximal.vertices(), std::move(edges));
        fn(sub, labeling);
    }
}

void for_each_small_graph(int max_vertices, const std::function<void(const Graph&)>& fn) {
    if (max_vertices < 2 || max_vertices > 6) {
        throw InputError("small-graph enumeration supports 2 to 6 vertices");
    }
    for (int k = 2; k <= max_vertices; ++k) {
        std::vector<std::string> names;
        for (int i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
        for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(k); ++i) {
            for (std::uint32_t j = i + 1; j < static_cast<std::uint32_t>(k); ++j) {
                pairs.push_back({i, j});
            }
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            std::vector<std::size_t> degree(k, 0);
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                if (mask >> e & 1) {
                    ++degree[pairs[e].first];
                    ++degree[pairs[e].second];
                }
            }
            if (std::any_of(degree.begin(), degree.end(), [](std::size_t d) { return d == 0; })) {
                continue;
            }
            std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                if (mask >> e & 1) edges.push_back(pairs[e]);
            }
            fn(Graph::make(names, std::move(edges)));
        }
    }
}

Graph random_graph(std::mt19937& rng, int min_vertices, int max_vertices) {
    if (min_vertices < 2 || max_vertices < min_vertices || max_vertices > 26) {
        throw InputError("random graph size must satisfy 2 <= min <= max <= 26");
    }
    int n = min_vertices + static_cast<int>(pick(rng, static_cast<std::uint64_t>(
                                                          max_vertices - min_vertices + 1)));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    while (true) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        std::vector<std::size_t> degree(n, 0);
        for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(n); ++i) {
            for (std::uint32_t j = i + 1; j < static_cast<std::uint32_t>(n); ++j) {
                if (rng() & 1) {
                    edges.push_back({i, j});
                    ++degree[i];
                    ++degree[j];
                }
            }
        }
        if (std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d > 0; })) {
            return Graph::make(names, std::move(edges));
        }
    }
}

Labeling random_injective_labeling(std::mt19937& rng, const Graph& g, const IntSet& universe) {
    const auto& elems = universe.elements();
    std::size_t k = elems.size();
    if (k == 0 || k > 20) throw InputError("labeling universe must have 1 to 20 elements");
    std::uint64_t space = (std::uint64_t{1} << k) - 1;
    if (g.vertex_count() > space) {
        throw InputError("universe too small for an injective labeling");
    }
    std::set<std::uint64_t> taken;
    Labeling f;
    for (const auto& v : g.vertices()) {
        std::uint64_t mask;
        do {
            mask = 1 + pick(rng, space);
        } while (!taken.insert(mask).second);
        std::vector<std::uint64_t> subset;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1) subset.push_back(elems[i]);
        }
        f.assignment.emplace(v, IntSet(std::move(subset)));
    }
    return f;
}

}  // namespace iasl
