#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iasl/error.hpp"

namespace iasl {

/// Simple finite undirected graph over named vertices: no loops, no
/// duplicate edges, and no isolated vertices unless explicitly allowed
/// at construction (internal enumeration use only).
///
/// Vertex order is canonical: declaration order when parsed, the order
/// given to make() when synthesized. Edges are stored as index pairs
/// (u < v) sorted ascending; that is the canonical edge order.
class Graph {
public:
    /// File format: `#` starts a comment; each non-blank line is either
    /// an edge `<u> <v>` or a declaration `vertex <name>`. Vertex tokens
    /// match [A-Za-z0-9_]+. Errors name the offending line.
    static Graph parse(std::string_view text);

    static Graph make(std::vector<std::string> vertices,
                      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
                      bool allow_isolated = false);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertices() const { return names_; }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
    const std::string& name(std::uint32_t v) const { return names_[v]; }
    std::uint32_t index_of(std::string_view vertex) const;  // throws InputError
    std::optional<std::uint32_t> find(std::string_view vertex) const;
    std::size_t degree(std::uint32_t v) const { return adj_[v].size(); }
    const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_[v]; }
    bool adjacent(std::uint32_t u, std::uint32_t v) const;

    /// "a-b" for the e-th canonical edge; used in witnesses.
    std::string edge_name(std::size_t e) const;

    /// Emits the file format back: one edge line per canonical edge,
    /// plus `vertex` lines for any isolated vertices.
    std::string to_file_text() const;

private:
    Graph() = default;
    std::vector<std::string> names_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

/// Structural flags for the graph classes the labeling theory quantifies
/// over. `is_complete_multipartite` means complete r-partite with r > 2.
struct ShapeReport {
    bool is_path = false;
    bool is_cycle = false;
    bool is_star = false;  // K_{1,n}, n >= 1
    bool is_complete = false;
    bool is_complete_bipartite = false;
    bool is_complete_multipartite = false;
    bool odd_order = false;
    std::vector<std::string> pendant_vertices;  // degree-1 vertices, canonical order
    std::optional<std::string> center;          // present when is_star
};

ShapeReport graph_shape(const Graph& g);

}  // namespace iasl
