#include "iasl/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace iasl {

namespace {

bool valid_token(std::string_view tok) {
    if (tok.empty()) return false;
    for (char c : tok) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.emplace_back(line.substr(start, i - start));
    }
    return out;
}

}  // namespace

Graph Graph::parse(std::string_view text) {
    std::vector<std::string> names;
    std::map<std::string, std::uint32_t, std::less<>> index;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    // declaration line of each vertex that has not yet appeared in an edge
    std::map<std::uint32_t, std::size_t> declared_only;

    auto intern = [&](const std::string& tok, std::size_t lineno) {
        if (!valid_token(tok)) {
            throw InputError("line " + std::to_string(lineno) + ": bad vertex token '" + tok + "'");
        }
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        auto id = static_cast<std::uint32_t>(names.size());
        names.push_back(tok);
        index.emplace(tok, id);
        return id;
    };

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        if (toks[0] == "vertex") {
            if (toks.size() != 2) {
                throw InputError("line " + std::to_string(lineno) +
                                 ": expected 'vertex <name>', got " + std::to_string(toks.size() - 1) +
                                 " name(s)");
            }
            bool fresh = index.find(toks[1]) == index.end();
            auto id = intern(toks[1], lineno);
            if (fresh) declared_only.emplace(id, lineno);
        } else if (toks.size() == 2) {
            auto u = intern(toks[0], lineno);
            auto v = intern(toks[1], lineno);
            if (u == v) {
                throw InputError("line " + std::to_string(lineno) + ": loop at vertex '" + toks[0] +
                                 "'");
            }
            auto e = std::minmax(u, v);
            if (!seen.insert({e.first, e.second}).second) {
                throw InputError("line " + std::to_string(lineno) + ": duplicate edge '" + toks[0] +
                                 " " + toks[1] + "'");
            }
            edges.push_back({e.first, e.second});
            declared_only.erase(u);
            declared_only.erase(v);
        } else {
            throw InputError("line " + std::to_string(lineno) +
                             ": expected '<u> <v>' or 'vertex <name>'");
        }
        if (pos > text.size()) break;
    }
    if (!declared_only.empty()) {
        auto [id, declline] = *declared_only.begin();
        throw InputError("line " + std::to_string(declline) + ": isolated vertex '" + names[id] +
                         "'");
    }
    if (names.empty()) throw InputError("empty graph: no vertices");
    return make(std::move(names), std::move(edges));
}

Graph Graph::make(std::vector<std::string> vertices,
                  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges, bool allow_isolated) {
    Graph g;
    g.names_ = std::move(vertices);
    {
        auto sorted = g.names_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw InputError("duplicate vertex name");
        }
    }
    for (auto& [u, v] : edges) {
        if (u >= g.names_.size() || v >= g.names_.size()) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("loop at vertex '" + g.names_[u] + "'");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw InputError("duplicate edge");
    }
    g.edges_ = std::move(edges);
    g.adj_.assign(g.names_.size(), {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    if (!allow_isolated) {
        for (std::uint32_t v = 0; v < g.adj_.size(); ++v) {
            if (g.adj_[v].empty()) {
                throw InputError("isolated vertex '" + g.names_[v] + "'");
            }
        }
    }
    return g;
}

std::uint32_t Graph::index_of(std::string_view vertex) const {
    if (auto id = find(vertex)) return *id;
    throw InputError("unknown vertex '" + std::string(vertex) + "'");
}

std::optional<std::uint32_t> Graph::find(std::string_view vertex) const {
    for (std::uint32_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == vertex) return i;
    }
    return std::nullopt;
}

bool Graph::adjacent(std::uint32_t u, std::uint32_t v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::string Graph::edge_name(std::size_t e) const {
    return names_[edges_[e].first] + "-" + names_[edges_[e].second];
}

std::string Graph::to_file_text() const {
    std::ostringstream os;
    for (std::uint32_t v = 0; v < adj_.size(); ++v) {
        if (adj_[v].empty()) os << "vertex " << names_[v] << '\n';
    }
    for (auto [u, v] : edges_) os << names_[u] << ' ' << names_[v] << '\n';
    return os.str();
}

namespace {

bool connected(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

}  // namespace

ShapeReport graph_shape(const Graph& g) {
    ShapeReport r;
    std::size_t n = g.vertex_count();
    std::size_t m = g.edge_count();
    r.odd_order = (n % 2 == 1);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (g.degree(v) == 1) r.pendant_vertices.push_back(g.name(v));
    }
    if (n < 2) return r;

    bool conn = connected(g);
    std::size_t deg1 = 0, deg2 = 0, degmax = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        auto d = g.degree(v);
        if (d == 1) ++deg1;
        if (d == 2) ++deg2;
        degmax = std::max(degmax, d);
    }
    r.is_path = conn && m == n - 1 && deg1 == 2 && deg2 == n - 2;
    r.is_cycle = conn && n >= 3 && m == n && deg2 == n;
    r.is_complete = m == n * (n - 1) / 2;
    if (conn && m == n - 1 && degmax == n - 1) {
        r.is_star = true;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (g.degree(v) == degmax) {
                r.center = g.name(v);
                break;
            }
        }
    }

    // Complete multipartite test: parts are exactly the classes of the
    // "identical neighborhood" relation, so it suffices to count the
    // cross-class pairs and compare with the edge count.
    std::map<std::vector<std::uint32_t>, std::size_t> parts;
    for (std::uint32_t v = 0; v < n; ++v) ++parts[g.neighbors(v)];
    std::size_t same_class_pairs = 0;
    for (const auto& [nbrs, size] : parts) same_class_pairs += size * (size - 1) / 2;
    std::size_t cross_pairs = n * (n - 1) / 2 - same_class_pairs;
    if (m == cross_pairs) {
        if (parts.size() == 2) r.is_complete_bipartite = true;
        if (parts.size() > 2) r.is_complete_multipartite = true;
    }
    return r;
}

}  // namespace iasl
