#include "iasl/labeling.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace iasl {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Labeling Labeling::parse(std::string_view text, const Graph& g) {
    Labeling f;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    bool saw_content = false;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        bool last = eol == text.size();
        pos = eol + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            if (last) break;
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw InputError("line " + std::to_string(lineno) +
                             ": expected '<vertex>: <set literal>'");
        }
        std::string name(trim(line.substr(0, colon)));
        std::string_view literal = trim(line.substr(colon + 1));
        if (name == "ground") {
            if (saw_content) {
                throw InputError("line " + std::to_string(lineno) +
                                 ": ground header must be the first line");
            }
            f.ground = IntSet::parse(literal);
            saw_content = true;
        } else {
            saw_content = true;
            if (!g.find(name)) {
                throw InputError("line " + std::to_string(lineno) + ": unknown vertex '" + name +
                                 "'");
            }
            if (f.assignment.count(name)) {
                throw InputError("line " + std::to_string(lineno) + ": vertex '" + name +
                                 "' labeled twice");
            }
            IntSet label = IntSet::parse(literal);
            if (label.empty()) {
                throw InputError("line " + std::to_string(lineno) + ": empty label for vertex '" +
                                 name + "'");
            }
            f.assignment.emplace(std::move(name), std::move(label));
        }
        if (last) break;
    }
    for (const auto& v : g.vertices()) {
        if (!f.assignment.count(v)) {
            throw InputError("vertex '" + v + "' has no label");
        }
    }
    return f;
}

const IntSet& Labeling::at(const std::string& vertex) const {
    auto it = assignment.find(vertex);
    if (it == assignment.end()) {
        throw InputError("vertex '" + vertex + "' has no label");
    }
    return it->second;
}

bool Labeling::assigns(const std::string& vertex) const { return assignment.count(vertex) != 0; }

std::vector<IntSet> Labeling::vertex_labels(const Graph& g) const {
    std::vector<IntSet> out;
    out.reserve(g.vertex_count());
    for (const auto& v : g.vertices()) out.push_back(at(v));
    return out;
}

std::string Labeling::to_file_text(const Graph& g) const {
    std::ostringstream os;
    if (ground) os << "ground: " << ground->to_literal() << '\n';
    for (const auto& v : g.vertices()) os << v << ": " << at(v).to_literal() << '\n';
    return os.str();
}

EdgeLabeling edge_sumsets(const Graph& g, const Labeling& f) {
    EdgeLabeling out;
    out.labels.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        out.labels.push_back(sumset(f.at(g.name(u)), f.at(g.name(v))));
    }
    return out;
}

EdgeLabeling induced_edge_labels(const Graph& g, const Labeling& f) {
    EdgeLabeling out = edge_sumsets(g, f);
    if (f.ground) {
        for (std::size_t e = 0; e < out.labels.size(); ++e) {
            if (!out.labels[e].subset_of(*f.ground)) {
                throw InputError("ground violation: edge " + g.edge_name(e) + " label " +
                                 out.labels[e].to_string() + " is not a subset of " +
                                 f.ground->to_string());
            }
        }
    }
    return out;
}

IaslCheck validate_iasl(const Graph& g, const Labeling& f) {
    IaslCheck out;
    for (const auto& v : g.vertices()) {
        if (!f.assigns(v)) {
            out.iasl = Verdict::no("vertex '" + v + "' has no label");
            out.iasi = Verdict::no("not an IASL");
            return out;
        }
    }
    for (const auto& v : g.vertices()) {
        if (f.at(v).empty()) {
            out.iasl = Verdict::no("empty label on vertex '" + v + "'");
            out.iasi = Verdict::no("not an IASL");
            return out;
        }
    }
    {
        std::map<IntSet, std::string, CanonicalLess> seen;
        for (const auto& v : g.vertices()) {
            auto [it, fresh] = seen.emplace(f.at(v), v);
            if (!fresh) {
                out.iasl = Verdict::no("vertices '" + it->second + "' and '" + v +
                                       "' share label " + f.at(v).to_string());
                out.iasi = Verdict::no("not an IASL");
                return out;
            }
        }
    }
    if (f.ground) {
        for (const auto& v : g.vertices()) {
            if (!f.at(v).subset_of(*f.ground)) {
                out.iasl = Verdict::no("vertex '" + v + "' label " + f.at(v).to_string() +
                                       " is not a subset of " + f.ground->to_string());
                out.iasi = Verdict::no("not an IASL");
                return out;
            }
        }
    }
    EdgeLabeling edges = edge_sumsets(g, f);
    if (f.ground) {
        for (std::size_t e = 0; e < edges.labels.size(); ++e) {
            if (!edges.labels[e].subset_of(*f.ground)) {
                out.iasl = Verdict::no("edge " + g.edge_name(e) + " label " +
                                       edges.labels[e].to_string() + " is not a subset of " +
                                       f.ground->to_string());
                out.iasi = Verdict::no("not an IASL");
                return out;
            }
        }
    }
    out.iasl = Verdict::yes();
    {
        std::map<IntSet, std::size_t, CanonicalLess> seen;
        for (std::size_t e = 0; e < edges.labels.size(); ++e) {
            auto [it, fresh] = seen.emplace(edges.labels[e], e);
            if (!fresh) {
                out.iasi = Verdict::no("edges " + g.edge_name(it->second) + " and " +
                                       g.edge_name(e) + " share label " +
                                       edges.labels[e].to_string());
                return out;
            }
        }
    }
    out.iasi = Verdict::yes();
    return out;
}

Labeling make_trivial_iasl(const Graph& g, TrivialMode mode) {
    if (mode == TrivialMode::indexer && g.vertex_count() > 60) {
        throw InputError("indexer mode supports at most 60 vertices");
    }
    Labeling f;
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
        std::uint64_t e = mode == TrivialMode::plain ? i + 1 : std::uint64_t{1} << i;
        f.assignment.emplace(g.name(i), IntSet{e});
    }
    IntSet all;
    for (const auto& [v, s] : f.assignment) all = all.set_union(s);
    for (const auto& s : edge_sumsets(g, f).labels) all = all.set_union(s);
    f.ground = all;
    return f;
}

std::vector<IntSet> extract_chain(const Labeling& f, const IntSet& a) {
    if (!f.ground) throw InputError("not an IASFL: no ground set");
    const IntSet& x = *f.ground;
    if (!x.contains(0)) throw InputError("not an IASFL: 0 is not in the ground set");
    std::vector<IntSet> labels;
    labels.reserve(f.assignment.size());
    for (const auto& [v, s] : f.assignment) labels.push_back(s);
    std::sort(labels.begin(), labels.end(), CanonicalLess{});
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        throw InputError("not an IASFL: vertex labels are not distinct");
    }
    for (const auto& s : labels) {
        if (s.empty() || !s.contains(0) || !s.subset_of(x)) {
            throw InputError("not an IASFL: vertex label " + s.to_string() +
                             " is not a 0-containing subset of " + x.to_string());
        }
    }
    // Distinct 0-containing subsets of x, all present exactly when the count
    // matches 2^{|x|-1}.
    if (x.size() > 40 || labels.size() != (std::size_t{1} << (x.size() - 1))) {
        throw InputError("not an IASFL: the vertex labels do not cover every 0-containing subset of " +
                         x.to_string());
    }
    if (!std::binary_search(labels.begin(), labels.end(), a, CanonicalLess{})) {
        throw InputError("set " + a.to_string() + " is not a vertex label");
    }
    std::vector<IntSet> chain;
    IntSet cur{0};
    chain.push_back(cur);
    while (cur != x) {
        std::uint64_t next = 0;
        bool found = false;
        const IntSet& target = a.subset_of(cur) ? x : a;
        for (auto e : target.elements()) {
            if (!cur.contains(e)) {
                next = e;
                found = true;
                break;
            }
        }
        if (!found) throw InputError("chain extraction failed");  // unreachable: cur < target
        cur = cur.with(next);
        chain.push_back(cur);
    }
    return chain;
}

}  // namespace iasl
