#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iasl/graph.hpp"
#include "iasl/intset.hpp"

namespace iasl {

/// Three-valued check outcome. Witnesses are the canonically smallest
/// offending vertex/edge/set so reports are deterministic.
struct Verdict {
    enum class State { yes, no, not_applicable };
    State state = State::not_applicable;
    std::string witness;

    bool ok() const { return state == State::yes; }
    bool failed() const { return state == State::no; }
    bool applicable() const { return state != State::not_applicable; }

    static Verdict yes() { return {State::yes, {}}; }
    static Verdict no(std::string w) { return {State::no, std::move(w)}; }
    static Verdict na() { return {State::not_applicable, {}}; }
};

/// Vertex set-labeling with an optional ground set X. When a ground set
/// is present, vertex labels and induced edge labels must stay inside it.
struct Labeling {
    std::map<std::string, IntSet> assignment;
    std::optional<IntSet> ground;

    /// File format: optional first line `ground: <set literal>`, then one
    /// line per vertex `<name>: <set literal>`. `#` comments allowed.
    /// Unknown and missing vertices are errors; empty labels are rejected.
    static Labeling parse(std::string_view text, const Graph& g);

    const IntSet& at(const std::string& vertex) const;  // throws InputError
    bool assigns(const std::string& vertex) const;

    /// Labels in the graph's canonical vertex order (throws if one is missing).
    std::vector<IntSet> vertex_labels(const Graph& g) const;

    std::string to_file_text(const Graph& g) const;
};

/// Labels aligned with g.edges(): entry e is the sumset of the endpoint
/// labels of the e-th canonical edge.
struct EdgeLabeling {
    std::vector<IntSet> labels;
};

/// Sumsets of endpoint labels, no ground enforcement. Throws on a missing
/// or empty vertex label.
EdgeLabeling edge_sumsets(const Graph& g, const Labeling& f);

/// Induced edge labels with ground enforcement: when f.ground is present,
/// an edge label outside it is an error naming the edge.
EdgeLabeling induced_edge_labels(const Graph& g, const Labeling& f);

struct IaslCheck {
    Verdict iasl;  // injective, labels non-empty, all labels within the ground set
    Verdict iasi;  // iasl and the induced edge labeling is injective
};

/// Never throws for labeling defects; they come back as verdicts.
IaslCheck validate_iasl(const Graph& g, const Labeling& f);

enum class TrivialMode { plain, indexer };

/// plain: i-th canonical vertex gets {i+1}; indexer: {2^i}. The ground set
/// is the union of all vertex and edge labels, so the result is always a
/// valid IASL; indexer mode is additionally a set-indexer.
Labeling make_trivial_iasl(const Graph& g, TrivialMode mode);

/// Saturated chain {0} = C1 < C2 < ... < Cr = X through `a`, growing by
/// the smallest admissible element at each step. Requires the labeling's
/// vertex-label family to be a filter of 0-containing subsets and a to be
/// one of the labels.
std::vector<IntSet> extract_chain(const Labeling& f, const IntSet& a);

}  // namespace iasl
