#include "iasl/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "iasl/setfamily.hpp"

namespace iasl {

namespace {

Verdict from_check(const FamilyCheck& c) {
    return c.ok ? Verdict::yes() : Verdict::no(c.violation);
}

/// Visits subsets of x in canonical order (size ascending, then lex by
/// ascending elements) until the callback returns false. Sizes start at
/// min_size. Never materializes the power set.
void visit_subsets_canonical(const IntSet& x, std::size_t min_size,
                             const std::function<bool(const IntSet&)>& visit) {
    const auto& elems = x.elements();
    std::size_t n = elems.size();
    if (min_size == 0) {
        if (!visit(IntSet{})) return;
        min_size = 1;
    }
    for (std::size_t s = min_size; s <= n; ++s) {
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            std::vector<std::uint64_t> subset(s);
            for (std::size_t i = 0; i < s; ++i) subset[i] = elems[idx[i]];
            if (!visit(IntSet(std::move(subset)))) return;
            // next combination in lex order
            bool advanced = false;
            std::size_t i = s;
            while (i > 0) {
                --i;
                if (idx[i] < i + n - s) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
}

using SetOfSets = std::set<IntSet, CanonicalLess>;

/// First subset of x (with 0 forced in when zero_forced) that is absent
/// from `present`, in canonical order. The search stops within
/// |present| + 1 candidates, so it stays cheap even for large x.
std::optional<IntSet> first_missing_subset(const IntSet& x, bool zero_forced,
                                           const SetOfSets& present) {
    std::optional<IntSet> missing;
    if (zero_forced) {
        // 0-containing subsets of x, canonically, are {0} + S for subsets S
        // of x - {0} in canonical order.
        std::vector<std::uint64_t> rest;
        for (auto e : x.elements())
            if (e != 0) rest.push_back(e);
        visit_subsets_canonical(IntSet(std::move(rest)), 0, [&](const IntSet& s) {
            IntSet candidate = s.with(0);
            if (!present.count(candidate)) {
                missing = candidate;
                return false;
            }
            return true;
        });
    } else {
        // Non-empty subsets of x other than {0}.
        visit_subsets_canonical(x, 1, [&](const IntSet& s) {
            if (s == IntSet{0}) return true;
            if (!present.count(s)) {
                missing = s;
                return false;
            }
            return true;
        });
    }
    return missing;
}

bool count_matches_power(std::size_t count, std::size_t exponent) {
    if (exponent >= 40) return false;  // no feasible labeling reaches 2^40 sets
    return count == (std::size_t{1} << exponent);
}

}  // namespace

const std::vector<std::string>& ClassificationReport::verdict_names() {
    static const std::vector<std::string> names = {
        "iasl",  "iasi",  "iasfl", "iasfl_by_characterization",
        "eiasl", "eiasl_by_characterization",
        "tiasl", "iasgl", "iassl",
        "wiasl", "wiasl_by_characterization",
        "siasl", "siasl_by_characterization",
        "arithmetic",
    };
    return names;
}

const Verdict& ClassificationReport::verdict(std::string_view name) const {
    if (name == "iasl") return iasl;
    if (name == "iasi") return iasi;
    if (name == "iasfl") return iasfl;
    if (name == "iasfl_by_characterization") return iasfl_by_characterization;
    if (name == "eiasl") return eiasl;
    if (name == "eiasl_by_characterization") return eiasl_by_characterization;
    if (name == "tiasl") return tiasl;
    if (name == "iasgl") return iasgl;
    if (name == "iassl") return iassl;
    if (name == "wiasl") return wiasl;
    if (name == "wiasl_by_characterization") return wiasl_by_characterization;
    if (name == "siasl") return siasl;
    if (name == "siasl_by_characterization") return siasl_by_characterization;
    if (name == "arithmetic") return arithmetic;
    throw InputError("unknown verdict '" + std::string(name) + "'");
}

nlohmann::ordered_json ClassificationReport::to_json() const {
    nlohmann::ordered_json j;
    for (const auto& name : verdict_names()) {
        const Verdict& v = verdict(name);
        if (!v.applicable()) {
            j[name] = "not-applicable";
        } else if (v.ok()) {
            j[name] = true;
        } else {
            j[name] = nlohmann::ordered_json{{"value", false}, {"witness", v.witness}};
        }
    }
    if (uniform_k) {
        j["uniform_k"] = *uniform_k;
    } else {
        j["uniform_k"] = nullptr;
    }
    return j;
}

std::string ClassificationReport::to_text() const {
    std::string out;
    for (const auto& name : verdict_names()) {
        const Verdict& v = verdict(name);
        out += name;
        out += ": ";
        if (!v.applicable()) {
            out += "not-applicable";
        } else if (v.ok()) {
            out += "true";
        } else {
            out += "false (" + v.witness + ")";
        }
        out += '\n';
    }
    out += "uniform_k: ";
    out += uniform_k ? std::to_string(*uniform_k) : "none";
    out += '\n';
    return out;
}

ClassificationReport ClassificationReport::not_an_iasl(const IaslCheck& check) {
    ClassificationReport r;
    r.iasl = check.iasl;
    r.iasi = check.iasi;
    return r;
}

ClassificationReport classify(const Graph& g, const Labeling& f) {
    IaslCheck check = validate_iasl(g, f);
    if (!check.iasl.ok()) {
        throw InputError("not an IASL: " + check.iasl.witness);
    }
    ClassificationReport r;
    r.iasl = check.iasl;
    r.iasi = check.iasi;

    std::vector<IntSet> labels = f.vertex_labels(g);
    EdgeLabeling edges = edge_sumsets(g, f);
    SetOfSets vertex_set(labels.begin(), labels.end());
    SetOfSets edge_set(edges.labels.begin(), edges.labels.end());

    const bool grounded = f.ground.has_value();

    if (grounded) {
        const IntSet& x = *f.ground;
        r.iasfl = from_check(is_filter(SetFamily(x, labels)));

        // characterization: 0 in X, every 0-subset of X used, every label has 0
        r.iasfl_by_characterization = Verdict::yes();
        if (!x.contains(0)) {
            r.iasfl_by_characterization =
                Verdict::no("0 is not in the ground set " + x.to_string());
        } else {
            std::size_t count0 = 0;
            for (const auto& s : vertex_set)
                if (s.contains(0)) ++count0;
            if (!count_matches_power(count0, x.size() - 1)) {
                auto missing = first_missing_subset(x, true, vertex_set);
                r.iasfl_by_characterization =
                    Verdict::no("no vertex is labeled " + missing->to_string());
            } else {
                for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
                    if (!labels[v].contains(0)) {
                        r.iasfl_by_characterization =
                            Verdict::no("vertex '" + g.name(v) + "' label " +
                                        labels[v].to_string() + " does not contain 0");
                        break;
                    }
                }
            }
        }

        {
            std::vector<IntSet> open_sets = labels;
            open_sets.push_back(IntSet{});
            r.tiasl = from_check(is_topology(SetFamily(x, std::move(open_sets))));
        }

        // Edge labels are never empty and never {0} (that would need two
        // vertices labeled {0}), so equality with P(X)-{empty,{0}} reduces
        // to a count match.
        r.iasgl = Verdict::yes();
        if (!count_matches_power(edge_set.size() + 2, x.size())) {
            auto missing = first_missing_subset(x, false, edge_set);
            r.iasgl = Verdict::no("no edge is labeled " + missing->to_string());
        }

        r.iassl = Verdict::yes();
        {
            SetOfSets both = vertex_set;
            both.insert(edge_set.begin(), edge_set.end());
            if (both.count(IntSet{0})) {
                r.iassl = Verdict::no("the family contains {0}");
            } else if (!count_matches_power(both.size() + 2, x.size())) {
                auto missing = first_missing_subset(x, false, both);
                r.iassl = Verdict::no("no vertex or edge is labeled " + missing->to_string());
            }
        }
    }

    r.eiasl = Verdict::yes();
    for (std::size_t e = 0; e < g.edge_count() && r.eiasl.ok(); ++e) {
        auto [u, v] = g.edges()[e];
        for (auto end : {u, v}) {
            if (!labels[end].subset_of(edges.labels[e])) {
                r.eiasl = Verdict::no("vertex '" + g.name(end) + "' label " +
                                      labels[end].to_string() + " is not a subset of edge " +
                                      g.edge_name(e) + " label " + edges.labels[e].to_string());
                break;
            }
        }
    }

    r.eiasl_by_characterization = Verdict::yes();
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (!labels[v].contains(0)) {
            r.eiasl_by_characterization = Verdict::no("vertex '" + g.name(v) + "' label " +
                                                      labels[v].to_string() +
                                                      " does not contain 0");
            break;
        }
    }

    r.wiasl = Verdict::yes();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        std::size_t expect = std::max(labels[u].size(), labels[v].size());
        if (edges.labels[e].size() != expect) {
            r.wiasl = Verdict::no("edge " + g.edge_name(e) + " label has " +
                                  std::to_string(edges.labels[e].size()) +
                                  " elements, expected max(" + std::to_string(labels[u].size()) +
                                  ", " + std::to_string(labels[v].size()) + ")");
            break;
        }
    }

    r.wiasl_by_characterization = Verdict::yes();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        if (labels[u].size() != 1 && labels[v].size() != 1) {
            r.wiasl_by_characterization =
                Verdict::no("edge " + g.edge_name(e) + " has no singleton endpoint");
            break;
        }
    }

    r.siasl = Verdict::yes();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        std::size_t expect = labels[u].size() * labels[v].size();
        if (edges.labels[e].size() != expect) {
            r.siasl = Verdict::no("edge " + g.edge_name(e) + " label has " +
                                  std::to_string(edges.labels[e].size()) +
                                  " elements, expected " + std::to_string(labels[u].size()) +
                                  " * " + std::to_string(labels[v].size()));
            break;
        }
    }

    r.siasl_by_characterization = Verdict::yes();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        IntSet common = difference_set(labels[u]).set_intersection(difference_set(labels[v]));
        if (!common.empty()) {
            r.siasl_by_characterization =
                Verdict::no("difference sets of edge " + g.edge_name(e) + " endpoints share " +
                            std::to_string(common.min()));
            break;
        }
    }

    r.arithmetic = Verdict::yes();
    for (std::uint32_t v = 0; v < g.vertex_count() && r.arithmetic.ok(); ++v) {
        if (!is_ap_set(labels[v])) {
            r.arithmetic = Verdict::no("vertex '" + g.name(v) + "' label " +
                                       labels[v].to_string() +
                                       " is not an arithmetic progression of 3 or more elements");
        }
    }
    for (std::size_t e = 0; e < g.edge_count() && r.arithmetic.ok(); ++e) {
        if (!is_ap_set(edges.labels[e])) {
            r.arithmetic = Verdict::no("edge " + g.edge_name(e) + " label " +
                                       edges.labels[e].to_string() +
                                       " is not an arithmetic progression of 3 or more elements");
        }
    }

    if (!edges.labels.empty()) {
        std::size_t k = edges.labels.front().size();
        bool uniform = std::all_of(edges.labels.begin(), edges.labels.end(),
                                   [&](const IntSet& s) { return s.size() == k; });
        if (uniform) r.uniform_k = k;
    }
    return r;
}

}  // namespace iasl
