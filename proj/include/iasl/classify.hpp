#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "iasl/labeling.hpp"

namespace iasl {

/// Verdicts for every labeling type, with both the definitional form and
/// the characterization form where a characterization theorem exists.
/// The pairs are computed independently; their agreement is a theorem
/// under test, not an assumption.
///
/// Ground-relative verdicts (iasfl, iasfl_by_characterization, tiasl,
/// iasgl, iassl) are not-applicable when the labeling has no ground set.
struct ClassificationReport {
    Verdict iasl;
    Verdict iasi;
    Verdict iasfl;                        // f(V) is a proper filter on X
    Verdict iasfl_by_characterization;    // 0 in X; all 0-subsets of X used; all labels contain 0
    Verdict eiasl;                        // endpoint labels contained in each edge label
    Verdict eiasl_by_characterization;    // every vertex label contains 0
    Verdict tiasl;                        // f(V) + empty set is a topology on X
    Verdict iasgl;                        // edge labels exhaust P(X) - {empty, {0}}
    Verdict iassl;                        // vertex + edge labels exhaust the same
    Verdict wiasl;                        // |f+(uv)| = max(|f(u)|, |f(v)|)
    Verdict wiasl_by_characterization;    // every edge has a singleton endpoint
    Verdict siasl;                        // |f+(uv)| = |f(u)| * |f(v)|
    Verdict siasl_by_characterization;    // adjacent difference sets are disjoint
    Verdict arithmetic;                   // every vertex and edge label is an AP-set
    std::optional<std::uint64_t> uniform_k;  // present iff all edge labels share cardinality k

    /// Names of the verdict fields, in report order (uniform_k excluded).
    static const std::vector<std::string>& verdict_names();
    const Verdict& verdict(std::string_view name) const;  // throws InputError on unknown name

    /// Flat JSON: one key per field. true / "not-applicable" /
    /// {"value": false, "witness": "..."}; uniform_k is an integer or null.
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;

    /// Report for a labeling that failed validate_iasl: carries the iasl
    /// and iasi verdicts, everything else not-applicable.
    static ClassificationReport not_an_iasl(const IaslCheck& check);
};

/// Full classification. Requires validate_iasl(g, f).iasl to hold, else
/// throws InputError("not an IASL: ...").
ClassificationReport classify(const Graph& g, const Labeling& f);

}  // namespace iasl
