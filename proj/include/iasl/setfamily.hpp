#pragma once

#include <string>
#include <vector>

#include "iasl/intset.hpp"

namespace iasl {

/// Collection of distinct subsets of a fixed universe, kept in canonical
/// order. May contain the empty set (topology candidates need it).
class SetFamily {
public:
    SetFamily(IntSet universe, std::vector<IntSet> members);

    const IntSet& universe() const { return universe_; }
    const std::vector<IntSet>& members() const { return members_; }
    bool has_member(const IntSet& s) const;

private:
    IntSet universe_;
    std::vector<IntSet> members_;  // canonical order, no duplicates
};

/// Result of a family axiom check. `violation` names the first failed
/// axiom together with a witness; empty when ok.
struct FamilyCheck {
    bool ok = true;
    std::string violation;
};

/// Proper filter on the universe: (i) universe is a member, (ii) closed
/// under pairwise intersection, (iii) the empty set is not a member,
/// (iv) closed upward within the universe.
FamilyCheck is_filter(const SetFamily& fam);

/// Topology on the universe: empty set and universe are members, and the
/// family is closed under pairwise union and pairwise intersection.
FamilyCheck is_topology(const SetFamily& fam);

}  // namespace iasl
