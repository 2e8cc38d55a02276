#include "iasl/setfamily.hpp"

#include <algorithm>

namespace iasl {

SetFamily::SetFamily(IntSet universe, std::vector<IntSet> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
    for (const auto& m : members_) {
        if (!m.subset_of(universe_)) {
            throw InputError("family member " + m.to_string() + " is not a subset of the universe " +
                             universe_.to_string());
        }
    }
    std::sort(members_.begin(), members_.end(), CanonicalLess{});
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) {
        throw InputError("duplicate family member " + dup->to_string());
    }
}

bool SetFamily::has_member(const IntSet& s) const {
    return std::binary_search(members_.begin(), members_.end(), s, CanonicalLess{});
}

FamilyCheck is_filter(const SetFamily& fam) {
    const auto& ms = fam.members();
    if (!fam.has_member(fam.universe())) {
        return {false, "axiom (i): universe " + fam.universe().to_string() + " is not a member"};
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            IntSet meet = ms[i].set_intersection(ms[j]);
            if (!fam.has_member(meet)) {
                return {false, "axiom (ii): intersection " + meet.to_string() + " of " +
                                   ms[i].to_string() + " and " + ms[j].to_string() +
                                   " is not a member"};
            }
        }
    }
    if (fam.has_member(IntSet{})) {
        return {false, "axiom (iii): the empty set is a member"};
    }
    // Up-closure: checking all one-element extensions of each member covers
    // every superset by induction, without enumerating the power set.
    for (const auto& m : ms) {
        for (auto u : fam.universe().elements()) {
            if (m.contains(u)) continue;
            IntSet ext = m.with(u);
            if (!fam.has_member(ext)) {
                return {false, "axiom (iv): superset " + ext.to_string() + " of member " +
                                   m.to_string() + " is not a member"};
            }
        }
    }
    return {};
}

FamilyCheck is_topology(const SetFamily& fam) {
    const auto& ms = fam.members();
    if (!fam.has_member(IntSet{})) {
        return {false, "empty set is not a member"};
    }
    if (!fam.has_member(fam.universe())) {
        return {false, "universe " + fam.universe().to_string() + " is not a member"};
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            IntSet join = ms[i].set_union(ms[j]);
            if (!fam.has_member(join)) {
                return {false, "union " + join.to_string() + " of " + ms[i].to_string() + " and " +
                                   ms[j].to_string() + " is not a member"};
            }
            IntSet meet = ms[i].set_intersection(ms[j]);
            if (!fam.has_member(meet)) {
                return {false, "intersection " + meet.to_string() + " of " + ms[i].to_string() +
                                   " and " + ms[j].to_string() + " is not a member"};
            }
        }
    }
    return {};
}

}  // namespace iasl
