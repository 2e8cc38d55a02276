#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iasl/error.hpp"

namespace iasl {

/// Largest element accepted from input; keeps every pairwise sum well
/// inside the uint64 range.
inline constexpr std::uint64_t kMaxElement = 1'000'000'000'000'000'000ULL;

/// Finite set of non-negative integers, stored strictly ascending.
class IntSet {
public:
    IntSet() = default;
    IntSet(std::initializer_list<std::uint64_t> elems);
    explicit IntSet(std::vector<std::uint64_t> elems);  // sorts and drops duplicates

    /// Parses a comma-separated literal such as "0,1,3".
    /// Duplicate elements are rejected; an empty literal is the empty set.
    static IntSet parse(std::string_view literal);

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    std::uint64_t min() const;  // pre: non-empty
    std::uint64_t max() const;  // pre: non-empty
    bool contains(std::uint64_t x) const;
    bool subset_of(const IntSet& other) const;
    IntSet set_union(const IntSet& other) const;
    IntSet set_intersection(const IntSet& other) const;
    IntSet with(std::uint64_t x) const;
    const std::vector<std::uint64_t>& elements() const { return elems_; }

    std::string to_string() const;   // "{0,1,2}"
    std::string to_literal() const;  // "0,1,2"

    /// Bit mask over element values when max() < 64, else nullopt.
    std::optional<std::uint64_t> as_mask() const;
    static IntSet from_mask(std::uint64_t mask);

    bool operator==(const IntSet&) const = default;

private:
    std::vector<std::uint64_t> elems_;
};

/// Canonical order: smaller sets first, ties broken lexicographically by
/// ascending elements. Used everywhere a "first witness" is reported.
bool canonical_less(const IntSet& a, const IntSet& b);

struct CanonicalLess {
    bool operator()(const IntSet& a, const IntSet& b) const { return canonical_less(a, b); }
};

/// {x + y : x in a, y in b}. Empty operands are rejected.
IntSet sumset(const IntSet& a, const IntSet& b);

/// All positive pairwise differences of a; empty when |a| = 1.
IntSet difference_set(const IntSet& a);

/// True iff a is an arithmetic progression with at least three elements.
bool is_ap_set(const IntSet& a);

}  // namespace iasl
