#include "iasl/intset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace iasl {

namespace {

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

IntSet::IntSet(std::initializer_list<std::uint64_t> elems)
    : elems_(sorted_unique(std::vector<std::uint64_t>(elems))) {}

IntSet::IntSet(std::vector<std::uint64_t> elems) : elems_(sorted_unique(std::move(elems))) {}

IntSet IntSet::parse(std::string_view literal) {
    std::vector<std::uint64_t> elems;
    std::size_t pos = 0;
    while (pos < literal.size()) {
        while (pos < literal.size() && std::isspace(static_cast<unsigned char>(literal[pos]))) ++pos;
        if (pos == literal.size() && elems.empty()) break;  // whitespace-only literal
        std::size_t start = pos;
        while (pos < literal.size() && std::isdigit(static_cast<unsigned char>(literal[pos]))) ++pos;
        if (start == pos) {
            throw InputError("bad set literal '" + std::string(literal) +
                             "': expected comma-separated non-negative integers");
        }
        std::uint64_t value = 0;
        for (std::size_t i = start; i < pos; ++i) {
            value = value * 10 + static_cast<std::uint64_t>(literal[i] - '0');
            if (value > kMaxElement) {
                throw InputError("set element " + std::string(literal.substr(start, pos - start)) +
                                 " exceeds the supported maximum " + std::to_string(kMaxElement));
            }
        }
        elems.push_back(value);
        while (pos < literal.size() && std::isspace(static_cast<unsigned char>(literal[pos]))) ++pos;
        if (pos < literal.size()) {
            if (literal[pos] != ',') {
                throw InputError("bad set literal '" + std::string(literal) + "': unexpected '" +
                                 std::string(1, literal[pos]) + "'");
            }
            ++pos;
            if (pos == literal.size()) {
                throw InputError("bad set literal '" + std::string(literal) + "': trailing comma");
            }
        }
    }
    auto unique = sorted_unique(elems);
    if (unique.size() != elems.size()) {
        throw InputError("bad set literal '" + std::string(literal) + "': duplicate element");
    }
    IntSet s;
    s.elems_ = std::move(unique);
    return s;
}

std::uint64_t IntSet::min() const {
    if (empty()) throw InputError("min of empty set");
    return elems_.front();
}

std::uint64_t IntSet::max() const {
    if (empty()) throw InputError("max of empty set");
    return elems_.back();
}

bool IntSet::contains(std::uint64_t x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool IntSet::subset_of(const IntSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

IntSet IntSet::set_union(const IntSet& other) const {
    IntSet out;
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                   std::back_inserter(out.elems_));
    return out;
}

IntSet IntSet::set_intersection(const IntSet& other) const {
    IntSet out;
    std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                          std::back_inserter(out.elems_));
    return out;
}

IntSet IntSet::with(std::uint64_t x) const {
    IntSet out = *this;
    auto it = std::lower_bound(out.elems_.begin(), out.elems_.end(), x);
    if (it == out.elems_.end() || *it != x) out.elems_.insert(it, x);
    return out;
}

std::string IntSet::to_string() const { return "{" + to_literal() + "}"; }

std::string IntSet::to_literal() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    return os.str();
}

std::optional<std::uint64_t> IntSet::as_mask() const {
    if (!empty() && max() >= 64) return std::nullopt;
    std::uint64_t m = 0;
    for (auto e : elems_) m |= std::uint64_t{1} << e;
    return m;
}

IntSet IntSet::from_mask(std::uint64_t mask) {
    IntSet s;
    for (std::uint64_t e = 0; mask; ++e, mask >>= 1) {
        if (mask & 1) s.elems_.push_back(e);
    }
    return s;
}

bool canonical_less(const IntSet& a, const IntSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
}

IntSet sumset(const IntSet& a, const IntSet& b) {
    if (a.empty() || b.empty()) throw InputError("empty set-label");
    // Fast path: all sums fit in one machine word, so A+B is an or-fold of shifts.
    if (a.max() + b.max() < 64) {
        std::uint64_t bm = *b.as_mask();
        std::uint64_t acc = 0;
        for (auto e : a.elements()) acc |= bm << e;
        return IntSet::from_mask(acc);
    }
    std::vector<std::uint64_t> sums;
    sums.reserve(a.size() * b.size());
    for (auto x : a.elements())
        for (auto y : b.elements()) sums.push_back(x + y);
    return IntSet(std::move(sums));
}

IntSet difference_set(const IntSet& a) {
    if (a.empty()) throw InputError("empty set-label");
    std::vector<std::uint64_t> diffs;
    const auto& e = a.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) diffs.push_back(e[j] - e[i]);
    return IntSet(std::move(diffs));
}

bool is_ap_set(const IntSet& a) {
    if (a.empty()) throw InputError("empty set-label");
    if (a.size() < 3) return false;
    const auto& e = a.elements();
    std::uint64_t step = e[1] - e[0];
    for (std::size_t i = 2; i < e.size(); ++i) {
        if (e[i] - e[i - 1] != step) return false;
    }
    return true;
}

}  // namespace iasl
