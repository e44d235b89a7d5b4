#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "rgf/core.hpp"

// The two order relations behind the Gray codes, plus closed forms for the
// first and last sequence of a family among those sharing a fixed prefix.
//
// Reflected Gray Code Order (rgc): at the leftmost differing position the
// comparison is ascending when the sum of the common preceding entries is
// even, descending when it is odd.
//
// Co-Reflected Gray Code Order (co_rgc): same scheme, but the parity is that
// of U_k, the count of nonzero even entries among the preceding ones.
//
// Both produce prefix-partitioned lists: sequences sharing a common prefix
// are consecutive.

namespace rgf {

enum class OrderRelation { RGC, CoRGC };

inline bool rgc_less(std::span<const int> s, std::span<const int> t) {
    if (s.size() != t.size()) throw std::invalid_argument("rgc_less: length mismatch");
    int parity = 0;  // sum of the common prefix, mod 2
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != t[i]) return parity == 0 ? s[i] < t[i] : s[i] > t[i];
        parity ^= s[i] & 1;
    }
    return false;
}

inline bool co_rgc_less(std::span<const int> s, std::span<const int> t) {
    if (s.size() != t.size()) throw std::invalid_argument("co_rgc_less: length mismatch");
    int parity = 0;  // U_k mod 2
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != t[i]) return parity == 0 ? s[i] < t[i] : s[i] > t[i];
        if (s[i] != 0 && s[i] % 2 == 0) parity ^= 1;
    }
    return false;
}

inline bool less_in_order(std::span<const int> s, std::span<const int> t, OrderRelation order) {
    return order == OrderRelation::RGC ? rgc_less(s, t) : co_rgc_less(s, t);
}

inline std::vector<Sequence> sort_in_order(std::vector<Sequence> items, OrderRelation order) {
    for (const Sequence& s : items)
        if (s.size() != items.front().size())
            throw std::invalid_argument("sort_in_order: sequences differ in length");
    std::sort(items.begin(), items.end(), [order](const Sequence& x, const Sequence& y) {
        return less_in_order(x, y, order);
    });
    return items;
}

// The increasing run (a+1)(a+2)...b that lifts a running maximum of a to
// exactly b; empty when a = b. Defined for 0 < a <= b.
inline Sequence tau(int a, int b) {
    if (a <= 0 || a > b) throw std::invalid_argument("tau: requires 0 < a <= b");
    Sequence out;
    out.reserve(static_cast<std::size_t>(b - a));
    for (int v = a + 1; v <= b; ++v) out.push_back(v);
    return out;
}

// A family restricted to the sequences extending a fixed prefix s_1..s_k.
// The prefix must itself be a valid RGF with maximum within the bound, and
// for ExactMax the bound must still be reachable from it.
struct PrefixQuery {
    Sequence prefix;
    FamilySpec spec;
    OrderRelation order;
};

namespace detail {

inline int prefix_parity(std::span<const int> prefix, OrderRelation order) {
    int p = 0;
    for (int v : prefix) {
        if (order == OrderRelation::RGC)
            p ^= v & 1;
        else if (v != 0 && v % 2 == 0)
            p ^= 1;
    }
    return p;
}

inline void validate_query(const PrefixQuery& q) {
    validate(q.spec);
    const int k = static_cast<int>(q.prefix.size());
    if (k < 1 || k > q.spec.n)
        throw std::invalid_argument("PrefixQuery: prefix length must be in [1, n]");
    if (!is_rgf(q.prefix))
        throw std::invalid_argument("PrefixQuery: prefix is not a valid RGF fragment");
    const int a = max_value(q.prefix);
    if (a > q.spec.effective_bound())
        throw std::invalid_argument("PrefixQuery: prefix exceeds the bound");
    switch (q.spec.family_class) {
        case FamilyClass::All:
            break;  // both orders apply: the bound is vacuous for R_n
        case FamilyClass::Bounded:
            if (q.order == OrderRelation::RGC && q.spec.b % 2 == 0)
                throw unsupported_combination(
                    "first/last closed forms for reflected order need an odd bound");
            if (q.order == OrderRelation::CoRGC && q.spec.b % 2 == 1)
                throw unsupported_combination(
                    "first/last closed forms for co-reflected order need an even bound");
            break;
        case FamilyClass::ExactMax:
            if (q.order != OrderRelation::RGC || q.spec.b % 2 == 0)
                throw unsupported_combination(
                    "ExactMax first/last forms exist only for reflected order with odd bound");
            if (q.spec.b - a > q.spec.n - k)
                throw std::invalid_argument(
                    "PrefixQuery: bound not reachable from this prefix");
            break;
    }
}

inline Sequence extreme_in_prefix(const PrefixQuery& q, bool want_last) {
    validate_query(q);
    const int n = q.spec.n;
    const int k = static_cast<int>(q.prefix.size());
    const bool exact = q.spec.family_class == FamilyClass::ExactMax;
    const int beff = q.spec.effective_bound();
    const int a = max_value(q.prefix);

    if (k >= n - 1) {
        // Outside the closed forms; at most beff+1 completions remain, so
        // compare them directly.
        std::vector<Sequence> candidates;
        if (k == n) {
            if (member(q.prefix, q.spec)) candidates.push_back(q.prefix);
        } else {
            for (int v = 0; v <= std::min(beff, a + 1); ++v) {
                Sequence c = q.prefix;
                c.push_back(v);
                if (member(c, q.spec)) candidates.push_back(std::move(c));
            }
        }
        if (candidates.empty())
            throw std::invalid_argument("PrefixQuery: prefix has no completion in the family");
        auto cmp = [&q](const Sequence& x, const Sequence& y) {
            return less_in_order(x, y, q.order);
        };
        return want_last ? *std::max_element(candidates.begin(), candidates.end(), cmp)
                         : *std::min_element(candidates.begin(), candidates.end(), cmp);
    }

    // Three-case closed form. The extreme sequence continues the prefix with
    // at most two forced digits, then zeros; for ExactMax the zeros are
    // followed by the increasing run that lifts the maximum to b.
    const int parity = prefix_parity(q.prefix, q.order);
    const bool zeros_case = want_last ? parity == 1 : parity == 0;

    Sequence t = q.prefix;
    t.reserve(static_cast<std::size_t>(n));
    auto pad_and_lift = [&](int from_max) {
        const int tail = exact ? q.spec.b - from_max : 0;
        while (static_cast<int>(t.size()) < n - tail) t.push_back(0);
        for (int v = from_max + 1; v <= from_max + tail; ++v) t.push_back(v);
    };

    if (zeros_case) {
        pad_and_lift(a);
    } else {
        const int M = std::min(beff, a + 1);
        const bool single_digit = q.order == OrderRelation::RGC ? M % 2 == 1 : M % 2 == 0;
        t.push_back(M);
        if (!single_digit) t.push_back(M + 1);
        pad_and_lift(single_digit ? M : M + 1);
    }
    return t;
}

}  // namespace detail

// Maximal element of prefix|family under the order.
inline Sequence last_in_prefix(const PrefixQuery& q) {
    return detail::extreme_in_prefix(q, true);
}

// Minimal element of prefix|family under the order.
inline Sequence first_in_prefix(const PrefixQuery& q) {
    return detail::extreme_in_prefix(q, false);
}

}  // namespace rgf
